#include "pmdlab/counting.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pmdlab {

Int ipow(Int base, long long e) {
    if (e < 0) throw std::invalid_argument("ipow requires a nonnegative exponent");
    Int acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Int bracket(int x, int q) {
    if (x < 0 || q < 2) throw std::invalid_argument("bracket requires x >= 0 and q >= 2");
    return (ipow(q, x) - 1) / (q - 1);
}

Int gaussian(int x, int k, int q) {
    if (x < 0 || q < 2) throw std::invalid_argument("gaussian requires x >= 0 and q >= 2");
    if (k < 0 || k > x) return 0;
    // Each partial product is itself a Gaussian coefficient, so every
    // stepwise division is exact.
    Int g = 1;
    for (int j = 1; j <= k; ++j) {
        Int num = g * (ipow(q, x - j + 1) - 1);
        Int den = ipow(q, j) - 1;
        if (num % den != 0) throw std::logic_error("gaussian stepwise division not exact");
        g = num / den;
    }
    return g;
}

Int binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    Int c = 1;
    for (int j = 1; j <= k; ++j) {
        Int num = c * (n - j + 1);
        if (num % j != 0) throw std::logic_error("binomial stepwise division not exact");
        c = num / j;
    }
    return c;
}

const Int& SpmdProfile::flats(int j, int k) const {
    if (j < 0 || j > rank || k < 0 || k > j)
        throw std::out_of_range("whitney index (" + std::to_string(j) + ", " +
                                std::to_string(k) + ") out of range for rank " +
                                std::to_string(rank));
    return whitney[j][k];
}

void SpmdProfile::validate() const {
    auto fail = [](const std::string& msg) {
        throw std::domain_error("profile inconsistent: " + msg);
    };
    if (rank < 0) fail("rank must be nonnegative");
    if (static_cast<int>(whitney.size()) != rank + 1)
        fail("whitney must have " + std::to_string(rank + 1) + " rows, got " +
             std::to_string(whitney.size()));
    for (int j = 0; j <= rank; ++j)
        if (static_cast<int>(whitney[j].size()) != j + 1)
            fail("whitney[" + std::to_string(j) + "] must have " +
                 std::to_string(j + 1) + " entries, got " +
                 std::to_string(whitney[j].size()));
    if (static_cast<int>(flat_size.size()) != rank + 1)
        fail("flat_size must have " + std::to_string(rank + 1) + " entries, got " +
             std::to_string(flat_size.size()));

    for (int j = 0; j <= rank; ++j)
        for (int k = 0; k <= j; ++k)
            if (whitney[j][k] < 1)
                fail("whitney[" + std::to_string(j) + "][" + std::to_string(k) +
                     "] must be positive");
    for (int j = 0; j <= rank; ++j) {
        if (whitney[j][0] != 1) fail("whitney[" + std::to_string(j) + "][0] must be 1");
        if (whitney[j][j] != 1)
            fail("whitney[" + std::to_string(j) + "][" + std::to_string(j) +
                 "] must be 1");
    }
    if (flat_size[0] != 0) fail("flat_size[0] must be 0");
    if (rank >= 1 && flat_size[1] != 1) fail("flat_size[1] must be 1");
    for (int k = 2; k <= rank; ++k)
        if (flat_size[k] <= flat_size[k - 1])
            fail("flat_size must be strictly increasing at index " + std::to_string(k));
    for (int s = 0; s <= rank; ++s)
        for (int u = 0; u <= s; ++u)
            if (whitney[rank][s] * whitney[s][u] % whitney[rank][u] != 0)
                fail("flats-containing quotient is not an integer at s=" +
                     std::to_string(s) + ", u=" + std::to_string(u));
}

SpmdProfile profile_pg(int r, int q) {
    if (r < 1 || q < 2) throw std::invalid_argument("profile requires r >= 1 and q >= 2");
    SpmdProfile p;
    p.name = "pg(q=" + std::to_string(q) + ")";
    p.rank = r;
    p.whitney.resize(r + 1);
    for (int j = 0; j <= r; ++j)
        for (int k = 0; k <= j; ++k) p.whitney[j].push_back(gaussian(j, k, q));
    for (int k = 0; k <= r; ++k) p.flat_size.push_back(bracket(k, q));
    return p;
}

SpmdProfile profile_ag(int r, int q) {
    if (r < 1 || q < 2) throw std::invalid_argument("profile requires r >= 1 and q >= 2");
    SpmdProfile p;
    p.name = "ag(q=" + std::to_string(q) + ")";
    p.rank = r;
    p.whitney.resize(r + 1);
    for (int j = 0; j <= r; ++j) {
        p.whitney[j].push_back(1);
        for (int k = 1; k <= j; ++k)
            p.whitney[j].push_back(ipow(q, j - k) * gaussian(j - 1, k - 1, q));
    }
    p.flat_size.push_back(0);
    for (int k = 1; k <= r; ++k) p.flat_size.push_back(ipow(q, k - 1));
    return p;
}

SpmdProfile profile_free(int r) {
    if (r < 1) throw std::invalid_argument("profile requires r >= 1");
    SpmdProfile p;
    p.name = "free";
    p.rank = r;
    p.whitney.resize(r + 1);
    for (int j = 0; j <= r; ++j)
        for (int k = 0; k <= j; ++k) p.whitney[j].push_back(binomial(j, k));
    for (int k = 0; k <= r; ++k) p.flat_size.push_back(k);
    return p;
}

Int flats_containing(const SpmdProfile& profile, int s, int u) {
    if (u < 0 || u > s || s > profile.rank)
        throw std::invalid_argument("flats_containing requires 0 <= u <= s <= rank");
    Int num = profile.flats(profile.rank, s) * profile.flats(s, u);
    const Int& den = profile.flats(profile.rank, u);
    if (num % den != 0)
        throw std::domain_error("profile inconsistent: flats-containing quotient is "
                                "not an integer at s=" + std::to_string(s) +
                                ", u=" + std::to_string(u));
    return num / den;
}

Int count_avoiding_hyperplanes(const SpmdProfile& profile) {
    if (profile.rank < 2)
        throw std::invalid_argument("avoiding-hyperplane count requires rank >= 2");
    int r = profile.rank;
    Int n = 0;
    for (int k = 0; k <= r - 1; ++k) {
        Int term = binomial(r, k) * flats_containing(profile, r - 1, k);
        n += (k % 2 == 0) ? term : -term;
    }
    return n;
}

Int count_circuit_points(const SpmdProfile& profile) {
    if (profile.rank < 1)
        throw std::invalid_argument("circuit-point count requires rank >= 1");
    int r = profile.rank;
    Int n = 0;
    for (int k = 0; k <= r; ++k) {
        Int term = binomial(r, k) * (profile.flat_size[k] - k);
        n += ((r - k) % 2 == 0) ? term : -term;
    }
    return n;
}

Int closed_form(ClosedForm kind, int r, int q) {
    if (r < 2 || q < 2)
        throw std::invalid_argument("closed forms require r >= 2 and q >= 2");
    switch (kind) {
        case ClosedForm::pg_hyperplanes:
        case ClosedForm::pg_circuits:
            return ipow(q - 1, r - 1);
        case ClosedForm::ag_hyperplanes:
            return ipow(q - 1, r - 1) - 1;
        case ClosedForm::ag_circuits: {
            Int num = ipow(q - 1, r) - (r % 2 == 0 ? Int(1) : Int(-1));
            if (num % q != 0)
                throw std::logic_error("affine circuit closed form not divisible by q");
            return num / q;
        }
    }
    throw std::invalid_argument("unknown closed form");
}

namespace {

using nlohmann::json;

// 2^53: the largest magnitude that round-trips through a JSON number in
// every double-based reader.
const Int kJsonNumberLimit = Int(1) << 53;

nlohmann::ordered_json int_to_json(const Int& v) {
    if (v >= -kJsonNumberLimit && v <= kJsonNumberLimit)
        return nlohmann::ordered_json(v.convert_to<std::int64_t>());
    return nlohmann::ordered_json(v.str());
}

Int int_from_json(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw std::runtime_error("profile parse error: " + where +
                                     " is not a valid integer string");
        }
    }
    throw std::runtime_error("profile parse error: " + where +
                             " must be an integer or a decimal string");
}

}  // namespace

SpmdProfile profile_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // The parser message already carries line and column.
        throw std::runtime_error(std::string("profile parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw std::runtime_error("profile parse error: top level must be an object");
    for (const char* key : {"name", "r", "whitney", "flat_size"})
        if (!doc.contains(key))
            throw std::runtime_error(std::string("profile parse error: missing key \"") +
                                     key + "\"");

    SpmdProfile p;
    if (!doc["name"].is_string())
        throw std::runtime_error("profile parse error: \"name\" must be a string");
    p.name = doc["name"].get<std::string>();
    if (!doc["r"].is_number_integer() && !doc["r"].is_number_unsigned())
        throw std::runtime_error("profile parse error: \"r\" must be an integer");
    p.rank = doc["r"].get<int>();

    if (!doc["whitney"].is_array())
        throw std::runtime_error("profile parse error: \"whitney\" must be an array");
    for (size_t j = 0; j < doc["whitney"].size(); ++j) {
        const json& row = doc["whitney"][j];
        if (!row.is_array())
            throw std::runtime_error("profile parse error: whitney[" +
                                     std::to_string(j) + "] must be an array");
        p.whitney.emplace_back();
        for (size_t k = 0; k < row.size(); ++k)
            p.whitney.back().push_back(int_from_json(
                row[k],
                "whitney[" + std::to_string(j) + "][" + std::to_string(k) + "]"));
    }

    if (!doc["flat_size"].is_array())
        throw std::runtime_error("profile parse error: \"flat_size\" must be an array");
    for (size_t k = 0; k < doc["flat_size"].size(); ++k)
        p.flat_size.push_back(
            int_from_json(doc["flat_size"][k], "flat_size[" + std::to_string(k) + "]"));

    p.validate();
    return p;
}

SpmdProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return profile_from_json(buf.str());
    } catch (const std::domain_error& e) {
        throw std::domain_error(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string profile_to_json(const SpmdProfile& profile) {
    nlohmann::ordered_json doc;
    doc["name"] = profile.name;
    doc["r"] = profile.rank;
    doc["whitney"] = nlohmann::ordered_json::array();
    for (const auto& row : profile.whitney) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const Int& v : row) jrow.push_back(int_to_json(v));
        doc["whitney"].push_back(jrow);
    }
    doc["flat_size"] = nlohmann::ordered_json::array();
    for (const Int& v : profile.flat_size) doc["flat_size"].push_back(int_to_json(v));
    return doc.dump(2);
}

}  // namespace pmdlab
