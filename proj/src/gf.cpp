#include "pmdlab/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pmdlab {

namespace {

constexpr int kMaxPrime = 31;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Fixed irreducible moduli for the supported extension fields, lowest degree
// coefficient first.  Each is re-checked for irreducibility at construction.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},     // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},  // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
        {{3, 2}, {1, 0, 1}},     // x^2 + 1
        {{3, 3}, {1, 2, 0, 1}},  // x^3 + 2x + 1
        {{5, 2}, {2, 0, 1}},     // x^2 + 2
    };
    return table;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first, with
// no trailing zeros.  Used only at table-build time.
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(out));
}

// Remainder of a modulo monic divisor m.
Poly poly_rem(Poly a, const Poly& m, int p) {
    a = poly_trim(std::move(a));
    while (a.size() >= m.size()) {
        int lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int v = a[shift + i] - lead * m[i] % p;
            a[shift + i] = ((v % p) + p) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

bool poly_is_irreducible(const Poly& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    if (deg < 1) return false;
    if (m.back() != 1) return false;
    // Trial division by every monic polynomial of degree 1 .. deg/2.
    for (int dd = 1; dd <= deg / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly div(dd + 1, 0);
            long long t = idx;
            for (int i = 0; i < dd; ++i) {
                div[i] = static_cast<int>(t % p);
                t /= p;
            }
            div[dd] = 1;
            if (poly_rem(m, div, p).empty()) return false;
        }
    }
    return true;
}

Poly index_to_poly(int index, int p) {
    Poly out;
    while (index > 0) {
        out.push_back(index % p);
        index /= p;
    }
    return out;
}

int poly_to_index(const Poly& a, int p) {
    int out = 0;
    for (size_t i = a.size(); i-- > 0;) out = out * p + a[i];
    return out;
}

}  // namespace

Field::Field(int p, int d, std::vector<int> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < d_; ++i) q_ *= p_;

    if (d_ > 1 && !poly_is_irreducible(modulus_, p_))
        throw std::logic_error("modulus table entry is reducible");

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        Poly pa = index_to_poly(a, p_);
        for (int b = 0; b < q_; ++b) {
            Poly pb = index_to_poly(b, p_);
            Poly sum(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < sum.size(); ++i) {
                int v = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                sum[i] = v % p_;
            }
            add_[a * q_ + b] = poly_to_index(poly_trim(std::move(sum)), p_);
            Poly prod = poly_rem(poly_mul(pa, pb, p_), modulus_, p_);
            mul_[a * q_ + b] = poly_to_index(prod, p_);
        }
    }
    for (int a = 0; a < q_; ++a) {
        Poly pa = index_to_poly(a, p_);
        for (int& c : pa) c = (p_ - c) % p_;
        neg_[a] = poly_to_index(poly_trim(std::move(pa)), p_);
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] == 0) throw std::logic_error("element without inverse");
    }
}

const Field& Field::get(int p, int d) {
    if (d < 1 || !is_prime(p))
        throw std::invalid_argument("unsupported field: characteristic must be prime");
    if (d == 1) {
        if (p > kMaxPrime)
            throw std::invalid_argument(
                "unsupported field: prime fields available up to p = 31");
    } else if (!modulus_table().count({p, d})) {
        throw std::invalid_argument(
            "unsupported field: no modulus for GF(" + std::to_string(p) + "^" +
            std::to_string(d) + ")");
    }

    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, d}];
    if (!slot) {
        std::vector<int> modulus =
            d == 1 ? std::vector<int>{0, 1} : modulus_table().at({p, d});
        slot = std::unique_ptr<Field>(new Field(p, d, std::move(modulus)));
    }
    return *slot;
}

const Field& Field::of_order(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int power = p, d = 1;
        while (power < q) {
            power *= p;
            ++d;
        }
        if (power == q) return get(p, d);
    }
    throw std::invalid_argument("unsupported field: order " + std::to_string(q) +
                                " is not a prime power");
}

bool Field::order_supported(int q) {
    if (q < 2) return false;
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int power = p, d = 1;
        while (power < q) {
            power *= p;
            ++d;
        }
        if (power == q)
            return d == 1 ? p <= kMaxPrime : modulus_table().count({p, d}) > 0;
    }
    return false;
}

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return inv_[a];
}

FieldElement Field::element(int index) const {
    return FieldElement(*this, index);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement::FieldElement(const Field& field, int index)
    : field_(&field), index_(index) {
    if (index < 0 || index >= field.q())
        throw std::out_of_range("element index out of range for field order " +
                                std::to_string(field.q()));
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("field mismatch");
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().add(a.index(), b.index()));
}

FieldElement operator-(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().sub(a.index(), b.index()));
}

FieldElement operator*(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().mul(a.index(), b.index()));
}

FieldElement operator/(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().mul(a.index(), b.field().inv(b.index())));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(*field_, field_->neg(index_));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(*field_, field_->inv(index_));
}

bool operator<(FieldElement a, FieldElement b) {
    if (a.field().p() != b.field().p()) return a.field().p() < b.field().p();
    if (a.field().d() != b.field().d()) return a.field().d() < b.field().d();
    return a.index() < b.index();
}

FieldElement pow(FieldElement base, long long e) {
    const Field& f = base.field();
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    FieldElement acc = f.one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, FieldElement e) {
    return os << e.index();
}

}  // namespace pmdlab
