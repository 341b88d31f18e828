#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmdlab/counting.hpp"

using pmdlab::binomial;
using pmdlab::bracket;
using pmdlab::ClosedForm;
using pmdlab::closed_form;
using pmdlab::count_avoiding_hyperplanes;
using pmdlab::count_circuit_points;
using pmdlab::flats_containing;
using pmdlab::gaussian;
using pmdlab::Int;
using pmdlab::ipow;
using pmdlab::profile_ag;
using pmdlab::profile_free;
using pmdlab::profile_from_json;
using pmdlab::profile_pg;
using pmdlab::profile_to_json;
using pmdlab::SpmdProfile;

namespace {

// Independent oracles.  The library evaluates product formulas with stepwise
// division; these build the same values from sums and recurrences only.

// [x] as the plain geometric sum 1 + q + ... + q^(x-1).
Int bracket_oracle(int x, int q) {
    Int sum = 0, pw = 1;
    for (int i = 0; i < x; ++i) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

// Gaussian coefficients by the q-Pascal recurrence
// G(x,k) = G(x-1,k-1) + q^k G(x-1,k).
Int gaussian_oracle(int x, int k, int q) {
    if (k < 0 || k > x) return 0;
    std::vector<std::vector<Int>> g(x + 1);
    for (int n = 0; n <= x; ++n) {
        g[n].assign(n + 1, 0);
        g[n][0] = 1;
        for (int j = 1; j <= n; ++j)
            g[n][j] = g[n - 1][j - 1] +
                      ipow(q, j) * (j <= n - 1 ? g[n - 1][j] : Int(0));
    }
    return g[x][k];
}

// Pascal's triangle.
Int binomial_oracle(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<Int> row = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

const std::vector<int> kOrders = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("bracket matches the geometric-sum oracle and frozen values") {
    for (int q : kOrders)
        for (int x = 0; x <= 10; ++x) REQUIRE(bracket(x, q) == bracket_oracle(x, q));
    CHECK(bracket(3, 2) == 7);
    CHECK(bracket(0, 2) == 0);
    CHECK(bracket(1, 5) == 1);
    CHECK(bracket(4, 3) == 40);
}

TEST_CASE("gaussian matches the recurrence oracle and frozen values") {
    for (int q : kOrders)
        for (int x = 0; x <= 10; ++x)
            for (int k = 0; k <= x; ++k)
                REQUIRE(gaussian(x, k, q) == gaussian_oracle(x, k, q));
    CHECK(gaussian(4, 2, 2) == 35);
    CHECK(gaussian(5, 0, 7) == 1);
    CHECK(gaussian(2, 3, 5) == 0);  // k > x
    for (int q : kOrders) CHECK(gaussian(3, 1, q) == bracket(3, q));
}

TEST_CASE("gaussian symmetry and q-Pascal recurrence") {
    for (int q : kOrders)
        for (int x = 0; x <= 8; ++x)
            for (int k = 0; k <= x; ++k) {
                REQUIRE(gaussian(x, k, q) == gaussian(x, x - k, q));
                if (x >= 1)
                    REQUIRE(gaussian(x, k, q) ==
                            gaussian(x - 1, k - 1, q) +
                                ipow(q, k) * gaussian(x - 1, k, q));
            }
}

TEST_CASE("binomial matches Pascal's triangle") {
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == binomial_oracle(n, k));
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(8, 4) == 70);
}

TEST_CASE("builtin profiles validate and carry the expected tables") {
    for (int q : kOrders) {
        for (int r = 1; r <= 6; ++r) {
            SpmdProfile pg = profile_pg(r, q);
            SpmdProfile ag = profile_ag(r, q);
            CHECK_NOTHROW(pg.validate());
            CHECK_NOTHROW(ag.validate());
            for (int j = 0; j <= r; ++j)
                for (int k = 0; k <= j; ++k)
                    REQUIRE(pg.flats(j, k) == gaussian(j, k, q));
            // In both families the element count of a rank-k flat equals its
            // count of rank-1 flats.
            for (int k = 0; k <= r; ++k) {
                REQUIRE(pg.flat_size[k] == bracket(k, q));
                if (k >= 1) {
                    REQUIRE(pg.flat_size[k] == pg.flats(k, 1));
                    REQUIRE(ag.flat_size[k] == ipow(q, k - 1));
                    REQUIRE(ag.flat_size[k] == ag.flats(k, 1));
                }
            }
        }
    }
    SpmdProfile fr = profile_free(6);
    CHECK_NOTHROW(fr.validate());
    CHECK(fr.flats(6, 3) == 20);

    CHECK(profile_ag(3, 2).flats(3, 2) == 6);
    CHECK(profile_pg(3, 2).flats(3, 2) == 7);
    CHECK(profile_free(3).flats(3, 2) == 3);
}

TEST_CASE("flats_containing: closed forms for the two families") {
    for (int q : {2, 3, 4, 5}) {
        for (int r = 1; r <= 6; ++r) {
            SpmdProfile pg = profile_pg(r, q);
            SpmdProfile ag = profile_ag(r, q);
            for (int s = 0; s <= r; ++s) {
                REQUIRE(flats_containing(pg, s, s) == 1);
                REQUIRE(flats_containing(ag, s, s) == 1);
                for (int u = 1; u <= s; ++u)
                    REQUIRE(flats_containing(pg, s, u) == gaussian(r - u, s - u, q));
                if (s >= 1)
                    REQUIRE(flats_containing(ag, s, 0) ==
                            ipow(q, r - s) * gaussian(r - 1, s - 1, q));
            }
        }
    }
}

TEST_CASE("divisibility identity holds exactly across profiles") {
    for (int q : {2, 3, 4, 5, 9}) {
        for (int r = 1; r <= 6; ++r) {
            for (const SpmdProfile& p :
                 {profile_pg(r, q), profile_ag(r, q), profile_free(r)}) {
                for (int s = 0; s <= r; ++s)
                    for (int u = 0; u <= s; ++u)
                        REQUIRE(p.flats(r, s) * p.flats(s, u) ==
                                p.flats(r, u) * flats_containing(p, s, u));
            }
        }
    }
}

TEST_CASE("avoiding-hyperplane count: frozen spot values") {
    // PG r=3 q=2: 7 - 3*3 + 3*1 = 1.
    CHECK(count_avoiding_hyperplanes(profile_pg(3, 2)) == 1);
    // AG r=3 q=2: 6 - 3*3 + 3*1 = 0.
    CHECK(count_avoiding_hyperplanes(profile_ag(3, 2)) == 0);
    for (int r = 2; r <= 8; ++r)
        CHECK(count_avoiding_hyperplanes(profile_free(r)) == 0);
}

TEST_CASE("circuit-point count: frozen spot values") {
    // PG r=3 q=2: 0 + 0 - 3*(3-2) + (7-3) = 1.
    CHECK(count_circuit_points(profile_pg(3, 2)) == 1);
    CHECK(count_circuit_points(profile_ag(3, 2)) == 1);
    for (int r = 1; r <= 8; ++r) CHECK(count_circuit_points(profile_free(r)) == 0);
}

TEST_CASE("inclusion-exclusion sums reproduce the closed forms on a grid") {
    for (int q : {2, 3, 4, 5}) {
        for (int r = 2; r <= 6; ++r) {
            SpmdProfile pg = profile_pg(r, q);
            SpmdProfile ag = profile_ag(r, q);
            REQUIRE(count_avoiding_hyperplanes(pg) == ipow(q - 1, r - 1));
            REQUIRE(count_avoiding_hyperplanes(ag) == ipow(q - 1, r - 1) - 1);
            REQUIRE(count_circuit_points(pg) == ipow(q - 1, r - 1));
            REQUIRE(count_circuit_points(ag) ==
                    (ipow(q - 1, r) - (r % 2 == 0 ? Int(1) : Int(-1))) / q);
            // Projective duality: the two counts coincide.
            REQUIRE(count_avoiding_hyperplanes(pg) == count_circuit_points(pg));

            REQUIRE(closed_form(ClosedForm::pg_hyperplanes, r, q) ==
                    count_avoiding_hyperplanes(pg));
            REQUIRE(closed_form(ClosedForm::ag_hyperplanes, r, q) ==
                    count_avoiding_hyperplanes(ag));
            REQUIRE(closed_form(ClosedForm::pg_circuits, r, q) ==
                    count_circuit_points(pg));
            REQUIRE(closed_form(ClosedForm::ag_circuits, r, q) ==
                    count_circuit_points(ag));
        }
    }
    CHECK(closed_form(ClosedForm::pg_hyperplanes, 3, 3) == 4);
    CHECK(closed_form(ClosedForm::ag_circuits, 3, 3) == 3);
    CHECK(closed_form(ClosedForm::ag_hyperplanes, 3, 2) == 0);
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(bracket(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(bracket(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_avoiding_hyperplanes(profile_pg(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(closed_form(ClosedForm::pg_circuits, 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(flats_containing(profile_pg(3, 2), 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(profile_pg(3, 2).flats(2, 3), std::out_of_range);
}

TEST_CASE("inconsistent profiles are rejected with a named violation") {
    SpmdProfile p = profile_pg(3, 2);
    p.whitney[3][1] = 6;  // breaks divisibility: Dl(3,2)*Dl(2,1) = 21 vs Dl(3,1) = 6
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("profile inconsistent"),
                         std::domain_error);

    SpmdProfile bad_size = profile_ag(3, 3);
    bad_size.flat_size[1] = 5;
    CHECK_THROWS_WITH_AS(bad_size.validate(),
                         doctest::Contains("flat_size[1]"), std::domain_error);

    SpmdProfile bad_row = profile_pg(2, 2);
    bad_row.whitney[1].push_back(1);
    CHECK_THROWS_WITH_AS(bad_row.validate(), doctest::Contains("whitney[1]"),
                         std::domain_error);
}

TEST_CASE("profile JSON round-trips exactly, including huge entries") {
    for (const SpmdProfile& p :
         {profile_pg(4, 3), profile_ag(5, 2), profile_free(6), profile_pg(10, 16)}) {
        SpmdProfile back = profile_from_json(profile_to_json(p));
        REQUIRE(back.name == p.name);
        REQUIRE(back.rank == p.rank);
        REQUIRE(back.whitney == p.whitney);
        REQUIRE(back.flat_size == p.flat_size);
    }
    // gaussian(10,5,16) is far beyond 2^53, so the writer must emit a string.
    CHECK(profile_pg(10, 16).flats(10, 5) > (Int(1) << 53));
    CHECK(profile_to_json(profile_pg(10, 16)).find('"') != std::string::npos);
}

TEST_CASE("profile JSON rejects malformed and inconsistent input") {
    CHECK_THROWS_WITH_AS(profile_from_json("{\"name\": \"x\", "),
                         doctest::Contains("line"), std::runtime_error);
    CHECK_THROWS_WITH_AS(profile_from_json("[1, 2]"),
                         doctest::Contains("top level"), std::runtime_error);
    CHECK_THROWS_WITH_AS(profile_from_json("{\"name\": \"x\", \"r\": 1}"),
                         doctest::Contains("missing key"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        profile_from_json("{\"name\": \"x\", \"r\": 1, "
                          "\"whitney\": [[1], [1, \"zz\"]], \"flat_size\": [0, 1]}"),
        doctest::Contains("whitney[1][1]"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        profile_from_json("{\"name\": \"x\", \"r\": 1, "
                          "\"whitney\": [[1], [1, 1]], \"flat_size\": [0, 2]}"),
        doctest::Contains("flat_size[1]"), std::domain_error);
    // Integer-valued entries must not pass through floating point.
    CHECK_THROWS_AS(
        profile_from_json("{\"name\": \"x\", \"r\": 1, "
                          "\"whitney\": [[1], [1.5, 1]], \"flat_size\": [0, 1]}"),
        std::runtime_error);
    // Decimal strings are accepted for values of any size.
    SpmdProfile p = profile_from_json(
        "{\"name\": \"x\", \"r\": 1, \"whitney\": [[\"1\"], [1, \"1\"]], "
        "\"flat_size\": [\"0\", 1]}");
    CHECK(p.flats(1, 1) == 1);
}
