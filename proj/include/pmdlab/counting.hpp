#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace pmdlab {

/// All counts are exact: no floating point, no overflow, no rounding.
using Int = boost::multiprecision::cpp_int;

/// base^e for e >= 0.
Int ipow(Int base, long long e);

/// [x] = (q^x - 1)/(q - 1): the number of projective points spanned by x
/// independent vectors over a q-element field.  Requires x >= 0, q >= 2.
Int bracket(int x, int q);

/// Gaussian coefficient: the number of k-dimensional subspaces of a
/// x-dimensional vector space over GF(q).  Defined as 0 when k < 0 or k > x.
/// The product formula is evaluated with exact stepwise division.
Int gaussian(int x, int k, int q);

/// Ordinary binomial coefficient, 0 when k < 0 or k > n.
Int binomial(int n, int k);

/// Counting profile of a squashed perfect matroid design: for every rank
/// j <= rank, all rank-j flats look alike, so the geometry is described by
/// two tables.  whitney[j][k] is the number of rank-k flats inside any
/// rank-j flat; flat_size[k] is the number of elements of any rank-k flat.
struct SpmdProfile {
    std::string name;
    int rank = 0;
    std::vector<std::vector<Int>> whitney;  // triangular: whitney[j] has j+1 entries
    std::vector<Int> flat_size;             // rank+1 entries

    /// Bounds-checked whitney access.
    const Int& flats(int j, int k) const;

    /// Checks the shape and the identities every profile must satisfy:
    /// whitney[j][0] = whitney[j][j] = 1, flat_size starts 0, 1 and is
    /// strictly increasing, and whitney[rank][s] * whitney[s][u] is divisible
    /// by whitney[rank][u] for all u <= s <= rank.  Throws std::domain_error
    /// naming the violated cell or identity.
    void validate() const;
};

/// Projective geometry of matroid rank r over a q-element field.
SpmdProfile profile_pg(int r, int q);
/// Affine geometry of matroid rank r over a q-element field.
SpmdProfile profile_ag(int r, int q);
/// Free matroid on r elements (every subset independent).
SpmdProfile profile_free(int r);

/// Number of rank-s flats that contain a fixed rank-u flat, inside the full
/// rank-r geometry the profile describes.  Requires 0 <= u <= s <= rank.
/// Throws std::domain_error("profile inconsistent ...") when the defining
/// quotient is not an integer.
Int flats_containing(const SpmdProfile& profile, int s, int u);

/// Number of hyperplanes (rank r-1 flats) that avoid every element of a
/// fixed basis, by inclusion-exclusion over the basis subsets a hyperplane
/// may contain.  Requires rank >= 2.
Int count_avoiding_hyperplanes(const SpmdProfile& profile);

/// Number of elements e such that basis + e is a circuit, by
/// inclusion-exclusion over flats spanned by basis subsets.
/// Requires rank >= 1.
Int count_circuit_points(const SpmdProfile& profile);

/// Closed forms for the four geometric cases; all four evaluate the
/// inclusion-exclusion sums above in one power expression.
enum class ClosedForm {
    pg_hyperplanes,  // (q-1)^(r-1)
    ag_hyperplanes,  // (q-1)^(r-1) - 1
    pg_circuits,     // (q-1)^(r-1)
    ag_circuits,     // ((q-1)^r - (-1)^r)/q
};

Int closed_form(ClosedForm kind, int r, int q);

/// Profile serialization.  The JSON object is
///   {"name": ..., "r": ..., "whitney": [[...], ...], "flat_size": [...]}
/// Entries with magnitude at most 2^53 are written as JSON numbers, larger
/// ones as decimal strings; the reader accepts both forms.
///
/// profile_from_json throws std::runtime_error for malformed input (bad
/// syntax with line/column position, missing keys, wrong types) and
/// std::domain_error when the tables violate a profile identity.
SpmdProfile profile_from_json(const std::string& text);
SpmdProfile load_profile(const std::string& path);
std::string profile_to_json(const SpmdProfile& profile);

}  // namespace pmdlab
