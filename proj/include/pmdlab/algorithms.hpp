#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pmdlab/counting.hpp"
#include "pmdlab/geometry.hpp"

namespace pmdlab {

enum class GeometryKind { pg, ag };
enum class Target { hyperplanes, circuits };

/// Choice vector alpha = (m_1, ..., m_{r-1}) with every entry in 1..q-1.
/// Each alpha selects one interior point (or pencil member) per consecutive
/// basis pair; the (q-1)^(r-1) sequences index the full output family.
class ChoiceSequence {
public:
    ChoiceSequence(std::vector<int> entries, int q);

    /// The all-ones sequence of length r-1.
    static ChoiceSequence first(int r, int q);

    /// Odometer step in lexicographic order, rightmost entry fastest.
    /// Returns false once the last sequence has been passed.
    bool advance();

    int q() const { return q_; }
    const std::vector<int>& entries() const { return entries_; }

private:
    std::vector<int> entries_;
    int q_;
};

struct EnumOptions {
    /// Basis reordering applied before the run; identity when absent.
    /// Exists to exercise the order-independence of the output sets.
    std::optional<std::vector<int>> permutation;
    /// Walk each line (or pencil) in reversed parameter order.  The alpha
    /// labeling changes; the output set must not.
    bool reverse_line_points = false;
    /// Assert the intermediate invariants (independence of every selected
    /// point set, pencil members containing the common core) while running.
    bool check_steps = false;
};

struct HyperplaneRecord {
    std::vector<int> alpha;
    Hyperplane value;
};

struct PointRecord {
    std::vector<int> alpha;
    ProjectivePoint value;
};

struct AffinePointRecord {
    std::vector<int> alpha;
    AffinePoint value;
};

/// All hyperplanes of PG(r-1, q) that contain no point of the basis, built
/// constructively: lines through consecutive basis points supply q-1
/// interior points each, and every choice sequence spans one avoiding
/// hyperplane.  Returns (q-1)^(r-1) records in alpha order.
/// Requires rank >= 2.
std::vector<HyperplaneRecord> pg_avoiding_hyperplanes(const Basis& basis,
                                                      const EnumOptions& opts = {});

/// All points p of PG(r-1, q) such that basis + p is a circuit, built dually:
/// pencils of hyperplanes through consecutive coordinate hyperplanes of the
/// basis supply q-1 members each, and every choice sequence intersects to
/// one point.  Returns (q-1)^(r-1) records in alpha order.  Requires rank >= 2.
std::vector<PointRecord> pg_circuit_points(const Basis& basis,
                                           const EnumOptions& opts = {});

/// Affine counterpart: embeds the basis into PG, runs the projective
/// construction, and discards the hyperplane at infinity, which the
/// projective family always contains.  Returns (q-1)^(r-1) - 1 records;
/// values are dual vectors in the embedded PG.
std::vector<HyperplaneRecord> ag_avoiding_hyperplanes(const AffineBasis& basis,
                                                      const EnumOptions& opts = {});

/// Affine counterpart of the circuit construction: embeds, runs the
/// projective construction, keeps the points off the hyperplane at infinity,
/// and maps them back.  Returns ((q-1)^r - (-1)^r)/q records.
std::vector<AffinePointRecord> ag_circuit_points(const AffineBasis& basis,
                                                 const EnumOptions& opts = {});

/// Brute-force oracles: exhaustive filters over the full enumeration,
/// sharing no construction logic with the functions above.
std::set<Hyperplane> brute_avoiding_hyperplanes(const Basis& basis);
std::set<Hyperplane> brute_avoiding_hyperplanes(const AffineBasis& basis);
std::set<ProjectivePoint> brute_circuit_points(const Basis& basis);
std::set<AffinePoint> brute_circuit_points(const AffineBasis& basis);

/// Oracle size guard: geometries with more points than this are not
/// brute-forced by verify().
inline constexpr long long default_oracle_cap = 1'000'000;

/// Outcome of one constructive-vs-brute-vs-formula comparison.  Sets are
/// recorded as sorted canonical coordinate vectors (dual vectors for
/// hyperplane targets, point coordinates for circuit targets).
struct EnumerationReport {
    GeometryKind kind;
    Target target;
    int r = 0;
    int q = 0;
    std::vector<std::vector<int>> basis_coords;
    std::vector<std::vector<int>> constructive;
    std::vector<std::vector<int>> brute;

    bool oracle_ran = false;
    std::string oracle_note;  // set when the oracle was skipped

    Int formula;  // inclusion-exclusion count from the geometry's profile
    Int closed;   // closed-form count

    bool sets_equal = false;   // constructive == brute; meaningful when oracle_ran
    bool counts_agree = false; // |constructive| == formula == closed (== |brute|)
    bool all_agree = false;    // counts_agree and, when the oracle ran, sets_equal

    double elapsed_constructive = 0.0;  // seconds
    double elapsed_brute = 0.0;
};

/// Runs the constructive enumeration, the brute-force oracle (when the
/// geometry has at most oracle_cap points), and both count formulas, and
/// reports every agreement.  Requires rank >= 2.
EnumerationReport verify(Target target, const Basis& basis,
                         long long oracle_cap = default_oracle_cap);
EnumerationReport verify(Target target, const AffineBasis& basis,
                         long long oracle_cap = default_oracle_cap);

}  // namespace pmdlab
