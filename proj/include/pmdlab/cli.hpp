#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmdlab/algorithms.hpp"

namespace pmdlab {

enum class Command { count, enumerate, verify, profile };
enum class BasisSource { canonical, random_seeded, explicit_list };
enum class Algorithm { constructive, brute, both };
enum class OutputFormat { text, json, csv };

struct SweepRange {
    int q_lo = 0, q_hi = 0;
    int r_lo = 0, r_hi = 0;
};

/// Fully parsed invocation.  The front end translates flags into this
/// structure; run() validates it and executes.
struct RunConfig {
    Command command = Command::count;

    /// Unset geometry/target mean "all of them" for verify; count and
    /// enumerate require both.
    std::optional<GeometryKind> geometry;
    std::optional<Target> target;
    int q = 0;
    int r = 0;

    BasisSource basis_source = BasisSource::canonical;
    std::string explicit_basis;  // JSON list of coordinate lists
    std::uint64_t seed = 0;

    Algorithm algorithm = Algorithm::constructive;
    OutputFormat format = OutputFormat::text;

    /// Basis reordering for enumerate.
    std::optional<std::vector<int>> permutation;
    /// verify only: additionally check that every basis permutation yields
    /// the same output set.
    bool all_permutations = false;
    /// verify only: grid of cells instead of a single one.
    std::optional<SweepRange> sweep;

    /// profile only: builtin name (pg | ag | free) or a JSON file path.
    std::string builtin;
    std::string profile_file;

    /// Brute-force point-count guard (PMDLAB_ORACLE_CAP overrides).
    long long oracle_cap = default_oracle_cap;
};

/// Executes the configured command, writing results to out and complaints to
/// err.  Returns the process exit code: 0 = success and every requested
/// cross-check agreed, 1 = a disagreement or validation failure was found,
/// 2 = unusable configuration, 3 = a brute-force enumeration was requested
/// beyond the oracle cap.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pmdlab
