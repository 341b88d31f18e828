#include "pmdlab/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmdlab {
namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(GeometryKind k) { return k == GeometryKind::pg ? "pg" : "ag"; }
const char* target_name(Target t) {
    return t == Target::hyperplanes ? "hyperplanes" : "circuits";
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

const Field& field_for(int q) {
    if (!Field::order_supported(q))
        throw std::invalid_argument("unsupported field: q = " + std::to_string(q));
    return Field::of_order(q);
}

/// JSON numbers are exact only up to 2^53; larger counts travel as strings.
ordered_json json_int(const Int& v) {
    static const Int limit = Int(1) << 53;
    if (v < -limit || v > limit) return ordered_json(v.str());
    return ordered_json(v.convert_to<long long>());
}

Int geometry_point_count(GeometryKind k, int r, int q) {
    return k == GeometryKind::pg ? bracket(r, q) : ipow(q, r - 1);
}

SpmdProfile geometry_profile(GeometryKind k, int r, int q) {
    return k == GeometryKind::pg ? profile_pg(r, q) : profile_ag(r, q);
}

Int formula_count(GeometryKind k, Target t, int r, int q) {
    SpmdProfile profile = geometry_profile(k, r, q);
    return t == Target::hyperplanes ? count_avoiding_hyperplanes(profile)
                                    : count_circuit_points(profile);
}

Int closed_count(GeometryKind k, Target t, int r, int q) {
    ClosedForm form = k == GeometryKind::pg
                          ? (t == Target::hyperplanes ? ClosedForm::pg_hyperplanes
                                                      : ClosedForm::pg_circuits)
                          : (t == Target::hyperplanes ? ClosedForm::ag_hyperplanes
                                                      : ClosedForm::ag_circuits);
    return closed_form(form, r, q);
}

std::string joined(const std::vector<int>& values, char separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += separator;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string alpha_text(const std::vector<int>& alpha) {
    return "(" + joined(alpha, ',') + ")";
}

// ---------------------------------------------------------------------------
// basis construction

std::vector<std::vector<int>> parse_coordinate_lists(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("basis parse error: ") + e.what());
    }
    require(doc.is_array() && !doc.empty(), "basis must be a non-empty list of coordinate lists");
    std::vector<std::vector<int>> rows;
    for (const auto& row : doc) {
        require(row.is_array(), "basis must be a list of coordinate lists");
        std::vector<int> coords;
        for (const auto& entry : row) {
            require(entry.is_number_integer(), "basis coordinates must be integers");
            coords.push_back(entry.get<int>());
        }
        rows.push_back(std::move(coords));
    }
    return rows;
}

Basis make_pg_basis(const RunConfig& c, const Field& field, int r) {
    switch (c.basis_source) {
        case BasisSource::canonical:
            return Basis::canonical(field, r);
        case BasisSource::random_seeded:
            return Basis::random(field, r, c.seed);
        case BasisSource::explicit_list: {
            std::vector<ProjectivePoint> points;
            for (auto& coords : parse_coordinate_lists(c.explicit_basis))
                points.emplace_back(field, std::move(coords));
            return Basis(std::move(points));
        }
    }
    throw std::logic_error("unreachable basis source");
}

AffineBasis make_ag_basis(const RunConfig& c, const Field& field, int r) {
    switch (c.basis_source) {
        case BasisSource::canonical:
            return AffineBasis::canonical(field, r);
        case BasisSource::random_seeded:
            return AffineBasis::random(field, r, c.seed);
        case BasisSource::explicit_list: {
            std::vector<AffinePoint> points;
            for (auto& coords : parse_coordinate_lists(c.explicit_basis))
                points.emplace_back(field, std::move(coords));
            return AffineBasis(std::move(points));
        }
    }
    throw std::logic_error("unreachable basis source");
}

// ---------------------------------------------------------------------------
// count

int cmd_count(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require(c.geometry.has_value(), "count requires --geometry");
    require(c.target.has_value(), "count requires --target");
    require(c.r >= 2, "rank must be at least 2");
    const Field& field = field_for(c.q);
    GeometryKind g = *c.geometry;
    Target t = *c.target;

    Int formula = formula_count(g, t, c.r, c.q);
    Int closed = closed_count(g, t, c.r, c.q);

    bool want_brute = c.algorithm != Algorithm::constructive;
    bool brute_ran = false;
    Int brute = 0;
    std::string note;
    if (want_brute) {
        if (geometry_point_count(g, c.r, c.q) > c.oracle_cap) {
            note = "geometry too large for oracle";
        } else if (g == GeometryKind::pg) {
            Basis basis = make_pg_basis(c, field, c.r);
            brute = t == Target::hyperplanes ? Int(brute_avoiding_hyperplanes(basis).size())
                                             : Int(brute_circuit_points(basis).size());
            brute_ran = true;
        } else {
            AffineBasis basis = make_ag_basis(c, field, c.r);
            brute = t == Target::hyperplanes ? Int(brute_avoiding_hyperplanes(basis).size())
                                             : Int(brute_circuit_points(basis).size());
            brute_ran = true;
        }
    }

    bool agree = formula == closed && (!brute_ran || brute == formula);

    switch (c.format) {
        case OutputFormat::text:
            out << kind_name(g) << " " << target_name(t) << " q=" << c.q << " r=" << c.r << "\n";
            out << "formula: " << formula << "\n";
            out << "closed-form: " << closed << "\n";
            if (brute_ran)
                out << "brute: " << brute << "\n";
            else if (want_brute)
                out << "brute: skipped (" << note << ")\n";
            out << (agree ? "agree" : "DISAGREE") << "\n";
            break;
        case OutputFormat::json: {
            ordered_json doc;
            doc["command"] = "count";
            doc["geometry"] = kind_name(g);
            doc["target"] = target_name(t);
            doc["q"] = c.q;
            doc["r"] = c.r;
            doc["formula"] = json_int(formula);
            doc["closed_form"] = json_int(closed);
            doc["brute"] = brute_ran ? json_int(brute) : ordered_json(nullptr);
            if (!note.empty()) doc["oracle_note"] = note;
            doc["agree"] = agree;
            out << doc.dump() << "\n";
            break;
        }
        case OutputFormat::csv:
            out << "geometry,target,q,r,formula,closed_form,brute,agree\n";
            out << kind_name(g) << "," << target_name(t) << "," << c.q << "," << c.r << ","
                << formula << "," << closed << "," << (brute_ran ? brute.str() : std::string())
                << "," << (agree ? "true" : "false") << "\n";
            break;
    }

    if (!agree) {
        err << "disagreement: formula " << formula << ", closed-form " << closed;
        if (brute_ran) err << ", brute " << brute;
        err << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// enumerate

struct OutputRow {
    std::vector<int> alpha;  // empty for brute-force rows
    std::vector<int> value;
};

void emit_rows(const RunConfig& c, GeometryKind g, Target t, bool with_alpha, int value_width,
               const std::vector<OutputRow>& rows, std::ostream& out) {
    const char* value_key = t == Target::hyperplanes ? "dual" : "point";
    switch (c.format) {
        case OutputFormat::text: {
            out << kind_name(g) << " " << target_name(t) << " q=" << c.q << " r=" << c.r << " ("
                << (with_alpha ? "constructive" : "brute") << ")\n";
            char open = t == Target::hyperplanes ? '[' : '(';
            char close = t == Target::hyperplanes ? ']' : ')';
            for (const auto& row : rows) {
                if (with_alpha) out << "alpha=" << alpha_text(row.alpha) << " ";
                out << value_key << "=" << open << joined(row.value, ',') << close << "\n";
            }
            out << "count: " << rows.size() << "\n";
            break;
        }
        case OutputFormat::json: {
            for (const auto& row : rows) {
                ordered_json rec;
                if (with_alpha) rec["alpha"] = row.alpha;
                rec[value_key] = row.value;
                out << rec.dump() << "\n";
            }
            ordered_json summary;
            summary["count"] = rows.size();
            out << summary.dump() << "\n";
            break;
        }
        case OutputFormat::csv: {
            std::vector<std::string> header;
            if (with_alpha)
                for (int i = 1; i < c.r; ++i) header.push_back("alpha_" + std::to_string(i));
            for (int i = 0; i < value_width; ++i) header.push_back("c_" + std::to_string(i));
            for (std::size_t i = 0; i < header.size(); ++i)
                out << (i ? "," : "") << header[i];
            out << "\n";
            for (const auto& row : rows) {
                if (with_alpha) {
                    out << joined(row.alpha, ',');
                    if (!row.value.empty()) out << ",";
                }
                out << joined(row.value, ',') << "\n";
            }
            break;
        }
    }
}

int cmd_enumerate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require(c.geometry.has_value(), "enumerate requires --geometry");
    require(c.target.has_value(), "enumerate requires --target");
    require(c.r >= 2, "rank must be at least 2");
    require(c.algorithm != Algorithm::both,
            "enumerate requires --algorithm constructive or brute");
    const Field& field = field_for(c.q);
    GeometryKind g = *c.geometry;
    Target t = *c.target;

    // The value column: dual vectors keep all r entries (affine hyperplanes
    // are reported through their projective cut), affine points drop the
    // leading homogenizing coordinate.
    int value_width = (g == GeometryKind::ag && t == Target::circuits) ? c.r - 1 : c.r;

    std::vector<OutputRow> rows;
    bool with_alpha = c.algorithm == Algorithm::constructive;
    if (with_alpha) {
        EnumOptions opts;
        opts.permutation = c.permutation;
        if (g == GeometryKind::pg) {
            Basis basis = make_pg_basis(c, field, c.r);
            if (t == Target::hyperplanes)
                for (const auto& rec : pg_avoiding_hyperplanes(basis, opts))
                    rows.push_back({rec.alpha, rec.value.dual_coords()});
            else
                for (const auto& rec : pg_circuit_points(basis, opts))
                    rows.push_back({rec.alpha, rec.value.coords()});
        } else {
            AffineBasis basis = make_ag_basis(c, field, c.r);
            if (t == Target::hyperplanes)
                for (const auto& rec : ag_avoiding_hyperplanes(basis, opts))
                    rows.push_back({rec.alpha, rec.value.dual_coords()});
            else
                for (const auto& rec : ag_circuit_points(basis, opts))
                    rows.push_back({rec.alpha, rec.value.coords()});
        }
    } else {
        require(!c.permutation.has_value(),
                "--permutation applies to the constructive algorithm");
        if (geometry_point_count(g, c.r, c.q) > c.oracle_cap) {
            err << "geometry too large for oracle\n";
            return 3;
        }
        if (g == GeometryKind::pg) {
            Basis basis = make_pg_basis(c, field, c.r);
            if (t == Target::hyperplanes)
                for (const auto& h : brute_avoiding_hyperplanes(basis))
                    rows.push_back({{}, h.dual_coords()});
            else
                for (const auto& p : brute_circuit_points(basis))
                    rows.push_back({{}, p.coords()});
        } else {
            AffineBasis basis = make_ag_basis(c, field, c.r);
            if (t == Target::hyperplanes)
                for (const auto& h : brute_avoiding_hyperplanes(basis))
                    rows.push_back({{}, h.dual_coords()});
            else
                for (const auto& p : brute_circuit_points(basis))
                    rows.push_back({{}, p.coords()});
        }
    }

    emit_rows(c, g, t, with_alpha, value_width, rows, out);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

std::vector<std::vector<int>> sorted_constructive(Target t, const Basis& basis) {
    std::vector<std::vector<int>> out;
    if (t == Target::hyperplanes)
        for (const auto& rec : pg_avoiding_hyperplanes(basis)) out.push_back(rec.value.dual_coords());
    else
        for (const auto& rec : pg_circuit_points(basis)) out.push_back(rec.value.coords());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> sorted_constructive(Target t, const AffineBasis& basis) {
    std::vector<std::vector<int>> out;
    if (t == Target::hyperplanes)
        for (const auto& rec : ag_avoiding_hyperplanes(basis)) out.push_back(rec.value.dual_coords());
    else
        for (const auto& rec : ag_circuit_points(basis)) out.push_back(rec.value.coords());
    std::sort(out.begin(), out.end());
    return out;
}

struct PermutationCheck {
    long long permutations = 0;
    bool order_independent = true;
};

template <typename BasisT>
PermutationCheck check_permutations(Target t, const BasisT& basis) {
    PermutationCheck result;
    std::vector<std::vector<int>> reference = sorted_constructive(t, basis);
    std::vector<int> perm(basis.rank());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++result.permutations;
        if (sorted_constructive(t, basis.permuted(perm)) != reference)
            result.order_independent = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

struct VerifyCell {
    EnumerationReport report;
    bool permutations_checked = false;
    PermutationCheck permutation_check;
    bool agree = true;
};

void emit_verify_cell(const RunConfig& c, const VerifyCell& cell, std::ostream& out) {
    const EnumerationReport& rep = cell.report;
    switch (c.format) {
        case OutputFormat::text: {
            out << kind_name(rep.kind) << " " << target_name(rep.target) << " q=" << rep.q
                << " r=" << rep.r << ": constructive=" << rep.constructive.size() << " brute=";
            if (rep.oracle_ran)
                out << rep.brute.size();
            else
                out << "skipped";
            out << " formula=" << rep.formula << " closed-form=" << rep.closed;
            if (cell.permutations_checked)
                out << " permutations=" << cell.permutation_check.permutations << " "
                    << (cell.permutation_check.order_independent ? "order-independent"
                                                                 : "ORDER-DEPENDENT");
            out << " " << (cell.agree ? "agree" : "DISAGREE");
            if (!rep.oracle_note.empty()) out << " (" << rep.oracle_note << ")";
            out << "\n";
            break;
        }
        case OutputFormat::json: {
            ordered_json doc;
            doc["geometry"] = kind_name(rep.kind);
            doc["target"] = target_name(rep.target);
            doc["q"] = rep.q;
            doc["r"] = rep.r;
            doc["constructive"] = rep.constructive.size();
            doc["brute"] = rep.oracle_ran ? ordered_json(rep.brute.size()) : ordered_json(nullptr);
            doc["oracle_ran"] = rep.oracle_ran;
            if (!rep.oracle_note.empty()) doc["oracle_note"] = rep.oracle_note;
            doc["formula"] = json_int(rep.formula);
            doc["closed_form"] = json_int(rep.closed);
            if (cell.permutations_checked) {
                doc["permutations"] = cell.permutation_check.permutations;
                doc["order_independent"] = cell.permutation_check.order_independent;
            }
            doc["agree"] = cell.agree;
            out << doc.dump() << "\n";
            break;
        }
        case OutputFormat::csv:
            out << kind_name(rep.kind) << "," << target_name(rep.target) << "," << rep.q << ","
                << rep.r << "," << rep.constructive.size() << ","
                << (rep.oracle_ran ? std::to_string(rep.brute.size()) : std::string()) << ","
                << rep.formula << "," << rep.closed << ","
                << (rep.oracle_ran ? "true" : "false") << ",";
            if (cell.permutations_checked)
                out << cell.permutation_check.permutations << ","
                    << (cell.permutation_check.order_independent ? "true" : "false") << ",";
            else
                out << ",,";
            out << (cell.agree ? "true" : "false") << "\n";
            break;
    }
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<int, int>> qr_cells;
    if (c.sweep) {
        const SweepRange& s = *c.sweep;
        require(s.q_lo >= 2 && s.q_lo <= s.q_hi, "sweep q range must satisfy 2 <= lo <= hi");
        require(s.r_lo >= 2 && s.r_lo <= s.r_hi, "sweep r range must satisfy 2 <= lo <= hi");
        require(c.basis_source != BasisSource::explicit_list,
                "an explicit basis cannot be combined with --sweep");
        for (int q = s.q_lo; q <= s.q_hi; ++q) {
            if (!Field::order_supported(q)) continue;  // skip non-prime-powers
            for (int r = s.r_lo; r <= s.r_hi; ++r) qr_cells.emplace_back(q, r);
        }
        require(!qr_cells.empty(), "sweep contains no supported field order");
    } else {
        require(c.q != 0 && c.r != 0, "verify requires --q and --r, or --sweep");
        require(c.r >= 2, "rank must be at least 2");
        field_for(c.q);
        qr_cells.emplace_back(c.q, c.r);
    }
    if (c.basis_source == BasisSource::explicit_list)
        require(c.geometry.has_value(), "an explicit basis requires --geometry");
    require(!c.all_permutations || (c.sweep ? c.sweep->r_hi : c.r) <= 6,
            "--permutations all supports rank at most 6");

    std::vector<GeometryKind> geometries =
        c.geometry ? std::vector<GeometryKind>{*c.geometry}
                   : std::vector<GeometryKind>{GeometryKind::pg, GeometryKind::ag};
    std::vector<Target> targets = c.target
                                      ? std::vector<Target>{*c.target}
                                      : std::vector<Target>{Target::hyperplanes, Target::circuits};

    if (c.format == OutputFormat::csv)
        out << "geometry,target,q,r,constructive,brute,formula,closed_form,oracle_ran,"
               "permutations,order_independent,agree\n";

    long long cells = 0;
    long long disagreements = 0;
    for (auto [q, r] : qr_cells) {
        const Field& field = field_for(q);
        for (GeometryKind g : geometries) {
            for (Target t : targets) {
                RunConfig cell_config = c;
                cell_config.q = q;
                cell_config.r = r;
                VerifyCell cell;
                if (g == GeometryKind::pg) {
                    Basis basis = make_pg_basis(cell_config, field, r);
                    cell.report = verify(t, basis, c.oracle_cap);
                    if (c.all_permutations) {
                        cell.permutations_checked = true;
                        cell.permutation_check = check_permutations(t, basis);
                    }
                } else {
                    AffineBasis basis = make_ag_basis(cell_config, field, r);
                    cell.report = verify(t, basis, c.oracle_cap);
                    if (c.all_permutations) {
                        cell.permutations_checked = true;
                        cell.permutation_check = check_permutations(t, basis);
                    }
                }
                cell.agree = cell.report.all_agree &&
                             (!cell.permutations_checked ||
                              cell.permutation_check.order_independent);
                ++cells;
                if (!cell.agree) ++disagreements;
                emit_verify_cell(c, cell, out);
            }
        }
    }

    bool all_agree = disagreements == 0;
    switch (c.format) {
        case OutputFormat::text:
            out << "cells: " << cells << "  disagreements: " << disagreements << "\n";
            out << (all_agree ? "all agree" : "DISAGREEMENTS FOUND") << "\n";
            break;
        case OutputFormat::json: {
            ordered_json summary;
            summary["cells"] = cells;
            summary["disagreements"] = disagreements;
            summary["all_agree"] = all_agree;
            out << summary.dump() << "\n";
            break;
        }
        case OutputFormat::csv:
            break;  // rows only
    }
    if (!all_agree) {
        err << "disagreement in " << disagreements << " of " << cells << " cells\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// profile

int cmd_profile(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require(c.builtin.empty() != c.profile_file.empty(),
            "profile requires exactly one of --builtin or --file");
    require(c.format != OutputFormat::csv, "profile output supports text or json");

    SpmdProfile profile;
    if (!c.builtin.empty()) {
        require(c.r >= 2, "rank must be at least 2");
        if (c.builtin == "pg") {
            field_for(c.q);
            profile = profile_pg(c.r, c.q);
        } else if (c.builtin == "ag") {
            field_for(c.q);
            profile = profile_ag(c.r, c.q);
        } else if (c.builtin == "free") {
            profile = profile_free(c.r);
        } else {
            throw std::invalid_argument("unknown builtin profile: " + c.builtin);
        }
    } else {
        profile = load_profile(c.profile_file);
    }
    profile.validate();  // domain_error (exit 1) when a table identity fails

    struct FlatsRow {
        int s, u;
        Int count;
    };
    std::vector<FlatsRow> flats_rows;
    for (int s = 0; s <= profile.rank; ++s)
        for (int u = 0; u <= s; ++u)
            flats_rows.push_back({s, u, flats_containing(profile, s, u)});

    Int avoiding = count_avoiding_hyperplanes(profile);
    Int circuits = count_circuit_points(profile);

    if (c.format == OutputFormat::text) {
        out << "profile: " << profile.name << "  rank=" << profile.rank << "\n";
        out << "whitney table (rank j -> flat counts by rank):\n";
        for (int j = 0; j <= profile.rank; ++j) {
            out << "  j=" << j << ":";
            for (const Int& v : profile.whitney[j]) out << " " << v;
            out << "\n";
        }
        out << "flat sizes:";
        for (const Int& v : profile.flat_size) out << " " << v;
        out << "\n";
        out << "flats of rank s containing a fixed rank-u flat (s u count):\n";
        for (const auto& row : flats_rows)
            out << "  " << row.s << " " << row.u << " " << row.count << "\n";
        out << "avoiding hyperplanes: " << avoiding << "\n";
        out << "circuit points: " << circuits << "\n";
        out << "profile consistent\n";
    } else {
        ordered_json doc;
        doc["profile"] = ordered_json::parse(profile_to_json(profile));
        ordered_json flats = ordered_json::array();
        for (const auto& row : flats_rows) {
            ordered_json entry;
            entry["s"] = row.s;
            entry["u"] = row.u;
            entry["count"] = json_int(row.count);
            flats.push_back(entry);
        }
        doc["flats_containing"] = flats;
        doc["avoiding_hyperplanes"] = json_int(avoiding);
        doc["circuit_points"] = json_int(circuits);
        doc["consistent"] = true;
        out << doc.dump(2) << "\n";
    }
    (void)err;
    return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::count:
                return cmd_count(config, out, err);
            case Command::enumerate:
                return cmd_enumerate(config, out, err);
            case Command::verify:
                return cmd_verify(config, out, err);
            case Command::profile:
                return cmd_profile(config, out, err);
        }
        throw std::logic_error("unreachable command");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pmdlab
