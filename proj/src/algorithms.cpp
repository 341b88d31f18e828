#include "pmdlab/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace pmdlab {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// The q-1 interior points of the line through a and b: a + c*b for nonzero c
// in index order (entries 2.. of line()), optionally reversed.
template <typename T, typename LineFn>
std::vector<T> interior(const T& a, const T& b, LineFn&& line_fn, bool reversed) {
    std::vector<T> pts = line_fn(a, b);
    pts.erase(pts.begin(), pts.begin() + 2);
    if (reversed) std::reverse(pts.begin(), pts.end());
    return pts;
}

}  // namespace

ChoiceSequence::ChoiceSequence(std::vector<int> entries, int q)
    : entries_(std::move(entries)), q_(q) {
    if (q < 2) throw std::invalid_argument("choice sequence requires q >= 2");
    for (int m : entries_)
        if (m < 1 || m > q - 1)
            throw std::invalid_argument("choice entry " + std::to_string(m) +
                                        " outside 1.." + std::to_string(q - 1));
}

ChoiceSequence ChoiceSequence::first(int r, int q) {
    if (r < 1) throw std::invalid_argument("choice sequence requires r >= 1");
    return ChoiceSequence(std::vector<int>(r - 1, 1), q);
}

bool ChoiceSequence::advance() {
    int pos = static_cast<int>(entries_.size()) - 1;
    while (pos >= 0 && entries_[pos] == q_ - 1) entries_[pos--] = 1;
    if (pos < 0) return false;
    ++entries_[pos];
    return true;
}

std::vector<HyperplaneRecord> pg_avoiding_hyperplanes(const Basis& basis,
                                                      const EnumOptions& opts) {
    const Basis working = opts.permutation ? basis.permuted(*opts.permutation) : basis;
    const Field& f = working.field();
    int r = working.rank();
    if (r < 2) throw std::invalid_argument("rank must be at least 2");

    // One line per consecutive basis pair; its interior points are the
    // candidates the choice sequence picks from.
    std::vector<std::vector<ProjectivePoint>> candidates;
    for (int i = 0; i + 1 < r; ++i)
        candidates.push_back(interior(
            working.point(i), working.point(i + 1),
            [](const ProjectivePoint& a, const ProjectivePoint& b) { return line(a, b); },
            opts.reverse_line_points));

    std::vector<HyperplaneRecord> out;
    ChoiceSequence alpha = ChoiceSequence::first(r, f.q());
    do {
        std::vector<ProjectivePoint> picked;
        picked.reserve(r - 1);
        for (int i = 0; i + 1 < r; ++i)
            picked.push_back(candidates[i][alpha.entries()[i] - 1]);
        if (opts.check_steps && !is_independent(picked))
            throw std::logic_error("selected points are dependent");
        Subspace s = span(f, r, picked);
        out.push_back({alpha.entries(), hyperplane_of(s)});
    } while (alpha.advance());
    return out;
}

std::vector<PointRecord> pg_circuit_points(const Basis& basis,
                                           const EnumOptions& opts) {
    const Basis working = opts.permutation ? basis.permuted(*opts.permutation) : basis;
    const Field& f = working.field();
    int r = working.rank();
    if (r < 2) throw std::invalid_argument("rank must be at least 2");

    // The hyperplane spanned by the basis minus its i-th point.
    std::vector<Hyperplane> facet;
    for (int i = 0; i < r; ++i) {
        std::vector<ProjectivePoint> rest;
        for (int j = 0; j < r; ++j)
            if (j != i) rest.push_back(working.point(j));
        facet.push_back(hyperplane_of(span(f, r, rest)));
    }

    // One pencil per consecutive facet pair, mirroring the line construction
    // in dual coordinates.
    std::vector<std::vector<Hyperplane>> candidates;
    for (int i = 0; i + 1 < r; ++i) {
        candidates.push_back(interior(
            facet[i], facet[i + 1],
            [](const Hyperplane& a, const Hyperplane& b) { return pencil(a, b); },
            opts.reverse_line_points));
        if (opts.check_steps) {
            Subspace core = meet(subspace_of(facet[i]), subspace_of(facet[i + 1]));
            for (const Hyperplane& h : candidates.back())
                if (!subspace_of(h).contains(core))
                    throw std::logic_error("pencil member misses the common core");
        }
    }

    std::vector<PointRecord> out;
    ChoiceSequence alpha = ChoiceSequence::first(r, f.q());
    do {
        std::vector<std::vector<int>> duals;
        duals.reserve(r - 1);
        for (int i = 0; i + 1 < r; ++i)
            duals.push_back(candidates[i][alpha.entries()[i] - 1].dual_coords());
        Subspace common = orthogonal_complement(Subspace(f, r, std::move(duals)));
        if (common.rank() != 1)
            throw std::logic_error("chosen hyperplanes do not meet in a point");
        out.push_back({alpha.entries(), ProjectivePoint(f, common.rows()[0])});
    } while (alpha.advance());
    return out;
}

std::vector<HyperplaneRecord> ag_avoiding_hyperplanes(const AffineBasis& basis,
                                                      const EnumOptions& opts) {
    std::vector<ProjectivePoint> embedded;
    for (const AffinePoint& p : basis.points()) embedded.push_back(ag_embed(p));
    std::vector<HyperplaneRecord> projective =
        pg_avoiding_hyperplanes(Basis(std::move(embedded)), opts);

    Hyperplane h0 = infinity_hyperplane(basis.field(), basis.rank());
    std::vector<HyperplaneRecord> out;
    int dropped = 0;
    for (HyperplaneRecord& rec : projective) {
        if (rec.value == h0)
            ++dropped;
        else
            out.push_back(std::move(rec));
    }
    // The projective family always contains the hyperplane at infinity,
    // exactly once.
    if (dropped != 1)
        throw std::logic_error("hyperplane at infinity appeared " +
                               std::to_string(dropped) + " times");
    return out;
}

std::vector<AffinePointRecord> ag_circuit_points(const AffineBasis& basis,
                                                 const EnumOptions& opts) {
    std::vector<ProjectivePoint> embedded;
    for (const AffinePoint& p : basis.points()) embedded.push_back(ag_embed(p));
    std::vector<PointRecord> projective =
        pg_circuit_points(Basis(std::move(embedded)), opts);

    std::vector<AffinePointRecord> out;
    for (const PointRecord& rec : projective)
        if (rec.value.coords()[0] != 0)
            out.push_back({rec.alpha, ag_unembed(rec.value)});
    return out;
}

std::set<Hyperplane> brute_avoiding_hyperplanes(const Basis& basis) {
    std::set<Hyperplane> out;
    for (const Hyperplane& h : pg_hyperplanes(basis.rank(), basis.field())) {
        bool hits = false;
        for (const ProjectivePoint& p : basis.points())
            if (incident(p, h)) {
                hits = true;
                break;
            }
        if (!hits) out.insert(h);
    }
    return out;
}

std::set<Hyperplane> brute_avoiding_hyperplanes(const AffineBasis& basis) {
    std::set<Hyperplane> out;
    std::vector<ProjectivePoint> embedded;
    for (const AffinePoint& p : basis.points()) embedded.push_back(ag_embed(p));
    for (const Hyperplane& h : ag_hyperplanes(basis.rank(), basis.field())) {
        bool hits = false;
        for (const ProjectivePoint& p : embedded)
            if (incident(p, h)) {
                hits = true;
                break;
            }
        if (!hits) out.insert(h);
    }
    return out;
}

std::set<ProjectivePoint> brute_circuit_points(const Basis& basis) {
    std::set<ProjectivePoint> out;
    for (const ProjectivePoint& p : pg_points(basis.rank(), basis.field())) {
        std::vector<ProjectivePoint> family = basis.points();
        family.push_back(p);
        if (is_circuit(family)) out.insert(p);
    }
    return out;
}

std::set<AffinePoint> brute_circuit_points(const AffineBasis& basis) {
    // Dependence in AG is inherited from PG through the embedding.
    std::set<AffinePoint> out;
    std::vector<ProjectivePoint> embedded;
    for (const AffinePoint& p : basis.points()) embedded.push_back(ag_embed(p));
    for (const AffinePoint& a : ag_points(basis.rank(), basis.field())) {
        std::vector<ProjectivePoint> family = embedded;
        family.push_back(ag_embed(a));
        if (is_circuit(family)) out.insert(a);
    }
    return out;
}

namespace {

Int geometry_points(GeometryKind kind, int r, int q) {
    return kind == GeometryKind::pg ? bracket(r, q) : ipow(q, r - 1);
}

void finish_report(EnumerationReport& rep) {
    std::sort(rep.constructive.begin(), rep.constructive.end());
    bool counts = Int(rep.constructive.size()) == rep.formula &&
                  rep.formula == rep.closed;
    if (rep.oracle_ran) {
        rep.sets_equal = rep.constructive == rep.brute;
        counts = counts && rep.brute.size() == rep.constructive.size();
        rep.all_agree = counts && rep.sets_equal;
    } else {
        rep.sets_equal = false;
        rep.oracle_note = "geometry too large for oracle";
        rep.all_agree = counts;
    }
    rep.counts_agree = counts;
}

}  // namespace

EnumerationReport verify(Target target, const Basis& basis, long long oracle_cap) {
    EnumerationReport rep;
    rep.kind = GeometryKind::pg;
    rep.target = target;
    rep.r = basis.rank();
    rep.q = basis.field().q();
    for (const ProjectivePoint& p : basis.points()) rep.basis_coords.push_back(p.coords());

    auto t0 = std::chrono::steady_clock::now();
    if (target == Target::hyperplanes) {
        for (const HyperplaneRecord& rec : pg_avoiding_hyperplanes(basis))
            rep.constructive.push_back(rec.value.dual_coords());
        rep.formula = count_avoiding_hyperplanes(profile_pg(rep.r, rep.q));
        rep.closed = closed_form(ClosedForm::pg_hyperplanes, rep.r, rep.q);
    } else {
        for (const PointRecord& rec : pg_circuit_points(basis))
            rep.constructive.push_back(rec.value.coords());
        rep.formula = count_circuit_points(profile_pg(rep.r, rep.q));
        rep.closed = closed_form(ClosedForm::pg_circuits, rep.r, rep.q);
    }
    rep.elapsed_constructive = seconds_since(t0);

    rep.oracle_ran = geometry_points(rep.kind, rep.r, rep.q) <= Int(oracle_cap);
    if (rep.oracle_ran) {
        auto t1 = std::chrono::steady_clock::now();
        if (target == Target::hyperplanes) {
            for (const Hyperplane& h : brute_avoiding_hyperplanes(basis))
                rep.brute.push_back(h.dual_coords());
        } else {
            for (const ProjectivePoint& p : brute_circuit_points(basis))
                rep.brute.push_back(p.coords());
        }
        rep.elapsed_brute = seconds_since(t1);
    }
    finish_report(rep);
    return rep;
}

EnumerationReport verify(Target target, const AffineBasis& basis, long long oracle_cap) {
    EnumerationReport rep;
    rep.kind = GeometryKind::ag;
    rep.target = target;
    rep.r = basis.rank();
    rep.q = basis.field().q();
    for (const AffinePoint& p : basis.points()) rep.basis_coords.push_back(p.coords());

    auto t0 = std::chrono::steady_clock::now();
    if (target == Target::hyperplanes) {
        for (const HyperplaneRecord& rec : ag_avoiding_hyperplanes(basis))
            rep.constructive.push_back(rec.value.dual_coords());
        rep.formula = count_avoiding_hyperplanes(profile_ag(rep.r, rep.q));
        rep.closed = closed_form(ClosedForm::ag_hyperplanes, rep.r, rep.q);
    } else {
        for (const AffinePointRecord& rec : ag_circuit_points(basis))
            rep.constructive.push_back(rec.value.coords());
        rep.formula = count_circuit_points(profile_ag(rep.r, rep.q));
        rep.closed = closed_form(ClosedForm::ag_circuits, rep.r, rep.q);
    }
    rep.elapsed_constructive = seconds_since(t0);

    rep.oracle_ran = geometry_points(rep.kind, rep.r, rep.q) <= Int(oracle_cap);
    if (rep.oracle_ran) {
        auto t1 = std::chrono::steady_clock::now();
        if (target == Target::hyperplanes) {
            for (const Hyperplane& h : brute_avoiding_hyperplanes(basis))
                rep.brute.push_back(h.dual_coords());
        } else {
            for (const AffinePoint& p : brute_circuit_points(basis))
                rep.brute.push_back(p.coords());
        }
        rep.elapsed_brute = seconds_since(t1);
    }
    finish_report(rep);
    return rep;
}

}  // namespace pmdlab
