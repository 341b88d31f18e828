#include "pmdlab/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace pmdlab {

namespace {

void check_coords(const Field& f, const std::vector<int>& coords) {
    for (int c : coords)
        if (c < 0 || c >= f.q())
            throw std::invalid_argument("coordinate index " + std::to_string(c) +
                                        " out of range for field order " +
                                        std::to_string(f.q()));
}

// Scales v so its leftmost nonzero coordinate becomes 1.  Returns false for
// the zero vector.
bool normalize(const Field& f, std::vector<int>& v) {
    for (int c : v) {
        if (c != 0) {
            if (c != 1) {
                int s = f.inv(c);
                for (int& x : v) x = f.mul(x, s);
            }
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> rref(const Field& f, std::vector<std::vector<int>> rows,
                                   int width) {
    int nrows = static_cast<int>(rows.size());
    int prow = 0;
    for (int col = 0; col < width && prow < nrows; ++col) {
        int sel = -1;
        for (int i = prow; i < nrows; ++i)
            if (rows[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[prow], rows[sel]);
        int s = f.inv(rows[prow][col]);
        for (int j = col; j < width; ++j) rows[prow][j] = f.mul(rows[prow][j], s);
        for (int i = 0; i < nrows; ++i) {
            if (i == prow || rows[i][col] == 0) continue;
            int factor = rows[i][col];
            for (int j = col; j < width; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[prow][j]));
        }
        ++prow;
    }
    rows.resize(prow);
    return rows;
}

// Null space of an echelon matrix, itself in echelon form.
std::vector<std::vector<int>> kernel(const Field& f,
                                     const std::vector<std::vector<int>>& echelon,
                                     int width) {
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(width, false);
    for (const auto& row : echelon) {
        int c = 0;
        while (c < width && row[c] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::vector<int>> out;
    for (int j = 0; j < width; ++j) {
        if (is_pivot[j]) continue;
        std::vector<int> v(width, 0);
        v[j] = 1;
        for (size_t i = 0; i < echelon.size(); ++i)
            v[pivot_col[i]] = f.neg(echelon[i][j]);
        out.push_back(std::move(v));
    }
    return rref(f, std::move(out), width);
}

void require_same_space(const Field* fa, int da, const Field* fb, int db) {
    if (fa != fb) throw std::invalid_argument("field mismatch");
    if (da != db) throw std::invalid_argument("dimension mismatch");
}

// The q+1 normalized representatives of the rank-2 flat through distinct
// normalized vectors x and y, in the order x, y, x + c*y.
std::vector<std::vector<int>> line_vectors(const Field& f, const std::vector<int>& x,
                                           const std::vector<int>& y) {
    if (x == y) throw std::invalid_argument("degenerate line");
    std::vector<std::vector<int>> out = {x, y};
    for (int c = 1; c < f.q(); ++c) {
        std::vector<int> z(x.size());
        for (size_t j = 0; j < x.size(); ++j) z[j] = f.add(x[j], f.mul(c, y[j]));
        if (!normalize(f, z))
            throw std::logic_error("combination of distinct points vanished");
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace

ProjectivePoint::ProjectivePoint(const Field& field, std::vector<int> coords)
    : field_(&field), coords_(std::move(coords)) {
    check_coords(field, coords_);
    if (!normalize(field, coords_))
        throw std::invalid_argument("projective point must be nonzero");
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.field_ != b.field_)
        return std::make_pair(a.field_->p(), a.field_->d()) <
               std::make_pair(b.field_->p(), b.field_->d());
    return a.coords_ < b.coords_;
}

AffinePoint::AffinePoint(const Field& field, std::vector<int> coords)
    : field_(&field), coords_(std::move(coords)) {
    check_coords(field, coords_);
}

bool operator<(const AffinePoint& a, const AffinePoint& b) {
    if (a.field_ != b.field_)
        return std::make_pair(a.field_->p(), a.field_->d()) <
               std::make_pair(b.field_->p(), b.field_->d());
    return a.coords_ < b.coords_;
}

Hyperplane::Hyperplane(const Field& field, std::vector<int> dual_coords)
    : field_(&field), dual_(std::move(dual_coords)) {
    check_coords(field, dual_);
    if (!normalize(field, dual_))
        throw std::invalid_argument("hyperplane dual vector must be nonzero");
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.field_ != b.field_)
        return std::make_pair(a.field_->p(), a.field_->d()) <
               std::make_pair(b.field_->p(), b.field_->d());
    return a.dual_ < b.dual_;
}

Subspace::Subspace(const Field& field, int ambient,
                   std::vector<std::vector<int>> generators)
    : field_(&field), ambient_(ambient) {
    if (ambient < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
    for (const auto& row : generators) {
        if (static_cast<int>(row.size()) != ambient)
            throw std::invalid_argument("dimension mismatch");
        check_coords(field, row);
    }
    rows_ = rref(field, std::move(generators), ambient);
}

Subspace Subspace::zero(const Field& field, int ambient) {
    return Subspace(field, ambient, {});
}

Subspace Subspace::whole(const Field& field, int ambient) {
    std::vector<std::vector<int>> rows(ambient, std::vector<int>(ambient, 0));
    for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
    return Subspace(field, ambient, std::move(rows));
}

bool Subspace::contains(const ProjectivePoint& p) const {
    require_same_space(field_, ambient_, &p.field(), p.dimension());
    std::vector<int> v = p.coords();
    for (const auto& row : rows_) {
        int c = 0;
        while (row[c] == 0) ++c;  // pivot column
        int factor = v[c];
        if (factor == 0) continue;
        for (int j = c; j < ambient_; ++j)
            v[j] = field_->sub(v[j], field_->mul(factor, row[j]));
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    require_same_space(field_, ambient_, other.field_, other.ambient_);
    return join(*this, other).rows() == rows_;
}

std::vector<ProjectivePoint> Subspace::points() const {
    std::set<std::vector<int>> seen;
    int k = rank();
    std::vector<int> coef(k, 0);
    // Odometer over all q^k coefficient vectors, skipping the zero vector.
    while (true) {
        int pos = k - 1;
        while (pos >= 0 && coef[pos] == field_->q() - 1) coef[pos--] = 0;
        if (pos < 0) break;
        ++coef[pos];
        std::vector<int> v(ambient_, 0);
        for (int i = 0; i < k; ++i) {
            if (coef[i] == 0) continue;
            for (int j = 0; j < ambient_; ++j)
                v[j] = field_->add(v[j], field_->mul(coef[i], rows_[i][j]));
        }
        if (normalize(*field_, v)) seen.insert(std::move(v));
    }
    std::vector<ProjectivePoint> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.emplace_back(*field_, v);
    return out;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.field_ != b.field_)
        return std::make_pair(a.field_->p(), a.field_->d()) <
               std::make_pair(b.field_->p(), b.field_->d());
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.rows_ < b.rows_;
}

std::vector<ProjectivePoint> pg_points(int r, const Field& field) {
    if (r < 1) throw std::invalid_argument("rank must be at least 1");
    std::vector<ProjectivePoint> out;
    // Ascending lexicographic order: the leading 1 moves from the last
    // coordinate to the first, the free tail counts up like an odometer.
    for (int lead = r - 1; lead >= 0; --lead) {
        int tail = r - 1 - lead;
        std::vector<int> t(tail, 0);
        while (true) {
            std::vector<int> v(r, 0);
            v[lead] = 1;
            for (int i = 0; i < tail; ++i) v[lead + 1 + i] = t[i];
            out.emplace_back(field, std::move(v));
            int pos = tail - 1;
            while (pos >= 0 && t[pos] == field.q() - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
    }
    return out;
}

std::vector<AffinePoint> ag_points(int r, const Field& field) {
    if (r < 1) throw std::invalid_argument("rank must be at least 1");
    int n = r - 1;
    std::vector<AffinePoint> out;
    std::vector<int> v(n, 0);
    while (true) {
        out.emplace_back(field, v);
        int pos = n - 1;
        while (pos >= 0 && v[pos] == field.q() - 1) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }
    return out;
}

std::vector<Hyperplane> pg_hyperplanes(int r, const Field& field) {
    std::vector<Hyperplane> out;
    for (const ProjectivePoint& p : pg_points(r, field))
        out.emplace_back(field, p.coords());
    return out;
}

bool incident(const ProjectivePoint& p, const Hyperplane& h) {
    require_same_space(&p.field(), p.dimension(), &h.field(), h.dimension());
    const Field& f = p.field();
    int dot = 0;
    for (int i = 0; i < p.dimension(); ++i)
        dot = f.add(dot, f.mul(p.coords()[i], h.dual_coords()[i]));
    return dot == 0;
}

Subspace span(const Field& field, int ambient,
              const std::vector<ProjectivePoint>& points) {
    std::vector<std::vector<int>> rows;
    rows.reserve(points.size());
    for (const ProjectivePoint& p : points) {
        require_same_space(&field, ambient, &p.field(), p.dimension());
        rows.push_back(p.coords());
    }
    return Subspace(field, ambient, std::move(rows));
}

Subspace span(const std::vector<ProjectivePoint>& points) {
    if (points.empty())
        throw std::invalid_argument(
            "span of an empty list needs an explicit ambient space");
    return span(points.front().field(), points.front().dimension(), points);
}

Subspace join(const Subspace& a, const Subspace& b) {
    require_same_space(&a.field(), a.ambient(), &b.field(), b.ambient());
    std::vector<std::vector<int>> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Subspace(a.field(), a.ambient(), std::move(rows));
}

Subspace orthogonal_complement(const Subspace& s) {
    return Subspace(s.field(), s.ambient(),
                    kernel(s.field(), s.rows(), s.ambient()));
}

Subspace meet(const Subspace& a, const Subspace& b) {
    require_same_space(&a.field(), a.ambient(), &b.field(), b.ambient());
    const Field& f = a.field();
    int n = a.ambient();
    std::vector<std::vector<int>> dual_a = kernel(f, a.rows(), n);
    std::vector<std::vector<int>> dual_b = kernel(f, b.rows(), n);
    dual_a.insert(dual_a.end(), dual_b.begin(), dual_b.end());
    return Subspace(f, n, kernel(f, rref(f, std::move(dual_a), n), n));
}

std::vector<ProjectivePoint> line(const ProjectivePoint& x, const ProjectivePoint& y) {
    require_same_space(&x.field(), x.dimension(), &y.field(), y.dimension());
    std::vector<ProjectivePoint> out;
    for (auto& v : line_vectors(x.field(), x.coords(), y.coords()))
        out.emplace_back(x.field(), std::move(v));
    return out;
}

std::vector<Hyperplane> pencil(const Hyperplane& a, const Hyperplane& b) {
    require_same_space(&a.field(), a.dimension(), &b.field(), b.dimension());
    std::vector<Hyperplane> out;
    for (auto& v : line_vectors(a.field(), a.dual_coords(), b.dual_coords()))
        out.emplace_back(a.field(), std::move(v));
    return out;
}

bool is_independent(const std::vector<ProjectivePoint>& points) {
    if (points.empty()) return true;
    return span(points).rank() == static_cast<int>(points.size());
}

bool is_circuit(const std::vector<ProjectivePoint>& points) {
    std::set<ProjectivePoint> dedup(points.begin(), points.end());
    std::vector<ProjectivePoint> pts(dedup.begin(), dedup.end());
    int n = static_cast<int>(pts.size());
    if (n == 0) return false;
    if (span(pts).rank() == n) return false;  // independent
    for (int skip = 0; skip < n; ++skip) {
        std::vector<ProjectivePoint> rest;
        rest.reserve(n - 1);
        for (int i = 0; i < n; ++i)
            if (i != skip) rest.push_back(pts[i]);
        if (!rest.empty() && span(rest).rank() != n - 1) return false;
    }
    return true;
}

Hyperplane hyperplane_of(const Subspace& s) {
    if (s.rank() != s.ambient() - 1) throw std::domain_error("not a hyperplane");
    std::vector<std::vector<int>> null = kernel(s.field(), s.rows(), s.ambient());
    return Hyperplane(s.field(), null.at(0));
}

Subspace subspace_of(const Hyperplane& h) {
    std::vector<std::vector<int>> rows = {h.dual_coords()};
    return Subspace(h.field(), h.dimension(),
                    kernel(h.field(), rref(h.field(), std::move(rows), h.dimension()),
                           h.dimension()));
}

Hyperplane infinity_hyperplane(const Field& field, int r) {
    std::vector<int> v(r, 0);
    v[0] = 1;
    return Hyperplane(field, std::move(v));
}

ProjectivePoint ag_embed(const AffinePoint& p) {
    std::vector<int> v;
    v.reserve(p.coords().size() + 1);
    v.push_back(1);
    v.insert(v.end(), p.coords().begin(), p.coords().end());
    return ProjectivePoint(p.field(), std::move(v));
}

AffinePoint ag_unembed(const ProjectivePoint& p) {
    // Normalization guarantees a nonzero first coordinate equals 1.
    if (p.coords()[0] == 0) throw std::domain_error("point on H_0");
    return AffinePoint(p.field(),
                       std::vector<int>(p.coords().begin() + 1, p.coords().end()));
}

std::vector<Hyperplane> ag_hyperplanes(int r, const Field& field) {
    Hyperplane h0 = infinity_hyperplane(field, r);
    std::vector<Hyperplane> out;
    for (const Hyperplane& h : pg_hyperplanes(r, field))
        if (h != h0) out.push_back(h);
    return out;
}

Basis::Basis(std::vector<ProjectivePoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("not a basis");
    int r = points_.front().dimension();
    for (const ProjectivePoint& p : points_)
        require_same_space(&points_.front().field(), r, &p.field(), p.dimension());
    if (static_cast<int>(points_.size()) != r || !is_independent(points_))
        throw std::invalid_argument("not a basis");
}

Basis Basis::canonical(const Field& field, int r) {
    std::vector<ProjectivePoint> pts;
    for (int i = 0; i < r; ++i) {
        std::vector<int> v(r, 0);
        v[i] = 1;
        pts.emplace_back(field, std::move(v));
    }
    return Basis(std::move(pts));
}

Basis Basis::random(const Field& field, int r, std::uint64_t seed) {
    std::vector<ProjectivePoint> all = pg_points(r, field);
    std::mt19937_64 rng(seed);
    std::vector<ProjectivePoint> picked;
    Subspace cur = Subspace::zero(field, r);
    while (static_cast<int>(picked.size()) < r) {
        const ProjectivePoint& cand = all[rng() % all.size()];
        if (cur.contains(cand)) continue;
        picked.push_back(cand);
        cur = join(cur, span(field, r, {cand}));
    }
    return Basis(std::move(picked));
}

Basis Basis::permuted(const std::vector<int>& perm) const {
    int r = rank();
    if (static_cast<int>(perm.size()) != r)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(r, false);
    std::vector<ProjectivePoint> pts;
    for (int i : perm) {
        if (i < 0 || i >= r || seen[i])
            throw std::invalid_argument("not a permutation");
        seen[i] = true;
        pts.push_back(points_[i]);
    }
    return Basis(std::move(pts));
}

AffineBasis::AffineBasis(std::vector<AffinePoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("not a basis");
    int r = points_.front().rank();
    for (const AffinePoint& p : points_)
        require_same_space(&points_.front().field(), r, &p.field(), p.rank());
    if (static_cast<int>(points_.size()) != r) throw std::invalid_argument("not a basis");
    std::vector<ProjectivePoint> embedded;
    for (const AffinePoint& p : points_) embedded.push_back(ag_embed(p));
    if (!is_independent(embedded)) throw std::invalid_argument("not a basis");
}

AffineBasis AffineBasis::canonical(const Field& field, int r) {
    if (r < 1) throw std::invalid_argument("rank must be at least 1");
    std::vector<AffinePoint> pts;
    pts.emplace_back(field, std::vector<int>(r - 1, 0));
    for (int i = 0; i < r - 1; ++i) {
        std::vector<int> v(r - 1, 0);
        v[i] = 1;
        pts.emplace_back(field, std::move(v));
    }
    return AffineBasis(std::move(pts));
}

AffineBasis AffineBasis::random(const Field& field, int r, std::uint64_t seed) {
    std::vector<AffinePoint> all = ag_points(r, field);
    std::mt19937_64 rng(seed);
    std::vector<AffinePoint> picked;
    Subspace cur = Subspace::zero(field, r);
    while (static_cast<int>(picked.size()) < r) {
        const AffinePoint& cand = all[rng() % all.size()];
        ProjectivePoint embedded = ag_embed(cand);
        if (cur.contains(embedded)) continue;
        picked.push_back(cand);
        cur = join(cur, span(field, r, {embedded}));
    }
    return AffineBasis(std::move(picked));
}

AffineBasis AffineBasis::permuted(const std::vector<int>& perm) const {
    int r = rank();
    if (static_cast<int>(perm.size()) != r)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(r, false);
    std::vector<AffinePoint> pts;
    for (int i : perm) {
        if (i < 0 || i >= r || seen[i])
            throw std::invalid_argument("not a permutation");
        seen[i] = true;
        pts.push_back(points_[i]);
    }
    return AffineBasis(std::move(pts));
}

namespace {
void print_coords(std::ostream& os, const std::vector<int>& v, char open, char close) {
    os << open;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << close;
}
}  // namespace

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
    print_coords(os, p.coords(), '(', ')');
    return os;
}

std::ostream& operator<<(std::ostream& os, const AffinePoint& p) {
    print_coords(os, p.coords(), '(', ')');
    return os;
}

std::ostream& operator<<(std::ostream& os, const Hyperplane& h) {
    print_coords(os, h.dual_coords(), '[', ']');
    return os;
}

}  // namespace pmdlab
