#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pmdlab/gf.hpp"

namespace pmdlab {

/// Point of the projective geometry PG(r-1, q), stored as the canonical
/// representative of its homogeneous class: the leftmost nonzero coordinate
/// is scaled to 1.  Two equal points therefore have identical coordinates.
class ProjectivePoint {
public:
    /// Normalizes on construction.  Throws std::invalid_argument for an
    /// all-zero vector.
    ProjectivePoint(const Field& field, std::vector<int> coords);

    const Field& field() const { return *field_; }
    int dimension() const { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords() const { return coords_; }
    FieldElement coord(int i) const { return field_->element(coords_.at(i)); }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) {
        return !(a == b);
    }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

private:
    const Field* field_;
    std::vector<int> coords_;
};

/// Point of the affine geometry AG(r-1, q): a plain coordinate vector with
/// r-1 entries.  No normalization applies.
class AffinePoint {
public:
    AffinePoint(const Field& field, std::vector<int> coords);

    const Field& field() const { return *field_; }
    /// Matroid rank of the geometry this point lives in: coords + 1.
    int rank() const { return static_cast<int>(coords_.size()) + 1; }
    const std::vector<int>& coords() const { return coords_; }

    friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const AffinePoint& a, const AffinePoint& b) {
        return !(a == b);
    }
    friend bool operator<(const AffinePoint& a, const AffinePoint& b);

private:
    const Field* field_;
    std::vector<int> coords_;
};

/// Hyperplane of PG(r-1, q), stored by its dual vector h: the incidence set
/// is {p : <h, p> = 0}.  Normalized exactly like a point, so hyperplanes
/// enumerate and compare the same way points do.
class Hyperplane {
public:
    Hyperplane(const Field& field, std::vector<int> dual_coords);

    const Field& field() const { return *field_; }
    int dimension() const { return static_cast<int>(dual_.size()); }
    const std::vector<int>& dual_coords() const { return dual_; }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.field_ == b.field_ && a.dual_ == b.dual_;
    }
    friend bool operator!=(const Hyperplane& a, const Hyperplane& b) {
        return !(a == b);
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b);

private:
    const Field* field_;
    std::vector<int> dual_;
};

/// Linear subspace of GF(q)^r, i.e. a flat of PG(r-1, q), stored as a
/// reduced row echelon matrix with zero rows removed.  The echelon form is
/// canonical: two subspaces are equal iff their matrices are identical.
class Subspace {
public:
    /// Canonicalizes arbitrary generator rows; the empty list gives the
    /// rank-0 subspace (the empty flat).
    Subspace(const Field& field, int ambient, std::vector<std::vector<int>> generators);

    static Subspace zero(const Field& field, int ambient);
    static Subspace whole(const Field& field, int ambient);

    const Field& field() const { return *field_; }
    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool contains(const ProjectivePoint& p) const;
    bool contains(const Subspace& other) const;

    /// All projective points of the flat, in ascending coordinate order.
    /// There are [rank] of them; rank 0 yields the empty list.
    std::vector<ProjectivePoint> points() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    const Field* field_;
    int ambient_;
    std::vector<std::vector<int>> rows_;
};

/// Enumeration of all [r] points of PG(r-1, q), in ascending lexicographic
/// order of the normalized coordinate vectors.
std::vector<ProjectivePoint> pg_points(int r, const Field& field);

/// Enumeration of all q^(r-1) points of AG(r-1, q), lexicographic.
std::vector<AffinePoint> ag_points(int r, const Field& field);

/// Enumeration of all [r] hyperplanes of PG(r-1, q): the same normalized
/// vectors as pg_points, read as duals.
std::vector<Hyperplane> pg_hyperplanes(int r, const Field& field);

/// <h, p> = 0 test.  Throws for field or dimension mismatch.
bool incident(const ProjectivePoint& p, const Hyperplane& h);

/// Span of a point set.  The overload without an explicit ambient space
/// requires a nonempty list.
Subspace span(const Field& field, int ambient, const std::vector<ProjectivePoint>& points);
Subspace span(const std::vector<ProjectivePoint>& points);

Subspace join(const Subspace& a, const Subspace& b);

/// {w : <w, v> = 0 for every v in s}, rank = ambient - rank(s).
Subspace orthogonal_complement(const Subspace& s);

/// Intersection of flats, computed through the orthogonal complement:
/// meet(A, B) = (A-perp joined with B-perp)-perp.
Subspace meet(const Subspace& a, const Subspace& b);

/// The q+1 points of the line through x and y, in the fixed order
/// x, y, x + c*y for c running over the nonzero field elements in index
/// order.  Throws std::invalid_argument("degenerate line") when x = y.
std::vector<ProjectivePoint> line(const ProjectivePoint& x, const ProjectivePoint& y);

/// Dual counterpart of line(): the q+1 hyperplanes through the common
/// rank-(r-2) flat of two distinct hyperplanes, in the same fixed order on
/// dual vectors.
std::vector<Hyperplane> pencil(const Hyperplane& a, const Hyperplane& b);

/// True iff the points are pairwise distinct as a set and their span has
/// rank equal to the set size.
bool is_independent(const std::vector<ProjectivePoint>& points);

/// True iff the point set is dependent and removing any single point makes
/// it independent.  Duplicates are collapsed first (a circuit is a set).
bool is_circuit(const std::vector<ProjectivePoint>& points);

/// Duality between rank-(r-1) subspaces and hyperplanes: hyperplane_of
/// solves for the one-dimensional null space of the subspace matrix,
/// subspace_of inverts it.  hyperplane_of throws
/// std::domain_error("not a hyperplane") when rank(S) != ambient - 1.
Hyperplane hyperplane_of(const Subspace& s);
Subspace subspace_of(const Hyperplane& h);

/// The fixed hyperplane H_0 removed from PG to obtain AG: dual (1, 0, ..., 0),
/// incidence set {p : p_0 = 0}.
Hyperplane infinity_hyperplane(const Field& field, int r);

/// Embedding of AG into PG: (a_1, ..., a_{r-1}) -> (1, a_1, ..., a_{r-1}).
/// ag_unembed throws std::domain_error("point on H_0") when the first
/// coordinate is zero.
ProjectivePoint ag_embed(const AffinePoint& p);
AffinePoint ag_unembed(const ProjectivePoint& p);

/// The hyperplanes of AG(r-1, q), each represented by the unique projective
/// hyperplane (other than H_0) cutting it; ascending dual order.
std::vector<Hyperplane> ag_hyperplanes(int r, const Field& field);

/// Ordered basis of PG(r-1, q): exactly r independent points.
/// Construction throws std::invalid_argument("not a basis") otherwise.
class Basis {
public:
    explicit Basis(std::vector<ProjectivePoint> points);

    /// Unit points e_1, ..., e_r.
    static Basis canonical(const Field& field, int r);
    /// Deterministic pseudo-random independent points for a given seed.
    static Basis random(const Field& field, int r, std::uint64_t seed);

    const Field& field() const { return points_.front().field(); }
    int rank() const { return static_cast<int>(points_.size()); }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    const ProjectivePoint& point(int i) const { return points_.at(i); }

    /// Reordered copy: result.point(i) = point(perm[i]).
    Basis permuted(const std::vector<int>& perm) const;

private:
    std::vector<ProjectivePoint> points_;
};

/// Ordered basis of AG(r-1, q): r affine points whose embeddings are
/// projectively independent.
class AffineBasis {
public:
    explicit AffineBasis(std::vector<AffinePoint> points);

    /// Origin followed by the unit points e_1, ..., e_{r-1}.
    static AffineBasis canonical(const Field& field, int r);
    static AffineBasis random(const Field& field, int r, std::uint64_t seed);

    const Field& field() const { return points_.front().field(); }
    int rank() const { return static_cast<int>(points_.size()); }
    const std::vector<AffinePoint>& points() const { return points_; }
    const AffinePoint& point(int i) const { return points_.at(i); }

    AffineBasis permuted(const std::vector<int>& perm) const;

private:
    std::vector<AffinePoint> points_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);
std::ostream& operator<<(std::ostream& os, const AffinePoint& p);
std::ostream& operator<<(std::ostream& os, const Hyperplane& h);

}  // namespace pmdlab
