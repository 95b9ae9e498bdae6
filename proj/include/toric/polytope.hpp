#ifndef TORIC_POLYTOPE_HPP
#define TORIC_POLYTOPE_HPP

#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Closed halfspace { m : <m, normal> >= rhs } with primitive integer normal.
struct Halfspace {
    IVec normal;
    Rational rhs;

    bool operator==(const Halfspace& o) const { return normal == o.normal && rhs == o.rhs; }
    bool operator<(const Halfspace& o) const {
        if (normal != o.normal) return normal < o.normal;
        return rhs < o.rhs;
    }
};

/**
 * A bounded convex polytope with exact rational vertices, carried in both
 * representations. Vertices are kept sorted lexicographically, so exact
 * polytope equality is vertex-list equality. Possibly empty and possibly of
 * lower dimension than the ambient space; lower-dimensional polytopes carry
 * their affine-hull equalities as opposite halfspace pairs.
 */
class LatticePolytope {
public:
    LatticePolytope() = default;

    /// Vertex enumeration by exhaustive n-subset intersection of the
    /// halfspace boundaries with feasibility filtering. Verifies
    /// boundedness (throws UnboundedPolytope otherwise).
    static LatticePolytope from_hrep(int ambient_dim, std::vector<Halfspace> hrep);

    /// Convex hull: facet enumeration plus vertex filtering.
    static LatticePolytope from_points(int ambient_dim, const std::vector<QVec>& points);

    int ambient_dim() const { return ambient_; }
    bool is_empty() const { return vertices_.empty(); }
    int dim() const;  // affine dimension, -1 if empty
    const std::vector<QVec>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& hrep() const { return hrep_; }

    bool contains(const QVec& point) const;

    bool operator==(const LatticePolytope& o) const {
        return ambient_ == o.ambient_ && vertices_ == o.vertices_;
    }

private:
    int ambient_ = 0;
    std::vector<Halfspace> hrep_;
    std::vector<QVec> vertices_;
};

/// All lattice points of the polytope, sorted lexicographically.
std::vector<IVec> lattice_points(const LatticePolytope& p);

/// Exact Minkowski sum: hull of pairwise vertex sums. Both inputs nonempty.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Negation -P, exact.
LatticePolytope negate(const LatticePolytope& p);

}  // namespace toric

#endif
