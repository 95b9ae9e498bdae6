#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "toric/intlinalg.hpp"
#include "toric/rational.hpp"

namespace toric {

/**
 * A strongly convex rational polyhedral cone, given by primitive generators.
 * Cones living inside a fan also carry the indices of their rays in the
 * fan's ray list; standalone cones leave ray_indices empty.
 */
struct Cone {
    std::vector<int> ray_indices;
    std::vector<IVec> generators;
    int ambient = 0;  // ambient lattice rank, needed when generators is empty

    int ambient_dim() const;
    int dim() const;  // rank of the generator set
};

/// Cone from raw generators; checks primitivity and strong convexity.
Cone make_cone(std::vector<IVec> generators);

/// The origin cone of an ambient lattice of the given rank.
Cone zero_cone(int ambient_dim);

bool cone_is_pointed(const std::vector<IVec>& generators);

/// Exact membership x in cone(generators).
bool cone_contains(const Cone& c, const QVec& x);

/**
 * A finite simplicial fan. Rays are kept in the order given by the user and
 * never reordered: divisor coefficient vectors are positional. Construction
 * validates primitivity, simpliciality of every maximal cone, and the
 * pairwise face condition; non-simplicial input is rejected with a distinct
 * error rather than silently mishandled.
 */
class Fan {
public:
    Fan(std::vector<IVec> rays, std::vector<std::vector<int>> max_cones);

    int dim() const { return dim_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    const std::vector<IVec>& rays() const { return rays_; }
    const IVec& ray(int i) const { return rays_[static_cast<size_t>(i)]; }
    const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }

    /// Cone spanned by the given ray indices (need not be listed maximal).
    Cone cone(std::vector<int> ray_idx) const;

    /// Every cone of the fan including the origin, ordered by (dim, rays).
    std::vector<Cone> all_cones() const;

    bool has_cone(std::vector<int> sorted_ray_idx) const;

    bool operator==(const Fan& other) const {
        return rays_ == other.rays_ && max_cones_ == other.max_cones_;
    }

private:
    int dim_ = 0;
    std::vector<IVec> rays_;
    std::vector<std::vector<int>> max_cones_;  // each sorted ascending
};

/// Generators of the dual cone (H-description of the input cone). For a
/// lower-dimensional input the result includes +/- pairs spanning the
/// orthogonal complement. Throws on non-pointed input.
std::vector<IVec> dual_cone(const Cone& c);

/// Saturated lattice basis of tau-perp intersect M.
std::vector<IVec> perp_space(const Cone& c);

struct OrbitData {
    int orbit_dim;
    std::vector<IVec> perp_basis;
    int quotient_lattice_rank;
};

OrbitData orbit_data(const Fan& fan, const Cone& tau);

/// Wall-pairing completeness test for a pure simplicial fan: every wall lies
/// in exactly two maximal cones and the wall graph is connected.
bool is_complete(const Fan& fan);

/// Every maximal cone is generated by part of a lattice basis.
bool is_smooth(const Fan& fan);

/// Integer linear map between the lattices of two fans.
struct FanMorphism {
    Fan source;
    Fan target;
    IMat matrix;  // target_dim x source_dim

    IVec apply(const IVec& v) const;
};

struct FanMapCheck {
    bool valid;            // injective and cone-preserving
    std::string reason;    // empty when valid
    IMat dual_map;         // transpose, M_2 -> M_1
};

FanMapCheck check_fan_map(const FanMorphism& m);

/// H-description of a simplicial cone: facet functionals (one per generator,
/// dual basis within the span) plus span equalities.
struct ConeHRep {
    IMat inequalities;
    IMat equalities;
};

ConeHRep simplicial_cone_hrep(const Cone& c);

/// Extreme rays of { x : A x >= 0, E x = 0 }, assuming the cone is pointed.
std::vector<IVec> extreme_rays(const IMat& inequalities, const IMat& equalities, int ambient_dim);

}  // namespace toric

#endif
