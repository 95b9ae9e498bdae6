#ifndef TORIC_COHOMOLOGY_HPP
#define TORIC_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <vector>

#include "toric/divisor.hpp"

namespace toric {

/// Dimensions of H^i(X, O(D_c)) in a single character weight m.
struct WeightCohomology {
    IVec weight;
    std::vector<int> dims;  // index i = dim H^i, i = 0..n

    bool all_zero() const {
        for (int d : dims) if (d) return false;
        return true;
    }
};

struct CohomologyTable {
    IVec coeffs;
    Int scan_radius = 0;
    std::map<IVec, WeightCohomology> weights;  // nonzero entries only
    std::vector<long long> totals;             // h^0..h^n
    long long euler = 0;
};

/**
 * Combinatorial fast path: H^i at weight m is the reduced cohomology, one
 * degree down, of the full subcomplex of the fan's boundary complex on the
 * rays with <m, v_i> < -c_i.
 */
WeightCohomology weight_cohomology(const TDivisor& d, const IVec& m);

/**
 * Ground truth: cohomology of the per-weight Cech complex on the cover by
 * maximal-cone charts. The term of a chart subset I is one-dimensional iff
 * every ray of the common face of I admits the weight; restriction maps are
 * identities with alternating signs.
 */
WeightCohomology cech_weight_oracle(const TDivisor& d, const IVec& m);

Int default_scan_radius(const TDivisor& d);

/**
 * Scan the weight box [-R, R]^n. Every weight is computed by the fast path
 * and, when verify_oracle is set (the default), cross-checked against the
 * Cech oracle; any disagreement aborts loudly. Raises "radius too small"
 * unless all boundary-box weights have vanishing cohomology.
 */
CohomologyTable cohomology_table(const TDivisor& d,
                                 std::optional<Int> scan_radius = std::nullopt,
                                 bool verify_oracle = true);

/// ext^i(L_a, L_b) = h^i(b - a) for line bundles on a smooth complete X.
std::vector<long long> ext_dims(const TDivisor& a, const TDivisor& b);

}  // namespace toric

#endif
