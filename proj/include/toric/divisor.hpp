#ifndef TORIC_DIVISOR_HPP
#define TORIC_DIVISOR_HPP

#include <vector>

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

/**
 * Equivariant divisor D_c = sum c_i D_i; the coefficient vector is
 * positionally matched to the fan's ray order.
 */
struct TDivisor {
    Fan fan;
    IVec coeffs;

    TDivisor(Fan f, IVec c) : fan(std::move(f)), coeffs(std::move(c)) {
        require(coeffs.size() == static_cast<size_t>(fan.ray_count()), ErrorCode::BadInput,
                "divisor: coefficient count does not match ray count");
    }
};

inline TDivisor operator+(const TDivisor& a, const TDivisor& b) {
    require(a.fan == b.fan, ErrorCode::BadInput, "divisor sum: different fans");
    IVec c(a.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs[i] + b.coeffs[i];
    return TDivisor(a.fan, std::move(c));
}

inline TDivisor operator-(const TDivisor& a) {
    return TDivisor(a.fan, negate(a.coeffs));
}

/// Per maximal cone sigma, the weight m_sigma in M with <m_sigma, v_i> = -c_i
/// on the rays of sigma. Exists integrally on smooth fans.
struct CartierData {
    std::vector<IVec> m_sigma;  // aligned with fan.max_cones()
};

/// Rational variant, defined for any simplicial fan (used for scan radii and
/// for the strata machinery on formal rational divisors).
struct CartierDataQ {
    std::vector<QVec> m_sigma;
};

/// Polytope Delta_c = { m : <m, v_i> >= -c_i }. Requires a complete fan so
/// the polyhedron is bounded; an incomplete fan is reported distinctly.
LatticePolytope polytope_of(const TDivisor& d);

CartierData cartier_data(const TDivisor& d);
CartierDataQ cartier_data_rational(const Fan& fan, const QVec& coeffs);

/// Support function psi_c(y) = <m_sigma, y> on any cone containing y.
Rational support_value(const TDivisor& d, const CartierDataQ& cd, const QVec& y);

bool is_ample(const TDivisor& d);
bool is_nef(const TDivisor& d);

/**
 * One stratum per cone tau: the closed face F_{tau,c} of Delta_c where the
 * rays of tau are active, together with the data of the open stratum
 * U_{tau,c} (equality rays, strict rays, affine span directions of F).
 */
struct PolytopeStratum {
    Cone tau;
    std::vector<int> equality_rays;  // rays of tau
    std::vector<int> strict_rays;    // all other rays
    std::vector<IVec> affine_basis;  // direction space of F = tau-perp
    LatticePolytope face;            // F_{tau,c}
};

/// Face strata of Delta_c over all cones of the fan; requires ample input.
std::vector<PolytopeStratum> strata(const TDivisor& d);

/// Pullback along a fan morphism: c'_j = -psi_c(f(v'_j)).
TDivisor pullback_divisor(const FanMorphism& m, const TDivisor& d);

}  // namespace toric

#endif
