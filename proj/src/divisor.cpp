#include "toric/divisor.hpp"

#include <algorithm>
#include <map>

#include "toric/intlinalg.hpp"

namespace toric {

LatticePolytope polytope_of(const TDivisor& d) {
    require(is_complete(d.fan), ErrorCode::IncompleteFan,
            "polytope_of: fan is not complete, polyhedron would be unbounded");
    std::vector<Halfspace> hrep;
    hrep.reserve(d.coeffs.size());
    for (int i = 0; i < d.fan.ray_count(); ++i)
        hrep.push_back({d.fan.ray(i), Rational(-d.coeffs[static_cast<size_t>(i)])});
    return LatticePolytope::from_hrep(d.fan.dim(), std::move(hrep));
}

CartierData cartier_data(const TDivisor& d) {
    CartierData cd;
    for (const auto& mc : d.fan.max_cones()) {
        IMat rows;
        QVec rhs;
        for (int i : mc) {
            rows.push_back(d.fan.ray(i));
            rhs.push_back(Rational(-d.coeffs[static_cast<size_t>(i)]));
        }
        require(maximal_minor_gcd(rows) == 1, ErrorCode::SingularCone,
                "cartier_data: singular maximal cone");
        auto m = solve_integer(rows, rhs);
        require(m.has_value(), ErrorCode::SingularCone,
                "cartier_data: no integral weight on maximal cone");
        cd.m_sigma.push_back(*m);
    }
    return cd;
}

CartierDataQ cartier_data_rational(const Fan& fan, const QVec& coeffs) {
    require(coeffs.size() == static_cast<size_t>(fan.ray_count()), ErrorCode::BadInput,
            "cartier_data_rational: coefficient count mismatch");
    CartierDataQ cd;
    for (const auto& mc : fan.max_cones()) {
        QMat rows;
        QVec rhs;
        for (int i : mc) {
            rows.push_back(to_rational(fan.ray(i)));
            rhs.push_back(-coeffs[static_cast<size_t>(i)]);
        }
        auto m = solve(rows, rhs);
        require(m.has_value(), ErrorCode::SingularCone,
                "cartier_data_rational: inconsistent weight system on a cone");
        cd.m_sigma.push_back(*m);
    }
    return cd;
}

Rational support_value(const TDivisor& d, const CartierDataQ& cd, const QVec& y) {
    for (size_t k = 0; k < d.fan.max_cones().size(); ++k) {
        Cone c = d.fan.cone(d.fan.max_cones()[k]);
        if (cone_contains(c, y)) return pairing(cd.m_sigma[k], y);
    }
    fail(ErrorCode::Unsupported, "support_value: point outside the fan support");
}

namespace {

struct Wall {
    size_t cone_a, cone_b;
    int ray_a, ray_b;  // the ray of each cone missing from the wall
};

std::vector<Wall> wall_list(const Fan& fan) {
    std::map<std::vector<int>, std::vector<std::pair<size_t, int>>> walls;
    for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
        const auto& mc = fan.max_cones()[ci];
        for (size_t drop = 0; drop < mc.size(); ++drop) {
            std::vector<int> wall = mc;
            wall.erase(wall.begin() + static_cast<long>(drop));
            walls[wall].push_back({ci, mc[drop]});
        }
    }
    std::vector<Wall> out;
    for (const auto& [wall, owners] : walls) {
        require(owners.size() == 2, ErrorCode::IncompleteFan,
                "wall_list: wall not shared by exactly two maximal cones");
        out.push_back({owners[0].first, owners[1].first, owners[0].second, owners[1].second});
    }
    return out;
}

bool convexity_across_walls(const TDivisor& d, bool strict) {
    require(is_complete(d.fan), ErrorCode::IncompleteFan,
            "ampleness test requires a complete fan");
    CartierData cd = cartier_data(d);
    for (const Wall& w : wall_list(d.fan)) {
        // Evaluate the chart weight of cone_a on the opposite ray of cone_b
        // and vice versa: strict convexity across every wall.
        Int lhs1 = pairing(cd.m_sigma[w.cone_a], d.fan.ray(w.ray_b));
        Int rhs1 = -d.coeffs[static_cast<size_t>(w.ray_b)];
        Int lhs2 = pairing(cd.m_sigma[w.cone_b], d.fan.ray(w.ray_a));
        Int rhs2 = -d.coeffs[static_cast<size_t>(w.ray_a)];
        if (strict) {
            if (!(lhs1 > rhs1 && lhs2 > rhs2)) return false;
        } else {
            if (!(lhs1 >= rhs1 && lhs2 >= rhs2)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_ample(const TDivisor& d) { return convexity_across_walls(d, true); }
bool is_nef(const TDivisor& d) { return convexity_across_walls(d, false); }

std::vector<PolytopeStratum> strata(const TDivisor& d) {
    require(is_ample(d), ErrorCode::NotAmple, "strata: divisor is not ample");
    CartierData cd = cartier_data(d);
    const auto& max_cones = d.fan.max_cones();

    std::vector<PolytopeStratum> out;
    for (const Cone& tau : d.fan.all_cones()) {
        PolytopeStratum s;
        s.tau = tau;
        s.equality_rays = tau.ray_indices;
        for (int i = 0; i < d.fan.ray_count(); ++i)
            if (!std::binary_search(s.equality_rays.begin(), s.equality_rays.end(), i))
                s.strict_rays.push_back(i);
        s.affine_basis = perp_space(tau);

        // Vertices of the face are the chart weights of the maximal cones
        // containing tau.
        std::vector<QVec> verts;
        for (size_t k = 0; k < max_cones.size(); ++k) {
            if (std::includes(max_cones[k].begin(), max_cones[k].end(),
                              tau.ray_indices.begin(), tau.ray_indices.end()))
                verts.push_back(to_rational(cd.m_sigma[k]));
        }
        s.face = LatticePolytope::from_points(d.fan.dim(), verts);
        out.push_back(std::move(s));
    }
    return out;
}

TDivisor pullback_divisor(const FanMorphism& m, const TDivisor& d) {
    FanMapCheck chk = check_fan_map(m);
    require(chk.valid, ErrorCode::BadInput, "pullback_divisor: " + chk.reason);
    require(d.fan == m.target, ErrorCode::BadInput,
            "pullback_divisor: divisor does not live on the target fan");
    CartierData cd = cartier_data(d);

    IVec pulled(static_cast<size_t>(m.source.ray_count()), 0);
    for (int j = 0; j < m.source.ray_count(); ++j) {
        IVec image = m.apply(m.source.ray(j));
        bool found = false;
        for (size_t k = 0; k < d.fan.max_cones().size(); ++k) {
            Cone c = d.fan.cone(d.fan.max_cones()[k]);
            if (cone_contains(c, to_rational(image))) {
                pulled[static_cast<size_t>(j)] = -pairing(cd.m_sigma[k], image);
                found = true;
                break;
            }
        }
        require(found, ErrorCode::Unsupported,
                "pullback_divisor: image ray escapes the target support");
    }
    return TDivisor(m.source, std::move(pulled));
}

}  // namespace toric
