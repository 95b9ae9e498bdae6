#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

int Cone::ambient_dim() const {
    if (!generators.empty()) return static_cast<int>(generators.front().size());
    return ambient;
}

int Cone::dim() const {
    if (generators.empty()) return 0;
    QMat rows;
    rows.reserve(generators.size());
    for (const IVec& g : generators) rows.push_back(to_rational(g));
    return rank_of(rows);
}

bool cone_is_pointed(const std::vector<IVec>& generators) {
    // Pointed iff no nontrivial nonnegative combination of generators
    // vanishes. By Caratheodory it is enough to look at subsets of size
    // rank+1 whose members are minimally dependent.
    const size_t k = generators.size();
    if (k == 0) return true;
    const size_t n = generators.front().size();
    for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) idx.push_back(i);
        if (idx.size() > n + 1) continue;
        // Solve sum lambda_i g_i = 0, sum lambda_i = 1, lambda free; if a
        // nonnegative solution exists on this subset the cone has a line.
        QMat a(n + 1, QVec(idx.size(), Rational(0)));
        QVec b(n + 1, Rational(0));
        for (size_t j = 0; j < idx.size(); ++j) {
            for (size_t i = 0; i < n; ++i) a[i][j] = generators[idx[j]][i];
            a[n][j] = 1;
        }
        b[n] = 1;
        auto sol = solve(a, b);
        if (!sol) continue;
        // The subset solve has free variables only for dependent subsets;
        // a particular solution with all coordinates >= 0 witnesses a line.
        bool nonneg = true;
        for (const Rational& l : *sol)
            if (l < 0) { nonneg = false; break; }
        if (nonneg) return false;
    }
    return true;
}

Cone make_cone(std::vector<IVec> generators) {
    require(!generators.empty(), ErrorCode::BadInput, "make_cone: no generators");
    for (const IVec& g : generators) {
        require(!is_zero(g), ErrorCode::BadInput, "cone generator is zero");
        require(gcd_all(g) == 1, ErrorCode::BadInput,
                "cone generator not primitive: " + to_string(g));
    }
    require(cone_is_pointed(generators), ErrorCode::NotPointed,
            "cone is not strongly convex");
    Cone c;
    c.ambient = static_cast<int>(generators.front().size());
    c.generators = std::move(generators);
    return c;
}

Cone zero_cone(int ambient_dim) {
    Cone c;
    c.ambient = ambient_dim;
    return c;
}

bool cone_contains(const Cone& c, const QVec& x) {
    const size_t n = x.size();
    require(c.generators.empty() || c.generators.front().size() == n,
            ErrorCode::DimensionMismatch, "cone_contains: dimension mismatch");
    if (is_zero(x)) return true;
    const size_t k = c.generators.size();
    // Some independent subset carries the point (conic Caratheodory).
    for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) idx.push_back(i);
        if (idx.size() > n) continue;
        QMat a(n, QVec(idx.size(), Rational(0)));
        for (size_t j = 0; j < idx.size(); ++j)
            for (size_t i = 0; i < n; ++i) a[i][j] = c.generators[idx[j]][i];
        if (rank_of(a) != static_cast<int>(idx.size())) continue;
        auto sol = solve(a, x);
        if (!sol) continue;
        bool nonneg = true;
        for (const Rational& l : *sol)
            if (l < 0) { nonneg = false; break; }
        if (nonneg) return true;
    }
    return false;
}

namespace {

std::string rayset_string(const std::vector<int>& idx) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ",";
        os << idx[i];
    }
    os << "}";
    return os.str();
}

}  // namespace

Fan::Fan(std::vector<IVec> rays, std::vector<std::vector<int>> max_cones)
    : rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    require(!rays_.empty(), ErrorCode::BadInput, "fan: no rays");
    dim_ = static_cast<int>(rays_.front().size());
    require(dim_ >= 1, ErrorCode::BadInput, "fan: zero-dimensional ambient lattice");

    for (size_t i = 0; i < rays_.size(); ++i) {
        const IVec& v = rays_[i];
        require(static_cast<int>(v.size()) == dim_, ErrorCode::BadInput,
                "fan: ray " + std::to_string(i) + " has wrong dimension");
        require(!is_zero(v), ErrorCode::BadInput,
                "fan: ray " + std::to_string(i) + " is zero");
        require(gcd_all(v) == 1, ErrorCode::BadInput,
                "fan: non-primitive ray " + std::to_string(i));
        for (size_t j = 0; j < i; ++j)
            require(rays_[j] != v, ErrorCode::BadInput,
                    "fan: duplicate ray index " + std::to_string(i));
    }

    std::set<std::vector<int>> seen;
    for (std::vector<int>& cone_idx : max_cones_) {
        require(!cone_idx.empty(), ErrorCode::BadInput, "fan: empty maximal cone");
        std::sort(cone_idx.begin(), cone_idx.end());
        require(std::adjacent_find(cone_idx.begin(), cone_idx.end()) == cone_idx.end(),
                ErrorCode::BadInput, "fan: repeated ray in cone " + rayset_string(cone_idx));
        for (int i : cone_idx)
            require(i >= 0 && i < ray_count(), ErrorCode::BadInput,
                    "fan: ray index out of range in cone " + rayset_string(cone_idx));
        require(seen.insert(cone_idx).second, ErrorCode::BadInput,
                "fan: duplicate maximal cone " + rayset_string(cone_idx));

        // Simpliciality: generators linearly independent.
        QMat rows;
        for (int i : cone_idx) rows.push_back(to_rational(rays_[i]));
        require(rank_of(rows) == static_cast<int>(cone_idx.size()), ErrorCode::NotSimplicial,
                "fan: non-simplicial cone " + rayset_string(cone_idx) + " (unsupported)");
    }

    // No listed maximal cone may be a face of another.
    for (size_t i = 0; i < max_cones_.size(); ++i)
        for (size_t j = 0; j < max_cones_.size(); ++j) {
            if (i == j) continue;
            if (std::includes(max_cones_[j].begin(), max_cones_[j].end(),
                              max_cones_[i].begin(), max_cones_[i].end()))
                fail(ErrorCode::BadInput,
                     "fan: cone " + rayset_string(max_cones_[i]) +
                         " is contained in cone " + rayset_string(max_cones_[j]));
        }

    // Pairwise face condition: the intersection of two cones must be the
    // cone on their common rays. For simplicial cones every ray subset is a
    // face, so it suffices that no point of the intersection escapes the
    // common subcone.
    for (size_t i = 0; i < max_cones_.size(); ++i) {
        for (size_t j = i + 1; j < max_cones_.size(); ++j) {
            Cone ci = cone(max_cones_[i]);
            Cone cj = cone(max_cones_[j]);
            ConeHRep hi = simplicial_cone_hrep(ci);
            ConeHRep hj = simplicial_cone_hrep(cj);
            IMat ineqs = hi.inequalities;
            ineqs.insert(ineqs.end(), hj.inequalities.begin(), hj.inequalities.end());
            IMat eqs = hi.equalities;
            eqs.insert(eqs.end(), hj.equalities.begin(), hj.equalities.end());
            std::vector<IVec> rays_of_meet = extreme_rays(ineqs, eqs, dim_);

            std::vector<int> common;
            std::set_intersection(max_cones_[i].begin(), max_cones_[i].end(),
                                  max_cones_[j].begin(), max_cones_[j].end(),
                                  std::back_inserter(common));
            Cone common_cone = cone(common);
            for (const IVec& r : rays_of_meet) {
                require(cone_contains(common_cone, to_rational(r)), ErrorCode::BadInput,
                        "fan: cones " + rayset_string(max_cones_[i]) + " and " +
                            rayset_string(max_cones_[j]) + " fail the face condition");
            }
        }
    }
}

Cone Fan::cone(std::vector<int> ray_idx) const {
    std::sort(ray_idx.begin(), ray_idx.end());
    Cone c;
    c.ambient = dim_;
    for (int i : ray_idx) {
        require(i >= 0 && i < ray_count(), ErrorCode::BadInput, "cone: ray index out of range");
        c.generators.push_back(rays_[static_cast<size_t>(i)]);
    }
    c.ray_indices = std::move(ray_idx);
    return c;
}

std::vector<Cone> Fan::all_cones() const {
    std::set<std::vector<int>> sets;
    sets.insert({});
    for (const std::vector<int>& mc : max_cones_) {
        const size_t k = mc.size();
        for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t{1} << i)) sub.push_back(mc[i]);
            sets.insert(std::move(sub));
        }
    }
    std::vector<Cone> cones;
    cones.reserve(sets.size());
    for (const auto& s : sets) cones.push_back(cone(s));
    std::stable_sort(cones.begin(), cones.end(), [](const Cone& a, const Cone& b) {
        if (a.ray_indices.size() != b.ray_indices.size())
            return a.ray_indices.size() < b.ray_indices.size();
        return a.ray_indices < b.ray_indices;
    });
    return cones;
}

bool Fan::has_cone(std::vector<int> sorted_ray_idx) const {
    std::sort(sorted_ray_idx.begin(), sorted_ray_idx.end());
    if (sorted_ray_idx.empty()) return true;
    for (const std::vector<int>& mc : max_cones_)
        if (std::includes(mc.begin(), mc.end(), sorted_ray_idx.begin(), sorted_ray_idx.end()))
            return true;
    return false;
}

ConeHRep simplicial_cone_hrep(const Cone& c) {
    ConeHRep h;
    const size_t d = c.generators.size();
    if (d == 0) {
        // The origin: cut out by equalities alone.
        const int n = c.ambient_dim();
        h.equalities.assign(static_cast<size_t>(n), IVec(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) h.equalities[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        return h;
    }
    // Span equalities come from the saturated perp lattice.
    h.equalities = perp_space(c);
    const size_t n = c.generators.front().size();
    // Facet functional u_j: <u_j, g_l> = delta_jl, solved within the span.
    QMat a(d, QVec(n, Rational(0)));
    for (size_t l = 0; l < d; ++l)
        for (size_t i = 0; i < n; ++i) a[l][i] = c.generators[l][i];
    for (size_t j = 0; j < d; ++j) {
        QVec e(d, Rational(0));
        e[j] = 1;
        auto u = solve(a, e);
        require(u.has_value(), ErrorCode::NotSimplicial,
                "cone H-representation: generators not independent");
        h.inequalities.push_back(primitive_integer_direction(*u));
    }
    return h;
}

std::vector<IVec> extreme_rays(const IMat& inequalities, const IMat& equalities, int ambient_dim) {
    const size_t n = static_cast<size_t>(ambient_dim);
    IMat kernel;
    if (equalities.empty()) {
        kernel.assign(n, IVec(n, 0));
        for (size_t i = 0; i < n; ++i) kernel[i][i] = 1;
    } else {
        kernel = integer_kernel(equalities);
    }
    const size_t k = kernel.size();
    std::vector<IVec> result;
    if (k == 0) return result;

    // Project the inequalities onto kernel coordinates.
    QMat proj(inequalities.size(), QVec(k, Rational(0)));
    for (size_t r = 0; r < inequalities.size(); ++r)
        for (size_t j = 0; j < k; ++j)
            proj[r][j] = pairing(to_rational(inequalities[r]), kernel[j]);

    auto lift_and_keep = [&](const QVec& z) {
        QVec x(n, Rational(0));
        for (size_t j = 0; j < k; ++j)
            for (size_t i = 0; i < n; ++i) x[i] += z[j] * kernel[j][i];
        if (is_zero(x)) return;
        IVec ray = primitive_integer_direction(x);
        if (std::find(result.begin(), result.end(), ray) == result.end())
            result.push_back(ray);
    };
    auto feasible = [&](const QVec& z) {
        for (const QVec& row : proj) {
            Rational s = 0;
            for (size_t j = 0; j < k; ++j) s += row[j] * z[j];
            if (s < 0) return false;
        }
        return true;
    };

    if (proj.empty())
        fail(ErrorCode::NotPointed, "extreme_rays: cone contains a line");

    if (k == 1) {
        QVec plus{Rational(1)}, minus{Rational(-1)};
        bool fp = feasible(plus), fm = feasible(minus);
        if (fp && fm) fail(ErrorCode::NotPointed, "extreme_rays: cone contains a line");
        if (fp) lift_and_keep(plus);
        if (fm) lift_and_keep(minus);
        return result;
    }

    // Each extreme ray is cut out by k-1 independent active constraints.
    const size_t m = proj.size();
    if (m < k - 1) return result;
    std::vector<size_t> comb(k - 1);
    for (size_t i = 0; i < k - 1; ++i) comb[i] = i;
    while (true) {
        QMat rows;
        for (size_t i : comb) rows.push_back(proj[i]);
        if (rank_of(rows) == static_cast<int>(k - 1)) {
            QMat null_basis = nullspace(rows);
            if (null_basis.size() == 1) {
                const QVec& z = null_basis.front();
                QVec zneg = negate(z);
                bool fp = feasible(z), fm = feasible(zneg);
                if (fp && fm)
                    fail(ErrorCode::NotPointed, "extreme_rays: cone contains a line");
                if (fp) lift_and_keep(z);
                if (fm) lift_and_keep(zneg);
            }
        }
        size_t t = k - 1;
        while (t > 0 && comb[t - 1] == m - (k - 1) + t - 1) --t;
        if (t == 0) break;
        ++comb[t - 1];
        for (size_t j = t; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
    return result;
}

std::vector<IVec> dual_cone(const Cone& c) {
    require(cone_is_pointed(c.generators), ErrorCode::NotPointed,
            "dual_cone: input cone is not pointed");
    const size_t n = c.generators.empty() ? 0 : c.generators.front().size();
    std::vector<IVec> perp = perp_space(c);
    std::vector<IVec> gens;
    if (!c.generators.empty()) {
        // Pointed part: extreme rays of the dual inside the complement of
        // the perp space (chosen via the standard inner product).
        IMat ineqs = [&] {
            IMat rows;
            for (const IVec& g : c.generators) rows.push_back(g);
            return rows;
        }();
        IMat eqs;
        for (const IVec& p : perp) eqs.push_back(p);
        gens = extreme_rays(ineqs, eqs, static_cast<int>(n));
        std::sort(gens.begin(), gens.end());
    }
    for (const IVec& p : perp) {
        gens.push_back(p);
        gens.push_back(negate(p));
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

std::vector<IVec> perp_space(const Cone& c) {
    const int n = c.ambient_dim();
    require(n > 0, ErrorCode::BadInput, "perp_space: ambient dimension unknown");
    if (c.generators.empty()) {
        // tau = {0}: the whole lattice M.
        std::vector<IVec> basis(static_cast<size_t>(n), IVec(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) basis[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        return basis;
    }
    IMat rows;
    for (const IVec& g : c.generators) rows.push_back(g);
    return integer_kernel(rows);
}

OrbitData orbit_data(const Fan& fan, const Cone& tau) {
    require(fan.has_cone(tau.ray_indices), ErrorCode::BadInput,
            "orbit_data: cone not in fan");
    OrbitData d;
    int td = tau.dim();
    d.orbit_dim = fan.dim() - td;
    d.quotient_lattice_rank = fan.dim() - td;
    d.perp_basis = perp_space(tau);
    return d;
}

bool is_complete(const Fan& fan) {
    const int n = fan.dim();
    if (fan.max_cones().empty()) return false;
    for (const auto& mc : fan.max_cones()) {
        if (static_cast<int>(mc.size()) != n) return false;  // not pure n-dimensional
    }
    // Wall counting: each (n-1)-subset of a maximal cone must appear in
    // exactly two maximal cones, and the wall graph must be connected.
    std::map<std::vector<int>, std::vector<size_t>> walls;
    for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
        const auto& mc = fan.max_cones()[ci];
        for (size_t drop = 0; drop < mc.size(); ++drop) {
            std::vector<int> wall = mc;
            wall.erase(wall.begin() + static_cast<long>(drop));
            walls[wall].push_back(ci);
        }
    }
    for (const auto& [wall, owners] : walls)
        if (owners.size() != 2) return false;
    // connectivity
    const size_t count = fan.max_cones().size();
    std::vector<bool> seen(count, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    std::map<size_t, std::vector<size_t>> adj;
    for (const auto& [wall, owners] : walls) {
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    while (!stack.empty()) {
        size_t c = stack.back();
        stack.pop_back();
        for (size_t nb : adj[c])
            if (!seen[nb]) { seen[nb] = true; stack.push_back(nb); }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_smooth(const Fan& fan) {
    for (const auto& mc : fan.max_cones()) {
        IMat rows;
        for (int i : mc) rows.push_back(fan.ray(i));
        if (maximal_minor_gcd(rows) != 1) return false;
    }
    return true;
}

IVec FanMorphism::apply(const IVec& v) const {
    require(v.size() == matrix.front().size(), ErrorCode::DimensionMismatch,
            "fan morphism: vector dimension mismatch");
    IVec out(matrix.size(), 0);
    for (size_t i = 0; i < matrix.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += matrix[i][j] * v[j];
    return out;
}

FanMapCheck check_fan_map(const FanMorphism& m) {
    FanMapCheck res;
    const size_t n1 = static_cast<size_t>(m.source.dim());
    const size_t n2 = static_cast<size_t>(m.target.dim());
    require(m.matrix.size() == n2, ErrorCode::BadInput, "fan morphism: matrix has wrong row count");
    for (const IVec& row : m.matrix)
        require(row.size() == n1, ErrorCode::BadInput, "fan morphism: matrix has wrong column count");

    res.dual_map.assign(n1, IVec(n2, 0));
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n1; ++j) res.dual_map[j][i] = m.matrix[i][j];

    QMat rows;
    for (const IVec& r : m.matrix) rows.push_back(to_rational(r));
    if (rank_of(rows) != static_cast<int>(n1)) {
        res.valid = false;
        res.reason = "map is not injective";
        return res;
    }
    for (const auto& mc : m.source.max_cones()) {
        bool found = false;
        for (const auto& tc : m.target.max_cones()) {
            Cone target_cone = m.target.cone(tc);
            bool all_inside = true;
            for (int ri : mc) {
                if (!cone_contains(target_cone, to_rational(m.apply(m.source.ray(ri))))) {
                    all_inside = false;
                    break;
                }
            }
            if (all_inside) { found = true; break; }
        }
        if (!found) {
            res.valid = false;
            res.reason = "image of cone " + rayset_string(mc) + " lies in no target cone";
            return res;
        }
    }
    res.valid = true;
    return res;
}

}  // namespace toric
