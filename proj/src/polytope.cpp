#include "toric/polytope.hpp"

#include <algorithm>
#include <set>

#include "toric/fan.hpp"
#include "toric/intlinalg.hpp"

namespace toric {

namespace {

// Iterate over all size-k index subsets of {0..m-1}.
template <typename F>
void for_each_subset(size_t m, size_t k, F&& body) {
    if (k > m) return;
    if (k == 0) { body(std::vector<size_t>{}); return; }
    std::vector<size_t> comb(k);
    for (size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        body(comb);
        size_t t = k;
        while (t > 0 && comb[t - 1] == m - k + t - 1) --t;
        if (t == 0) break;
        ++comb[t - 1];
        for (size_t j = t; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

bool satisfies(const std::vector<Halfspace>& hrep, const QVec& x) {
    for (const Halfspace& h : hrep)
        if (pairing(x, h.normal) < h.rhs) return false;
    return true;
}

}  // namespace

int LatticePolytope::dim() const {
    if (vertices_.empty()) return -1;
    QMat dirs;
    for (size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(sub(vertices_[i], vertices_[0]));
    if (dirs.empty()) return 0;
    return rank_of(dirs);
}

bool LatticePolytope::contains(const QVec& point) const {
    require(static_cast<int>(point.size()) == ambient_, ErrorCode::DimensionMismatch,
            "polytope contains: dimension mismatch");
    if (vertices_.empty()) return false;
    return satisfies(hrep_, point);
}

LatticePolytope LatticePolytope::from_hrep(int ambient_dim, std::vector<Halfspace> hrep) {
    const size_t n = static_cast<size_t>(ambient_dim);
    LatticePolytope p;
    p.ambient_ = ambient_dim;

    // Boundedness: the recession cone { d : <d, normal> >= 0 } must be {0}.
    IMat rec_ineqs;
    for (const Halfspace& h : hrep) rec_ineqs.push_back(h.normal);
    try {
        std::vector<IVec> rec = extreme_rays(rec_ineqs, {}, ambient_dim);
        require(rec.empty(), ErrorCode::UnboundedPolytope,
                "polyhedron is unbounded (recession ray " +
                    (rec.empty() ? std::string() : to_string(rec.front())) + ")");
    } catch (const ToricError& e) {
        if (e.code() == ErrorCode::NotPointed)
            fail(ErrorCode::UnboundedPolytope, "polyhedron is unbounded (contains a line)");
        throw;
    }

    std::set<QVec> found;
    for_each_subset(hrep.size(), n, [&](const std::vector<size_t>& comb) {
        QMat a;
        QVec b;
        for (size_t i : comb) {
            a.push_back(to_rational(hrep[i].normal));
            b.push_back(hrep[i].rhs);
        }
        if (rank_of(a) != static_cast<int>(n)) return;
        auto x = solve(a, b);
        if (!x) return;
        if (satisfies(hrep, *x)) found.insert(*x);
    });
    p.vertices_.assign(found.begin(), found.end());
    p.hrep_ = std::move(hrep);
    return p;
}

LatticePolytope LatticePolytope::from_points(int ambient_dim, const std::vector<QVec>& points) {
    const size_t n = static_cast<size_t>(ambient_dim);
    LatticePolytope p;
    p.ambient_ = ambient_dim;
    if (points.empty()) return p;

    std::set<QVec> uniq(points.begin(), points.end());
    std::vector<QVec> pts(uniq.begin(), uniq.end());
    const QVec& base = pts.front();

    QMat dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], base));
    const int d = dirs.empty() ? 0 : rank_of(dirs);

    std::vector<Halfspace> hrep;

    // Affine-hull equalities, as opposite halfspace pairs.
    if (d < ambient_dim) {
        QMat kernel = dirs.empty()
                          ? [&] {
                                QMat id(n, QVec(n, Rational(0)));
                                for (size_t i = 0; i < n; ++i) id[i][i] = 1;
                                return id;
                            }()
                          : nullspace([&] {
                                // kernel of the direction row space: u with dirs * u = 0
                                QMat m(dirs.size(), QVec(n, Rational(0)));
                                for (size_t r = 0; r < dirs.size(); ++r) m[r] = dirs[r];
                                return m;
                            }());
        for (const QVec& u : kernel) {
            IVec normal = primitive_integer_direction(u);
            Rational rhs = pairing(base, normal);
            hrep.push_back({normal, rhs});
            hrep.push_back({negate(normal), -rhs});
        }
    }

    // Facets: hyperplanes through d affinely independent hull points with
    // all points weakly on one side.
    if (d >= 1) {
        std::set<Halfspace> facets;
        for_each_subset(pts.size(), static_cast<size_t>(d), [&](const std::vector<size_t>& comb) {
            // normal u with <u, dir> = 0 for directions inside the subset,
            // u constrained to the direction space of the hull.
            QMat constraints;
            const QVec& anchor = pts[comb[0]];
            for (size_t k = 1; k < comb.size(); ++k)
                constraints.push_back(sub(pts[comb[k]], anchor));
            // also force u into the hull's direction space: u = dirs^T w
            // handled by solving in ambient space and then checking support.
            QMat sys = constraints;
            if (sys.empty()) sys.push_back(QVec(n, Rational(0)));
            QMat null_basis = nullspace(sys);
            // Need the normal inside span(dirs) + unique direction: project by
            // intersecting the nullspace with the direction space.
            // Build: u in nullspace(sys) and u in rowspace(dirs).
            // Parametrize u = sum z_i null_basis[i], then require u
            // orthogonal to nullspace(dirs) (i.e. to the equality normals).
            QMat eq_normals = dirs.empty() ? QMat{} : nullspace(dirs);
            QMat inner(eq_normals.size(), QVec(null_basis.size(), Rational(0)));
            for (size_t r = 0; r < eq_normals.size(); ++r)
                for (size_t c = 0; c < null_basis.size(); ++c)
                    inner[r][c] = pairing(eq_normals[r], null_basis[c]);
            QMat z_basis = inner.empty()
                               ? [&] {
                                     QMat id(null_basis.size(), QVec(null_basis.size(), Rational(0)));
                                     for (size_t i = 0; i < null_basis.size(); ++i) id[i][i] = 1;
                                     return id;
                                 }()
                               : nullspace(inner);
            if (z_basis.size() != 1) return;  // not a hyperplane within the hull
            QVec u(n, Rational(0));
            for (size_t i = 0; i < null_basis.size(); ++i)
                for (size_t j = 0; j < n; ++j) u[j] += z_basis[0][i] * null_basis[i][j];
            if (is_zero(u)) return;
            IVec normal = primitive_integer_direction(u);
            Rational rhs = pairing(anchor, normal);
            bool ge = true, le = true;
            for (const QVec& q : pts) {
                Rational v = pairing(q, normal);
                if (v < rhs) ge = false;
                if (v > rhs) le = false;
            }
            if (ge) facets.insert({normal, rhs});
            if (le) facets.insert({negate(normal), -rhs});
        });
        hrep.insert(hrep.end(), facets.begin(), facets.end());
    }

    // Vertices: candidates whose active constraint normals span the ambient
    // space (equality pairs contribute their normals).
    for (const QVec& q : pts) {
        QMat active;
        for (const Halfspace& h : hrep)
            if (pairing(q, h.normal) == h.rhs) active.push_back(to_rational(h.normal));
        if (!active.empty() && rank_of(active) == ambient_dim) p.vertices_.push_back(q);
    }
    if (d == 0) p.vertices_ = pts;  // single point
    std::sort(p.vertices_.begin(), p.vertices_.end());
    p.hrep_ = std::move(hrep);
    return p;
}

std::vector<IVec> lattice_points(const LatticePolytope& p) {
    std::vector<IVec> out;
    if (p.is_empty()) return out;
    const size_t n = static_cast<size_t>(p.ambient_dim());
    std::vector<Int> lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        Rational mn = p.vertices().front()[i], mx = mn;
        for (const QVec& v : p.vertices()) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = ceil_int(mn);
        hi[i] = floor_int(mx);
        if (lo[i] > hi[i]) return out;
    }
    IVec cur = lo;
    while (true) {
        QVec q(n);
        for (size_t i = 0; i < n; ++i) q[i] = cur[i];
        if (p.contains(q)) out.push_back(cur);
        size_t k = n;
        while (k > 0) {
            if (++cur[k - 1] <= hi[k - 1]) break;
            cur[k - 1] = lo[k - 1];
            --k;
        }
        if (k == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    require(!p.is_empty() && !q.is_empty(), ErrorCode::EmptyPolytope,
            "minkowski_sum: empty summand");
    require(p.ambient_dim() == q.ambient_dim(), ErrorCode::DimensionMismatch,
            "minkowski_sum: ambient dimension mismatch");
    std::vector<QVec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const QVec& a : p.vertices())
        for (const QVec& b : q.vertices()) sums.push_back(add(a, b));
    return LatticePolytope::from_points(p.ambient_dim(), sums);
}

LatticePolytope negate(const LatticePolytope& p) {
    std::vector<QVec> pts;
    pts.reserve(p.vertices().size());
    for (const QVec& v : p.vertices()) pts.push_back(negate(v));
    return LatticePolytope::from_points(p.ambient_dim(), pts);
}

}  // namespace toric
