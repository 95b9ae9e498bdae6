#include "toric/cohomology.hpp"

#include <algorithm>
#include <atomic>

#include "toric/intlinalg.hpp"
#include "toric/parallel.hpp"
#include "toric/simplicial.hpp"

namespace toric {

namespace {

std::vector<bool> admitted_rays(const TDivisor& d, const IVec& m) {
    std::vector<bool> ok(static_cast<size_t>(d.fan.ray_count()));
    for (int i = 0; i < d.fan.ray_count(); ++i)
        ok[static_cast<size_t>(i)] =
            pairing(m, d.fan.ray(i)) >= -d.coeffs[static_cast<size_t>(i)];
    return ok;
}

}  // namespace

WeightCohomology weight_cohomology(const TDivisor& d, const IVec& m) {
    require(is_complete(d.fan), ErrorCode::IncompleteFan,
            "weight_cohomology: fan is not complete");
    const int n = d.fan.dim();
    std::vector<bool> ok = admitted_rays(d, m);

    // Full subcomplex of the boundary complex on the negative rays.
    std::vector<std::vector<int>> faces;
    for (const auto& mc : d.fan.max_cones()) {
        const size_t k = mc.size();
        for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
            std::vector<int> face;
            bool negative = true;
            for (size_t i = 0; i < k && negative; ++i) {
                if (!(mask & (size_t{1} << i))) continue;
                if (ok[static_cast<size_t>(mc[i])]) negative = false;
                else face.push_back(mc[i]);
            }
            if (negative) faces.push_back(std::move(face));
        }
    }
    ReducedCohomology red = reduced_cohomology(SimplicialComplex(std::move(faces)));

    WeightCohomology out;
    out.weight = m;
    out.dims.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) out.dims[static_cast<size_t>(i)] = red.dim_at(i - 1);
    for (int p = n; p + 1 < static_cast<int>(red.dims().size()); ++p)
        require(red.dims()[static_cast<size_t>(p + 1)] == 0, ErrorCode::Unsupported,
                "weight_cohomology: nonzero cohomology above the variety dimension");
    return out;
}

WeightCohomology cech_weight_oracle(const TDivisor& d, const IVec& m) {
    const int n = d.fan.dim();
    const auto& max_cones = d.fan.max_cones();
    const size_t v = max_cones.size();
    require(v >= 1 && v < 20, ErrorCode::BadInput, "cech_weight_oracle: bad chart count");
    std::vector<bool> ok = admitted_rays(d, m);

    // A chart subset admits the weight iff every ray of its common face does.
    std::vector<char> admitted(size_t{1} << v, 0);
    std::vector<std::vector<int>> common(size_t{1} << v);
    for (size_t mask = 1; mask < (size_t{1} << v); ++mask) {
        size_t low = mask & (mask - 1);
        if (low == 0) {
            common[mask] = max_cones[static_cast<size_t>(__builtin_ctzll(mask))];
        } else {
            size_t bit = mask ^ low;
            const auto& a = common[low];
            const auto& b = max_cones[static_cast<size_t>(__builtin_ctzll(bit))];
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common[mask]));
        }
        admitted[mask] = 1;
        for (int i : common[mask])
            if (!ok[static_cast<size_t>(i)]) { admitted[mask] = 0; break; }
    }

    // Index the nonzero terms per Cech degree.
    std::vector<std::vector<size_t>> terms(v);  // degree p -> list of masks
    std::vector<size_t> term_index(size_t{1} << v, 0);
    for (size_t mask = 1; mask < (size_t{1} << v); ++mask) {
        if (!admitted[mask]) continue;
        int p = __builtin_popcountll(mask) - 1;
        term_index[mask] = terms[static_cast<size_t>(p)].size();
        terms[static_cast<size_t>(p)].push_back(mask);
    }

    std::vector<int> ranks(v + 1, 0);  // ranks[p+1] = rank of delta^p
    for (size_t p = 0; p + 1 < v; ++p) {
        const auto& lower = terms[p];
        const auto& upper = terms[p + 1];
        if (lower.empty() || upper.empty()) continue;
        std::vector<std::vector<Int>> mat(upper.size(), std::vector<Int>(lower.size(), 0));
        for (size_t r = 0; r < upper.size(); ++r) {
            size_t mask = upper[r];
            int pos = 0;
            for (size_t bit = 0; bit < v; ++bit) {
                size_t b = size_t{1} << bit;
                if (!(mask & b)) continue;
                size_t sub = mask ^ b;
                if (admitted[sub]) mat[r][term_index[sub]] = (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
        ranks[p + 1] = rank_int(std::move(mat));
    }

    WeightCohomology out;
    out.weight = m;
    out.dims.assign(static_cast<size_t>(n) + 1, 0);
    for (size_t p = 0; p < v; ++p) {
        int h = static_cast<int>(terms[p].size()) - ranks[p + 1] - ranks[p];
        if (static_cast<int>(p) <= n) {
            out.dims[p] = h;
        } else {
            require(h == 0, ErrorCode::Unsupported,
                    "cech_weight_oracle: nonzero cohomology above the variety dimension");
        }
    }
    return out;
}

Int default_scan_radius(const TDivisor& d) {
    CartierDataQ cd = cartier_data_rational(d.fan, to_rational(d.coeffs));
    Int peak = 0;
    for (const QVec& m : cd.m_sigma)
        for (const Rational& x : m)
            peak = std::max(peak, ceil_int(abs(x)));
    return static_cast<Int>(d.fan.dim()) * (1 + peak);
}

CohomologyTable cohomology_table(const TDivisor& d, std::optional<Int> scan_radius,
                                 bool verify_oracle) {
    require(is_complete(d.fan), ErrorCode::IncompleteFan,
            "cohomology_table: fan is not complete");
    const int n = d.fan.dim();

    CartierDataQ cd = cartier_data_rational(d.fan, to_rational(d.coeffs));
    Int min_radius = 0;
    for (const QVec& m : cd.m_sigma)
        for (const Rational& x : m) min_radius = std::max(min_radius, ceil_int(abs(x)));
    Int radius = scan_radius.value_or(default_scan_radius(d));
    require(radius >= min_radius, ErrorCode::RadiusTooSmall,
            "cohomology_table: radius too small (below the chart weights)");

    // Lexicographic weight box.
    std::vector<IVec> box;
    IVec cur(static_cast<size_t>(n), -radius);
    while (true) {
        box.push_back(cur);
        int k = n;
        while (k > 0) {
            if (++cur[static_cast<size_t>(k - 1)] <= radius) break;
            cur[static_cast<size_t>(k - 1)] = -radius;
            --k;
        }
        if (k == 0) break;
    }

    std::vector<WeightCohomology> results(box.size());
    std::atomic<bool> mismatch{false};
    parallel_for(box.size(), [&](size_t i) {
        results[i] = weight_cohomology(d, box[i]);
        if (verify_oracle) {
            WeightCohomology oracle = cech_weight_oracle(d, box[i]);
            if (oracle.dims != results[i].dims) mismatch.store(true);
        }
    });
    require(!mismatch.load(), ErrorCode::Unsupported,
            "cohomology_table: combinatorial formula disagrees with the Cech oracle");

    CohomologyTable table;
    table.coeffs = d.coeffs;
    table.scan_radius = radius;
    table.totals.assign(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < box.size(); ++i) {
        const WeightCohomology& wc = results[i];
        if (wc.all_zero()) continue;
        bool on_boundary = false;
        for (Int x : wc.weight)
            if (x == radius || x == -radius) on_boundary = true;
        require(!on_boundary, ErrorCode::RadiusTooSmall,
                "cohomology_table: radius too small (nonzero weight on the box boundary)");
        table.weights.emplace(wc.weight, wc);
        for (int j = 0; j <= n; ++j) table.totals[static_cast<size_t>(j)] += wc.dims[static_cast<size_t>(j)];
    }
    for (int j = 0; j <= n; ++j)
        table.euler += (j % 2 == 0 ? 1 : -1) * table.totals[static_cast<size_t>(j)];
    return table;
}

std::vector<long long> ext_dims(const TDivisor& a, const TDivisor& b) {
    require(a.fan == b.fan, ErrorCode::BadInput, "ext_dims: divisors on different fans");
    TDivisor diff = b + (-a);
    return cohomology_table(diff).totals;
}

}  // namespace toric
