#include "toric/simplicial.hpp"

#include <algorithm>
#include <map>

#include "toric/intlinalg.hpp"

namespace toric {

SimplicialComplex::SimplicialComplex(std::vector<std::vector<int>> faces) {
    for (std::vector<int>& f : faces) {
        std::sort(f.begin(), f.end());
        require(std::adjacent_find(f.begin(), f.end()) == f.end(), ErrorCode::BadInput,
                "simplicial complex: face with repeated vertex");
        if (!f.empty()) faces_.insert(f);
    }
    for (const std::vector<int>& f : faces_) {
        if (f.size() == 1) continue;
        for (size_t k = 0; k < f.size(); ++k) {
            std::vector<int> sub = f;
            sub.erase(sub.begin() + static_cast<long>(k));
            require(faces_.count(sub) > 0, ErrorCode::BadInput,
                    "simplicial complex: face not downward-closed");
        }
    }
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<std::vector<int>>& maximal) {
    SimplicialComplex cx;
    for (std::vector<int> f : maximal) {
        std::sort(f.begin(), f.end());
        const size_t n = f.size();
        for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
            std::vector<int> sub;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t{1} << i)) sub.push_back(f[i]);
            cx.faces_.insert(std::move(sub));
        }
    }
    return cx;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int p) const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_)
        if (static_cast<int>(f.size()) == p + 1) out.push_back(f);
    return out;
}

ReducedCohomology reduced_cohomology(const SimplicialComplex& cx) {
    const int dim = cx.dimension();
    // Faces per degree, with positions for matrix indexing.
    std::vector<std::vector<std::vector<int>>> by_dim(dim + 1);
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    for (int p = 0; p <= dim; ++p) {
        by_dim[p] = cx.faces_of_dim(p);
        for (size_t i = 0; i < by_dim[p].size(); ++i) index[p][by_dim[p][i]] = static_cast<int>(i);
    }

    // ranks[p+1] = rank of the coboundary C^p -> C^{p+1}, p from -1 to dim.
    std::vector<int> ranks(dim + 2, 0);
    if (dim >= 0) {
        // Augmentation delta^{-1}: 1 x #vertices of all-ones has rank 1 when
        // there is at least one vertex.
        ranks[0] = by_dim[0].empty() ? 0 : 1;
    }
    for (int p = 0; p < dim; ++p) {
        const auto& lower = by_dim[p];
        const auto& upper = by_dim[p + 1];
        if (lower.empty() || upper.empty()) continue;
        std::vector<std::vector<Int>> mat(upper.size(), std::vector<Int>(lower.size(), 0));
        for (size_t g = 0; g < upper.size(); ++g) {
            const std::vector<int>& face = upper[g];
            Int sign = 1;
            for (size_t k = 0; k < face.size(); ++k) {
                std::vector<int> sub = face;
                sub.erase(sub.begin() + static_cast<long>(k));
                mat[g][index[p].at(sub)] = sign;
                sign = -sign;
            }
        }
        ranks[p + 1] = rank_int(std::move(mat));
    }

    std::vector<int> shifted(dim + 2, 0);
    // Degree -1: C^{-1} = Q always.
    shifted[0] = 1 - ranks[0];
    for (int p = 0; p <= dim; ++p) {
        int c = static_cast<int>(by_dim[p].size());
        shifted[p + 1] = c - ranks[p + 1] - ranks[p];
    }
    return ReducedCohomology(std::move(shifted));
}

}  // namespace toric
