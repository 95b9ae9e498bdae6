#ifndef TORIC_SIMPLICIAL_HPP
#define TORIC_SIMPLICIAL_HPP

#include <set>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

/**
 * Finite abstract simplicial complex on integer vertex labels. Faces are
 * stored as sorted index vectors and must be downward closed; the empty
 * face is implicit and only enters through the augmented cochain complex.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Build from an explicit face list; throws unless downward closed.
    explicit SimplicialComplex(std::vector<std::vector<int>> faces);

    /// Build the downward closure of the given maximal faces.
    static SimplicialComplex closure_of(const std::vector<std::vector<int>>& maximal);

    bool empty() const { return faces_.empty(); }
    int dimension() const;  // -1 for the empty complex
    const std::set<std::vector<int>>& faces() const { return faces_; }
    std::vector<std::vector<int>> faces_of_dim(int p) const;

private:
    std::set<std::vector<int>> faces_;  // sorted vertex index lists, nonempty
};

/**
 * Dimensions of reduced simplicial cochain cohomology over Q.
 * dims()[i] is dim H-tilde^{i-1}: degrees are reported shifted by one so
 * that the empty complex yields {1} (the augmentation class).
 */
class ReducedCohomology {
public:
    explicit ReducedCohomology(std::vector<int> shifted) : shifted_(std::move(shifted)) {}

    const std::vector<int>& dims() const { return shifted_; }

    /// dim H-tilde^p for p >= -1; zero outside the stored range.
    int dim_at(int p) const {
        int i = p + 1;
        if (i < 0 || i >= static_cast<int>(shifted_.size())) return 0;
        return shifted_[i];
    }

private:
    std::vector<int> shifted_;
};

ReducedCohomology reduced_cohomology(const SimplicialComplex& cx);

}  // namespace toric

#endif
