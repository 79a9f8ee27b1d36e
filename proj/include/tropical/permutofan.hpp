#pragma once

#include <cstdint>
#include <vector>

#include "tropical/chow.hpp"

namespace tropical {

/// The fan in R^n / R1 with cones R_{>=0}{e_J1, ..., e_Ji} for chains J1 < ... < Ji of proper
/// nonempty subsets of [n]. Subsets are bit masks.
class PermutohedralFan {
public:
    using Chain = std::vector<std::uint64_t>;

    explicit PermutohedralFan(std::size_t n);

    std::size_t n() const { return n_; }
    AmbientSpace ambient() const { return {n_, true}; }
    /// Chains of length k, i.e. cones of dimension k, in a fixed order.
    const std::vector<Chain>& cones(int k) const;
    std::size_t index_of(const Chain& c) const;
    IntVector ray(std::uint64_t J) const;
    Polyhedron cone(const Chain& c) const;
    /// Sum of the rays, a point in the relative interior.
    RatVector interior_point(const Chain& c) const;

    /// Fan cycle of dimension k with the given weights on the k-cones.
    TropicalCycle cycle(int k, const IntVector& weights) const;
    /// Weights of X on the cones of dimension X.dim(). Throws ImageNotInFan when X is not a
    /// union of cones of the fan.
    IntVector weights_of(const TropicalCycle& X) const;

private:
    std::size_t n_;
    std::vector<std::vector<Chain>> cones_;
};

/// Balanced weightings of the k-cones, as the rows of a rational kernel basis.
struct MinkowskiWeightSpace {
    int k = 0;
    IntMatrix basis;
    std::size_t dim() const { return basis.rows(); }
};

MinkowskiWeightSpace weight_space(const PermutohedralFan& F, int k);

/// ch on fan cycles of dimension d - 1, with columns indexed by the source basis and rows by the
/// basis of codimension one weights.
struct ChowLinearMap {
    MinkowskiWeightSpace source;
    MinkowskiWeightSpace target;
    IntMatrix matrix;  // target.dim() x source.dim()
    std::size_t rank() const;
};

/// Computes each column twice: from the geometric chow_map of the basis cycle and from a
/// cone by cone expansion of the stable Minkowski sum. Disagreement throws InternalInconsistency.
ChowLinearMap chow_matrix(const PermutohedralFan& F, std::size_t d);

/// Kernel of ch on fan cycles of dimension d - 1. Every returned cycle is checked to be balanced
/// and to have zero image under chow_map.
std::vector<TropicalCycle> kernel_basis(const PermutohedralFan& F, std::size_t d);
std::vector<TropicalCycle> kernel_basis(const PermutohedralFan& F, const ChowLinearMap& ch);

/// Number of permutations of [n] with k descents.
Integer eulerian_number(std::size_t n, std::size_t k);

}  // namespace tropical
