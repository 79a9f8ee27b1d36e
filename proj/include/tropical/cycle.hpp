#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropical/arrangement.hpp"
#include "tropical/polyhedron.hpp"

namespace tropical {

/// Finite set of polyhedra closed under taking faces, stored by its maximal cells.
class PolyhedralComplex {
public:
    PolyhedralComplex() = default;
    PolyhedralComplex(AmbientSpace amb, std::vector<Polyhedron> maximal_cells);

    const AmbientSpace& ambient() const { return ambient_; }
    const std::vector<Polyhedron>& maximal_cells() const { return cells_; }
    int dim() const;
    /// All faces of dimension k of all maximal cells, without repetition.
    std::vector<Polyhedron> faces(int k) const;
    /// Whether any two maximal cells meet in a common face of both.
    bool is_face_to_face() const;

private:
    AmbientSpace ambient_;
    std::vector<Polyhedron> cells_;
};

/// Face-to-face refinement of the union of the cells of A and B. Each output cell lies in a
/// cell of A or B, and any cell of A or B is a union of output cells.
PolyhedralComplex common_refinement(const PolyhedralComplex& A, const PolyhedralComplex& B);

struct WeightedCell {
    Polyhedron cell;
    Integer weight;
};

/// Weighted pure rational polyhedral complex, kept in the canonical coarsest form.
///
/// Cells sharing an affine hull never overlap in their relative interiors; cells in different
/// hulls may cross. Use support_complex() for a face-to-face subdivision of the support.
class TropicalCycle {
public:
    TropicalCycle() = default;
    /// The zero cycle of the given dimension.
    TropicalCycle(const AmbientSpace& amb, int dim);

    static TropicalCycle from_weighted_polyhedra(const AmbientSpace& amb, int dim,
                                                 const std::vector<WeightedCell>& cells);

    const AmbientSpace& ambient() const { return ambient_; }
    int dim() const { return dim_; }
    const std::vector<WeightedCell>& cells() const { return cells_; }
    bool is_zero() const { return cells_.empty(); }
    bool is_effective() const;

    /// Sum of the weights of all cells containing p.
    Integer weight_at(const RatVector& p) const;
    PolyhedralComplex support_complex() const;

    TropicalCycle operator+(const TropicalCycle& o) const;
    TropicalCycle operator-(const TropicalCycle& o) const;
    TropicalCycle operator*(const Integer& k) const;

    bool operator==(const TropicalCycle& o) const;

private:
    AmbientSpace ambient_;
    int dim_ = 0;
    std::vector<WeightedCell> cells_;
};

bool equal_up_to_refinement(const TropicalCycle& X, const TropicalCycle& Y);

struct BalancingReport {
    bool balanced = true;
    /// A codimension one piece where the weighted normal vectors do not cancel.
    std::optional<Polyhedron> witness;
    /// The non-vanishing sum, expressed by the equations of the witness' affine hull.
    IntVector residual;
};

/// Checks the balancing condition. When perturb_seed is set, every chosen lattice normal is
/// shifted by a random element of the facet lattice, which must not change the verdict.
BalancingReport check_balancing(const TropicalCycle& X, std::optional<std::uint64_t> perturb_seed = {});

/// Primitive generator of N_sigma / N_tau pointing into sigma, for a facet tau of sigma given by
/// the homogenized inequality f.
IntVector lattice_normal(const Polyhedron& sigma, const IntVector& f);

TropicalCycle reflect(const TropicalCycle& X);
TropicalCycle translate(const TropicalCycle& X, const RatVector& v);
/// X x Y in the plain lattice of internal coordinates of both factors.
TropicalCycle cross_product(const TropicalCycle& X, const TropicalCycle& Y);
TropicalCycle pushforward(const LatticeMap& h, const TropicalCycle& X);
/// Pullback along h. Cells tau with h(N_R) + lin(tau) smaller than the target contribute zero.
TropicalCycle pullback(const LatticeMap& h, const TropicalCycle& Y);

}  // namespace tropical
