#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropical/chow.hpp"

namespace tropical {

/// Matroid on {0, ..., n-1} given by its bases. The exchange axiom is checked on construction.
class Matroid {
public:
    Matroid() = default;
    Matroid(std::size_t n, std::vector<std::vector<std::size_t>> bases);

    static Matroid uniform(std::size_t r, std::size_t n);
    /// Cycle matroid of a graph; edges are pairs of vertices and become elements in order.
    static Matroid graphic(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const { return n_; }
    std::size_t rank() const { return r_; }
    /// Sorted bases, each sorted.
    const std::vector<std::vector<std::size_t>>& bases() const { return bases_; }
    bool is_basis(const std::vector<std::size_t>& B) const;
    std::size_t rank_of(const std::vector<std::size_t>& S) const;
    std::vector<std::size_t> loops() const;
    std::vector<std::size_t> coloops() const;
    /// Closed sets, as sorted element lists.
    std::vector<std::vector<std::size_t>> flats() const;
    Matroid dual() const;

    /// Indicator vectors of the bases.
    std::vector<IntVector> basis_vectors() const;

    bool operator==(const Matroid& o) const { return n_ == o.n_ && bases_ == o.bases_; }

private:
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::vector<std::vector<std::size_t>> bases_;
    std::vector<std::uint64_t> masks_;  // sorted
};

/// conv of the basis indicator vectors, in the plain space R^n.
Polyhedron matroid_polytope(const Matroid& M);

/// Lattice polytope with 0/1 vertices all of whose edges are parallel to some e_i - e_j.
/// Works on the full coordinates of a plain ambient.
bool is_matroid_polytope(const Polyhedron& P);

/// Whether every maximal cell of S is a matroid polytope.
bool is_matroid_subdivision(const RegularSubdivision& S);

/// Regular subdivision of a matroid polytope whose cells are all matroid polytopes.
class MatroidSubdivision {
public:
    MatroidSubdivision() = default;
    /// Throws NotMatroidSubdivision when a cell fails the edge test or points are not 0/1.
    explicit MatroidSubdivision(RegularSubdivision S);
    static MatroidSubdivision trivial(const Matroid& M);

    const RegularSubdivision& subdivision() const { return S_; }
    std::size_t size() const { return S_.ambient().n; }
    std::size_t rank() const { return rank_; }
    /// Point reflection w -> 1 - w, which belongs to the dual matroid.
    MatroidSubdivision dual() const;

private:
    RegularSubdivision S_;
    std::size_t rank_ = 0;
};

/// Normal cones of the loop-free faces (coordinate i is a loop of a face when the face lies in
/// x_i = 0). Pure of dimension rank - 1, all weights one.
TropicalCycle bergman_complex(const MatroidSubdivision& S);
/// Normal cones of the coloop-free faces (no face lies in x_i = 1). Pure of dimension n - rank - 1.
TropicalCycle co_bergman_complex(const MatroidSubdivision& S);

/// The tropical linear space of M, of dimension rank - 1 and degree one: the co-Bergman complex
/// of the trivial subdivision of the dual matroid polytope.
TropicalCycle bergman_fan(const Matroid& M);

struct LinearSpaceCheck {
    bool is_linear_space = false;
    std::optional<MatroidSubdivision> subdivision;
};

/// Degree one test. For degree one, rebuilds the Chow subdivision of X, translates it into the
/// unit cube and checks that it is a matroid subdivision of rank n - d whose co-Bergman complex
/// is X; any failed step throws InternalInconsistency. Other degrees give false.
LinearSpaceCheck verify_tropical_linear_space(const TropicalCycle& X, std::uint64_t seed = 0);

}  // namespace tropical
