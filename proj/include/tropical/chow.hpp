#pragma once

#include <cstdint>
#include <vector>

#include "tropical/stable.hpp"

namespace tropical {

/// Regular subdivision of a lattice point configuration in M, induced by the lower faces of
/// the lifted polytope conv{(w, h)}. The normal side is the ambient N.
///
/// For a quotient ambient R^n / R1 the points live in Z^n and must share their coordinate sum.
class RegularSubdivision {
public:
    RegularSubdivision() = default;
    RegularSubdivision(const AmbientSpace& N, std::vector<IntVector> points, std::vector<Rational> heights);

    const AmbientSpace& ambient() const { return ambient_; }
    const std::vector<IntVector>& points() const { return points_; }
    const std::vector<Rational>& heights() const { return heights_; }

    /// conv{(w, h)} + R_{>=0} e_last, in the plain space Q^{n+1}.
    const Polyhedron& lifted() const { return lifted_; }
    int dim() const { return lifted_.dim() - 1; }

    /// Lower faces of dimension k (all when k < 0) as faces of lifted().
    std::vector<Polyhedron> lower_faces(int k = -1) const;
    /// Maximal cells, each given by the indices of the points lying on it.
    std::vector<std::vector<std::size_t>> maximal_cells() const;
    /// Points that are vertices of some cell, sorted.
    std::vector<IntVector> vertices() const;
    /// Vertices of the subdivided polytope conv(points), sorted.
    std::vector<IntVector> support_vertices() const;
    /// Projection of a lower face to M.
    Polyhedron project(const Polyhedron& lower_face) const;

private:
    AmbientSpace ambient_;
    std::vector<IntVector> points_;
    std::vector<Rational> heights_;
    Polyhedron lifted_;
};

/// Chow form data: each term is a product of r brackets [J] with |J| = n - d (0-based
/// subsets) and the valuation of its coefficient.
struct BracketChowForm {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    struct Term {
        std::vector<std::vector<std::size_t>> monomial;
        Rational valuation;
    };
    std::vector<Term> terms;
};

/// Lifted points sum_i e^{J_i} with height the valuation; repeated points keep the minimum.
RegularSubdivision ingest_chow_form(const BracketChowForm& f);

/// normal(F) = {u : F lies in the face of the lifted polytope minimizing (u, 1)}, for a lower face F.
Polyhedron normal_cone(const RegularSubdivision& S, const Polyhedron& lower_face);

/// Codimension e skeleton of the normal complex, weighted by normalized volumes of the dual faces.
TropicalCycle normal_complex(const RegularSubdivision& S, int e);

/// ch(X) = X stable-plus the reflected L_{n-d-1}, for X of dimension d - 1 in R^n / R1.
TropicalCycle chow_map(const TropicalCycle& X);

/// Inclusion N = Z^k -> Z^n / Z1 given by a lift to Z^n (an n x k matrix).
struct ToricEmbedding {
    std::size_t n = 0;
    IntMatrix iota;  // n x k

    std::size_t rank() const { return iota.cols(); }
    AmbientSpace source() const { return {iota.cols(), false}; }
    /// Q = iota^T(simplex): the rows of iota.
    RegularSubdivision polytope() const;
    LatticeMap as_map() const;
};

/// ch_iota(X) = X stable-plus the reflected N^d(Q), for X of dimension d - 1 in N_R.
TropicalCycle chow_map_toric(const TropicalCycle& X, const ToricEmbedding& emb);

/// Splits the ambient by the affine hulls of the cells of a codimension one cycle and groups the
/// resulting chambers into the connected components of the complement of its support.
struct ComplementRegions {
    std::vector<Polyhedron> chambers;
    std::vector<std::size_t> region_of;  // chamber -> region
    std::size_t region_count = 0;
};
ComplementRegions complement_regions(const TropicalCycle& C);

/// sum over |J| = n - d of deg([u + C_J] . X) e^J. Throws NonGenericPoint when u lies on ch(X).
IntVector orthant_shoot(const TropicalCycle& X, const RatVector& u, std::uint64_t seed = 0);
/// Same, with ch(X) already known.
IntVector orthant_shoot(const TropicalCycle& X, const TropicalCycle& chX, const RatVector& u, std::uint64_t seed);

/// Vertices of the Chow polytope, one orthant shot per complement region of ch(X).
std::vector<IntVector> chow_polytope(const TropicalCycle& X, std::uint64_t seed = 0);
/// All vertices of the Chow subdivision found by orthant shooting, before taking the hull.
std::vector<IntVector> chow_subdivision_vertices(const TropicalCycle& X, std::uint64_t seed = 0);

/// A regular subdivision S with normal_complex(S, 1) = C, for an effective balanced C of
/// codimension one. The chamber of the first region gets the affine function 0.
RegularSubdivision chow_subdivision_from_cycle(const TropicalCycle& C);

/// Cycle X of dimension d - 1 supported on the codimension n - d skeleton of the normal complex of
/// S with ch(X) = N^1(S). Throws InternalInconsistency when no unique integral solution exists.
TropicalCycle cycle_from_chow_subdivision(const RegularSubdivision& S, std::size_t d);

/// Cones u + C_J as a single-cell cycle.
TropicalCycle orthant_cycle(std::size_t n, const std::vector<std::size_t>& J, const RatVector& u);

}  // namespace tropical
