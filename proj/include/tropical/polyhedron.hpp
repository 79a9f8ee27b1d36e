#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tropical/cone.hpp"
#include "tropical/exact.hpp"

namespace tropical {

/// Either R^n with lattice Z^n, or R^n / R(1,...,1) with lattice Z^n / Z(1,...,1).
///
/// Internally every point is stored in Q^dim(). For the quotient the chart is
/// x -> (x_1 - x_n, ..., x_{n-1} - x_n), so e_n becomes (-1, ..., -1).
struct AmbientSpace {
    std::size_t n = 0;
    bool quotient_all_ones = false;

    std::size_t dim() const { return quotient_all_ones ? n - 1 : n; }

    RatVector to_internal(const RatVector& full) const;
    IntVector to_internal(const IntVector& full) const;
    /// Representative with last coordinate zero in the quotient case.
    RatVector to_full(const RatVector& internal) const;
    IntVector to_full(const IntVector& internal) const;
    /// Internal image of the standard basis vector e_i (0-based).
    IntVector basis_vector(std::size_t i) const;

    bool operator==(const AmbientSpace&) const = default;
    auto operator<=>(const AmbientSpace&) const = default;
};

/// Closed convex polyhedron stored as its homogenized cone in Q^{1+dim}.
/// Homogenized rows (b, a) stand for b + a.x >= 0 or b + a.x = 0.
class Polyhedron {
public:
    Polyhedron() = default;

    static Polyhedron empty(const AmbientSpace& amb);
    static Polyhedron from_generators(const AmbientSpace& amb, const std::vector<RatVector>& vertices,
                                      const std::vector<IntVector>& rays = {},
                                      const std::vector<IntVector>& lineality = {});
    static Polyhedron from_constraints(const AmbientSpace& amb, const IntMatrix& inequalities,
                                       const IntMatrix& equations = IntMatrix());
    static Polyhedron from_homogeneous_generators(const AmbientSpace& amb, const IntMatrix& rays,
                                                  const IntMatrix& lineality);
    /// The cone generated by the given rays, with apex at the origin.
    static Polyhedron cone(const AmbientSpace& amb, const std::vector<IntVector>& rays,
                           const std::vector<IntVector>& lineality = {});
    static Polyhedron point(const AmbientSpace& amb, const RatVector& p);

    const AmbientSpace& ambient() const { return data_->ambient; }
    bool is_empty() const { return data_->vertices.empty(); }
    int dim() const;
    bool is_bounded() const { return data_->rays.empty() && data_->lineality.empty(); }

    const std::vector<RatVector>& vertices() const& { return data_->vertices; }
    const std::vector<IntVector>& rays() const& { return data_->rays; }
    const std::vector<IntVector>& lineality() const& { return data_->lineality; }
    // Copies for temporaries, so range-for over f().vertices() is safe.
    std::vector<RatVector> vertices() && { return data_->vertices; }
    std::vector<IntVector> rays() && { return data_->rays; }
    std::vector<IntVector> lineality() && { return data_->lineality; }
    /// Finite facet inequalities (the face at infinity is excluded).
    const IntMatrix& facet_inequalities() const { return data_->finite_facets; }
    const IntMatrix& equations() const { return data_->cone.equations; }
    const ConeData& homogeneous() const { return data_->cone; }

    bool contains(const RatVector& x) const;
    bool contains(const Polyhedron& other) const;
    RatVector relative_interior_point() const;
    /// Lattice basis of N_P = Z^dim intersected with the linear span of P - P.
    const IntMatrix& lattice_basis() const;
    /// Linear parts a of the equations, spanning the annihilator of lin(P).
    IntMatrix linear_equations() const;

    /// Faces of dimension k (all faces when k < 0), each as a polyhedron.
    std::vector<Polyhedron> faces(int k = -1) const;
    /// Facets as polyhedra, aligned with facet_inequalities().
    std::vector<Polyhedron> facets() const;
    /// The face on which the linear functional u attains its minimum.
    Polyhedron face_min(const RatVector& u) const;
    /// Same cone description, viewed in another ambient of equal internal dimension.
    Polyhedron rebased(const AmbientSpace& amb) const;

    bool operator==(const Polyhedron& o) const;
    bool operator<(const Polyhedron& o) const;

private:
    struct Data {
        AmbientSpace ambient;
        ConeData cone;
        std::vector<RatVector> vertices;
        std::vector<IntVector> rays;
        std::vector<IntVector> lineality;
        IntMatrix finite_facets;
        mutable std::optional<IntMatrix> lattice;
        mutable std::optional<std::vector<std::vector<std::size_t>>> face_sets;
    };
    std::shared_ptr<const Data> data_;

    static Polyhedron build(const AmbientSpace& amb, ConeData cone);
    const std::vector<std::vector<std::size_t>>& face_generator_sets() const;
    Polyhedron face_from_generators(const std::vector<std::size_t>& idx) const;
};

IntVector homogenize(const RatVector& x);  // positive multiple of (1, x), primitive

Polyhedron intersect(const Polyhedron& P, const Polyhedron& Q);
Polyhedron minkowski_sum(const Polyhedron& P, const Polyhedron& Q);
Polyhedron reflect(const Polyhedron& P);
Polyhedron translate(const Polyhedron& P, const RatVector& v);
/// P x Q in the plain lattice Z^(dim P.ambient + dim Q.ambient) of internal coordinates.
Polyhedron product(const Polyhedron& P, const Polyhedron& Q);
/// Normalized lattice volume: dim! times the Euclidean volume relative to N_P.
Rational normalized_volume(const Polyhedron& P);

/// Sign of the homogenized functional h on P: +1 if h >= 0 on P, -1 if h <= 0, 0 if it cuts P
/// (takes both signs), 2 if h vanishes on P.
int side_of(const Polyhedron& P, const IntVector& h);
/// Intersection of P with the halfspace h >= 0.
Polyhedron cut(const Polyhedron& P, const IntVector& h);

/// Linear map Z^n -> Z^m given by an integer matrix in full coordinates.
struct LatticeMap {
    AmbientSpace source;
    AmbientSpace target;
    IntMatrix matrix;  // target.n x source.n

    /// The same map in internal coordinates. Throws when a quotient map does not
    /// send (1,...,1) to a multiple of (1,...,1).
    IntMatrix internal_matrix() const;
};

Polyhedron image(const LatticeMap& h, const Polyhedron& P);
Polyhedron preimage(const LatticeMap& h, const Polyhedron& P);

}  // namespace tropical
