#pragma once

#include "tropical/exact.hpp"

namespace tropical {

/// Both descriptions of a polyhedral cone in Q^d, in canonical form.
/// lineality and equations are canonical row bases; rays are reduced modulo the
/// lineality space and facets modulo the equations, each primitive and sorted.
struct ConeData {
    IntMatrix rays;
    IntMatrix lineality;
    IntMatrix facets;
    IntMatrix equations;

    std::size_t ambient_dim() const { return equations.cols(); }
    std::size_t dim() const { return ambient_dim() - equations.rows(); }

    bool operator==(const ConeData& o) const { return rays == o.rays && lineality == o.lineality; }
};

struct RayData {
    IntMatrix rays;       // extreme rays of the pointed part, primitive
    IntMatrix lineality;  // basis of the lineality space
};

/// Double description: generators of {x : A x >= 0, E x = 0}.
RayData extreme_rays(const IntMatrix& A, const IntMatrix& E);

ConeData cone_from_constraints(const IntMatrix& A, const IntMatrix& E);
ConeData cone_from_generators(const IntMatrix& rays, const IntMatrix& lineality);

}  // namespace tropical
