#pragma once

#include <string>
#include <vector>

#include "tropical/polyhedron.hpp"

namespace tropical {

/// A polyhedron carrying a vector of integer weights. Scalar weights use length one.
struct VectorCell {
    Polyhedron cell;
    IntVector weight;
};

/// Canonical form of a formal sum of weighted polyhedra.
///
/// Polyhedra are grouped by affine hull. Inside a group every piece is refined by all
/// facet hyperplanes of the group and weights of identical pieces are summed; pieces of
/// total weight zero disappear. With coarsen set, adjacent pieces of equal weight are
/// merged back, which yields the coarsest representation of the weight function. Two
/// sums agree as functions iff their coarsened forms are identical.
std::vector<VectorCell> normalize_cells(const std::vector<VectorCell>& items, bool coarsen);

/// Canonical representative of the hyperplane {row = 0} inside the affine hull with canonical
/// equations E: reduced modulo E, primitive, first nonzero entry positive. Returns an empty
/// vector when the row is constant on the hull.
IntVector canonical_hyperplane(const IntVector& row, const IntMatrix& E);

/// Splits P by every hyperplane in the list that cuts it.
std::vector<Polyhedron> split_by(const Polyhedron& P, const std::vector<IntVector>& hyperplanes);

/// Sign pattern of a point with respect to hyperplanes, as a string over {+,-,0}.
std::string sign_pattern(const RatVector& p, const std::vector<IntVector>& hyperplanes);

Rational evaluate(const IntVector& homogeneous_row, const RatVector& x);

}  // namespace tropical
