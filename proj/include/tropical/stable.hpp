#pragma once

#include <cstdint>
#include <vector>

#include "tropical/cycle.hpp"

namespace tropical {

/// Record of the displacement used by a stable intersection and what it saw.
struct GenericityCertificate {
    IntVector displacement;
    std::uint64_t seed = 0;
    int attempts = 0;
    std::size_t transverse_pairs = 0;
    std::size_t disjoint_pairs = 0;
};

/// [Z^D : N_sigma + N_tau]; zero when lin(sigma) + lin(tau) is a proper subspace.
Integer intersection_multiplicity(const Polyhedron& sigma, const Polyhedron& tau);
/// [N_{sigma+tau} : N_sigma + N_tau]; zero when lin(sigma) and lin(tau) meet nontrivially.
Integer minkowski_multiplicity(const Polyhedron& sigma, const Polyhedron& tau);

/// Stable intersection by the fan displacement rule. Every cell pair is checked against
/// X . (Y + eps v) for all small eps > 0 with eps kept symbolic; a pair that is neither
/// disjoint nor transverse triggers a new random v (at most eight tries, then
/// ErrorKind::GenericityFailure). The result does not depend on the seed.
TropicalCycle stable_intersection(const TropicalCycle& X, const TropicalCycle& Y, std::uint64_t seed = 0,
                                  GenericityCertificate* certificate = nullptr);

TropicalCycle stable_minkowski_sum(const TropicalCycle& X, const TropicalCycle& Y);

/// The fan L_k in R^n / R(1,...,1): cones spanned by e_j, j in J, for |J| = k, weight one.
TropicalCycle linear_skeleton(std::size_t n, int k);

/// deg X = deg(X . L_e) with e the codimension of X. Needs a quotient ambient.
Integer degree(const TropicalCycle& X, std::uint64_t seed = 0);

/// Sum of all weights of a zero dimensional cycle.
Integer total_weight(const TropicalCycle& X);

}  // namespace tropical
