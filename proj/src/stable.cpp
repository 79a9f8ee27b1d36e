#include "tropical/stable.hpp"

#include <random>

namespace tropical {

namespace {

IntMatrix joint_basis(const Polyhedron& a, const Polyhedron& b) {
    IntMatrix G = a.lattice_basis();
    G.append_rows(b.lattice_basis());
    return G;
}

IntVector random_displacement(std::size_t D, std::uint64_t seed, int attempt) {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt) * 7919ULL + 1);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    IntVector v(D);
    for (auto& x : v) x = dist(rng);
    return v;
}

IntVector extend(const IntVector& row, const Integer& last) {
    IntVector r = row;
    r.push_back(last);
    return r;
}

enum class PairKind { Disjoint, Transverse, Degenerate };

// Classifies sigma . (tau + eps v) for small eps > 0; in the transverse case also returns the
// limit cell, which may have lower dimension than expected.
PairKind classify(const Polyhedron& sigma, const Polyhedron& tau, const IntVector& v, int e) {
    const std::size_t D = sigma.ambient().dim();
    const IntMatrix G = joint_basis(sigma, tau);
    if (rank(G) < D) {
        IntMatrix Gv = G;
        Gv.append_row(v);
        return rank(Gv) > rank(G) ? PairKind::Disjoint : PairKind::Degenerate;
    }
    const AmbientSpace lifted{D + 1, false};
    IntMatrix A(D + 2), E(D + 2);
    for (const auto& f : sigma.homogeneous().facets.row_list()) A.append_row(extend(f, 0));
    for (const auto& q : sigma.equations().row_list()) E.append_row(extend(q, 0));
    auto shifted = [&](const IntVector& f) {
        IntVector a(f.begin() + 1, f.end());
        return extend(f, -dot(a, v));
    };
    for (const auto& f : tau.homogeneous().facets.row_list()) A.append_row(shifted(f));
    for (const auto& q : tau.equations().row_list()) E.append_row(shifted(q));
    IntVector eps(D + 2);
    eps[D + 1] = 1;
    A.append_row(eps);
    const Polyhedron P = Polyhedron::from_constraints(lifted, A, E);
    if (P.is_empty()) return PairKind::Disjoint;
    bool positive = false;
    for (const auto& x : P.vertices())
        if (x[D] > 0) positive = true;
    for (const auto& r : P.rays())
        if (r[D] > 0) positive = true;
    if (!positive) return PairKind::Disjoint;
    return P.dim() == e + 1 ? PairKind::Transverse : PairKind::Degenerate;
}

}  // namespace

Integer intersection_multiplicity(const Polyhedron& sigma, const Polyhedron& tau) {
    const std::size_t D = sigma.ambient().dim();
    const IntMatrix G = joint_basis(sigma, tau);
    if (rank(G) < D) return 0;
    return lattice_index(IntMatrix::identity(D), G);
}

Integer minkowski_multiplicity(const Polyhedron& sigma, const Polyhedron& tau) {
    const IntMatrix G = joint_basis(sigma, tau);
    const std::size_t r = rank(G);
    if (r < static_cast<std::size_t>(sigma.dim() + tau.dim())) return 0;
    if (r == 0) return 1;
    return lattice_index(saturation(G), G);
}

TropicalCycle stable_intersection(const TropicalCycle& X, const TropicalCycle& Y, std::uint64_t seed,
                                  GenericityCertificate* certificate) {
    if (X.ambient() != Y.ambient()) fail(ErrorKind::AmbientMismatch, "stable_intersection: ambient spaces differ");
    const AmbientSpace& amb = X.ambient();
    const int D = static_cast<int>(amb.dim());
    const int e = X.dim() + Y.dim() - D;
    if (e < 0 || X.is_zero() || Y.is_zero()) return TropicalCycle(amb, e);

    for (int attempt = 0; attempt < 8; ++attempt) {
        const IntVector v = random_displacement(amb.dim(), seed, attempt);
        GenericityCertificate cert{v, seed, attempt + 1, 0, 0};
        std::vector<WeightedCell> cells;
        bool generic = true;
        for (const auto& a : X.cells()) {
            for (const auto& b : Y.cells()) {
                const PairKind kind = classify(a.cell, b.cell, v, e);
                if (kind == PairKind::Degenerate) {
                    generic = false;
                    break;
                }
                if (kind == PairKind::Disjoint) {
                    ++cert.disjoint_pairs;
                    continue;
                }
                ++cert.transverse_pairs;
                const Polyhedron I = intersect(a.cell, b.cell);
                if (I.dim() != e) continue;
                cells.push_back({I, a.weight * b.weight * intersection_multiplicity(a.cell, b.cell)});
            }
            if (!generic) break;
        }
        if (!generic) continue;
        if (certificate) *certificate = cert;
        return TropicalCycle::from_weighted_polyhedra(amb, e, cells);
    }
    fail(ErrorKind::GenericityFailure, "stable_intersection: no generic displacement found after 8 attempts");
}

TropicalCycle stable_minkowski_sum(const TropicalCycle& X, const TropicalCycle& Y) {
    if (X.ambient() != Y.ambient()) fail(ErrorKind::AmbientMismatch, "stable_minkowski_sum: ambient spaces differ");
    const int d = X.dim() + Y.dim();
    std::vector<WeightedCell> cells;
    if (d <= static_cast<int>(X.ambient().dim())) {
        for (const auto& a : X.cells())
            for (const auto& b : Y.cells()) {
                const Integer mu = minkowski_multiplicity(a.cell, b.cell);
                if (mu == 0) continue;
                cells.push_back({minkowski_sum(a.cell, b.cell), a.weight * b.weight * mu});
            }
    }
    return TropicalCycle::from_weighted_polyhedra(X.ambient(), d, cells);
}

TropicalCycle linear_skeleton(std::size_t n, int k) {
    const AmbientSpace amb{n, true};
    if (k < 0 || static_cast<std::size_t>(k) >= n)
        fail(ErrorKind::InvalidArgument, "linear_skeleton: need 0 <= k < n");
    std::vector<WeightedCell> cells;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        std::vector<IntVector> rays;
        for (std::size_t j = 0; j < n; ++j)
            if (pick[j]) rays.push_back(amb.basis_vector(j));
        cells.push_back({Polyhedron::cone(amb, rays), 1});
    } while (std::next_permutation(pick.begin(), pick.end()));
    return TropicalCycle::from_weighted_polyhedra(amb, k, cells);
}

Integer total_weight(const TropicalCycle& X) {
    Integer s = 0;
    for (const auto& c : X.cells()) s += c.weight;
    return s;
}

Integer degree(const TropicalCycle& X, std::uint64_t seed) {
    const AmbientSpace& amb = X.ambient();
    if (!amb.quotient_all_ones) fail(ErrorKind::AmbientMismatch, "degree: needs the quotient by (1,...,1)");
    if (X.is_zero()) return 0;
    const int codim = static_cast<int>(amb.dim()) - X.dim();
    if (codim == static_cast<int>(amb.dim())) return total_weight(X);
    return total_weight(stable_intersection(X, linear_skeleton(amb.n, codim), seed));
}

}  // namespace tropical
