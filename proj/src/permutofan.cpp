#include "tropical/permutofan.hpp"

#include <algorithm>
#include <functional>

namespace tropical {

PermutohedralFan::PermutohedralFan(std::size_t n) : n_(n), cones_(n) {
    if (n < 2 || n > 12) fail(ErrorKind::InvalidArgument, "permutohedral fan: need 2 <= n <= 12");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    Chain chain;
    std::function<void()> grow = [&]() {
        cones_[chain.size()].push_back(chain);
        if (chain.size() + 1 == n) return;
        const std::uint64_t last = chain.empty() ? 0 : chain.back();
        for (std::uint64_t J = 1; J < full; ++J)
            if ((J & last) == last && J != last) {
                chain.push_back(J);
                grow();
                chain.pop_back();
            }
    };
    grow();
    for (auto& list : cones_) std::sort(list.begin(), list.end());
}

const std::vector<PermutohedralFan::Chain>& PermutohedralFan::cones(int k) const {
    if (k < 0 || k >= static_cast<int>(n_)) fail(ErrorKind::InvalidArgument, "permutohedral fan: cone dimension");
    return cones_[static_cast<std::size_t>(k)];
}

std::size_t PermutohedralFan::index_of(const Chain& c) const {
    const auto& list = cones(static_cast<int>(c.size()));
    const auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || *it != c) fail(ErrorKind::InvalidArgument, "permutohedral fan: not a chain");
    return static_cast<std::size_t>(it - list.begin());
}

IntVector PermutohedralFan::ray(std::uint64_t J) const {
    IntVector v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = (J >> i) & 1;
    return ambient().to_internal(v);
}

Polyhedron PermutohedralFan::cone(const Chain& c) const {
    std::vector<IntVector> rays;
    for (const auto J : c) rays.push_back(ray(J));
    return Polyhedron::cone(ambient(), rays);
}

RatVector PermutohedralFan::interior_point(const Chain& c) const {
    RatVector p(n_ - 1);
    for (const auto J : c) {
        const IntVector r = ray(J);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += r[i];
    }
    return p;
}

TropicalCycle PermutohedralFan::cycle(int k, const IntVector& weights) const {
    const auto& list = cones(k);
    if (weights.size() != list.size()) fail(ErrorKind::DimensionMismatch, "permutohedral fan: weight vector");
    std::vector<WeightedCell> cells;
    for (std::size_t i = 0; i < list.size(); ++i)
        if (weights[i] != 0) cells.push_back({cone(list[i]), weights[i]});
    return TropicalCycle::from_weighted_polyhedra(ambient(), k, cells);
}

IntVector PermutohedralFan::weights_of(const TropicalCycle& X) const {
    if (X.ambient() != ambient()) fail(ErrorKind::AmbientMismatch, "permutohedral fan: ambient");
    const auto& list = cones(X.dim());
    IntVector w(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) w[i] = X.weight_at(interior_point(list[i]));
    if (cycle(X.dim(), w) != X) fail(ErrorKind::ImageNotInFan, "cycle is not a union of cones of the fan");
    return w;
}

MinkowskiWeightSpace weight_space(const PermutohedralFan& F, int k) {
    const auto& top = F.cones(k);
    MinkowskiWeightSpace W;
    W.k = k;
    if (k == 0) {
        W.basis = IntMatrix({{1}}, 1);
        return W;
    }
    const std::size_t D = F.n() - 1;
    const auto& faces = F.cones(k - 1);
    // For each facet chain tau, the cones containing it and the extra ray.
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> star(faces.size());
    for (std::size_t s = 0; s < top.size(); ++s)
        for (std::size_t pos = 0; pos < top[s].size(); ++pos) {
            PermutohedralFan::Chain tau = top[s];
            tau.erase(tau.begin() + static_cast<long>(pos));
            star[F.index_of(tau)].push_back({s, top[s][pos]});
        }
    IntMatrix constraints(top.size());
    for (std::size_t t = 0; t < faces.size(); ++t) {
        IntMatrix rays(D);
        for (const auto J : faces[t]) rays.append_row(F.ray(J));
        const IntMatrix ann = nullspace(rays);
        for (const auto& a : ann.row_list()) {
            IntVector row(top.size());
            for (const auto& [s, J] : star[t]) row[s] += dot(a, F.ray(J));
            constraints.append_row(row);
        }
    }
    W.basis = integer_kernel(constraints);
    return W;
}

std::size_t ChowLinearMap::rank() const { return tropical::rank(matrix); }

ChowLinearMap chow_matrix(const PermutohedralFan& F, std::size_t d) {
    const std::size_t n = F.n();
    if (d < 1 || d > n - 1) fail(ErrorKind::InvalidArgument, "chow_matrix: need 1 <= d <= n - 1");
    ChowLinearMap ch;
    ch.source = weight_space(F, static_cast<int>(d) - 1);
    ch.target = weight_space(F, static_cast<int>(n) - 2);
    const auto& src = F.cones(static_cast<int>(d) - 1);
    const auto& tgt = F.cones(static_cast<int>(n) - 2);
    const TropicalCycle fan = reflect(linear_skeleton(n, static_cast<int>(n - d) - 1));

    // Cone by cone expansion: [sigma] stable-plus the reflected skeleton, read off on the target cones.
    std::vector<RatVector> probes;
    for (const auto& c : tgt) probes.push_back(F.interior_point(c));
    std::vector<IntVector> expansion;
    for (const auto& s : src) {
        const Polyhedron sigma = F.cone(s);
        IntVector w(tgt.size());
        for (const auto& b : fan.cells()) {
            const Integer mu = minkowski_multiplicity(sigma, b.cell);
            if (mu == 0) continue;
            const Polyhedron sum = minkowski_sum(sigma, b.cell);
            for (std::size_t c = 0; c < tgt.size(); ++c)
                if (sum.contains(probes[c])) w[c] += mu * b.weight;
        }
        expansion.push_back(w);
    }

    std::vector<IntVector> columns;
    for (const auto& b : ch.source.basis.row_list()) {
        IntVector combinatorial(tgt.size());
        for (std::size_t s = 0; s < src.size(); ++s)
            if (b[s] != 0)
                for (std::size_t c = 0; c < tgt.size(); ++c) combinatorial[c] += b[s] * expansion[s][c];
        const IntVector geometric = F.weights_of(chow_map(F.cycle(static_cast<int>(d) - 1, b)));
        if (geometric != combinatorial)
            fail(ErrorKind::InternalInconsistency, "chow_matrix: geometric and combinatorial images differ");
        RatVector coords;
        if (!solve_row_combination(ch.target.basis, to_rational(geometric), coords))
            fail(ErrorKind::InternalInconsistency, "chow_matrix: image is not balanced");
        IntVector col;
        for (const auto& x : coords) {
            if (denominator(x) != 1) fail(ErrorKind::InternalInconsistency, "chow_matrix: non-integral coordinates");
            col.push_back(numerator(x));
        }
        columns.push_back(col);
    }
    ch.matrix = IntMatrix(columns, ch.target.dim()).transpose();
    return ch;
}

std::vector<TropicalCycle> kernel_basis(const PermutohedralFan& F, const ChowLinearMap& ch) {
    const int k = ch.source.k;
    const std::size_t cones = F.cones(k).size();
    std::vector<TropicalCycle> out;
    for (const auto& x : integer_kernel(ch.matrix).row_list()) {
        IntVector w(cones);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0)
                for (std::size_t c = 0; c < cones; ++c) w[c] += x[j] * ch.source.basis(j, c);
        const TropicalCycle K = F.cycle(k, primitive_vector(w));
        if (!check_balancing(K).balanced) fail(ErrorKind::InternalInconsistency, "kernel_basis: unbalanced element");
        if (!chow_map(K).is_zero()) fail(ErrorKind::InternalInconsistency, "kernel_basis: nonzero Chow image");
        out.push_back(K);
    }
    return out;
}

std::vector<TropicalCycle> kernel_basis(const PermutohedralFan& F, std::size_t d) {
    return kernel_basis(F, chow_matrix(F, d));
}

Integer eulerian_number(std::size_t n, std::size_t k) {
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<Integer> row{1};  // n = 1
    for (std::size_t m = 2; m <= n; ++m) {
        std::vector<Integer> next(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (j < row.size()) next[j] += Integer(j + 1) * row[j];
            if (j >= 1) next[j] += Integer(m - j) * row[j - 1];
        }
        row = next;
    }
    return k < row.size() ? row[k] : Integer(0);
}

}  // namespace tropical
