#include "tropical/cone.hpp"

#include <algorithm>
#include <cstdint>

namespace tropical {

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if ((w_[i] & ~o.w_[i]) != 0) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }

private:
    std::vector<std::uint64_t> w_;
};

struct DDRay {
    IntVector v;
    Bits zeros;
};

// Extreme rays of the pointed cone {z : A z >= 0} where A has full column rank.
std::vector<IntVector> pointed_rays(const std::vector<IntVector>& A, std::size_t r) {
    if (r == 0) return {};
    const std::size_t m = A.size();

    std::vector<std::size_t> chosen;
    std::vector<bool> used(m, false);
    IntMatrix acc(r);
    for (std::size_t i = 0; i < m && chosen.size() < r; ++i) {
        IntMatrix trial = acc;
        trial.append_row(A[i]);
        if (rank(trial) > acc.rows()) {
            acc = std::move(trial);
            chosen.push_back(i);
            used[i] = true;
        }
    }
    if (chosen.size() != r) fail(ErrorKind::InternalInconsistency, "double description: rank deficient");

    // Columns of the inverse of the chosen block, scaled to be integral.
    std::vector<RatVector> M(r, RatVector(2 * r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) M[i][j] = A[chosen[i]][j];
        M[i][r + i] = 1;
    }
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = c;
        while (M[p][c] == 0) ++p;
        std::swap(M[c], M[p]);
        const Rational inv = 1 / M[c][c];
        for (auto& x : M[c]) x *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == c || M[i][c] == 0) continue;
            const Rational f = M[i][c];
            for (std::size_t k = 0; k < 2 * r; ++k) M[i][k] -= f * M[c][k];
        }
    }
    std::vector<DDRay> rays;
    for (std::size_t j = 0; j < r; ++j) {
        RatVector col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = M[i][r + j];
        DDRay ray{primitive_vector(clear_denominators(col)), Bits(m)};
        for (std::size_t i = 0; i < r; ++i)
            if (i != j) ray.zeros.set(chosen[i]);
        rays.push_back(std::move(ray));
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (used[i]) continue;
        const IntVector& a = A[i];
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            val[k] = dot(a, rays[k].v);
            if (val[k] > 0) pos.push_back(k);
            else if (val[k] < 0) neg.push_back(k);
        }
        if (neg.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (val[k] == 0) rays[k].zeros.set(i);
            continue;
        }
        std::vector<DDRay> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (val[k] < 0) continue;
            DDRay ray = rays[k];
            if (val[k] == 0) ray.zeros.set(i);
            next.push_back(std::move(ray));
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const Bits common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < r) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q) continue;
                    if (common.subset_of(rays[t].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v(r);
                for (std::size_t k = 0; k < r; ++k) v[k] = val[p] * rays[q].v[k] - val[q] * rays[p].v[k];
                DDRay ray{primitive_vector(v), common};
                ray.zeros.set(i);
                next.push_back(std::move(ray));
            }
        }
        rays = std::move(next);
    }
    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& ray : rays) out.push_back(std::move(ray.v));
    return out;
}

IntVector combine_rows(const IntVector& coeffs, const IntMatrix& basis) {
    IntVector x(basis.cols());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += coeffs[j] * basis(j, k);
    }
    return x;
}

IntMatrix sorted_reduced(const IntMatrix& M, const IntMatrix& modulo) {
    std::vector<IntVector> rows;
    for (const auto& row : M.row_list()) {
        IntVector r = reduce_modulo(row, modulo);
        if (!is_zero(r)) rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return IntMatrix(std::move(rows), M.cols());
}

ConeData canonical(const RayData& primal, const RayData& dual, std::size_t d) {
    ConeData c;
    c.lineality = canonical_row_basis(primal.lineality);
    c.rays = sorted_reduced(primal.rays, c.lineality);
    c.equations = canonical_row_basis(dual.lineality);
    c.facets = sorted_reduced(dual.rays, c.equations);
    if (c.lineality.cols() != d) c.lineality = IntMatrix(d);
    if (c.equations.cols() != d) c.equations = IntMatrix(d);
    if (c.rays.cols() != d) c.rays = IntMatrix(d);
    if (c.facets.cols() != d) c.facets = IntMatrix(d);
    return c;
}

}  // namespace

RayData extreme_rays(const IntMatrix& A, const IntMatrix& E) {
    const std::size_t d = std::max(A.cols(), E.cols());
    const IntMatrix K = E.rows() > 0 ? nullspace(E) : IntMatrix::identity(d);
    const std::size_t k = K.rows();
    RayData out{IntMatrix(d), IntMatrix(d)};
    if (k == 0) return out;

    IntMatrix Ap(k);
    for (const auto& a : A.row_list()) {
        IntVector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, K.row(j));
        if (!is_zero(row)) Ap.append_row(primitive_or_zero(std::move(row)));
    }
    const IntMatrix lin_coords = nullspace(Ap);
    for (const auto& y : lin_coords.row_list()) out.lineality.append_row(combine_rows(y, K));

    const IntMatrix W = canonical_row_basis(Ap);
    const std::size_t r = W.rows();
    std::vector<IntVector> App;
    for (const auto& a : Ap.row_list()) {
        IntVector row(r);
        for (std::size_t j = 0; j < r; ++j) row[j] = dot(a, W.row(j));
        App.push_back(std::move(row));
    }
    for (const auto& z : pointed_rays(App, r))
        out.rays.append_row(primitive_vector(combine_rows(combine_rows(z, W), K)));
    return out;
}

ConeData cone_from_constraints(const IntMatrix& A, const IntMatrix& E) {
    const std::size_t d = std::max(A.cols(), E.cols());
    IntMatrix A2 = A.cols() == d ? A : IntMatrix(d);
    IntMatrix E2 = E.cols() == d ? E : IntMatrix(d);
    const RayData primal = extreme_rays(A2, E2);
    const RayData dual = extreme_rays(primal.rays, primal.lineality);
    return canonical(primal, dual, d);
}

ConeData cone_from_generators(const IntMatrix& rays, const IntMatrix& lineality) {
    const std::size_t d = std::max(rays.cols(), lineality.cols());
    IntMatrix R = rays.cols() == d ? rays : IntMatrix(d);
    IntMatrix L = lineality.cols() == d ? lineality : IntMatrix(d);
    const RayData dual = extreme_rays(R, L);
    const RayData primal = extreme_rays(dual.rays, dual.lineality);
    return canonical(primal, dual, d);
}

}  // namespace tropical
