#include "tropical/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace tropical {

namespace {

std::uint64_t mask_of(const std::vector<std::size_t>& S) {
    std::uint64_t m = 0;
    for (const auto i : S) m |= std::uint64_t{1} << i;
    return m;
}

std::vector<std::size_t> elements_of(std::uint64_t m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

bool is_zero_one(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0 || x == 1; });
}

IntVector lifted_point(const RatVector& v) {
    IntVector w;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (denominator(v[i]) != 1) fail(ErrorKind::NotMatroidSubdivision, "non-integral vertex");
        w.push_back(numerator(v[i]));
    }
    return w;
}

// Normal cones of the faces of dimension k for which test(face vertices) holds, weight one.
template <class Test>
TropicalCycle selected_normal_cones(const MatroidSubdivision& S, int face_dim, Test test) {
    const RegularSubdivision& R = S.subdivision();
    const int D = static_cast<int>(R.ambient().dim());
    std::vector<WeightedCell> cells;
    if (face_dim >= 0 && face_dim <= D) {
        for (const auto& F : R.lower_faces(face_dim)) {
            std::vector<IntVector> verts;
            for (const auto& v : F.vertices()) verts.push_back(lifted_point(v));
            if (test(verts)) cells.push_back({normal_cone(R, F), 1});
        }
    }
    return TropicalCycle::from_weighted_polyhedra(R.ambient(), D - face_dim, cells);
}

}  // namespace

Matroid::Matroid(std::size_t n, std::vector<std::vector<std::size_t>> bases) : n_(n) {
    if (n > 63) fail(ErrorKind::InvalidArgument, "matroid: at most 63 elements");
    if (bases.empty()) fail(ErrorKind::InvalidArgument, "matroid: no bases");
    std::set<std::uint64_t> seen;
    for (auto& B : bases) {
        std::sort(B.begin(), B.end());
        if (std::adjacent_find(B.begin(), B.end()) != B.end())
            fail(ErrorKind::InvalidArgument, "matroid: repeated element in a basis");
        for (const auto i : B)
            if (i >= n) fail(ErrorKind::InvalidArgument, "matroid: element out of range");
        if (B.size() != bases[0].size()) fail(ErrorKind::InvalidArgument, "matroid: bases of different sizes");
        seen.insert(mask_of(B));
    }
    r_ = bases[0].size();
    masks_.assign(seen.begin(), seen.end());
    for (const auto a : masks_)
        for (const auto b : masks_)
            for (const auto x : elements_of(a & ~b)) {
                bool ok = false;
                for (const auto y : elements_of(b & ~a))
                    if (std::binary_search(masks_.begin(), masks_.end(),
                                           (a & ~(std::uint64_t{1} << x)) | (std::uint64_t{1} << y))) {
                        ok = true;
                        break;
                    }
                if (!ok) fail(ErrorKind::InvalidArgument, "matroid: basis exchange fails");
            }
    for (const auto m : masks_) bases_.push_back(elements_of(m));
    std::sort(bases_.begin(), bases_.end());
}

Matroid Matroid::uniform(std::size_t r, std::size_t n) {
    if (r > n) fail(ErrorKind::InvalidArgument, "uniform matroid: r > n");
    std::vector<std::vector<std::size_t>> bases;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - static_cast<long>(r), pick.end(), 1);
    do {
        std::vector<std::size_t> B;
        for (std::size_t j = 0; j < n; ++j)
            if (pick[j]) B.push_back(j);
        bases.push_back(B);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return Matroid(n, bases);
}

Matroid Matroid::graphic(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    auto forest_size = [&](std::uint64_t m) {
        std::vector<std::size_t> parent(vertices);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t joined = 0;
        for (const auto e : elements_of(m)) {
            const auto a = find(edges[e].first), b = find(edges[e].second);
            if (a != b) {
                parent[a] = b;
                ++joined;
            }
        }
        return joined;
    };
    const std::size_t m = edges.size();
    for (const auto& [a, b] : edges)
        if (a >= vertices || b >= vertices) fail(ErrorKind::InvalidArgument, "graphic matroid: bad edge");
    const std::uint64_t all = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
    const std::size_t r = forest_size(all);
    std::vector<std::vector<std::size_t>> bases;
    for (std::uint64_t s = 0; s <= all; ++s)
        if (static_cast<std::size_t>(std::popcount(s)) == r && forest_size(s) == r) bases.push_back(elements_of(s));
    return Matroid(m, bases);
}

bool Matroid::is_basis(const std::vector<std::size_t>& B) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask_of(B));
}

std::size_t Matroid::rank_of(const std::vector<std::size_t>& S) const {
    const std::uint64_t s = mask_of(S);
    int best = 0;
    for (const auto m : masks_) best = std::max(best, std::popcount(m & s));
    return static_cast<std::size_t>(best);
}

std::vector<std::size_t> Matroid::loops() const {
    std::uint64_t any = 0;
    for (const auto m : masks_) any |= m;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (!(any >> i & 1)) out.push_back(i);
    return out;
}

std::vector<std::size_t> Matroid::coloops() const {
    std::uint64_t all = n_ == 0 ? 0 : (std::uint64_t{1} << n_) - 1;
    for (const auto m : masks_) all &= m;
    return elements_of(all);
}

std::vector<std::vector<std::size_t>> Matroid::flats() const {
    if (n_ > 20) fail(ErrorKind::InvalidArgument, "flats: too many elements");
    std::vector<std::vector<std::size_t>> out;
    const std::uint64_t full = (std::uint64_t{1} << n_) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        const auto S = elements_of(s);
        const std::size_t r = rank_of(S);
        bool closed = true;
        for (std::size_t x = 0; x < n_ && closed; ++x) {
            if (s >> x & 1) continue;
            auto T = S;
            T.push_back(x);
            if (rank_of(T) == r) closed = false;
        }
        if (closed) out.push_back(S);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matroid Matroid::dual() const {
    const std::uint64_t full = n_ == 0 ? 0 : (std::uint64_t{1} << n_) - 1;
    std::vector<std::vector<std::size_t>> bases;
    for (const auto m : masks_) bases.push_back(elements_of(full & ~m));
    return Matroid(n_, bases);
}

std::vector<IntVector> Matroid::basis_vectors() const {
    std::vector<IntVector> out;
    for (const auto& B : bases_) {
        IntVector v(n_);
        for (const auto i : B) v[i] = 1;
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polyhedron matroid_polytope(const Matroid& M) {
    std::vector<RatVector> v;
    for (const auto& b : M.basis_vectors()) v.push_back(to_rational(b));
    return Polyhedron::from_generators({M.size(), false}, v);
}

bool is_matroid_polytope(const Polyhedron& P) {
    if (P.ambient().quotient_all_ones) fail(ErrorKind::InvalidArgument, "is_matroid_polytope: needs full coordinates");
    if (P.is_empty() || !P.is_bounded()) return false;
    for (const auto& v : P.vertices())
        for (const auto& x : v)
            if (x != 0 && x != 1) return false;
    for (const auto& e : P.faces(1)) {
        const auto& a = e.vertices()[0];
        const auto& b = e.vertices()[1];
        int plus = 0, minus = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Rational d = b[i] - a[i];
            if (d == 1) ++plus;
            else if (d == -1) ++minus;
            else if (d != 0) return false;
        }
        if (plus != 1 || minus != 1) return false;
    }
    return true;
}

bool is_matroid_subdivision(const RegularSubdivision& S) {
    for (const auto& F : S.lower_faces(S.dim()))
        if (!is_matroid_polytope(S.project(F))) return false;
    return true;
}

MatroidSubdivision::MatroidSubdivision(RegularSubdivision S) : S_(std::move(S)) {
    if (!S_.ambient().quotient_all_ones)
        fail(ErrorKind::NotMatroidSubdivision, "matroid subdivision: needs the quotient ambient");
    for (const auto& p : S_.points())
        if (!is_zero_one(p)) fail(ErrorKind::NotMatroidSubdivision, "matroid subdivision: points must be 0/1");
    Integer r = 0;
    for (const auto& x : S_.points()[0]) r += x;
    rank_ = static_cast<std::size_t>(r);
    std::vector<RatVector> all;
    for (const auto& p : S_.points()) all.push_back(to_rational(p));
    if (!is_matroid_polytope(Polyhedron::from_generators({S_.ambient().n, false}, all)))
        fail(ErrorKind::NotMatroidSubdivision, "matroid subdivision: support is not a matroid polytope");
    if (!is_matroid_subdivision(S_))
        fail(ErrorKind::NotMatroidSubdivision, "matroid subdivision: a cell fails the edge test");
}

MatroidSubdivision MatroidSubdivision::trivial(const Matroid& M) {
    const auto pts = M.basis_vectors();
    return MatroidSubdivision(RegularSubdivision({M.size(), true}, pts, std::vector<Rational>(pts.size(), Rational(0))));
}

MatroidSubdivision MatroidSubdivision::dual() const {
    std::vector<IntVector> pts;
    for (auto p : S_.points()) {
        for (auto& x : p) x = 1 - x;
        pts.push_back(p);
    }
    return MatroidSubdivision(RegularSubdivision(S_.ambient(), pts, S_.heights()));
}

TropicalCycle bergman_complex(const MatroidSubdivision& S) {
    const std::size_t n = S.size();
    return selected_normal_cones(S, static_cast<int>(n - S.rank()), [n](const std::vector<IntVector>& verts) {
        for (std::size_t i = 0; i < n; ++i)
            if (std::all_of(verts.begin(), verts.end(), [i](const IntVector& v) { return v[i] == 0; }))
                return false;
        return true;
    });
}

TropicalCycle co_bergman_complex(const MatroidSubdivision& S) {
    const std::size_t n = S.size();
    return selected_normal_cones(S, static_cast<int>(S.rank()), [n](const std::vector<IntVector>& verts) {
        for (std::size_t i = 0; i < n; ++i)
            if (std::all_of(verts.begin(), verts.end(), [i](const IntVector& v) { return v[i] == 1; }))
                return false;
        return true;
    });
}

TropicalCycle bergman_fan(const Matroid& M) { return co_bergman_complex(MatroidSubdivision::trivial(M.dual())); }

LinearSpaceCheck verify_tropical_linear_space(const TropicalCycle& X, std::uint64_t seed) {
    if (degree(X, seed) != 1) return {};
    const AmbientSpace& amb = X.ambient();
    const std::size_t n = amb.n;
    const std::size_t d = static_cast<std::size_t>(X.dim()) + 1;
    const RegularSubdivision S = chow_subdivision_from_cycle(chow_map(X));

    // Translate so that every coordinate projection is {0} or [0, 1].
    IntVector low = S.points()[0];
    for (const auto& p : S.points())
        for (std::size_t i = 0; i < n; ++i) low[i] = std::min(low[i], p[i]);
    std::vector<IntVector> pts;
    for (auto p : S.points()) {
        for (std::size_t i = 0; i < n; ++i) p[i] -= low[i];
        if (!is_zero_one(p))
            fail(ErrorKind::InternalInconsistency, "degree one cycle whose Chow subdivision is not in the unit cube");
        Integer r = 0;
        for (const auto& x : p) r += x;
        if (r != Integer(n - d))
            fail(ErrorKind::InternalInconsistency, "degree one cycle whose Chow subdivision has the wrong rank");
        pts.push_back(p);
    }
    const RegularSubdivision T(amb, pts, S.heights());
    if (!is_matroid_subdivision(T))
        fail(ErrorKind::InternalInconsistency, "degree one cycle whose Chow subdivision is not matroidal");
    MatroidSubdivision MS;
    try {
        MS = MatroidSubdivision(T);
    } catch (const Error& e) {
        fail(ErrorKind::InternalInconsistency, std::string("degree one cycle: ") + e.what());
    }
    if (!equal_up_to_refinement(co_bergman_complex(MS), X))
        fail(ErrorKind::InternalInconsistency, "degree one cycle differing from its co-Bergman complex");
    return {true, MS};
}

}  // namespace tropical
