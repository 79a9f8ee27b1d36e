#include "tropical/chow.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tropical {

namespace {

IntVector to_integer(const RatVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (denominator(v[i]) != 1) fail(ErrorKind::InternalInconsistency, "expected a lattice point");
        r[i] = numerator(v[i]);
    }
    return r;
}

std::vector<IntVector> hull_vertices(const std::vector<IntVector>& pts) {
    if (pts.empty()) return {};
    const AmbientSpace plain{pts[0].size(), false};
    std::vector<RatVector> v;
    for (const auto& p : pts) v.push_back(to_rational(p));
    std::vector<IntVector> out;
    const Polyhedron hull = Polyhedron::from_generators(plain, v);
    for (const auto& x : hull.vertices()) out.push_back(to_integer(x));
    std::sort(out.begin(), out.end());
    return out;
}

// Maximal cones normal(F) of the faces F of dimension e, unmerged.
std::vector<WeightedCell> normal_cells(const RegularSubdivision& S, int e) {
    std::vector<WeightedCell> cells;
    for (const auto& F : S.lower_faces(e)) {
        const Rational vol = normalized_volume(S.project(F));
        if (denominator(vol) != 1) fail(ErrorKind::InternalInconsistency, "normal_complex: non-integral volume");
        cells.push_back({normal_cone(S, F), numerator(vol)});
    }
    return cells;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Chambers of the hyperplane arrangement given by the hulls of the cells of C, with adjacency.
struct Chambers {
    std::vector<IntVector> hyperplanes;
    std::vector<Polyhedron> cells;
    struct Crossing {
        std::size_t from, to;
        IntVector facet;  // homogenized, nonnegative on 'from'
        RatVector point;  // relative interior point of the common facet
        Integer weight;   // weight of C there
    };
    std::vector<Crossing> crossings;
};

Chambers build_chambers(const TropicalCycle& C) {
    const AmbientSpace& amb = C.ambient();
    const std::size_t D = amb.dim();
    if (C.dim() + 1 != static_cast<int>(D))
        fail(ErrorKind::DimensionMismatch, "expected a cycle of codimension one");
    Chambers ch;
    std::set<IntVector> hs;
    const IntMatrix none(D + 1);
    for (const auto& c : C.cells()) {
        const IntVector h = canonical_hyperplane(c.cell.equations().row(0), none);
        if (!h.empty()) hs.insert(h);
    }
    ch.hyperplanes.assign(hs.begin(), hs.end());
    std::vector<IntVector> lin;
    for (std::size_t i = 0; i < D; ++i) {
        IntVector v(D);
        v[i] = 1;
        lin.push_back(v);
    }
    const Polyhedron whole = Polyhedron::from_generators(amb, {RatVector(D)}, {}, lin);
    ch.cells = split_by(whole, ch.hyperplanes);
    std::map<std::string, std::size_t> by_pattern;
    std::vector<std::string> patterns;
    for (std::size_t i = 0; i < ch.cells.size(); ++i) {
        patterns.push_back(sign_pattern(ch.cells[i].relative_interior_point(), ch.hyperplanes));
        by_pattern[patterns.back()] = i;
    }
    for (std::size_t i = 0; i < ch.cells.size(); ++i) {
        const auto facets = ch.cells[i].facets();
        const IntMatrix& ineq = ch.cells[i].facet_inequalities();
        for (std::size_t k = 0; k < facets.size(); ++k) {
            const IntVector f = ineq.row(k);
            const IntVector h = canonical_hyperplane(f, none);
            const auto pos = std::lower_bound(ch.hyperplanes.begin(), ch.hyperplanes.end(), h);
            if (pos == ch.hyperplanes.end() || *pos != h)
                fail(ErrorKind::InternalInconsistency, "chamber facet outside the arrangement");
            std::string flipped = patterns[i];
            char& s = flipped[pos - ch.hyperplanes.begin()];
            s = s == '+' ? '-' : '+';
            const auto it = by_pattern.find(flipped);
            if (it == by_pattern.end()) fail(ErrorKind::InternalInconsistency, "chamber without neighbour");
            const RatVector p = facets[k].relative_interior_point();
            ch.crossings.push_back({i, it->second, f, p, C.weight_at(p)});
        }
    }
    return ch;
}

// Lift of an internal covector to M, the sum zero sublattice of Z^n for the quotient.
IntVector covector_to_m(const AmbientSpace& amb, const IntVector& a) {
    if (!amb.quotient_all_ones) return a;
    IntVector w = a;
    Integer s = 0;
    for (const auto& x : a) s += x;
    w.push_back(-s);
    return w;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
    do {
        std::vector<std::size_t> J;
        for (std::size_t j = 0; j < n; ++j)
            if (pick[j]) J.push_back(j);
        out.push_back(J);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

std::size_t chow_codim(const TropicalCycle& X) {
    const AmbientSpace& amb = X.ambient();
    if (!amb.quotient_all_ones) fail(ErrorKind::AmbientMismatch, "chow: needs the quotient by (1,...,1)");
    if (X.dim() < 0 || X.dim() + 1 > static_cast<int>(amb.dim()))
        fail(ErrorKind::DimensionMismatch, "chow: cycle dimension out of range");
    return amb.n - static_cast<std::size_t>(X.dim()) - 1;  // n - d
}

}  // namespace

RegularSubdivision::RegularSubdivision(const AmbientSpace& N, std::vector<IntVector> points,
                                       std::vector<Rational> heights)
    : ambient_(N), points_(std::move(points)), heights_(std::move(heights)) {
    if (points_.empty()) fail(ErrorKind::InvalidArgument, "regular subdivision: no points");
    if (points_.size() != heights_.size()) fail(ErrorKind::DimensionMismatch, "regular subdivision: heights");
    Integer sum0 = 0;
    for (const auto& x : points_[0]) sum0 += x;
    for (const auto& p : points_) {
        if (p.size() != N.n) fail(ErrorKind::DimensionMismatch, "regular subdivision: point length");
        if (N.quotient_all_ones) {
            Integer s = 0;
            for (const auto& x : p) s += x;
            if (s != sum0) fail(ErrorKind::DimensionMismatch, "regular subdivision: coordinate sums differ");
        }
    }
    std::vector<RatVector> lifted;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        RatVector v = to_rational(points_[i]);
        v.push_back(heights_[i]);
        lifted.push_back(v);
    }
    IntVector up(N.n + 1);
    up[N.n] = 1;
    lifted_ = Polyhedron::from_generators({N.n + 1, false}, lifted, {up});
}

std::vector<Polyhedron> RegularSubdivision::lower_faces(int k) const {
    std::vector<Polyhedron> out;
    for (auto& F : lifted_.faces(k))
        if (F.is_bounded()) out.push_back(F);
    return out;
}

std::vector<std::vector<std::size_t>> RegularSubdivision::maximal_cells() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& F : lower_faces(dim())) {
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < points_.size(); ++j) {
            RatVector p = to_rational(points_[j]);
            p.push_back(heights_[j]);
            if (F.contains(p)) members.push_back(j);
        }
        out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> RegularSubdivision::vertices() const {
    std::vector<IntVector> out;
    for (const auto& F : lower_faces(0)) {
        RatVector v = F.vertices()[0];
        v.pop_back();
        out.push_back(to_integer(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> RegularSubdivision::support_vertices() const { return hull_vertices(points_); }

Polyhedron RegularSubdivision::project(const Polyhedron& F) const {
    std::vector<RatVector> v;
    for (auto x : F.vertices()) {
        x.pop_back();
        v.push_back(x);
    }
    return Polyhedron::from_generators({ambient_.n, false}, v);
}

Polyhedron normal_cone(const RegularSubdivision& S, const Polyhedron& F) {
    const AmbientSpace& amb = S.ambient();
    const std::size_t D = amb.dim();
    const auto& W = F.vertices();
    const RatVector& base = W[0];
    auto row = [&](const RatVector& p) {
        RatVector r(D + 1);
        r[0] = p.back() - base.back();
        for (std::size_t i = 0; i < D; ++i) r[i + 1] = p[i] - base[i];
        return r;
    };
    IntMatrix eq(D + 1), ineq(D + 1);
    for (std::size_t a = 1; a < W.size(); ++a) eq.append_row(clear_denominators(row(W[a])));
    for (std::size_t j = 0; j < S.points().size(); ++j) {
        RatVector p = to_rational(S.points()[j]);
        p.push_back(S.heights()[j]);
        const RatVector r = row(p);
        if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; })) continue;
        ineq.append_row(clear_denominators(r));
    }
    return Polyhedron::from_constraints(amb, ineq, eq);
}

RegularSubdivision ingest_chow_form(const BracketChowForm& f) {
    if (f.d == 0 || f.d >= f.n) fail(ErrorKind::InvalidArgument, "chow form: need 0 < d < n");
    std::map<IntVector, Rational> best;
    for (const auto& t : f.terms) {
        if (t.monomial.size() != f.r) fail(ErrorKind::DegreeMismatch, "chow form: monomial of wrong degree");
        IntVector p(f.n);
        for (const auto& J : t.monomial) {
            if (J.size() != f.n - f.d) fail(ErrorKind::DegreeMismatch, "chow form: bracket of wrong size");
            std::set<std::size_t> seen;
            for (const auto j : J) {
                if (j >= f.n || !seen.insert(j).second)
                    fail(ErrorKind::InvalidArgument, "chow form: bad bracket index");
                p[j] += 1;
            }
        }
        const auto it = best.find(p);
        if (it == best.end() || t.valuation < it->second) best[p] = t.valuation;
    }
    if (best.empty()) fail(ErrorKind::InvalidArgument, "chow form: no terms");
    std::vector<IntVector> pts;
    std::vector<Rational> hs;
    for (const auto& [p, h] : best) {
        pts.push_back(p);
        hs.push_back(h);
    }
    return RegularSubdivision({f.n, true}, pts, hs);
}

TropicalCycle normal_complex(const RegularSubdivision& S, int e) {
    const int D = static_cast<int>(S.ambient().dim());
    if (e < 0 || e > D) fail(ErrorKind::InvalidArgument, "normal_complex: codimension out of range");
    return TropicalCycle::from_weighted_polyhedra(S.ambient(), D - e, normal_cells(S, e));
}

TropicalCycle chow_map(const TropicalCycle& X) {
    const std::size_t c = chow_codim(X);
    return stable_minkowski_sum(X, reflect(linear_skeleton(X.ambient().n, static_cast<int>(c) - 1)));
}

RegularSubdivision ToricEmbedding::polytope() const {
    if (iota.rows() != n) fail(ErrorKind::DimensionMismatch, "toric embedding: matrix needs n rows");
    return RegularSubdivision(source(), iota.row_list(), std::vector<Rational>(n, Rational(0)));
}

LatticeMap ToricEmbedding::as_map() const { return {source(), {n, true}, iota}; }

TropicalCycle chow_map_toric(const TropicalCycle& X, const ToricEmbedding& emb) {
    if (X.ambient() != emb.source()) fail(ErrorKind::DimensionMismatch, "chow_map_toric: cycle not in N_R");
    const int d = X.dim() + 1;
    const RegularSubdivision Q = emb.polytope();
    if (Q.dim() != static_cast<int>(emb.rank()))
        fail(ErrorKind::DimensionMismatch, "chow_map_toric: the embedding is not injective");
    if (d > static_cast<int>(emb.rank())) fail(ErrorKind::DimensionMismatch, "chow_map_toric: cycle too large");
    return stable_minkowski_sum(X, reflect(normal_complex(Q, d)));
}

ComplementRegions complement_regions(const TropicalCycle& C) {
    const Chambers ch = build_chambers(C);
    UnionFind uf(ch.cells.size());
    for (const auto& x : ch.crossings)
        if (x.weight == 0) uf.unite(x.from, x.to);
    ComplementRegions out;
    out.chambers = ch.cells;
    std::map<std::size_t, std::size_t> index;
    for (std::size_t i = 0; i < ch.cells.size(); ++i) {
        const auto [it, fresh] = index.emplace(uf.find(i), index.size());
        out.region_of.push_back(it->second);
    }
    out.region_count = index.size();
    return out;
}

TropicalCycle orthant_cycle(std::size_t n, const std::vector<std::size_t>& J, const RatVector& u) {
    const AmbientSpace amb{n, true};
    std::vector<IntVector> rays;
    for (const auto j : J) rays.push_back(amb.basis_vector(j));
    const Polyhedron cone = translate(Polyhedron::cone(amb, rays), u);
    return TropicalCycle::from_weighted_polyhedra(amb, static_cast<int>(J.size()), {{cone, 1}});
}

IntVector orthant_shoot(const TropicalCycle& X, const TropicalCycle& chX, const RatVector& u, std::uint64_t seed) {
    const std::size_t c = chow_codim(X);
    const std::size_t n = X.ambient().n;
    if (u.size() != X.ambient().dim()) fail(ErrorKind::DimensionMismatch, "orthant_shoot: point dimension");
    for (const auto& cell : chX.cells())
        if (cell.cell.contains(u)) fail(ErrorKind::NonGenericPoint, "orthant_shoot: point lies on ch(X)");
    IntVector v(n);
    for (const auto& J : subsets(n, c)) {
        const Integer k = total_weight(stable_intersection(X, orthant_cycle(n, J, u), seed));
        for (const auto j : J) v[j] += k;
    }
    return v;
}

IntVector orthant_shoot(const TropicalCycle& X, const RatVector& u, std::uint64_t seed) {
    return orthant_shoot(X, chow_map(X), u, seed);
}

std::vector<IntVector> chow_subdivision_vertices(const TropicalCycle& X, std::uint64_t seed) {
    const TropicalCycle chX = chow_map(X);
    const ComplementRegions R = complement_regions(chX);
    std::vector<bool> done(R.region_count, false);
    std::set<IntVector> found;
    for (std::size_t i = 0; i < R.chambers.size(); ++i) {
        if (done[R.region_of[i]]) continue;
        done[R.region_of[i]] = true;
        found.insert(orthant_shoot(X, chX, R.chambers[i].relative_interior_point(), seed));
    }
    return {found.begin(), found.end()};
}

std::vector<IntVector> chow_polytope(const TropicalCycle& X, std::uint64_t seed) {
    return hull_vertices(chow_subdivision_vertices(X, seed));
}

RegularSubdivision chow_subdivision_from_cycle(const TropicalCycle& C) {
    const AmbientSpace& amb = C.ambient();
    if (C.dim() + 1 != static_cast<int>(amb.dim()))
        fail(ErrorKind::DimensionMismatch, "chow_subdivision_from_cycle: expected codimension one");
    if (!check_balancing(C).balanced) fail(ErrorKind::NotBalanced, "chow_subdivision_from_cycle: not balanced");
    if (!C.is_effective()) fail(ErrorKind::NotEffective, "chow_subdivision_from_cycle: negative weights");
    const Chambers ch = build_chambers(C);

    // Chamber i carries the affine function u -> <u, w_i> + h_i, the minimum of which has corner locus C.
    struct Label {
        IntVector w;
        Rational h;
    };
    std::vector<std::optional<Label>> label(ch.cells.size());
    std::vector<std::vector<std::size_t>> out_edges(ch.cells.size());
    for (std::size_t k = 0; k < ch.crossings.size(); ++k) out_edges[ch.crossings[k].from].push_back(k);
    label[0] = Label{IntVector(amb.n), Rational(0)};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (const auto k : out_edges[i]) {
            const auto& x = ch.crossings[k];
            Label next = *label[i];
            if (x.weight != 0) {
                const IntVector a(x.facet.begin() + 1, x.facet.end());
                const Integer g = content(a);
                const IntVector w = covector_to_m(amb, a);
                for (std::size_t j = 0; j < next.w.size(); ++j) next.w[j] += x.weight * w[j] / g;
                next.h += Rational(x.weight * x.facet[0]) / Rational(g);
            }
            if (!label[x.to]) {
                label[x.to] = next;
                queue.push_back(x.to);
            } else if (label[x.to]->w != next.w || label[x.to]->h != next.h) {
                fail(ErrorKind::InternalInconsistency, "chow_subdivision_from_cycle: inconsistent heights");
            }
        }
    }
    std::map<IntVector, Rational> pts;
    for (const auto& l : label) {
        if (!l) fail(ErrorKind::InternalInconsistency, "chow_subdivision_from_cycle: unreached chamber");
        const auto [it, fresh] = pts.emplace(l->w, l->h);
        if (!fresh && it->second != l->h)
            fail(ErrorKind::InternalInconsistency, "chow_subdivision_from_cycle: inconsistent heights");
    }
    std::vector<IntVector> points;
    std::vector<Rational> heights;
    for (const auto& [w, h] : pts) {
        points.push_back(w);
        heights.push_back(h);
    }
    return RegularSubdivision(amb, points, heights);
}

TropicalCycle cycle_from_chow_subdivision(const RegularSubdivision& S, std::size_t d) {
    const AmbientSpace& amb = S.ambient();
    if (!amb.quotient_all_ones) fail(ErrorKind::AmbientMismatch, "cycle_from_chow_subdivision: needs the quotient");
    if (d == 0 || d >= amb.n) fail(ErrorKind::InvalidArgument, "cycle_from_chow_subdivision: need 0 < d < n");
    const std::size_t n = amb.n;
    const std::vector<WeightedCell> cand = normal_cells(S, static_cast<int>(n - d));
    const TropicalCycle target = normal_complex(S, 1);
    const TropicalCycle fan = reflect(linear_skeleton(n, static_cast<int>(n - d) - 1));
    const std::size_t K = cand.size();

    std::vector<VectorCell> items;
    for (std::size_t i = 0; i < K; ++i)
        for (const auto& b : fan.cells()) {
            const Integer mu = minkowski_multiplicity(cand[i].cell, b.cell);
            if (mu == 0) continue;
            IntVector w(K + 1);
            w[i] = mu;
            items.push_back({minkowski_sum(cand[i].cell, b.cell), w});
        }
    for (const auto& c : target.cells()) {
        IntVector w(K + 1);
        w[K] = c.weight;
        items.push_back({c.cell, w});
    }
    // Each piece gives one equation sum_i a_i w_i = w_K; solve a^T A^T = b^T.
    IntMatrix At(0, 0);
    std::vector<IntVector> columns(K);
    RatVector rhs;
    for (const auto& piece : normalize_cells(items, false)) {
        for (std::size_t i = 0; i < K; ++i) columns[i].push_back(piece.weight[i]);
        rhs.push_back(piece.weight[K]);
    }
    At = IntMatrix(columns, rhs.size());
    if (rank(At) != K)
        fail(ErrorKind::InternalInconsistency, "cycle_from_chow_subdivision: no unique preimage on the skeleton");
    RatVector a;
    if (!solve_row_combination(At, rhs, a))
        fail(ErrorKind::InternalInconsistency, "cycle_from_chow_subdivision: no preimage on the skeleton");
    std::vector<WeightedCell> cells;
    for (std::size_t i = 0; i < K; ++i) {
        if (denominator(a[i]) != 1)
            fail(ErrorKind::InternalInconsistency, "cycle_from_chow_subdivision: non-integral preimage");
        if (a[i] != 0) cells.push_back({cand[i].cell, numerator(a[i])});
    }
    return TropicalCycle::from_weighted_polyhedra(amb, static_cast<int>(d) - 1, cells);
}

}  // namespace tropical
