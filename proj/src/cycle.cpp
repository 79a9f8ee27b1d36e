#include "tropical/cycle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace tropical {

namespace {

// Returns g = gcd(a, b) >= 0 with x a + y b = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

std::vector<Polyhedron> refine_cells(const std::vector<Polyhedron>& cells) {
    std::vector<IntVector> rows;
    for (const auto& c : cells) {
        for (const auto& f : c.facet_inequalities().row_list()) rows.push_back(f);
        for (const auto& e : c.equations().row_list()) rows.push_back(e);
    }
    std::set<Polyhedron> out;
    for (const auto& c : cells) {
        std::set<IntVector> hs;
        for (const auto& r : rows) {
            IntVector h = canonical_hyperplane(r, c.equations());
            if (!h.empty()) hs.insert(std::move(h));
        }
        const std::vector<IntVector> H(hs.begin(), hs.end());
        for (auto& piece : split_by(c, H)) out.insert(std::move(piece));
    }
    return {out.begin(), out.end()};
}

bool is_face_of(const Polyhedron& F, const Polyhedron& P) {
    const RatVector p = F.relative_interior_point();
    IntMatrix eqs = P.equations();
    for (const auto& f : P.facet_inequalities().row_list())
        if (evaluate(f, p) == 0) eqs.append_row(f);
    return Polyhedron::from_constraints(P.ambient(), P.homogeneous().facets, eqs) == F;
}

}  // namespace

PolyhedralComplex::PolyhedralComplex(AmbientSpace amb, std::vector<Polyhedron> maximal_cells)
    : ambient_(amb), cells_(std::move(maximal_cells)) {
    for (const auto& c : cells_)
        if (c.ambient() != ambient_) fail(ErrorKind::AmbientMismatch, "complex: cell in a different ambient");
}

int PolyhedralComplex::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim());
    return d;
}

std::vector<Polyhedron> PolyhedralComplex::faces(int k) const {
    std::set<Polyhedron> out;
    for (const auto& c : cells_)
        for (auto& f : c.faces(k)) out.insert(std::move(f));
    return {out.begin(), out.end()};
}

bool PolyhedralComplex::is_face_to_face() const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
        for (std::size_t j = i + 1; j < cells_.size(); ++j) {
            const Polyhedron I = intersect(cells_[i], cells_[j]);
            if (I.is_empty()) continue;
            if (!is_face_of(I, cells_[i]) || !is_face_of(I, cells_[j])) return false;
        }
    return true;
}

PolyhedralComplex common_refinement(const PolyhedralComplex& A, const PolyhedralComplex& B) {
    if (A.ambient() != B.ambient()) fail(ErrorKind::AmbientMismatch, "common_refinement: ambient spaces differ");
    std::vector<Polyhedron> all = A.maximal_cells();
    all.insert(all.end(), B.maximal_cells().begin(), B.maximal_cells().end());
    return PolyhedralComplex(A.ambient(), refine_cells(all));
}

TropicalCycle::TropicalCycle(const AmbientSpace& amb, int dim) : ambient_(amb), dim_(dim) {}

TropicalCycle TropicalCycle::from_weighted_polyhedra(const AmbientSpace& amb, int dim,
                                                     const std::vector<WeightedCell>& cells) {
    std::vector<VectorCell> items;
    for (const auto& c : cells) {
        if (c.cell.ambient() != amb) fail(ErrorKind::AmbientMismatch, "cycle: cell in a different ambient");
        if (c.cell.is_empty() || c.weight == 0) continue;
        if (c.cell.dim() != dim) fail(ErrorKind::MixedDimensions, "cycle: cell of the wrong dimension");
        items.push_back(VectorCell{c.cell, IntVector{c.weight}});
    }
    TropicalCycle X(amb, dim);
    for (auto& v : normalize_cells(items, true)) X.cells_.push_back(WeightedCell{std::move(v.cell), v.weight[0]});
    return X;
}

bool TropicalCycle::is_effective() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const WeightedCell& c) { return c.weight > 0; });
}

Integer TropicalCycle::weight_at(const RatVector& p) const {
    Integer w = 0;
    for (const auto& c : cells_)
        if (c.cell.contains(p)) w += c.weight;
    return w;
}

PolyhedralComplex TropicalCycle::support_complex() const {
    std::vector<Polyhedron> cells;
    for (const auto& c : cells_) cells.push_back(c.cell);
    return PolyhedralComplex(ambient_, refine_cells(cells));
}

TropicalCycle TropicalCycle::operator+(const TropicalCycle& o) const {
    if (ambient_ != o.ambient_) fail(ErrorKind::AmbientMismatch, "cycle sum: ambient spaces differ");
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (dim_ != o.dim_) fail(ErrorKind::MixedDimensions, "cycle sum: dimensions differ");
    std::vector<WeightedCell> all = cells_;
    all.insert(all.end(), o.cells_.begin(), o.cells_.end());
    return from_weighted_polyhedra(ambient_, dim_, all);
}

TropicalCycle TropicalCycle::operator*(const Integer& k) const {
    if (k == 0) return TropicalCycle(ambient_, dim_);
    TropicalCycle X = *this;
    for (auto& c : X.cells_) c.weight *= k;
    return X;
}

TropicalCycle TropicalCycle::operator-(const TropicalCycle& o) const { return *this + o * Integer(-1); }

bool TropicalCycle::operator==(const TropicalCycle& o) const {
    if (ambient_ != o.ambient_ || cells_.size() != o.cells_.size()) return false;
    if (!is_zero() && dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (!(cells_[i].cell == o.cells_[i].cell) || cells_[i].weight != o.cells_[i].weight) return false;
    return true;
}

bool equal_up_to_refinement(const TropicalCycle& X, const TropicalCycle& Y) {
    if (X.ambient() != Y.ambient()) return false;
    if (X.is_zero() || Y.is_zero()) return X.is_zero() && Y.is_zero();
    if (X.dim() != Y.dim()) return false;
    return (X - Y).is_zero();
}

IntVector lattice_normal(const Polyhedron& sigma, const IntVector& f) {
    const IntMatrix& B = sigma.lattice_basis();
    const IntVector a(f.begin() + 1, f.end());
    Integer g = 0;
    IntVector lambda(B.rows());
    for (std::size_t i = 0; i < B.rows(); ++i) {
        const Integer c = dot(a, B.row(i));
        if (c == 0) continue;
        Integer x, y;
        const Integer g2 = extended_gcd(g, c, x, y);
        for (auto& l : lambda) l *= x;
        lambda[i] += y;
        g = g2;
    }
    if (g == 0) fail(ErrorKind::InternalInconsistency, "lattice_normal: inequality is constant on the cell");
    IntVector n(a.size());
    for (std::size_t i = 0; i < B.rows(); ++i)
        if (lambda[i] != 0)
            for (std::size_t k = 0; k < n.size(); ++k) n[k] += lambda[i] * B(i, k);
    return n;
}

BalancingReport check_balancing(const TropicalCycle& X, std::optional<std::uint64_t> perturb_seed) {
    BalancingReport report;
    if (X.dim() <= 0) return report;
    std::mt19937_64 rng(perturb_seed.value_or(0));
    std::uniform_int_distribution<int> coin(-3, 3);
    std::vector<VectorCell> items;
    for (const auto& c : X.cells()) {
        const auto facets = c.cell.facets();
        const IntMatrix& F = c.cell.facet_inequalities();
        for (std::size_t j = 0; j < facets.size(); ++j) {
            IntVector n = lattice_normal(c.cell, F.row(j));
            if (perturb_seed) {
                const IntMatrix& Bt = facets[j].lattice_basis();
                for (const auto& b : Bt.row_list()) {
                    const int k = coin(rng);
                    for (std::size_t i = 0; i < n.size(); ++i) n[i] += k * b[i];
                }
            }
            const IntMatrix Q = facets[j].linear_equations();
            IntVector w(Q.rows());
            for (std::size_t i = 0; i < Q.rows(); ++i) w[i] = c.weight * dot(Q.row(i), n);
            items.push_back(VectorCell{facets[j], std::move(w)});
        }
    }
    const auto residual = normalize_cells(items, false);
    if (!residual.empty()) {
        report.balanced = false;
        report.witness = residual.front().cell;
        report.residual = residual.front().weight;
    }
    return report;
}

TropicalCycle reflect(const TropicalCycle& X) {
    std::vector<WeightedCell> cells;
    for (const auto& c : X.cells()) cells.push_back({reflect(c.cell), c.weight});
    return TropicalCycle::from_weighted_polyhedra(X.ambient(), X.dim(), cells);
}

TropicalCycle translate(const TropicalCycle& X, const RatVector& v) {
    std::vector<WeightedCell> cells;
    for (const auto& c : X.cells()) cells.push_back({translate(c.cell, v), c.weight});
    return TropicalCycle::from_weighted_polyhedra(X.ambient(), X.dim(), cells);
}

TropicalCycle cross_product(const TropicalCycle& X, const TropicalCycle& Y) {
    const AmbientSpace amb{X.ambient().dim() + Y.ambient().dim(), false};
    std::vector<WeightedCell> cells;
    for (const auto& a : X.cells())
        for (const auto& b : Y.cells()) cells.push_back({product(a.cell, b.cell), a.weight * b.weight});
    return TropicalCycle::from_weighted_polyhedra(amb, X.dim() + Y.dim(), cells);
}

TropicalCycle pushforward(const LatticeMap& h, const TropicalCycle& X) {
    if (h.source != X.ambient()) fail(ErrorKind::AmbientMismatch, "pushforward: map source differs from the ambient");
    const IntMatrix H = h.internal_matrix();
    std::vector<WeightedCell> cells;
    for (const auto& c : X.cells()) {
        const IntMatrix& B = c.cell.lattice_basis();
        IntMatrix HB(H.rows());
        for (const auto& b : B.row_list()) HB.append_row(H.apply(b));
        if (rank(HB) != B.rows()) continue;
        const Integer idx = B.rows() == 0 ? Integer(1) : lattice_index(saturation(HB), HB);
        cells.push_back({image(h, c.cell), c.weight * idx});
    }
    return TropicalCycle::from_weighted_polyhedra(h.target, X.dim(), cells);
}

TropicalCycle pullback(const LatticeMap& h, const TropicalCycle& Y) {
    if (h.target != Y.ambient()) fail(ErrorKind::AmbientMismatch, "pullback: map target differs from the ambient");
    const IntMatrix H = h.internal_matrix();
    const int Ds = static_cast<int>(h.source.dim()), Dt = static_cast<int>(h.target.dim());
    const int expected = Y.dim() + Ds - Dt;
    TropicalCycle zero(h.source, expected);
    if (expected < 0) return zero;
    const IntMatrix Ht = H.transpose();
    std::vector<WeightedCell> cells;
    for (const auto& c : Y.cells()) {
        const Polyhedron P = preimage(h, c.cell);
        if (P.is_empty() || P.dim() != expected) continue;
        IntMatrix gens = Ht;
        gens.append_rows(c.cell.lattice_basis());
        if (rank(gens) != static_cast<std::size_t>(Dt)) continue;
        cells.push_back({P, c.weight * lattice_index(IntMatrix::identity(Dt), gens)});
    }
    return TropicalCycle::from_weighted_polyhedra(h.source, expected, cells);
}

}  // namespace tropical
