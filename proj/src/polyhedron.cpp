#include "tropical/polyhedron.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace tropical {

RatVector AmbientSpace::to_internal(const RatVector& full) const {
    if (full.size() != n) fail(ErrorKind::DimensionMismatch, "point has wrong number of coordinates");
    if (!quotient_all_ones) return full;
    RatVector r(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) r[i] = full[i] - full[n - 1];
    return r;
}

IntVector AmbientSpace::to_internal(const IntVector& full) const {
    if (full.size() != n) fail(ErrorKind::DimensionMismatch, "vector has wrong number of coordinates");
    if (!quotient_all_ones) return full;
    IntVector r(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) r[i] = full[i] - full[n - 1];
    return r;
}

RatVector AmbientSpace::to_full(const RatVector& internal) const {
    if (internal.size() != dim()) fail(ErrorKind::DimensionMismatch, "internal point has wrong length");
    RatVector r = internal;
    if (quotient_all_ones) r.push_back(0);
    return r;
}

IntVector AmbientSpace::to_full(const IntVector& internal) const {
    if (internal.size() != dim()) fail(ErrorKind::DimensionMismatch, "internal vector has wrong length");
    IntVector r = internal;
    if (quotient_all_ones) r.push_back(0);
    return r;
}

IntVector AmbientSpace::basis_vector(std::size_t i) const {
    IntVector e(n);
    e[i] = 1;
    return to_internal(e);
}

IntVector homogenize(const RatVector& x) {
    RatVector h(x.size() + 1);
    h[0] = 1;
    std::copy(x.begin(), x.end(), h.begin() + 1);
    return primitive_vector(clear_denominators(h));
}

namespace {

IntVector lift(const IntVector& v) {
    IntVector h(v.size() + 1);
    std::copy(v.begin(), v.end(), h.begin() + 1);
    return h;
}

Rational eval(const IntVector& h, const RatVector& x) {
    Rational s = h[0];
    for (std::size_t i = 0; i < x.size(); ++i)
        if (h[i + 1] != 0) s += Rational(h[i + 1]) * x[i];
    return s;
}

Integer eval_dir(const IntVector& h, const IntVector& r) {
    Integer s = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (h[i + 1] != 0 && r[i] != 0) s += h[i + 1] * r[i];
    return s;
}

}  // namespace

Polyhedron Polyhedron::build(const AmbientSpace& amb, ConeData cone) {
    auto d = std::make_shared<Data>();
    d->ambient = amb;
    const std::size_t D = amb.dim();
    for (const auto& r : cone.rays.row_list()) {
        if (r[0] > 0) {
            RatVector v(D);
            for (std::size_t i = 0; i < D; ++i) v[i] = Rational(r[i + 1], r[0]);
            d->vertices.push_back(std::move(v));
        } else {
            d->rays.emplace_back(r.begin() + 1, r.end());
        }
    }
    if (d->vertices.empty()) {
        d->rays.clear();
        cone = ConeData{IntMatrix(D + 1), IntMatrix(D + 1), IntMatrix(D + 1), IntMatrix::identity(D + 1)};
    }
    for (const auto& l : cone.lineality.row_list()) d->lineality.emplace_back(l.begin() + 1, l.end());
    d->finite_facets = IntMatrix(D + 1);
    for (const auto& f : cone.facets.row_list()) {
        bool tight = false;
        for (const auto& v : d->vertices)
            if (eval(f, v) == 0) {
                tight = true;
                break;
            }
        if (tight) d->finite_facets.append_row(f);
    }
    d->cone = std::move(cone);
    Polyhedron p;
    p.data_ = std::move(d);
    return p;
}

Polyhedron Polyhedron::empty(const AmbientSpace& amb) {
    const std::size_t D = amb.dim();
    return build(amb, ConeData{IntMatrix(D + 1), IntMatrix(D + 1), IntMatrix(D + 1), IntMatrix::identity(D + 1)});
}

Polyhedron Polyhedron::from_homogeneous_generators(const AmbientSpace& amb, const IntMatrix& rays,
                                                   const IntMatrix& lineality) {
    bool any_vertex = false;
    for (const auto& r : rays.row_list())
        if (r[0] > 0) any_vertex = true;
    if (!any_vertex) return empty(amb);
    return build(amb, cone_from_generators(rays, lineality));
}

Polyhedron Polyhedron::from_generators(const AmbientSpace& amb, const std::vector<RatVector>& vertices,
                                       const std::vector<IntVector>& rays,
                                       const std::vector<IntVector>& lineality) {
    const std::size_t D = amb.dim();
    if (vertices.empty()) return empty(amb);
    IntMatrix R(D + 1), L(D + 1);
    for (const auto& v : vertices) {
        if (v.size() != D) fail(ErrorKind::DimensionMismatch, "vertex has wrong length");
        R.append_row(homogenize(v));
    }
    for (const auto& r : rays) {
        if (r.size() != D) fail(ErrorKind::DimensionMismatch, "ray has wrong length");
        if (!is_zero(r)) R.append_row(lift(r));
    }
    for (const auto& l : lineality) {
        if (l.size() != D) fail(ErrorKind::DimensionMismatch, "lineality vector has wrong length");
        if (!is_zero(l)) L.append_row(lift(l));
    }
    return from_homogeneous_generators(amb, R, L);
}

Polyhedron Polyhedron::from_constraints(const AmbientSpace& amb, const IntMatrix& inequalities,
                                        const IntMatrix& equations) {
    const std::size_t D = amb.dim();
    IntMatrix A(D + 1), E(D + 1);
    IntVector pos(D + 1);
    pos[0] = 1;
    A.append_row(pos);
    for (const auto& r : inequalities.row_list()) A.append_row(r);
    for (const auto& r : equations.row_list()) E.append_row(r);
    return build(amb, cone_from_constraints(A, E));
}

Polyhedron Polyhedron::cone(const AmbientSpace& amb, const std::vector<IntVector>& rays,
                            const std::vector<IntVector>& lineality) {
    return from_generators(amb, {RatVector(amb.dim())}, rays, lineality);
}

Polyhedron Polyhedron::point(const AmbientSpace& amb, const RatVector& p) {
    return from_generators(amb, {p});
}

int Polyhedron::dim() const {
    if (is_empty()) return -1;
    return static_cast<int>(data_->cone.dim()) - 1;
}

bool Polyhedron::contains(const RatVector& x) const {
    if (is_empty()) return false;
    for (const auto& e : data_->cone.equations.row_list())
        if (eval(e, x) != 0) return false;
    for (const auto& f : data_->finite_facets.row_list())
        if (eval(f, x) < 0) return false;
    return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
    if (other.is_empty()) return true;
    if (is_empty()) return false;
    for (const auto& v : other.vertices())
        if (!contains(v)) return false;
    for (const auto& e : data_->cone.equations.row_list()) {
        for (const auto& r : other.rays())
            if (eval_dir(e, r) != 0) return false;
        for (const auto& l : other.lineality())
            if (eval_dir(e, l) != 0) return false;
    }
    for (const auto& f : data_->cone.facets.row_list()) {
        for (const auto& r : other.rays())
            if (eval_dir(f, r) < 0) return false;
        for (const auto& l : other.lineality())
            if (eval_dir(f, l) != 0) return false;
    }
    return true;
}

RatVector Polyhedron::relative_interior_point() const {
    if (is_empty()) fail(ErrorKind::EmptyPolyhedron, "relative interior point of the empty set");
    const std::size_t D = ambient().dim();
    RatVector p(D);
    for (const auto& v : vertices())
        for (std::size_t i = 0; i < D; ++i) p[i] += v[i];
    const Rational k = static_cast<long>(vertices().size());
    for (auto& x : p) x /= k;
    for (const auto& r : rays())
        for (std::size_t i = 0; i < D; ++i) p[i] += r[i];
    return p;
}

IntMatrix Polyhedron::linear_equations() const {
    const std::size_t D = ambient().dim();
    IntMatrix A(D);
    for (const auto& e : data_->cone.equations.row_list()) A.append_row(IntVector(e.begin() + 1, e.end()));
    return A;
}

const IntMatrix& Polyhedron::lattice_basis() const {
    if (!data_->lattice) {
        if (is_empty()) fail(ErrorKind::EmptyPolyhedron, "lattice of the empty set");
        data_->lattice = integer_kernel(linear_equations());
    }
    return *data_->lattice;
}

const std::vector<std::vector<std::size_t>>& Polyhedron::face_generator_sets() const {
    if (data_->face_sets) return *data_->face_sets;
    const auto& R = data_->cone.rays;
    const auto& F = data_->cone.facets;
    const std::size_t g = R.rows();
    std::vector<std::vector<bool>> tight(F.rows(), std::vector<bool>(g));
    for (std::size_t f = 0; f < F.rows(); ++f)
        for (std::size_t i = 0; i < g; ++i) tight[f][i] = dot(F.row(f), R.row(i)) == 0;
    auto has_vertex = [&](const std::vector<std::size_t>& s) {
        for (auto i : s)
            if (R(i, 0) > 0) return true;
        return false;
    };
    std::vector<std::vector<std::size_t>> out;
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> top(g);
    for (std::size_t i = 0; i < g; ++i) top[i] = i;
    if (has_vertex(top)) {
        out.push_back(top);
        seen.insert(top);
    }
    for (std::size_t q = 0; q < out.size(); ++q) {
        const auto S = out[q];
        for (std::size_t f = 0; f < F.rows(); ++f) {
            std::vector<std::size_t> sub;
            for (auto i : S)
                if (tight[f][i]) sub.push_back(i);
            if (sub.size() == S.size() || !has_vertex(sub)) continue;
            std::vector<bool> closure(g, true);
            for (std::size_t h = 0; h < F.rows(); ++h) {
                bool all = true;
                for (auto i : sub)
                    if (!tight[h][i]) {
                        all = false;
                        break;
                    }
                if (!all) continue;
                for (std::size_t i = 0; i < g; ++i)
                    if (!tight[h][i]) closure[i] = false;
            }
            std::vector<std::size_t> c;
            for (std::size_t i = 0; i < g; ++i)
                if (closure[i]) c.push_back(i);
            if (seen.insert(c).second) out.push_back(c);
        }
    }
    data_->face_sets = std::move(out);
    return *data_->face_sets;
}

Polyhedron Polyhedron::face_from_generators(const std::vector<std::size_t>& idx) const {
    const std::size_t D = ambient().dim();
    IntMatrix R(D + 1);
    for (auto i : idx) R.append_row(data_->cone.rays.row(i));
    return from_homogeneous_generators(ambient(), R, data_->cone.lineality);
}

std::vector<Polyhedron> Polyhedron::faces(int k) const {
    std::vector<Polyhedron> out;
    if (is_empty()) return out;
    const std::size_t lin = data_->cone.lineality.rows();
    for (const auto& s : face_generator_sets()) {
        IntMatrix R(ambient().dim() + 1);
        for (auto i : s) R.append_row(data_->cone.rays.row(i));
        const int d = static_cast<int>(rank(R) + lin) - 1;
        if (k >= 0 && d != k) continue;
        out.push_back(face_from_generators(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Polyhedron> Polyhedron::facets() const {
    std::vector<Polyhedron> out;
    const auto& R = data_->cone.rays;
    for (const auto& f : data_->finite_facets.row_list()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < R.rows(); ++i)
            if (dot(f, R.row(i)) == 0) idx.push_back(i);
        out.push_back(face_from_generators(idx));
    }
    return out;
}

Polyhedron Polyhedron::face_min(const RatVector& u) const {
    if (is_empty()) fail(ErrorKind::EmptyPolyhedron, "face of the empty set");
    if (u.size() != ambient().dim()) fail(ErrorKind::DimensionMismatch, "functional has wrong length");
    for (const auto& l : lineality())
        if (dot(l, u) != 0) fail(ErrorKind::UnboundedDirection, "functional is unbounded below");
    for (const auto& r : rays())
        if (dot(r, u) < 0) fail(ErrorKind::UnboundedDirection, "functional is unbounded below");
    Rational best = dot(vertices()[0], u);
    for (const auto& v : vertices()) best = std::min(best, dot(v, u));
    std::vector<RatVector> V;
    std::vector<IntVector> Rs;
    for (const auto& v : vertices())
        if (dot(v, u) == best) V.push_back(v);
    for (const auto& r : rays())
        if (dot(r, u) == 0) Rs.push_back(r);
    return from_generators(ambient(), V, Rs, lineality());
}

Polyhedron Polyhedron::rebased(const AmbientSpace& amb) const {
    if (amb.dim() != ambient().dim()) fail(ErrorKind::DimensionMismatch, "rebased: dimension differs");
    Polyhedron p = *this;
    auto d = std::make_shared<Data>(*data_);
    d->ambient = amb;
    p.data_ = std::move(d);
    return p;
}

bool Polyhedron::operator==(const Polyhedron& o) const {
    if (data_ == o.data_) return true;
    return ambient() == o.ambient() && data_->cone.rays == o.data_->cone.rays &&
           data_->cone.lineality == o.data_->cone.lineality;
}

bool Polyhedron::operator<(const Polyhedron& o) const {
    return std::tie(ambient(), data_->cone.rays, data_->cone.lineality) <
           std::tie(o.ambient(), o.data_->cone.rays, o.data_->cone.lineality);
}

Polyhedron intersect(const Polyhedron& P, const Polyhedron& Q) {
    if (P.ambient() != Q.ambient()) fail(ErrorKind::AmbientMismatch, "intersect: ambient spaces differ");
    if (P.is_empty() || Q.is_empty()) return Polyhedron::empty(P.ambient());
    IntMatrix A = P.homogeneous().facets;
    A.append_rows(Q.homogeneous().facets);
    IntMatrix E = P.equations();
    E.append_rows(Q.equations());
    return Polyhedron::from_constraints(P.ambient(), A, E);
}

Polyhedron minkowski_sum(const Polyhedron& P, const Polyhedron& Q) {
    if (P.ambient() != Q.ambient()) fail(ErrorKind::AmbientMismatch, "minkowski_sum: ambient spaces differ");
    if (P.is_empty() || Q.is_empty()) return Polyhedron::empty(P.ambient());
    std::vector<RatVector> V;
    for (const auto& p : P.vertices())
        for (const auto& q : Q.vertices()) {
            RatVector s = p;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += q[i];
            V.push_back(std::move(s));
        }
    std::vector<IntVector> R = P.rays(), L = P.lineality();
    R.insert(R.end(), Q.rays().begin(), Q.rays().end());
    L.insert(L.end(), Q.lineality().begin(), Q.lineality().end());
    return Polyhedron::from_generators(P.ambient(), V, R, L);
}

Polyhedron reflect(const Polyhedron& P) {
    if (P.is_empty()) return P;
    std::vector<RatVector> V = P.vertices();
    std::vector<IntVector> R = P.rays();
    for (auto& v : V)
        for (auto& x : v) x = -x;
    for (auto& r : R)
        for (auto& x : r) x = -x;
    return Polyhedron::from_generators(P.ambient(), V, R, P.lineality());
}

Polyhedron translate(const Polyhedron& P, const RatVector& t) {
    if (P.is_empty()) return P;
    std::vector<RatVector> V = P.vertices();
    for (auto& v : V)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[i];
    return Polyhedron::from_generators(P.ambient(), V, P.rays(), P.lineality());
}

Polyhedron product(const Polyhedron& P, const Polyhedron& Q) {
    const std::size_t a = P.ambient().dim(), b = Q.ambient().dim();
    const AmbientSpace amb{a + b, false};
    if (P.is_empty() || Q.is_empty()) return Polyhedron::empty(amb);
    std::vector<RatVector> V;
    for (const auto& p : P.vertices())
        for (const auto& q : Q.vertices()) {
            RatVector s = p;
            s.insert(s.end(), q.begin(), q.end());
            V.push_back(std::move(s));
        }
    auto pad = [&](const IntVector& v, bool first) {
        IntVector r(a + b);
        std::copy(v.begin(), v.end(), r.begin() + (first ? 0 : static_cast<long>(a)));
        return r;
    };
    std::vector<IntVector> R, L;
    for (const auto& r : P.rays()) R.push_back(pad(r, true));
    for (const auto& r : Q.rays()) R.push_back(pad(r, false));
    for (const auto& l : P.lineality()) L.push_back(pad(l, true));
    for (const auto& l : Q.lineality()) L.push_back(pad(l, false));
    return Polyhedron::from_generators(amb, V, R, L);
}

namespace {

void pulling_triangulation(const Polyhedron& P, std::vector<std::vector<RatVector>>& out) {
    if (P.dim() == 0) {
        out.push_back({P.vertices()[0]});
        return;
    }
    const RatVector& apex = P.vertices()[0];
    for (const auto& F : P.facets()) {
        if (F.contains(apex)) continue;
        std::vector<std::vector<RatVector>> sub;
        pulling_triangulation(F, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

Rational rational_det(std::vector<RatVector> M) {
    const std::size_t n = M.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(M[p], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M[i][c] == 0) continue;
            const Rational f = M[i][c] / M[c][c];
            for (std::size_t k = c; k < n; ++k) M[i][k] -= f * M[c][k];
        }
    }
    return det;
}

}  // namespace

Rational normalized_volume(const Polyhedron& P) {
    if (P.is_empty()) return 0;
    if (!P.is_bounded()) fail(ErrorKind::Unbounded, "normalized_volume of an unbounded polyhedron");
    const int k = P.dim();
    if (k == 0) return 1;
    const IntMatrix& B = P.lattice_basis();
    std::vector<std::vector<RatVector>> simplices;
    pulling_triangulation(P, simplices);
    Rational total = 0;
    for (const auto& s : simplices) {
        std::vector<RatVector> M;
        const RatVector& base = s.back();
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            RatVector diff(base.size());
            for (std::size_t j = 0; j < base.size(); ++j) diff[j] = s[i][j] - base[j];
            RatVector coords;
            if (!solve_row_combination(B, diff, coords))
                fail(ErrorKind::InternalInconsistency, "normalized_volume: edge outside the affine span");
            M.push_back(std::move(coords));
        }
        total += abs(rational_det(std::move(M)));
    }
    return total;
}

int side_of(const Polyhedron& P, const IntVector& h) {
    bool pos = false, neg = false;
    for (const auto& v : P.vertices()) {
        const int s = sign(eval(h, v));
        pos |= s > 0;
        neg |= s < 0;
    }
    for (const auto& r : P.rays()) {
        const int s = sign(eval_dir(h, r));
        pos |= s > 0;
        neg |= s < 0;
    }
    for (const auto& l : P.lineality())
        if (eval_dir(h, l) != 0) pos = neg = true;
    if (pos && neg) return 0;
    if (pos) return 1;
    if (neg) return -1;
    return 2;
}

Polyhedron cut(const Polyhedron& P, const IntVector& h) {
    if (P.is_empty()) return P;
    IntMatrix A = P.homogeneous().facets;
    A.append_row(h);
    return Polyhedron::from_constraints(P.ambient(), A, P.equations());
}

IntMatrix LatticeMap::internal_matrix() const {
    if (matrix.rows() != target.n || matrix.cols() != source.n)
        fail(ErrorKind::DimensionMismatch, "lattice map has the wrong shape");
    if (source.quotient_all_ones) {
        IntVector ones(source.n, 1);
        const IntVector img = matrix.apply(ones);
        for (std::size_t i = 0; i < img.size(); ++i) {
            const bool ok = target.quotient_all_ones ? img[i] == img[0] : img[i] == 0;
            if (!ok) fail(ErrorKind::InvalidArgument, "lattice map is not well defined on the quotient");
        }
    }
    const std::size_t Ds = source.dim(), Dt = target.dim();
    IntMatrix H(Dt, Ds);
    for (std::size_t j = 0; j < Ds; ++j) {
        IntVector e(source.n);
        e[j] = 1;
        const IntVector img = target.to_internal(matrix.apply(e));
        for (std::size_t i = 0; i < Dt; ++i) H(i, j) = img[i];
    }
    return H;
}

Polyhedron image(const LatticeMap& h, const Polyhedron& P) {
    const IntMatrix H = h.internal_matrix();
    if (P.is_empty()) return Polyhedron::empty(h.target);
    std::vector<RatVector> V;
    for (const auto& v : P.vertices()) {
        RatVector w(H.rows());
        for (std::size_t i = 0; i < H.rows(); ++i) w[i] = dot(H.row(i), v);
        V.push_back(std::move(w));
    }
    std::vector<IntVector> R, L;
    for (const auto& r : P.rays()) R.push_back(H.apply(r));
    for (const auto& l : P.lineality()) L.push_back(H.apply(l));
    return Polyhedron::from_generators(h.target, V, R, L);
}

Polyhedron preimage(const LatticeMap& h, const Polyhedron& P) {
    const IntMatrix H = h.internal_matrix();
    const std::size_t Ds = h.source.dim();
    auto pull = [&](const IntMatrix& rows) {
        IntMatrix out(Ds + 1);
        for (const auto& r : rows.row_list()) {
            IntVector q(Ds + 1);
            q[0] = r[0];
            for (std::size_t j = 0; j < Ds; ++j)
                for (std::size_t i = 0; i < H.rows(); ++i) q[j + 1] += r[i + 1] * H(i, j);
            out.append_row(std::move(q));
        }
        return out;
    };
    if (P.is_empty()) return Polyhedron::empty(h.source);
    return Polyhedron::from_constraints(h.source, pull(P.homogeneous().facets), pull(P.equations()));
}

}  // namespace tropical
