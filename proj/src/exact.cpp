#include "tropical/exact.hpp"

#include <algorithm>
#include <utility>

namespace tropical {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::MixedDimensions: return "MixedDimensions";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::UnboundedDirection: return "UnboundedDirection";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::EmptyPolyhedron: return "EmptyPolyhedron";
        case ErrorKind::GenericityFailure: return "GenericityFailure";
        case ErrorKind::NonGenericPoint: return "NonGenericPoint";
        case ErrorKind::NotBalanced: return "NotBalanced";
        case ErrorKind::NotEffective: return "NotEffective";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NotMatroidSubdivision: return "NotMatroidSubdivision";
        case ErrorKind::ImageNotInFan: return "ImageNotInFan";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, IntVector(cols)) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows, std::size_t cols)
    : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix row has wrong length");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::append_row(IntVector r) {
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix row has wrong length");
    rows_.push_back(std::move(r));
}

void IntMatrix::append_rows(const IntMatrix& other) {
    for (const auto& r : other.rows_) append_row(r);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows()) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix p(rows_.size(), other.cols());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (rows_[i][k] == 0) continue;
            for (std::size_t j = 0; j < other.cols(); ++j) p(i, j) += rows_[i][k] * other(k, j);
        }
    return p;
}

IntVector IntMatrix::apply(const IntVector& x) const {
    if (x.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    IntVector y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = dot(rows_[i], x);
    return y;
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        g = g == 0 ? Integer(abs(x)) : gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    Rational s = 0;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != 0) s += Rational(a[i]) * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

int sign(const Integer& x) { return x.sign(); }
int sign(const Rational& x) { return x.sign(); }

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

IntVector primitive_vector(const IntVector& v) {
    Integer g = content(v);
    if (g == 0) fail(ErrorKind::ZeroVector, "primitive_vector of the zero vector");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntVector primitive_or_zero(IntVector v) {
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

IntVector clear_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) {
        const Integer d = denominator(x);
        l = l / gcd(l, d) * d;
    }
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = numerator(v[i]) * (l / denominator(v[i]));
    return r;
}

RatVector to_rational(const IntVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

namespace {

void row_axpy(IntVector& target, const Integer& q, const IntVector& src) {
    if (q == 0) return;
    for (std::size_t k = 0; k < target.size(); ++k)
        if (src[k] != 0) target[k] -= q * src[k];
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t c = A.cols();
    std::vector<IntVector> H = A.row_list();
    std::vector<IntVector> U = IntMatrix::identity(m).row_list();
    std::size_t r = 0;
    for (std::size_t j = 0; j < c && r < m; ++j) {
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (H[i][j] != 0 && (best == m || abs(H[i][j]) < abs(H[best][j]))) best = i;
            if (best == m) break;
            std::swap(H[r], H[best]);
            std::swap(U[r], U[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H[i][j] == 0) continue;
                const Integer q = floor_div(H[i][j], H[r][j]);
                row_axpy(H[i], q, H[r]);
                row_axpy(U[i], q, U[r]);
                if (H[i][j] != 0) done = false;
            }
            if (done) break;
        }
        if (r >= m || H[r][j] == 0) continue;
        if (H[r][j] < 0) {
            for (auto& x : H[r]) x = -x;
            for (auto& x : U[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(H[i][j], H[r][j]);
            row_axpy(H[i], q, H[r]);
            row_axpy(U[i], q, U[r]);
        }
        ++r;
    }
    return {IntMatrix(std::move(H), c), IntMatrix(std::move(U), m)};
}

IntMatrix canonical_row_basis(const IntMatrix& A) {
    std::vector<IntVector> M;
    for (const auto& row : A.row_list())
        if (!is_zero(row)) M.push_back(primitive_or_zero(row));
    const std::size_t c = A.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < c && r < M.size(); ++j) {
        std::size_t piv = M.size();
        for (std::size_t i = r; i < M.size(); ++i)
            if (M[i][j] != 0 && (piv == M.size() || abs(M[i][j]) < abs(M[piv][j]))) piv = i;
        if (piv == M.size()) continue;
        std::swap(M[r], M[piv]);
        if (M[r][j] < 0)
            for (auto& x : M[r]) x = -x;
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][j] == 0) continue;
            const Integer g = gcd(M[r][j], M[i][j]);
            const Integer a = M[r][j] / g;
            const Integer b = M[i][j] / g;
            for (std::size_t k = 0; k < c; ++k) M[i][k] = a * M[i][k] - b * M[r][k];
            M[i] = primitive_or_zero(std::move(M[i]));
        }
        ++r;
    }
    M.resize(r);
    return IntMatrix(std::move(M), c);
}

std::vector<std::size_t> pivot_columns(const IntMatrix& B) {
    std::vector<std::size_t> piv;
    for (const auto& row : B.row_list()) {
        std::size_t j = 0;
        while (row[j] == 0) ++j;
        piv.push_back(j);
    }
    return piv;
}

IntVector reduce_modulo(const IntVector& v, const IntMatrix& B) {
    IntVector w = v;
    for (const auto& row : B.row_list()) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        if (w[p] == 0) continue;
        const Integer g = gcd(row[p], w[p]);
        const Integer a = row[p] / g;
        const Integer b = w[p] / g;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = a * w[k] - b * row[k];
    }
    return primitive_or_zero(std::move(w));
}

std::size_t rank(const IntMatrix& A) { return canonical_row_basis(A).rows(); }

IntMatrix nullspace(const IntMatrix& A) {
    const std::size_t c = A.cols();
    const IntMatrix B = canonical_row_basis(A);
    const auto piv = pivot_columns(B);
    std::vector<bool> is_pivot(c, false);
    for (auto p : piv) is_pivot[p] = true;
    IntMatrix K(c);
    for (std::size_t f = 0; f < c; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(c);
        x[f] = 1;
        for (std::size_t i = 0; i < B.rows(); ++i)
            x[piv[i]] = -Rational(B(i, f), B(i, piv[i]));
        K.append_row(primitive_vector(clear_denominators(x)));
    }
    return K;
}

IntMatrix integer_kernel(const IntMatrix& A) {
    const std::size_t c = A.cols();
    if (A.rows() == 0) return IntMatrix::identity(c);
    const HermiteResult h = hermite_normal_form(A.transpose());
    IntMatrix K(c);
    for (std::size_t i = 0; i < c; ++i)
        if (is_zero(h.H.row(i))) K.append_row(h.U.row(i));
    if (K.rows() == 0) return K;
    IntMatrix H = hermite_normal_form(K).H;
    IntMatrix out(c);
    for (const auto& row : H.row_list())
        if (!is_zero(row)) out.append_row(row);
    return out;
}

IntMatrix saturation(const IntMatrix& A) {
    const std::size_t c = A.cols();
    if (rank(A) == 0) return IntMatrix(c);
    return integer_kernel(nullspace(A));
}

bool solve_row_combination(const IntMatrix& A, const RatVector& v, RatVector& out) {
    // Gaussian elimination on the system A^T c = v.
    const std::size_t m = A.rows();
    const std::size_t c = A.cols();
    if (v.size() != c) fail(ErrorKind::DimensionMismatch, "solve: length mismatch");
    std::vector<RatVector> M(c, RatVector(m + 1));
    for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t i = 0; i < m; ++i) M[j][i] = A(i, j);
        M[j][m] = v[j];
    }
    std::vector<std::size_t> piv_col;
    std::size_t r = 0;
    for (std::size_t i = 0; i < m && r < c; ++i) {
        std::size_t p = r;
        while (p < c && M[p][i] == 0) ++p;
        if (p == c) continue;
        std::swap(M[r], M[p]);
        const Rational inv = 1 / M[r][i];
        for (std::size_t k = i; k <= m; ++k) M[r][k] *= inv;
        for (std::size_t q = 0; q < c; ++q) {
            if (q == r || M[q][i] == 0) continue;
            const Rational f = M[q][i];
            for (std::size_t k = i; k <= m; ++k) M[q][k] -= f * M[r][k];
        }
        piv_col.push_back(i);
        ++r;
    }
    for (std::size_t q = r; q < c; ++q)
        if (M[q][m] != 0) return false;
    out.assign(m, Rational(0));
    for (std::size_t k = 0; k < r; ++k) out[piv_col[k]] = M[k][m];
    return true;
}

Integer lattice_index(const IntMatrix& sup, const IntMatrix& sub) {
    const std::size_t k = sup.rows();
    if (rank(sup) != k) fail(ErrorKind::RankMismatch, "lattice_index: basis is not independent");
    IntMatrix C(k);
    for (const auto& row : sub.row_list()) {
        RatVector coords;
        if (!solve_row_combination(sup, to_rational(row), coords))
            fail(ErrorKind::RankMismatch, "lattice_index: vector outside the lattice span");
        IntVector ic(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (denominator(coords[i]) != 1)
                fail(ErrorKind::InvalidArgument, "lattice_index: vector outside the lattice");
            ic[i] = numerator(coords[i]);
        }
        C.append_row(std::move(ic));
    }
    if (k == 0) return 1;
    const IntMatrix H = hermite_normal_form(C).H;
    Integer idx = 1;
    std::size_t r = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (r >= H.rows() || H(r, j) == 0)
            fail(ErrorKind::RankMismatch, "lattice_index: sublattice has lower rank");
        idx *= H(r, j);
        ++r;
    }
    return idx;
}

Integer determinant(const IntMatrix& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0) return 1;
    std::vector<IntVector> M = A.row_list();
    Integer prev = 1;
    int s = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && M[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(M[k], M[p]);
            s = -s;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return s * M[n - 1][n - 1];
}

IntMatrix rational_nullspace(const std::vector<RatVector>& rows, std::size_t cols) {
    IntMatrix A(cols);
    for (const auto& r : rows) A.append_row(clear_denominators(r));
    return nullspace(A);
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

Integer parse_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) fail(ErrorKind::InvalidArgument, "malformed integer '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') fail(ErrorKind::InvalidArgument, "malformed integer '" + s + "'");
    Integer v(s.substr(i));
    return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
    return Rational(num, den);
}

}  // namespace tropical
