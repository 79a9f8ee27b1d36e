#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropical/error.hpp"

namespace tropical {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense integer matrix stored as a list of rows with a fixed column count.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t cols) : cols_(cols) {}
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::vector<IntVector> rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    IntVector& row(std::size_t i) { return rows_[i]; }
    const IntVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<IntVector>& row_list() const& { return rows_; }
    std::vector<IntVector> row_list() && { return std::move(rows_); }

    void append_row(IntVector r);
    void append_rows(const IntMatrix& other);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntVector apply(const IntVector& x) const;  // A x

    bool operator==(const IntMatrix& other) const = default;
    auto operator<=>(const IntMatrix& other) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<IntVector> rows_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
bool is_zero(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
int sign(const Integer& x);
int sign(const Rational& x);
Integer floor_div(const Integer& a, const Integer& b);

/// Scales v to a primitive integer vector in the same direction.
/// Throws ErrorKind::ZeroVector on the zero vector.
IntVector primitive_vector(const IntVector& v);
/// Like primitive_vector but maps zero to zero.
IntVector primitive_or_zero(IntVector v);
/// Smallest positive multiple of a rational vector that is integral.
IntVector clear_denominators(const RatVector& v);
RatVector to_rational(const IntVector& v);

struct HermiteResult {
    IntMatrix H;  // row-style Hermite normal form
    IntMatrix U;  // unimodular, H = U * A
};

/// Row-style HNF: H is in echelon form, pivots positive, entries above a pivot
/// reduced into [0, pivot). Zero rows come last.
HermiteResult hermite_normal_form(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

/// Basis (as rows) of the lattice {x in Z^c : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& A);
/// Primitive integer basis of the rational kernel {x : A x = 0}; not a lattice basis in general.
IntMatrix nullspace(const IntMatrix& A);
/// Lattice basis (HNF rows) of Z^c intersected with the rational row span of A.
IntMatrix saturation(const IntMatrix& A);
/// Index of the lattice generated by the rows of sub inside the lattice with basis sup.
/// Throws ErrorKind::RankMismatch when sub does not span a full-rank sublattice.
Integer lattice_index(const IntMatrix& sup, const IntMatrix& sub);

/// Reduced row echelon form scaled so every row is primitive with a positive pivot.
/// This is a canonical representative of the rational row space.
IntMatrix canonical_row_basis(const IntMatrix& A);
/// Eliminates the pivot columns of a canonical row basis from v and makes the result
/// primitive. The direction of v modulo the row space is preserved.
IntVector reduce_modulo(const IntVector& v, const IntMatrix& canonical_basis);
std::vector<std::size_t> pivot_columns(const IntMatrix& canonical_basis);

/// Solves c * A = v over the rationals (v a combination of rows of A).
/// Returns false when v is not in the row span.
bool solve_row_combination(const IntMatrix& A, const RatVector& v, RatVector& c);

Integer determinant(const IntMatrix& A);

/// Kernel of a rational matrix given row by row, returned as primitive integer rows.
IntMatrix rational_nullspace(const std::vector<RatVector>& rows, std::size_t cols);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& s);

}  // namespace tropical
