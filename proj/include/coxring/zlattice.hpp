#pragma once

// Exact integer (and rational) matrix algorithms: Hermite and Smith normal
// forms, integer kernels, and a few rational helpers used by the cone code.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coxring {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

IntVector make_vector(std::initializer_list<long> values);
IntVector zero_vector(std::size_t n);
bool is_zero(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Int& s, const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);
/// gcd of all entries (0 for the zero vector).
Int content(const IntVector& v);
/// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
std::string to_string(const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  /// Builds a matrix whose columns are the given vectors (each of length `rows`).
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;
  IntMatrix transpose() const;
  /// Horizontal concatenation [*this | other].
  IntMatrix hconcat(const IntMatrix& other) const;

  IntVector operator*(const IntVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations; used by the normal-form algorithms.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row(target) += factor * row(source)
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  /// col(target) += factor * col(source)
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// H = A·V with V unimodular.
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix V;
  std::size_t rank = 0;
  /// pivot_rows[k] is the row of the pivot of column k, for k < rank.
  std::vector<std::size_t> pivot_rows;
};

/// U·A·V = D with U, V unimodular and D diagonal with d1 | d2 | ... and
/// zeros trailing.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Int> diagonal() const;
};

/// Column-style Hermite normal form with its transform.
///
/// Convention: H is in lower column-echelon form. The first `rank` columns
/// carry pivots in strictly increasing rows, pivots are positive, entries
/// above a pivot are zero, and entries in a pivot row to the left of the pivot
/// lie in [0, pivot). The remaining columns are zero.
HermiteDecomposition hnf_with_transform(const IntMatrix& a);
IntMatrix hnf(const IntMatrix& a);
SmithDecomposition snf(const IntMatrix& a);

/// Z-basis of {v : A·v = 0}, returned in canonical (Hermite) form so that the
/// result depends only on the kernel lattice.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Canonical Z-basis of the lattice spanned by the given vectors in Z^n.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t n);

/// Z-basis of the saturation span(generators) ∩ Z^n.
std::vector<IntVector> saturation_basis(const std::vector<IntVector>& generators, std::size_t n);

/// Z-basis of the intersection of the lattices spanned by two generator sets.
std::vector<IntVector> lattice_intersection(const std::vector<IntVector>& a,
                                            const std::vector<IntVector>& b, std::size_t n);

Int determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

/// Integer coefficients c with hnf_basis·c = v, or nullopt when v is not in
/// the lattice. `basis` must be a column HNF as produced by hnf().
std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& v);

/// Canonical representative of v modulo the column lattice of `basis` (which
/// must be in HNF): pivot-row entries are reduced into [0, pivot).
IntVector reduce_modulo(const IntMatrix& basis, const IntVector& v);

/// Exact rational solution of B·x = v for B with independent columns.
std::optional<RatVector> solve_rational(const IntMatrix& b, const IntVector& v);

}  // namespace coxring
