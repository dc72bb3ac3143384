#include "coxring/zlattice.hpp"

#include <algorithm>
#include <sstream>

#include "coxring/error.hpp"

namespace coxring {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Int(0)); }

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

namespace {
void require_same_size(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vectors of length " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
}
}  // namespace

IntVector operator+(const IntVector& a, const IntVector& b) {
  require_same_size(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_size(a, b);
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector operator*(const Int& s, const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  require_same_size(a, b);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(const IntVector& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<long>(i * cols_),
                   data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> cs;
  cs.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
  return cs;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw DimensionMismatch("hconcat with different row counts");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
                            std::to_string(v.size()));
  }
  IntVector r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j).get_str();
    }
    os << "]";
  }
  return os << "]";
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteDecomposition hnf_with_transform(const IntMatrix& a) {
  HermiteDecomposition out{a, IntMatrix::identity(a.cols()), 0, {}};
  IntMatrix& h = out.H;
  IntMatrix& v = out.V;
  const std::size_t n = a.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows() && c < n; ++i) {
    bool has_pivot = false;
    while (true) {
      // smallest nonzero entry of row i among columns c..n-1
      std::size_t best = n;
      for (std::size_t k = c; k < n; ++k) {
        if (h(i, k) != 0 && (best == n || abs(h(i, k)) < abs(h(i, best)))) best = k;
      }
      if (best == n) break;
      has_pivot = true;
      h.swap_cols(c, best);
      v.swap_cols(c, best);
      bool clean = true;
      for (std::size_t k = c + 1; k < n; ++k) {
        if (h(i, k) == 0) continue;
        Int q = trunc_div(h(i, k), h(i, c));
        h.add_col_multiple(k, c, -q);
        v.add_col_multiple(k, c, -q);
        if (h(i, k) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (h(i, c) < 0) {
      h.negate_col(c);
      v.negate_col(c);
    }
    for (std::size_t k = 0; k < c; ++k) {
      Int q = floor_div(h(i, k), h(i, c));
      h.add_col_multiple(k, c, -q);
      v.add_col_multiple(k, c, -q);
    }
    out.pivot_rows.push_back(i);
    ++c;
  }
  out.rank = c;
  return out;
}

IntMatrix hnf(const IntMatrix& a) { return hnf_with_transform(a).H; }

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return s;  // remaining block is zero
      d.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = trunc_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pull an offending row into row t and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, Int(1));
            s.U.add_row_multiple(t, i, Int(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t n) {
  if (generators.empty()) return {};
  auto h = hnf_with_transform(IntMatrix::from_columns(generators, n));
  std::vector<IntVector> basis;
  for (std::size_t k = 0; k < h.rank; ++k) basis.push_back(h.H.column(k));
  return basis;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  auto h = hnf_with_transform(a);
  std::vector<IntVector> raw;
  for (std::size_t k = h.rank; k < a.cols(); ++k) raw.push_back(h.V.column(k));
  return lattice_basis(raw, a.cols());
}

std::vector<IntVector> saturation_basis(const std::vector<IntVector>& generators, std::size_t n) {
  if (generators.empty()) return {};
  auto orth = kernel_basis(IntMatrix::from_rows(generators, n));
  if (orth.empty()) {
    return IntMatrix::identity(n).columns();
  }
  return kernel_basis(IntMatrix::from_rows(orth, n));
}

std::vector<IntVector> lattice_intersection(const std::vector<IntVector>& a,
                                            const std::vector<IntVector>& b, std::size_t n) {
  auto ba = lattice_basis(a, n);
  auto bb = lattice_basis(b, n);
  if (ba.empty() || bb.empty()) return {};
  IntMatrix ma = IntMatrix::from_columns(ba, n);
  IntMatrix mb = IntMatrix::from_columns(bb, n);
  for (std::size_t j = 0; j < mb.cols(); ++j) mb.negate_col(j);
  auto ker = kernel_basis(ma.hconcat(mb));
  std::vector<IntVector> images;
  for (const auto& k : ker) {
    IntVector x(k.begin(), k.begin() + static_cast<long>(ba.size()));
    images.push_back(ma * x);
  }
  return lattice_basis(images, n);
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) { return hnf_with_transform(a).rank; }

namespace {

template <bool Exact>
std::optional<IntVector> reduce_against(const IntMatrix& basis, IntVector residual, IntVector* coeffs) {
  if (residual.size() != basis.rows()) throw DimensionMismatch("vector length differs from lattice ambient rank");
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    std::size_t p = 0;
    while (p < basis.rows() && basis(p, k) == 0) ++p;
    if (p == basis.rows()) break;  // zero columns trail the echelon part
    Int q;
    if constexpr (Exact) {
      if (residual[p] % basis(p, k) != 0) return std::nullopt;
      q = residual[p] / basis(p, k);
    } else {
      q = floor_div(residual[p], basis(p, k));
    }
    if (q != 0)
      for (std::size_t i = 0; i < basis.rows(); ++i) residual[i] -= q * basis(i, k);
    if (coeffs) (*coeffs)[k] = q;
  }
  if constexpr (Exact) {
    if (!is_zero(residual)) return std::nullopt;
  }
  return residual;
}

}  // namespace

std::optional<IntVector> solve_in_lattice(const IntMatrix& basis, const IntVector& v) {
  IntVector coeffs = zero_vector(basis.cols());
  if (!reduce_against<true>(basis, v, &coeffs)) return std::nullopt;
  return coeffs;
}

IntVector reduce_modulo(const IntMatrix& basis, const IntVector& v) {
  return *reduce_against<false>(basis, v, nullptr);
}

std::optional<RatVector> solve_rational(const IntMatrix& b, const IntVector& v) {
  const std::size_t m = b.rows();
  const std::size_t k = b.cols();
  if (v.size() != m) throw DimensionMismatch("right-hand side length differs from row count");
  std::vector<RatVector> aug(m, RatVector(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = b(i, j);
    aug[i][k] = v[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < k && r < m; ++j) {
    std::size_t p = r;
    while (p < m && aug[p][j] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][j] == 0) continue;
      Rational f = aug[i][j] / aug[r][j];
      for (std::size_t c = j; c <= k; ++c) aug[i][c] -= f * aug[r][c];
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  if (r < k) throw InvalidInput("solve_rational requires linearly independent columns");
  RatVector x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][k] / aug[i][pivot_col[i]];
  return x;
}

}  // namespace coxring
