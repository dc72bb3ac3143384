#pragma once

// The non-separated curves P1(A,n): the projective line with the point a_i
// replaced by n_i copies a_i1, ..., a_in_i. Divisors, sections of divisorial
// sheaves and the Cox ring presentation with trinomial relations.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coxring/cox.hpp"

namespace coxring {

/// A point [b, c] of P^1, normalized to a primitive pair with first nonzero
/// entry positive.
struct P1Point {
  long b = 0;
  long c = 0;
  auto operator<=>(const P1Point&) const = default;
};

P1Point normalize_point(long b, long c);

/// The point a_ij (0-based sheet index i, 1-based copy index j).
struct MarkedPoint {
  std::size_t i = 0;
  std::size_t j = 0;
  auto operator<=>(const MarkedPoint&) const = default;
};

/// A marked point a_ij or an unmarked point of P^1.
using PointId = std::variant<MarkedPoint, P1Point>;

struct CurveDivisor {
  std::map<PointId, Int> coefficients;

  Int coefficient(const PointId& p) const;
  bool is_effective() const;
  friend CurveDivisor operator+(const CurveDivisor& a, const CurveDivisor& b);
  friend CurveDivisor operator-(const CurveDivisor& a, const CurveDivisor& b);
  friend bool operator==(const CurveDivisor&, const CurveDivisor&) = default;
};

class CurveModel {
 public:
  CurveModel(const std::vector<std::pair<long, long>>& points, std::vector<std::size_t> multiplicities);

  std::size_t r() const noexcept { return points_.size() - 1; }
  const std::vector<P1Point>& points() const noexcept { return points_; }
  const std::vector<std::size_t>& multiplicities() const noexcept { return multiplicities_; }
  std::size_t multiplicity(std::size_t i) const { return multiplicities_.at(i); }
  /// Index of the marked base point p, if any.
  std::optional<std::size_t> marked_index(const P1Point& p) const;
  /// π^*(p): the fibre over p as a divisor.
  CurveDivisor pullback(const P1Point& p) const;
  /// Rejects unmarked ids that lie over a marked point and out-of-range ids.
  void check_point(const PointId& p) const;

  /// Basis of Cl: a_0j for all j, a_ij for i >= 1 and j < n_i.
  const std::vector<MarkedPoint>& class_basis() const noexcept { return basis_; }
  std::optional<std::size_t> basis_index(const MarkedPoint& p) const;

 private:
  std::vector<P1Point> points_;
  std::vector<std::size_t> multiplicities_;
  std::vector<MarkedPoint> basis_;
};

std::string to_string(const PointId& p);

/// scalar · Π (b·w - c·z)^e over the factors; exponents sum to zero.
struct RationalFn {
  Rational scalar = 1;
  std::map<P1Point, long> factors;

  /// Throws InvalidInput when the scalar is zero or the degree is not zero.
  void check() const;
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  RationalFn inverse() const;
  std::string to_string() const;
  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

RationalFn make_rational_fn(const Rational& scalar, const std::vector<std::pair<P1Point, long>>& factors);

/// Principal divisor of f on P1(A,n).
CurveDivisor principal_divisor(const CurveModel& x, const RationalFn& f);

/// An element of Γ(X, S_D) for D in the class-group basis subgroup K.
struct GradedSection {
  /// Coordinates of D in CurveModel::class_basis().
  IntVector degree;
  RationalFn function;

  friend GradedSection operator*(const GradedSection& a, const GradedSection& b);
};

struct ClassGroup {
  FgAbelianGroup group;
  std::vector<MarkedPoint> basis;
  std::vector<std::string> labels;
};

ClassGroup class_group(const CurveModel& x);

/// The class of a divisor in coordinates of the class-group basis.
IntVector divisor_class(const CurveModel& x, const CurveDivisor& d);
/// The divisor D ∈ K with the given basis coordinates.
CurveDivisor basis_divisor(const CurveModel& x, const IntVector& degree);

/// A function with div = D when D is principal.
std::optional<RationalFn> principal_test(const CurveModel& x, const CurveDivisor& d);

/// div_D(f) = div(f) + D; throws NotEffective when negative somewhere.
CurveDivisor div_d(const CurveModel& x, const GradedSection& s);

/// div_D(f) ≤ div_E(g).
bool divides(const CurveModel& x, const GradedSection& f, const GradedSection& g);

bool is_prime_section(const CurveModel& x, const GradedSection& f);

/// T_ij: the canonical section 1 of a_ij for basis points, and
/// π^*S_i (T_i1 ⋯ T_i,n_i-1)^-1 for j = n_i, i >= 1.
GradedSection canonical_section(const CurveModel& x, std::size_t i, std::size_t j);

/// π^*(S): the pullback of (b·w - c·z)/(b_0·w - c_0·z), a section of
/// degree a_01 + ... + a_0n_0.
GradedSection pullback_section(const CurveModel& x, const P1Point& p);

/// Π T_ij^e over the variables in presentation order.
GradedSection monomial_section(const CurveModel& x, const Exponent& e);

/// Variable name of T_ij in the presentation.
std::string section_variable(std::size_t i, std::size_t j);

CoxPresentation cox_presentation(const CurveModel& x);

}  // namespace coxring
