#pragma once

// Sparse (Laurent-capable) polynomials over Q, gradings by finitely generated
// abelian groups, and the grading constructions: coarsening, lifting, trivial
// extension, weight data.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxring/abgroup.hpp"
#include "coxring/monoid.hpp"
#include "coxring/zlattice.hpp"

namespace coxring {

using Exponent = std::vector<long>;

enum class MonomialOrder { DegRevLex, Lex };

/// True iff a < b in the given order (degrevlex: total degree first, then the
/// smaller exponent in the last differing variable is larger).
bool monomial_less(MonomialOrder order, const Exponent& a, const Exponent& b);
MonomialOrder parse_monomial_order(std::string_view name);
std::string to_string(MonomialOrder order);

/// Variable names with per-variable invertibility. Exponents of invertible
/// variables may be negative.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, std::vector<bool> invertible);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool invertible(std::size_t i) const { return invertible_.at(i); }
  const std::vector<bool>& invertible_flags() const noexcept { return invertible_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool has_invertible() const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.invertible_ == b.invertible_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> invertible_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<bool> invertible = {});

class Poly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, Terms terms);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::size_t i);
  static Poly monomial(RingPtr ring, const Exponent& e, const Rational& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Largest exponent sum over the terms (0 for the zero polynomial).
  long total_degree() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);
  Poly pow(unsigned long n) const;

  /// Evaluation at a rational point; throws PointOffVariety when a negative
  /// power meets a zero coordinate.
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Ring homomorphism sending variable i to images[i] (polynomials over a
  /// common target ring). Negative exponents require single-term images.
  Poly map_to(const RingPtr& target, const std::vector<Poly>& images) const;

  /// Terms in descending order.
  std::vector<std::pair<Exponent, Rational>> sorted_terms(MonomialOrder order = MonomialOrder::DegRevLex) const;
  /// Text form, e.g. `3*T1^2*T2^-1 - 1/2*T3`, terms in descending degrevlex.
  std::string to_string(MonomialOrder order = MonomialOrder::DegRevLex) const;

 private:
  void check_same_ring(const Poly& other) const;

  RingPtr ring_;
  Terms terms_;
};

std::string format_rational(const Rational& q);

/// Parses the polynomial text format over `ring`. Accepts integer and
/// rational coefficients, `*`, `^` with signed integer exponents, and
/// parentheses. Negative exponents on non-invertible variables are rejected.
Poly parse_poly(const RingPtr& ring, std::string_view text);

struct Grading {
  FgAbelianGroup group;
  std::vector<IntVector> degrees;

  IntVector degree_of(const Exponent& e) const;
};

/// R[T]/I with a grading. Construction validates shapes only; call
/// check_homogeneous() (or use make_graded_algebra) to enforce that the
/// relations are homogeneous.
class GradedAlgebra {
 public:
  GradedAlgebra(RingPtr ring, Grading grading, std::vector<Poly> relations = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const Grading& grading() const noexcept { return grading_; }
  const std::vector<Poly>& relations() const noexcept { return relations_; }
  const FgAbelianGroup& group() const noexcept { return grading_.group; }

  bool relations_homogeneous() const;
  void check_homogeneous() const;

 private:
  RingPtr ring_;
  Grading grading_;
  std::vector<Poly> relations_;
};

GradedAlgebra make_graded_algebra(RingPtr ring, Grading grading, std::vector<Poly> relations = {});

/// Common degree (canonical representative) of all terms, or nullopt. The
/// zero polynomial reports degree 0.
std::optional<IntVector> homogeneity_check(const Grading& g, const Poly& f);

/// Homogeneous components keyed by canonical degree representative.
std::map<IntVector, Poly> homogeneous_components(const Grading& g, const Poly& f);

GradedAlgebra coarsen(const GradedAlgebra& a, const GroupHom& psi);
GradedAlgebra lift(const GradedAlgebra& a, const GroupHom& g, const std::vector<IntVector>& degree_choices);
GradedAlgebra trivial_extend(const GradedAlgebra& a, const GroupHom& embed);

struct WeightData {
  /// S(A) (generators in ambient coordinates of the grading group).
  AffineMonoid weight_monoid;
  /// Generators of K(A) inside the grading group, and its abstract type.
  std::vector<IntVector> weight_group_generators;
  FgAbelianGroup weight_group;
  /// ω(A) in free coordinates of the grading group; absent when the grading
  /// group has torsion.
  std::optional<RationalCone> weight_cone;
  bool exact = true;
  std::size_t degree_bound = 0;
};

/// Exact for relation-free algebras; with relations, S(A) is approximated by
/// the degrees of monomials of total degree <= degree_bound with nonzero
/// normal form.
WeightData weight_data(const GradedAlgebra& a, std::size_t degree_bound);

/// For relation-free (Laurent) polynomial rings: f is a unit iff it is a
/// nonzero scalar times a monomial in the invertible variables.
bool homogeneous_unit_check(const GradedAlgebra& a, const Poly& f);

/// Monomials (with nonnegative exponents, plus negative ones on invertible
/// variables) whose absolute exponent sum is between 1 and max_degree.
std::vector<Exponent> monomials_up_to(const PolyRing& ring, std::size_t max_degree);

}  // namespace coxring
