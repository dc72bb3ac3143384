#pragma once

// Generators of Veronese subalgebras A(L), invariant rings of coarsened
// gradings and degree-zero parts of localizations A_(f).

#include <string>
#include <vector>

#include "coxring/polyring.hpp"

namespace coxring {

/// One generator: a product of algebra generators T^exponents, divided by
/// f^f_power for degree-zero parts.
struct SubalgebraGenerator {
  Exponent exponents;
  long f_power = 0;
  /// Expanded numerator T^exponents.
  Poly value;
  IntVector degree;
  /// The Hilbert-basis element that produced the generator.
  IntVector source;
};

struct SubalgebraGens {
  RingPtr ring;
  std::vector<SubalgebraGenerator> generators;
  /// Set for degree-zero parts: the localized element f.
  std::optional<Poly> denominator;

  /// Product form `T1^2*T2` (or `T1^2/(f)^l`), or the expanded polynomial.
  std::string describe(std::size_t i, bool expand = false) const;
};

/// A(L) for a free grading group K and a saturated monoid L ⊆ K, given in
/// ambient coordinates of K. Invertible variables contribute both T and T^-1.
SubalgebraGens veronese_generators(const GradedAlgebra& a, const AffineMonoid& l);

/// A^H = A(ker ψ) for ψ with source the (free) grading group.
SubalgebraGens invariant_ring(const GradedAlgebra& a, const GroupHom& psi);

/// Generators h/f^l of (A_f)_0 for a Z-graded A with nonnegative degrees and f
/// homogeneous of positive degree.
SubalgebraGens degree_zero_part(const GradedAlgebra& a, const Poly& f);

}  // namespace coxring
