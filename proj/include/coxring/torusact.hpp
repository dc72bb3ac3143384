#pragma once

// Orbits of the quasitorus Spec K[K] acting on Spec A through a K-grading.

#include <vector>

#include "coxring/polyring.hpp"

namespace coxring {

struct AffinePoint {
  std::vector<Rational> coordinates;
};

/// Throws PointOffVariety unless x has one coordinate per variable, nonzero
/// coordinates at invertible variables and satisfies the relations.
void check_point(const GradedAlgebra& a, const AffinePoint& x);

struct OrbitData {
  /// S_x, generated by canonical degree representatives.
  AffineMonoid orbit_monoid;
  /// Generators of K_x inside K (the same as those of S_x) and its type.
  std::vector<IntVector> orbit_group_generators;
  FgAbelianGroup orbit_group;
  /// K / K_x, the character group of the isotropy group.
  FgAbelianGroup isotropy;
  GroupHom isotropy_projection;
  bool orbit_closed = false;
  /// False when S_x comes from the monomial probe (algebras with relations).
  bool exact = true;
  std::size_t probe_bound = 0;
};

OrbitData orbit_data(const GradedAlgebra& a, const AffinePoint& x, std::size_t probe_bound);

/// Whether the monoid generated by `generators` in K is a group. Exact: this
/// holds iff the image of the cone in K/torsion is a linear subspace.
bool monoid_is_group(const FgAbelianGroup& k, const std::vector<IntVector>& generators);

/// K(A) = K, i.e. the generator degrees generate the grading group.
bool is_effective(const GradedAlgebra& a);

/// Orbit data of the generic orbit of a relation-free A: S(A) and K(A).
OrbitData generic_orbit(const GradedAlgebra& a);

}  // namespace coxring
