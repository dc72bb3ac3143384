#pragma once

// Finitely generated abelian groups given by presentations Z^r / <relators>,
// homomorphisms between them, and the quasitorus shape of a group.

#include <cstddef>
#include <utility>
#include <vector>

#include "coxring/zlattice.hpp"

namespace coxring {

/// Cokernel of an integer matrix: elements are residues of Z^r vectors modulo
/// the lattice spanned by the relator columns.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  /// `relators` are vectors of length `ambient_rank`.
  FgAbelianGroup(std::size_t ambient_rank, std::vector<IntVector> relators);

  static FgAbelianGroup free(std::size_t rank);
  /// Z/n (Z for n = 0).
  static FgAbelianGroup cyclic(long n);
  /// Z^torus_rank ⊕ Z/a1 ⊕ ... in the obvious coordinates.
  static FgAbelianGroup from_invariants(std::size_t torus_rank, const std::vector<Int>& finite_factors);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<IntVector>& relators() const noexcept { return relators_; }
  /// Relator columns as an ambient_rank × k matrix.
  IntMatrix relation_matrix() const;

  bool element_eq(const IntVector& u, const IntVector& v) const;
  bool is_zero_element(const IntVector& v) const;
  /// Canonical coset representative; equal elements give equal vectors.
  IntVector canonical(const IntVector& v) const;
  IntVector zero() const { return zero_vector(ambient_rank_); }

  /// Free rank of the group.
  std::size_t rank() const;
  /// Invariant factors > 1 in divisibility order.
  std::vector<Int> torsion_factors() const;
  bool is_free() const { return torsion_factors().empty(); }
  bool is_trivial() const;

  void check_element(const IntVector& v) const;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> relators_;
  IntMatrix relation_hnf_;
};

/// Homomorphism induced by a matrix Z^r -> Z^r' on ambient lattices.
class GroupHom {
 public:
  GroupHom() = default;
  /// Throws InvalidInput when the matrix does not map the source relation
  /// lattice into the target relation lattice.
  GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

  static GroupHom identity(const FgAbelianGroup& g);
  static GroupHom zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

  const FgAbelianGroup& source() const noexcept { return source_; }
  const FgAbelianGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector apply(const IntVector& v) const;
  bool is_surjective() const;
  bool is_injective() const;
  /// Ambient vectors generating the kernel (as a subgroup of the source).
  std::vector<IntVector> kernel_generators() const;

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  IntMatrix matrix_;
};

/// C(a_1) × ... × C(a_s) × T^{torus_rank}, recorded by its character data.
struct QuasitorusShape {
  std::size_t torus_rank = 0;
  std::vector<Int> finite_factors;

  friend bool operator==(const QuasitorusShape&, const QuasitorusShape&) = default;
};

/// G / <generators> together with the projection G -> G / <generators>.
std::pair<FgAbelianGroup, GroupHom> quotient(const FgAbelianGroup& g, const std::vector<IntVector>& generators);

QuasitorusShape quasitorus_shape(const FgAbelianGroup& g);

/// The group of characters of the quasitorus with the given shape, presented
/// in standard coordinates. quasitorus_shape(group_from_shape(s)) == s.
FgAbelianGroup group_from_shape(const QuasitorusShape& shape);

/// Splitting G ≅ Z^free_rank ⊕ torsion read off a Smith decomposition.
struct FreeTorsionSplit {
  std::size_t free_rank = 0;
  /// Presented as Z^k / diag(torsion factors).
  FgAbelianGroup torsion;
  /// free_rank × ambient matrix: the projection G -> Z^free_rank.
  IntMatrix free_projection;
  /// k × ambient matrix: the projection G -> torsion (coordinates mod factors).
  IntMatrix torsion_projection;
  /// ambient × free_rank matrix: a section Z^free_rank -> G of the projection.
  IntMatrix free_section;
};

FreeTorsionSplit free_torsion_split(const FgAbelianGroup& g);

/// Abstract isomorphism type of the subgroup of G generated by `generators`,
/// presented on those generators.
FgAbelianGroup subgroup_presentation(const FgAbelianGroup& g, const std::vector<IntVector>& generators);

}  // namespace coxring
