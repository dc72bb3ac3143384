#pragma once

// Affine monoids and rational polyhedral cones in Z^r: weight cones, Hilbert
// bases, bounded membership, intersections and preimages.

#include <cstddef>
#include <optional>
#include <vector>

#include "coxring/abgroup.hpp"
#include "coxring/zlattice.hpp"

namespace coxring {

/// Finitely generated submonoid of Z^r. Zero and duplicate generators are
/// dropped on construction; the order of first occurrence is kept.
class AffineMonoid {
 public:
  AffineMonoid() = default;
  AffineMonoid(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> generators_;
};

/// Convex cone generated by primitive integer rays. For non-pointed cones the
/// rays are an irredundant generating set and `pointed` is false.
struct RationalCone {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> rays;
  bool pointed = true;
};

/// Makes the rays primitive and drops redundant ones.
RationalCone cone_from_generators(std::size_t ambient_rank, const std::vector<IntVector>& generators);
RationalCone weight_cone(const AffineMonoid& m);

/// Membership of x in the cone generated by `generators` (exact).
bool in_cone(const std::vector<IntVector>& generators, const IntVector& x, std::size_t ambient_rank);

/// Unique minimal generating set of C ∩ Z^r, sorted lexicographically.
/// Throws NonPointedCone when C contains a line.
std::vector<IntVector> hilbert_basis(const RationalCone& c);

/// Hilbert basis of the monoid cone(rays) ∩ Λ for a sublattice Λ ⊆ Z^r given
/// by a basis; the cone must lie in the span of Λ.
std::vector<IntVector> hilbert_basis_in_lattice(const std::vector<IntVector>& rays,
                                                const std::vector<IntVector>& lattice_basis,
                                                std::size_t ambient_rank);

/// Extreme rays of the pointed cone {y ∈ Q^dim : a·y >= 0 for all a}.
/// Throws NonPointedCone when the cone contains a line.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Inequalities a·x >= 0 (together with pairs ±e for the equations of the
/// linear span) cutting out the cone generated by `generators` in Q^r.
std::vector<IntVector> cone_inequalities(const std::vector<IntVector>& generators, std::size_t ambient_rank);

/// True iff v is a nonnegative integer combination of the generators with
/// coefficient sum at most `bound`.
bool member(const AffineMonoid& m, const IntVector& v, std::size_t bound);

/// Coefficient-sum bound that makes member() exact for v, available when the
/// cone of m is pointed.
std::optional<std::size_t> sufficient_member_bound(const AffineMonoid& m, const IntVector& v);

/// As member(), with equality taken in the group g (handles torsion).
bool member_in_group(const FgAbelianGroup& g, const std::vector<IntVector>& generators, const IntVector& v,
                     std::size_t bound);

/// 2 · r · (max generator L1 norm); heuristic, see is_group().
std::size_t default_group_bound(const AffineMonoid& m);

/// True iff -g ∈ M for every generator g, decided by member() with `bound`
/// (default_group_bound when not given).
bool is_group(const AffineMonoid& m, std::optional<std::size_t> bound = std::nullopt);
bool is_group_in(const FgAbelianGroup& g, const std::vector<IntVector>& generators,
                 std::optional<std::size_t> bound = std::nullopt);

/// Whether M equals cone(M) ∩ lattice(M). Exact for pointed cones and for
/// groups; other non-pointed monoids are rejected with InvalidInput.
bool is_saturated(const AffineMonoid& m);

/// L ∩ M for monoids saturated in the lattices they generate.
/// Throws UnsaturatedInput otherwise.
AffineMonoid intersect(const AffineMonoid& l, const AffineMonoid& m);

/// α⁻¹(L) for α: Z^r -> Z^r' given by `alpha`, following the recipe
/// "supplied preimages v_i of the generators w_i, plus ± a kernel basis".
/// Throws PreimageMissing when a generator has no (correct) preimage.
AffineMonoid preimage_monoid(const IntMatrix& alpha, const AffineMonoid& l, const std::vector<IntVector>& preimages);

}  // namespace coxring
