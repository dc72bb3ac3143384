#pragma once

// Buchberger's algorithm over Q with normal forms, (radical) ideal
// membership, homogeneity of ideals and relation-driven elimination of
// generators.

#include <map>
#include <string>
#include <vector>

#include "coxring/polyring.hpp"

namespace coxring {

/// Reduced Groebner basis. Invertible variables x are compiled away by
/// adjoining a variable x~ with the relation x·x~ - 1; basis() reports the
/// elements translated back to Laurent form.
class GroebnerBasis {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  MonomialOrder order() const noexcept { return order_; }
  /// Monic reduced basis, sorted by ascending leading monomial.
  const std::vector<Poly>& basis() const noexcept { return basis_; }
  bool is_unit_ideal() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

 private:
  friend GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& generators, MonomialOrder order);

  RingPtr ring_;
  MonomialOrder order_ = MonomialOrder::DegRevLex;
  RingPtr extended_;
  std::vector<Poly> extended_basis_;
  std::vector<Poly> basis_;
};

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& generators,
                         MonomialOrder order = MonomialOrder::DegRevLex);
Poly normal_form(const GroebnerBasis& g, const Poly& f);

/// Rabinowitsch test: 1 ∈ <generators, 1 - t·f>.
bool radical_member(const RingPtr& ring, const std::vector<Poly>& generators, const Poly& f);

bool ideal_homogeneous(const Grading& g, const RingPtr& ring, const std::vector<Poly>& generators);

/// Result of a presentation simplification: the new algebra and, for every
/// variable of the input ring, its image in the new ring.
struct Elimination {
  GradedAlgebra algebra;
  std::map<std::string, Poly> images;
  std::vector<std::string> notes;
};

/// Removes invertible variables through relations of the form c·(1 - u·m)
/// with m a monomial in invertible variables. A removed variable must have
/// degree zero in the grading group (GradingObstruction otherwise).
Elimination eliminate_unit_relations(const GradedAlgebra& a);

/// Removes non-invertible variables x through relations c·x + p with x not
/// occurring in p (a Tietze move on the presentation).
Elimination eliminate_redundant_generators(const GradedAlgebra& a);

}  // namespace coxring
