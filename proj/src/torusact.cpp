#include "coxring/torusact.hpp"

#include <algorithm>

#include "coxring/error.hpp"

namespace coxring {

namespace {

Int l1_norm(const IntVector& v) {
  Int n = 0;
  for (const auto& c : v) n += abs(c);
  return n;
}

OrbitData from_degrees(const GradedAlgebra& a, std::vector<IntVector> degrees, bool exact, std::size_t bound) {
  const auto& k = a.group();
  std::vector<IntVector> nonzero;
  for (const auto& d : degrees) {
    auto c = k.canonical(d);
    if (!k.is_zero_element(c)) nonzero.push_back(c);
  }
  std::sort(nonzero.begin(), nonzero.end());
  nonzero.erase(std::unique(nonzero.begin(), nonzero.end()), nonzero.end());
  if (!exact) {
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [](const IntVector& x, const IntVector& y) { return l1_norm(x) < l1_norm(y); });
    std::vector<IntVector> kept;
    for (const auto& d : nonzero) {
      if (!kept.empty() && member_in_group(k, kept, d, bound)) continue;
      kept.push_back(d);
    }
    std::sort(kept.begin(), kept.end());
    nonzero = kept;
  }
  OrbitData out;
  out.orbit_monoid = AffineMonoid(k.ambient_rank(), nonzero);
  out.orbit_group_generators = nonzero;
  out.orbit_group = subgroup_presentation(k, nonzero);
  auto [iso, proj] = quotient(k, nonzero);
  out.isotropy = iso;
  out.isotropy_projection = proj;
  out.orbit_closed = monoid_is_group(k, nonzero);
  out.exact = exact;
  out.probe_bound = bound;
  return out;
}

}  // namespace

void check_point(const GradedAlgebra& a, const AffinePoint& x) {
  const auto& ring = *a.ring();
  if (x.coordinates.size() != ring.num_vars()) {
    throw PointOffVariety("point has " + std::to_string(x.coordinates.size()) + " coordinates, expected " +
                          std::to_string(ring.num_vars()));
  }
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (ring.invertible(i) && x.coordinates[i] == 0) {
      throw PointOffVariety("invertible variable " + ring.name(i) + " vanishes at the point");
    }
  }
  for (const auto& rel : a.relations()) {
    if (rel.evaluate(x.coordinates) != 0) throw PointOffVariety("relation " + rel.to_string() + " does not vanish");
  }
}

bool monoid_is_group(const FgAbelianGroup& k, const std::vector<IntVector>& generators) {
  auto split = free_torsion_split(k);
  std::vector<IntVector> free;
  for (const auto& g : generators) free.push_back(split.free_projection * g);
  for (const auto& f : free)
    if (!in_cone(free, -f, split.free_rank)) return false;
  return true;
}

OrbitData orbit_data(const GradedAlgebra& a, const AffinePoint& x, std::size_t probe_bound) {
  check_point(a, x);
  const auto& ring = *a.ring();
  std::vector<IntVector> degrees;
  if (a.relations().empty()) {
    for (std::size_t i = 0; i < ring.num_vars(); ++i) {
      if (x.coordinates[i] == 0) continue;
      degrees.push_back(a.grading().degrees[i]);
      if (ring.invertible(i)) degrees.push_back(-a.grading().degrees[i]);
    }
    return from_degrees(a, degrees, true, probe_bound);
  }
  for (const auto& e : monomials_up_to(ring, probe_bound)) {
    if (Poly::monomial(a.ring(), e).evaluate(x.coordinates) != 0) degrees.push_back(a.grading().degree_of(e));
  }
  return from_degrees(a, degrees, false, probe_bound);
}

bool is_effective(const GradedAlgebra& a) { return quotient(a.group(), a.grading().degrees).first.is_trivial(); }

OrbitData generic_orbit(const GradedAlgebra& a) {
  if (!a.relations().empty()) throw InvalidInput("generic orbit needs a relation-free algebra");
  auto wd = weight_data(a, 1);
  return from_degrees(a, wd.weight_monoid.generators(), true, 0);
}

}  // namespace coxring
