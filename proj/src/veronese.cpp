#include "coxring/veronese.hpp"

#include <algorithm>
#include <set>

#include "coxring/error.hpp"

namespace coxring {

namespace {

struct FreeCoords {
  IntMatrix projection;
  std::size_t rank = 0;
};

FreeCoords free_coords(const FgAbelianGroup& k) {
  auto split = free_torsion_split(k);
  if (split.torsion.ambient_rank() != 0) throw InvalidInput("grading group must be free");
  return {split.free_projection, split.free_rank};
}

/// Hilbert basis of {m ∈ Z^r_{≥0} : α m ∈ L} for L = cone(L) ∩ lattice(L).
std::vector<IntVector> orthant_preimage_basis(const IntMatrix& alpha, const std::vector<IntVector>& l_gens) {
  const std::size_t r = alpha.cols();
  const std::size_t k = alpha.rows();
  auto l_lattice = lattice_basis(l_gens, k);
  // Λ = {m : α m ∈ lattice(L)} from the kernel of [α | -B]
  IntMatrix stacked = alpha;
  if (!l_lattice.empty()) {
    std::vector<IntVector> neg;
    for (const auto& b : l_lattice) neg.push_back(-b);
    stacked = alpha.hconcat(IntMatrix::from_columns(neg, k));
  }
  std::vector<IntVector> lam_gens;
  for (const auto& v : kernel_basis(stacked)) lam_gens.emplace_back(v.begin(), v.begin() + static_cast<long>(r));
  auto lam = lattice_basis(lam_gens, r);
  if (lam.empty()) return {};
  IntMatrix lb = IntMatrix::from_columns(lam, r);
  std::vector<IntVector> ineqs;
  for (std::size_t i = 0; i < r; ++i) ineqs.push_back(lb.row(i));
  for (const auto& a : cone_inequalities(l_gens, k)) ineqs.push_back(lb.transpose() * (alpha.transpose() * a));
  const std::size_t d = lam.size();
  auto rays = extreme_rays(ineqs, d);
  std::vector<IntVector> out;
  for (const auto& y : hilbert_basis_in_lattice(rays, IntMatrix::identity(d).columns(), d)) out.push_back(lb * y);
  std::sort(out.begin(), out.end());
  return out;
}

/// Generator list of A as a monoid algebra: variables, then inverses of the
/// invertible ones. Returns (variable index, sign) pairs.
std::vector<std::pair<std::size_t, long>> algebra_generators(const PolyRing& ring) {
  std::vector<std::pair<std::size_t, long>> out;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) out.emplace_back(i, 1);
  for (std::size_t i = 0; i < ring.num_vars(); ++i)
    if (ring.invertible(i)) out.emplace_back(i, -1);
  return out;
}

SubalgebraGens generators_from_basis(const GradedAlgebra& a, const std::vector<std::pair<std::size_t, long>>& gens,
                                     const std::vector<IntVector>& basis, std::size_t extra) {
  SubalgebraGens out{a.ring(), {}, std::nullopt};
  std::set<std::pair<Exponent, long>> seen;
  for (const auto& m : basis) {
    Exponent e(a.ring()->num_vars(), 0);
    for (std::size_t j = 0; j < gens.size(); ++j) e[gens[j].first] += gens[j].second * m[j].get_si();
    long f_power = extra ? m[gens.size()].get_si() : 0;
    bool trivial = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    if (trivial && f_power == 0) continue;
    if (!seen.insert({e, f_power}).second) continue;
    out.generators.push_back({e, f_power, Poly::monomial(a.ring(), e), a.grading().degree_of(e), m});
  }
  return out;
}

}  // namespace

std::string SubalgebraGens::describe(std::size_t i, bool expand) const {
  const auto& g = generators.at(i);
  std::string num;
  if (expand) {
    num = g.value.to_string();
  } else {
    for (std::size_t v = 0; v < g.exponents.size(); ++v) {
      if (g.exponents[v] == 0) continue;
      if (!num.empty()) num += "*";
      num += ring->name(v);
      if (g.exponents[v] != 1) num += "^" + std::to_string(g.exponents[v]);
    }
    if (num.empty()) num = "1";
  }
  if (g.f_power == 0 || !denominator) return num;
  std::string den = "(" + denominator->to_string() + ")";
  if (g.f_power != 1) den += "^" + std::to_string(g.f_power);
  return num + "/" + den;
}

SubalgebraGens veronese_generators(const GradedAlgebra& a, const AffineMonoid& l) {
  const auto& k = a.group();
  if (l.ambient_rank() != k.ambient_rank()) throw DimensionMismatch("monoid not in the grading lattice");
  auto fc = free_coords(k);
  std::vector<IntVector> l_gens;
  for (const auto& g : l.generators()) l_gens.push_back(fc.projection * g);
  AffineMonoid l_free(fc.rank, l_gens);
  if (!is_saturated(l_free)) throw UnsaturatedInput("monoid is not saturated in its lattice");
  auto gens = algebra_generators(*a.ring());
  IntMatrix alpha(fc.rank, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto w = fc.projection * a.grading().degrees[gens[j].first];
    for (std::size_t i = 0; i < fc.rank; ++i) alpha(i, j) = gens[j].second * w[i];
  }
  return generators_from_basis(a, gens, orthant_preimage_basis(alpha, l_free.generators()), 0);
}

SubalgebraGens invariant_ring(const GradedAlgebra& a, const GroupHom& psi) {
  if (!(psi.source().relation_matrix() == a.group().relation_matrix()) ||
      psi.source().ambient_rank() != a.group().ambient_rank()) {
    throw DimensionMismatch("homomorphism source differs from the grading group");
  }
  std::vector<IntVector> l;
  for (const auto& v : psi.kernel_generators()) {
    l.push_back(v);
    l.push_back(-v);
  }
  return veronese_generators(a, AffineMonoid(a.group().ambient_rank(), l));
}

SubalgebraGens degree_zero_part(const GradedAlgebra& a, const Poly& f) {
  const auto& k = a.group();
  auto fc = free_coords(k);
  if (fc.rank != 1) throw InvalidInput("degree-zero part needs a Z-grading");
  for (const auto& d : a.grading().degrees)
    if ((fc.projection * d)[0] < 0) throw InvalidInput("grading has a negative degree");
  auto deg = homogeneity_check(a.grading(), f);
  if (!deg) throw NotHomogeneous("localized element is not homogeneous");
  if (f.is_zero() || (fc.projection * *deg)[0] <= 0) throw NonPositiveDegree("localized element needs positive degree");
  auto gens = algebra_generators(*a.ring());
  IntMatrix alpha(1, gens.size() + 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    alpha(0, j) = gens[j].second * (fc.projection * a.grading().degrees[gens[j].first])[0];
  }
  alpha(0, gens.size()) = -(fc.projection * *deg)[0];
  auto out = generators_from_basis(a, gens, orthant_preimage_basis(alpha, {}), 1);
  out.denominator = f;
  return out;
}

}  // namespace coxring
