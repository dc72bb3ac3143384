#include "coxring/cox.hpp"

#include <algorithm>
#include <set>

#include "coxring/error.hpp"

namespace coxring {

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return (1 / p.sorted_terms().front().second) * p;
}

/// Rank over Q of polynomials viewed as coefficient vectors.
std::size_t span_dimension(const std::vector<Poly>& polys) {
  std::vector<std::map<Exponent, Rational>> rows;
  for (const auto& p : polys)
    if (!p.is_zero()) rows.push_back(p.terms());
  std::size_t rank = 0;
  std::vector<Exponent> pivots;
  for (auto& row : rows) {
    for (std::size_t k = 0; k < rank; ++k) {
      auto it = row.find(pivots[k]);
      if (it == row.end()) continue;
      Rational f = it->second;
      for (const auto& [e, c] : rows[k]) {
        Rational v = row[e] - f * c;
        if (v == 0) {
          row.erase(e);
        } else {
          row[e] = v;
        }
      }
    }
    if (row.empty()) continue;
    auto pivot = row.begin()->first;
    Rational lead = row.begin()->second;
    for (auto& [e, c] : row) c /= lead;
    std::swap(rows[rank], row);
    pivots.push_back(pivot);
    ++rank;
  }
  return rank;
}

std::vector<Poly> images_in_order(const PolyRing& source, const std::map<std::string, Poly>& images) {
  std::vector<Poly> out;
  for (const auto& name : source.names()) out.push_back(images.at(name));
  return out;
}

}  // namespace

void validate(const CoxInput& input) {
  const auto& a = input.presentation;
  a.check_homogeneous();
  const auto& k = a.group();
  const auto& c = input.projection;
  if (c.source().ambient_rank() != k.ambient_rank()) {
    throw DimensionMismatch("projection does not start at the grading group");
  }
  for (const auto& rel : k.relators())
    if (!c.source().is_zero_element(rel)) throw InvalidInput("projection source differs from the grading group");
  if (!c.is_surjective()) throw NonSurjectiveProjection("projection onto the class group is not surjective");
  std::vector<IntVector> basis_gens = k.relators();
  for (const auto& chi : input.chi) {
    k.check_element(chi.element);
    if (!c.target().is_zero_element(c.apply(chi.element))) {
      throw InvalidInput("chi basis element " + to_string(chi.element) + " is not in the kernel of the projection");
    }
    if (chi.value.ring() != a.ring() && !(*chi.value.ring() == *a.ring())) {
      throw InvalidInput("chi value lives in a different ring");
    }
    auto deg = homogeneity_check(a.grading(), chi.value);
    if (chi.value.is_zero() || !deg || !k.element_eq(*deg, -chi.element)) {
      throw InvalidInput("chi value " + chi.value.to_string() + " is not homogeneous of degree " +
                         to_string(-chi.element));
    }
    basis_gens.push_back(chi.element);
  }
  auto lattice = lattice_basis(basis_gens, k.ambient_rank());
  IntMatrix lb = IntMatrix::from_columns(lattice, k.ambient_rank());
  for (const auto& g : c.kernel_generators()) {
    if (is_zero(g)) continue;
    if (lattice.empty() || !solve_in_lattice(lb, g)) {
      throw InvalidInput("chi basis does not generate the kernel of the projection (missing " + to_string(g) + ")");
    }
  }
}

CoxPresentation cox_quotient(const CoxInput& input) {
  validate(input);
  const auto& a = input.presentation;
  std::vector<Poly> relations = a.relations();
  std::vector<std::string> sources;
  for (std::size_t i = 0; i < relations.size(); ++i) sources.push_back("input relation " + std::to_string(i));
  for (const auto& chi : input.chi) {
    Poly chi_value(a.ring(), chi.value.terms());
    relations.push_back(Poly::constant(a.ring(), 1) - chi_value);
    sources.push_back("1 - chi(" + to_string(chi.element) + ")");
  }
  auto coarse = coarsen(GradedAlgebra(a.ring(), a.grading(), relations), input.projection);
  coarse.check_homogeneous();

  auto units = eliminate_unit_relations(coarse);
  auto tietze = eliminate_redundant_generators(units.algebra);

  CoxPresentation out{tietze.algebra, {}, {}, {}};
  const auto& ring = tietze.algebra.ring();
  auto second = images_in_order(*units.algebra.ring(), tietze.images);
  for (const auto& name : a.ring()->names()) {
    out.variable_images.emplace(name, units.images.at(name).map_to(ring, second));
  }

  // tidy the relations: monic, no zeros or repeats
  std::vector<Poly> tidy;
  std::set<std::string> seen;
  for (const auto& rel : tietze.algebra.relations()) {
    auto m = monic(rel);
    if (m.is_zero() || !seen.insert(m.to_string()).second) continue;
    tidy.push_back(m);
  }
  out.algebra = GradedAlgebra(ring, tietze.algebra.grading(), tidy);
  out.algebra.check_homogeneous();

  out.notes.push_back("relations: " + std::to_string(a.relations().size()) + " from the presentation, " +
                      std::to_string(input.chi.size()) + " of the form 1 - chi(E)");
  for (const auto& s : sources) out.notes.push_back("source: " + s);
  for (const auto& n : units.notes) out.notes.push_back(n);
  for (const auto& n : tietze.notes) out.notes.push_back(n);
  // provenance: the source relations whose image is the output relation
  auto images = images_in_order(*a.ring(), out.variable_images);
  std::vector<std::pair<std::string, Poly>> mapped;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    auto img = monic(relations[i].map_to(ring, images));
    if (!img.is_zero()) mapped.emplace_back(sources[i] + " (" + relations[i].to_string() + ")", img);
  }
  for (const auto& rel : out.algebra.relations()) {
    std::string from;
    for (const auto& [name, img] : mapped)
      if (img == rel) from += (from.empty() ? "" : "; ") + name;
    if (from.empty()) {
      for (const auto& [name, img] : mapped) from += (from.empty() ? "combination of " : "; ") + name;
    }
    out.provenance.push_back(rel.to_string() + " <- " + from);
  }
  return out;
}

BijectivityReport component_bijectivity_check(const CoxInput& input, const CoxPresentation& output,
                                              const std::vector<IntVector>& probe_degrees,
                                              std::size_t degree_bound) {
  const auto& a = input.presentation;
  const auto& k = a.group();
  auto source_gb = buchberger(a.ring(), a.relations());
  auto target_gb = buchberger(output.algebra.ring(), output.algebra.relations());
  auto images = images_in_order(*a.ring(), output.variable_images);
  auto monomials = monomials_up_to(*a.ring(), degree_bound);
  monomials.push_back(Exponent(a.ring()->num_vars(), 0));

  BijectivityReport report;
  report.degree_bound = degree_bound;
  for (const auto& d : probe_degrees) {
    k.check_element(d);
    std::vector<Poly> src, img;
    for (const auto& e : monomials) {
      if (!k.element_eq(a.grading().degree_of(e), d)) continue;
      auto m = Poly::monomial(a.ring(), e);
      src.push_back(source_gb.normal_form(m));
      img.push_back(target_gb.normal_form(m.map_to(output.algebra.ring(), images)));
    }
    BijectivityReport::Entry entry{d, src.size(), span_dimension(src), span_dimension(img)};
    if (entry.source_dimension != entry.image_dimension && report.pass) {
      report.pass = false;
      report.counterexample = "degree " + to_string(d) + ": span of dimension " +
                              std::to_string(entry.source_dimension) + " maps onto dimension " +
                              std::to_string(entry.image_dimension);
    }
    report.entries.push_back(entry);
  }
  return report;
}

LocalClassGroup local_class_group(const CoxPresentation& output, const AffinePoint& xhat, std::size_t probe_bound,
                                  bool check_closed) {
  auto orbit = orbit_data(output.algebra, xhat, probe_bound);
  if (check_closed && !orbit.orbit_closed) throw OrbitNotClosed("the orbit of the point is not closed");
  return {orbit.isotropy, orbit, check_closed};
}

bool picard_trivial_by_fixed_point(const CoxPresentation& output, const AffinePoint& probe, std::size_t probe_bound) {
  return orbit_data(output.algebra, probe, probe_bound).orbit_monoid.generators().empty();
}

bool irrelevant_ideal_membership(const CoxPresentation& output, const std::vector<Poly>& cover_sections,
                                 const Poly& f) {
  std::vector<Poly> gens = cover_sections;
  for (const auto& rel : output.algebra.relations()) gens.push_back(rel);
  return radical_member(output.algebra.ring(), gens, f);
}

}  // namespace coxring
