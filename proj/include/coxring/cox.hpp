#pragma once

// The Cox construction on presented data: the quotient of a K-graded
// presentation of Γ(X,S) by the ideal generated by 1 - χ(E), and the local
// consequences (local class groups, Picard certificates, irrelevant ideal).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxring/groebner.hpp"
#include "coxring/polyring.hpp"
#include "coxring/torusact.hpp"

namespace coxring {

struct CoxPresentation {
  /// Graded by Cl(X).
  GradedAlgebra algebra;
  /// For each variable of the input presentation, its image in algebra.ring().
  std::map<std::string, Poly> variable_images;
  /// One entry per output relation.
  std::vector<std::string> provenance;
  std::vector<std::string> notes;
};

struct ChiValue {
  /// Basis element E_t of K⁰ = ker(c), ambient coordinates of K.
  IntVector element;
  /// The element of the presentation representing χ(E_t); degree -E_t.
  Poly value;
};

struct CoxInput {
  GradedAlgebra presentation;
  /// c: K -> Cl(X).
  GroupHom projection;
  std::vector<ChiValue> chi;
};

/// Checks the CoxInput invariants: homogeneous presentation, c defined on
/// the grading group and surjective (NonSurjectiveProjection), the E_t in
/// ker(c) and generating it, χ(E_t) homogeneous of degree -E_t (InvalidInput).
void validate(const CoxInput& input);

CoxPresentation cox_quotient(const CoxInput& input);

struct BijectivityReport {
  bool pass = true;
  std::size_t degree_bound = 0;
  struct Entry {
    IntVector degree;
    std::size_t monomials = 0;
    std::size_t source_dimension = 0;
    std::size_t image_dimension = 0;
  };
  std::vector<Entry> entries;
  std::optional<std::string> counterexample;
};

/// For each probe degree D ∈ K, compares the dimension of the span of S_D
/// (monomials up to degree_bound, modulo the input relations) with the
/// dimension of its image in R.
BijectivityReport component_bijectivity_check(const CoxInput& input, const CoxPresentation& output,
                                              const std::vector<IntVector>& probe_degrees,
                                              std::size_t degree_bound);

struct LocalClassGroup {
  FgAbelianGroup group;
  OrbitData orbit;
  /// Whether orbit closedness was checked (true) or asserted by the caller.
  bool closedness_verified = false;
};

/// Cl(X, x) = Cl(X) / Cl_x(X) with Cl_x the orbit group of xhat. With
/// check_closed, throws OrbitNotClosed when the orbit of xhat is not closed.
LocalClassGroup local_class_group(const CoxPresentation& output, const AffinePoint& xhat, std::size_t probe_bound,
                                  bool check_closed = true);

/// True when the probe is a fixed point (orbit monoid {0}), a certificate
/// for Pic(X) = 0; false means no certificate from this probe.
bool picard_trivial_by_fixed_point(const CoxPresentation& output, const AffinePoint& probe,
                                   std::size_t probe_bound = 3);

/// f ∈ √⟨cover sections, relations⟩. That the cover sections give an affine
/// cover by localizations is the caller's hypothesis.
bool irrelevant_ideal_membership(const CoxPresentation& output, const std::vector<Poly>& cover_sections,
                                 const Poly& f);

}  // namespace coxring
