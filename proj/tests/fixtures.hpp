#pragma once

#include "coxring/cox.hpp"
#include "test_util.hpp"

namespace coxring::testing {

/// Γ(X,S) = K[Z1, Z2, Z3^±1] graded by K = Z·D1 with deg Z1 = deg Z2 = D1 and
/// deg Z3 = 2 D1; c: K -> Z/2 and χ(2 D1) = Z3^-1.
inline CoxInput quadric_input() {
  auto ring = make_ring({"Z1", "Z2", "Z3"}, {false, false, true});
  auto k = FgAbelianGroup::free(1);
  auto s = make_graded_algebra(ring, Grading{k, vecs({{1}, {1}, {2}})});
  GroupHom c(k, FgAbelianGroup::cyclic(2), IntMatrix{{1}});
  return CoxInput{s, c, {ChiValue{make_vector({2}), parse_poly(ring, "Z3^-1")}}};
}

/// Sections of the divisorial algebra on SL(2)/N: a_i of degree D, b_i of
/// degree -D and u = f2^2 of degree -2D, invertible; c: Z·D -> Z/2 with
/// χ(2D) = u.
inline CoxInput sl2n_input() {
  auto ring = make_ring({"a1", "a2", "a3", "b1", "b2", "b3", "u"}, {false, false, false, false, false, false, true});
  auto k = FgAbelianGroup::free(1);
  std::vector<Poly> rels{parse_poly(ring, "b1 - a2*u"), parse_poly(ring, "b2 - a1*u"), parse_poly(ring, "b3 - a3*u"),
                         parse_poly(ring, "a2^2 - a1*a3 - u^-1")};
  auto s = make_graded_algebra(ring, Grading{k, vecs({{1}, {1}, {1}, {-1}, {-1}, {-1}, {-2}})}, rels);
  GroupHom c(k, FgAbelianGroup::cyclic(2), IntMatrix{{1}});
  return CoxInput{s, c, {ChiValue{make_vector({2}), parse_poly(ring, "u")}}};
}

}  // namespace coxring::testing
