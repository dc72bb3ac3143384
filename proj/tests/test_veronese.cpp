#include "coxring/veronese.hpp"

#include <functional>

#include "coxring/error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace coxring;
using coxring::testing::vecs;

namespace {

GradedAlgebra zw(long dz, long dw) {
  auto r = make_ring({"z", "w"});
  return make_graded_algebra(r, Grading{FgAbelianGroup::free(1), {make_vector({dz}), make_vector({dw})}});
}

std::vector<std::string> described(const SubalgebraGens& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.generators.size(); ++i) out.push_back(s.describe(i));
  return out;
}

/// Every exponent vector e >= 0 with |e| <= bound and degree in L is a sum of
/// generator exponents (brute-force knapsack over generator exponents).
bool complete_up_to(const GradedAlgebra& a, const SubalgebraGens& s, const AffineMonoid& l, long bound) {
  const std::size_t n = a.ring()->num_vars();
  std::vector<IntVector> gens;
  for (const auto& g : s.generators) {
    IntVector v;
    for (long x : g.exponents) v.push_back(Int(x));
    gens.push_back(v);
  }
  AffineMonoid span(n, gens);
  std::vector<long> e(n, 0);
  bool ok = true;
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == n) {
      auto deg = a.grading().degree_of(e);
      IntVector ev;
      for (long x : e) ev.push_back(Int(x));
      if (member(l, deg, 4 * static_cast<std::size_t>(bound) + 4) && !member(span, ev, static_cast<std::size_t>(bound)))
        ok = false;
      return;
    }
    for (long x = 0; x <= left; ++x) {
      e[i] = x;
      rec(i + 1, left - x);
    }
    e[i] = 0;
  };
  rec(0, bound);
  return ok;
}

}  // namespace

TEST_CASE("invariants of the one-dimensional torus on the plane") {
  AffineMonoid zero(1, {});
  CHECK(described(veronese_generators(zw(0, 1), zero)) == std::vector<std::string>{"z"});
  CHECK(described(veronese_generators(zw(1, -1), zero)) == std::vector<std::string>{"z*w"});
  CHECK(veronese_generators(zw(1, 1), zero).generators.empty());
  for (auto [dz, dw] : {std::pair{0L, 1L}, {1L, -1L}, {1L, 1L}}) {
    auto a = zw(dz, dw);
    CHECK(described(invariant_ring(a, GroupHom::identity(a.group()))) == described(veronese_generators(a, zero)));
  }
}

TEST_CASE("invariant rings of coarsenings") {
  auto a = zw(1, -1);
  auto all = invariant_ring(a, GroupHom::zero(a.group(), FgAbelianGroup::free(1)));
  CHECK(described(all) == std::vector<std::string>{"w", "z"});
  auto b = zw(2, -2);
  GroupHom mod2(FgAbelianGroup::free(1), FgAbelianGroup::cyclic(2), IntMatrix{{1}});
  CHECK(described(invariant_ring(b, mod2)) == std::vector<std::string>{"w", "z"});
  auto c = zw(1, 1);
  auto ev = invariant_ring(c, mod2);
  CHECK(described(ev) == std::vector<std::string>{"w^2", "z*w", "z^2"});
}

TEST_CASE("veronese subalgebras for positive monoids") {
  auto r = make_ring({"x", "y", "z"});
  auto a = make_graded_algebra(r, Grading{FgAbelianGroup::free(2), vecs({{1, 0}, {0, 1}, {1, 1}})});
  AffineMonoid diag(2, vecs({{1, 1}}));
  auto s = veronese_generators(a, diag);
  CHECK(described(s) == std::vector<std::string>{"z", "x*y"});
  for (const auto& g : s.generators) {
    auto d = homogeneity_check(a.grading(), g.value);
    REQUIRE(d);
    CHECK(member(diag, *d, 10));
  }
  CHECK(complete_up_to(a, s, diag, 6));

  AffineMonoid twice(1, vecs({{2}}));
  auto b = zw(1, 3);
  auto sb = veronese_generators(b, twice);
  CHECK(complete_up_to(b, sb, twice, 6));
  for (const auto& g : sb.generators) CHECK(g.degree[0] % 2 == 0);
}

TEST_CASE("invertible variables and unsaturated monoids") {
  auto r = make_ring({"t", "x"}, {true, false});
  auto a = make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}, {1}})});
  auto s = veronese_generators(a, AffineMonoid(1, {}));
  CHECK(described(s) == std::vector<std::string>{"t^-1*x"});
  CHECK_THROWS_AS(veronese_generators(zw(1, 1), AffineMonoid(1, vecs({{2}, {3}}))), UnsaturatedInput);
}

TEST_CASE("degree zero parts of localizations") {
  auto r = make_ring({"T0", "T1"});
  auto a = make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}, {1}})});
  auto chart = degree_zero_part(a, parse_poly(r, "T0"));
  CHECK(described(chart) == std::vector<std::string>{"T1/(T0)", "T0/(T0)"});
  auto two = degree_zero_part(a, parse_poly(r, "T0*T1"));
  CHECK(described(two) == std::vector<std::string>{"T1^2/(T0*T1)", "T0*T1/(T0*T1)", "T0^2/(T0*T1)"});
  for (const auto& g : two.generators) CHECK(g.f_power == 1);
  auto rx = make_ring({"x"});
  auto ax = make_graded_algebra(rx, Grading{FgAbelianGroup::free(1), vecs({{1}})});
  auto one = degree_zero_part(ax, parse_poly(rx, "x"));
  REQUIRE(one.generators.size() == 1);
  CHECK(one.generators[0].value == parse_poly(rx, "x"));
  CHECK(one.generators[0].f_power == 1);
  CHECK_THROWS_AS(degree_zero_part(a, parse_poly(r, "1")), NonPositiveDegree);
  CHECK_THROWS_AS(degree_zero_part(a, parse_poly(r, "T0 + 1")), NotHomogeneous);
}
