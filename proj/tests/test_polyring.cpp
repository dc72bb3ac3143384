#include "coxring/polyring.hpp"

#include <random>

#include "coxring/error.hpp"
#include "coxring/groebner.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace coxring;
using coxring::testing::vecs;

namespace {

RingPtr five_vars() { return make_ring({"T1", "T2", "T3", "T4", "T5"}); }

Grading z2_weights() {
  return Grading{FgAbelianGroup::free(2), vecs({{-1, 2}, {1, 0}, {0, 1}, {2, -1}, {-2, 3}})};
}

}  // namespace

TEST_CASE("polynomial text round trip") {
  auto r = make_ring({"T1", "T2", "T3"}, {false, true, false});
  auto f = parse_poly(r, "3*T1^2*T2^-1 - 1/2*T3");
  CHECK(f.to_string() == "3*T1^2*T2^-1 - 1/2*T3");
  CHECK(parse_poly(r, f.to_string()) == f);
  CHECK(parse_poly(r, "(T1 + 1)^2 - T1^2 - 2*T1").to_string() == "1");
  CHECK(parse_poly(r, "0").is_zero());
  CHECK(parse_poly(r, "-T3 + T1").to_string() == "T1 - T3");
  CHECK_THROWS_AS(parse_poly(r, "T1^-1"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "T9"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "T1 +"), ParseError);
  CHECK_THROWS_AS(make_ring({"x", "x"}), InvalidInput);
}

TEST_CASE("arithmetic and evaluation") {
  auto r = make_ring({"x", "y"}, {false, true});
  auto x = Poly::variable(r, 0);
  auto y = Poly::variable(r, 1);
  auto yinv = parse_poly(r, "y^-1");
  CHECK((y * yinv).to_string() == "1");
  CHECK(((x + y) * (x - y)) == x.pow(2) - y.pow(2));
  CHECK((x * yinv + Poly::constant(r, 1)).evaluate({Rational(2), Rational(4)}) == Rational(3, 2));
  CHECK_THROWS_AS(yinv.evaluate({Rational(1), Rational(0)}), PointOffVariety);
  CHECK((x - x).is_zero());
}

TEST_CASE("homogeneity check") {
  auto r = five_vars();
  auto g = z2_weights();
  CHECK(homogeneity_check(g, parse_poly(r, "T1*T2 + T3^2 + T4*T5")) == make_vector({0, 2}));
  CHECK(homogeneity_check(g, parse_poly(r, "1")) == make_vector({0, 0}));
  CHECK_FALSE(homogeneity_check(g, parse_poly(r, "T1 + T2")).has_value());
  Grading torsion{FgAbelianGroup::cyclic(2), vecs({{1}, {1}, {0}, {0}, {0}})};
  CHECK(homogeneity_check(torsion, parse_poly(r, "T1^2 + T3")) == make_vector({0}));
  CHECK(homogeneity_check(torsion, parse_poly(r, "T1 + T2^3")) == make_vector({1}));
}

TEST_CASE("homogeneous components") {
  auto r = make_ring({"T1", "T2"});
  Grading g{FgAbelianGroup::free(1), vecs({{1}, {-1}})};
  auto comps = homogeneous_components(g, parse_poly(r, "T1^2 + T1*T2"));
  REQUIRE(comps.size() == 2);
  CHECK(comps.at(make_vector({2})) == parse_poly(r, "T1^2"));
  CHECK(comps.at(make_vector({0})) == parse_poly(r, "T1*T2"));
  CHECK(homogeneous_components(g, parse_poly(r, "T1*T2 + 1")).size() == 1);
  CHECK(homogeneous_components(g, Poly(r)).empty());
}

TEST_CASE("random polynomial properties") {
  auto r = make_ring({"a", "b", "c"});
  Grading g{FgAbelianGroup::free(2), vecs({{1, 0}, {0, 1}, {1, -1}})};
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> e(0, 3), c(-3, 3), nterms(1, 4);
  auto random_poly = [&] {
    Poly p(r);
    for (long k = nterms(rng); k > 0; --k) p = p + Poly::monomial(r, {e(rng), e(rng), e(rng)}, Rational(c(rng)));
    return p;
  };
  for (int t = 0; t < 200; ++t) {
    auto f = random_poly();
    auto h = random_poly();
    Poly sum(r);
    for (const auto& [deg, comp] : homogeneous_components(g, f)) {
      CHECK(homogeneity_check(g, comp) == deg);
      sum = sum + comp;
    }
    CHECK(sum == f);
    auto df = homogeneity_check(g, f);
    auto dh = homogeneity_check(g, h);
    auto prod = f * h;
    if (df && dh && !prod.is_zero()) CHECK(homogeneity_check(g, prod) == *df + *dh);
    // integral domain: a homogeneous nonzero product has homogeneous factors
    if (!prod.is_zero() && homogeneity_check(g, prod)) {
      CHECK(df.has_value());
      CHECK(dh.has_value());
    }
  }
}

TEST_CASE("coarsening") {
  auto r = five_vars();
  auto a = make_graded_algebra(r, z2_weights(), {parse_poly(r, "T1*T2 + T3^2 + T4*T5")});
  GroupHom sum(FgAbelianGroup::free(2), FgAbelianGroup::free(1), IntMatrix{{1, 1}});
  auto c = coarsen(a, sum);
  for (const auto& d : c.grading().degrees) CHECK(d == make_vector({1}));
  CHECK(c.relations_homogeneous());
  auto same = coarsen(a, GroupHom::identity(a.group()));
  CHECK(same.grading().degrees == a.grading().degrees);
  auto zero = coarsen(a, GroupHom::zero(a.group(), FgAbelianGroup::free(1)));
  for (const auto& d : zero.grading().degrees) CHECK(d == make_vector({0}));
}

TEST_CASE("lifting and trivial extension") {
  auto r = make_ring({"T1", "T2"});
  auto std_grading = make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}, {1}})});
  GroupHom sum(FgAbelianGroup::free(2), FgAbelianGroup::free(1), IntMatrix{{1, 1}});
  auto lifted = lift(std_grading, sum, vecs({{1, 0}, {0, 1}}));
  CHECK(lifted.grading().degrees == vecs({{1, 0}, {0, 1}}));
  CHECK(lift(std_grading, GroupHom::identity(std_grading.group()), vecs({{1}, {1}})).grading().degrees ==
        vecs({{1}, {1}}));
  CHECK_THROWS_AS(lift(std_grading, sum, vecs({{1, 1}, {0, 1}})), ChoiceMismatch);

  CHECK(trivial_extend(std_grading, GroupHom::identity(std_grading.group())).grading().degrees == vecs({{1}, {1}}));
  GroupHom embed(FgAbelianGroup::free(1), FgAbelianGroup::free(2), IntMatrix{{1}, {0}});
  CHECK(trivial_extend(std_grading, embed).grading().degrees == vecs({{1, 0}, {1, 0}}));
  CHECK_THROWS_AS(trivial_extend(lifted, sum), NotInjective);
}

TEST_CASE("weight data") {
  auto r = make_ring({"T1", "T2"});
  auto a = make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}, {-1}})});
  auto w = weight_data(a, 3);
  CHECK(w.exact);
  CHECK(w.weight_monoid.generators() == vecs({{-1}, {1}}));
  CHECK(w.weight_group.rank() == 1);
  CHECK(w.weight_group.is_free());
  REQUIRE(w.weight_cone);
  CHECK_FALSE(w.weight_cone->pointed);

  auto r1 = make_ring({"T1"});
  auto b = weight_data(make_graded_algebra(r1, Grading{FgAbelianGroup::free(1), vecs({{2}})}), 3);
  CHECK(b.weight_monoid.generators() == vecs({{2}}));
  CHECK(b.weight_group_generators == vecs({{2}}));
  REQUIRE(b.weight_cone);
  CHECK(b.weight_cone->rays == vecs({{1}}));

  auto r5 = five_vars();
  auto c = weight_data(make_graded_algebra(r5, z2_weights()), 2);
  REQUIRE(c.weight_cone);
  CHECK(c.weight_cone->rays == weight_cone(AffineMonoid(2, z2_weights().degrees)).rays);
  CHECK(c.weight_cone->pointed);
  CHECK(c.weight_cone->rays == vecs({{-2, 3}, {2, -1}}));

  // with a relation, T1 = 0 in K[T1,T2]/<T1>: only the degree of T2 survives
  auto q = make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}, {2}})}, {parse_poly(r, "T1")});
  auto wq = weight_data(q, 2);
  CHECK_FALSE(wq.exact);
  CHECK(wq.degree_bound == 2);
  CHECK(wq.weight_monoid.generators() == vecs({{2}}));
}

TEST_CASE("unit check in Laurent rings") {
  auto r = make_ring({"T1", "T2"}, {true, true});
  auto a = make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}, {1}})});
  CHECK(homogeneous_unit_check(a, parse_poly(r, "3*T1*T2^-1")));
  CHECK_FALSE(homogeneous_unit_check(a, parse_poly(r, "1 + T1")));
  auto rp = make_ring({"T1"});
  auto ap = make_graded_algebra(rp, Grading{FgAbelianGroup::free(1), vecs({{1}})});
  CHECK_FALSE(homogeneous_unit_check(ap, parse_poly(rp, "T1")));
  CHECK_FALSE(homogeneous_unit_check(ap, Poly(rp)));
}

TEST_CASE("non-homogeneous relations are rejected by the checked factory") {
  auto r = make_ring({"x"});
  CHECK_THROWS_AS(make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}})}, {parse_poly(r, "x + 1")}),
                  NotHomogeneous);
}
