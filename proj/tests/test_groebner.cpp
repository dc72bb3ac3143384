#include "coxring/groebner.hpp"

#include <random>

#include "coxring/error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace coxring;
using coxring::testing::vecs;

namespace {

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto r = make_ring({"x", "y"});
  auto lex = buchberger(r, {parse_poly(r, "x^2 - y")}, MonomialOrder::Lex);
  CHECK(strings(lex.basis()) == std::vector<std::string>{"x^2 - y"});
  CHECK(strings(buchberger(r, {parse_poly(r, "x"), parse_poly(r, "y")}).basis()) ==
        std::vector<std::string>{"y", "x"});
  CHECK(strings(buchberger(r, {parse_poly(r, "x + y"), parse_poly(r, "x - y")}).basis()) ==
        std::vector<std::string>{"y", "x"});
  CHECK(buchberger(r, {parse_poly(r, "x"), parse_poly(r, "x + 1")}).is_unit_ideal());
  CHECK(buchberger(r, {}).basis().empty());
  // twisted cubic: three quadrics
  auto s = make_ring({"a", "b", "c", "d"});
  auto tc = buchberger(s, {parse_poly(s, "a*c - b^2"), parse_poly(s, "b*d - c^2"), parse_poly(s, "a*d - b*c")});
  CHECK(tc.basis().size() == 3);
}

TEST_CASE("normal forms") {
  auto r = make_ring({"x", "y"});
  auto g = buchberger(r, {parse_poly(r, "x^2 - y")});
  CHECK(normal_form(g, parse_poly(r, "x^4")) == parse_poly(r, "y^2"));
  CHECK(normal_form(g, Poly(r)).is_zero());
  CHECK(normal_form(buchberger(r, {parse_poly(r, "x")}), parse_poly(r, "y")) == parse_poly(r, "y"));
}

TEST_CASE("invertible variables") {
  auto r = make_ring({"x", "u"}, {false, true});
  auto g = buchberger(r, {parse_poly(r, "x*u - 1")});
  CHECK(g.contains(parse_poly(r, "x - u^-1")));
  CHECK(buchberger(r, {parse_poly(r, "u")}).is_unit_ideal());
  CHECK_FALSE(buchberger(r, {parse_poly(r, "x")}).is_unit_ideal());
}

TEST_CASE("radical membership") {
  auto r = make_ring({"x", "y"});
  CHECK(radical_member(r, {parse_poly(r, "x^2")}, parse_poly(r, "x")));
  CHECK_FALSE(radical_member(r, {parse_poly(r, "x")}, parse_poly(r, "y")));
  CHECK(radical_member(r, {parse_poly(r, "x^2"), parse_poly(r, "y^2")}, parse_poly(r, "x + y")));
  // oracle for the last case: (x+y)^3 lies in the ideal
  auto g = buchberger(r, {parse_poly(r, "x^2"), parse_poly(r, "y^2")});
  CHECK(g.contains(parse_poly(r, "(x + y)^3")));
}

TEST_CASE("ideal homogeneity") {
  auto r = make_ring({"T1", "T2", "T3", "T4", "T5"});
  Grading g{FgAbelianGroup::free(2), vecs({{-1, 2}, {1, 0}, {0, 1}, {2, -1}, {-2, 3}})};
  CHECK(ideal_homogeneous(g, r, {parse_poly(r, "T1*T2 + T3^2 + T4*T5")}));
  auto x = make_ring({"x"});
  CHECK_FALSE(ideal_homogeneous(Grading{FgAbelianGroup::free(1), vecs({{1}})}, x, {parse_poly(x, "x + 1")}));
  CHECK(ideal_homogeneous(g, r, {}));
  // non-homogeneous generators of a homogeneous ideal
  auto xy = make_ring({"x", "y"});
  Grading std2{FgAbelianGroup::free(1), vecs({{1}, {1}})};
  CHECK(ideal_homogeneous(std2, xy, {parse_poly(xy, "x + y^2"), parse_poly(xy, "x")}));
}

TEST_CASE("random ideal properties") {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> e(0, 2), c(-2, 2);
  auto random_poly = [&] {
    Poly p(r);
    for (int k = 0; k < 3; ++k) p = p + Poly::monomial(r, {e(rng), e(rng), e(rng)}, Rational(c(rng)));
    return p;
  };
  for (int t = 0; t < 25; ++t) {
    std::vector<Poly> gens{random_poly(), random_poly()};
    auto g1 = buchberger(r, gens);
    auto g2 = buchberger(r, gens);
    CHECK(strings(g1.basis()) == strings(g2.basis()));
    for (const auto& b : g1.basis()) CHECK(b.sorted_terms().front().second == 1);
    auto f = random_poly();
    auto n = normal_form(g1, f);
    CHECK(normal_form(g1, n) == n);
    auto member = gens[0] * random_poly() + gens[1] * random_poly();
    CHECK(g1.contains(member));
    if (g1.contains(f)) CHECK(radical_member(r, gens, f));
    for (const auto& gen : gens) CHECK(g1.contains(gen));
  }
}

TEST_CASE("unit relation elimination") {
  auto r = make_ring({"Z1", "Z2", "Z3"}, {false, false, true});
  Grading g{FgAbelianGroup::cyclic(2), vecs({{1}, {1}, {0}})};
  auto a = make_graded_algebra(r, g, {parse_poly(r, "1 - Z3^-1")});
  auto e = eliminate_unit_relations(a);
  CHECK(e.algebra.ring()->names() == std::vector<std::string>{"Z1", "Z2"});
  CHECK(e.algebra.relations().empty());
  CHECK(e.algebra.grading().degrees == vecs({{1}, {1}}));
  CHECK(e.images.at("Z3").to_string() == "1");

  auto plain = make_graded_algebra(r, g, {parse_poly(r, "Z1^2 - Z2^2")});
  auto u = eliminate_unit_relations(plain);
  CHECK(u.algebra.ring()->names() == r->names());
  CHECK(u.algebra.relations() == plain.relations());

  GradedAlgebra bad(r, Grading{FgAbelianGroup::cyclic(2), vecs({{0}, {0}, {1}})}, {parse_poly(r, "1 - Z3")});
  CHECK_THROWS_AS(eliminate_unit_relations(bad), GradingObstruction);
}

TEST_CASE("redundant generator elimination") {
  auto r = make_ring({"a", "b", "c"});
  Grading g{FgAbelianGroup::free(1), vecs({{1}, {1}, {2}})};
  auto a = make_graded_algebra(r, g, {parse_poly(r, "c - a*b"), parse_poly(r, "c^2 - a^4")});
  auto e = eliminate_redundant_generators(a);
  CHECK(e.algebra.ring()->names() == std::vector<std::string>{"a", "b"});
  REQUIRE(e.algebra.relations().size() == 1);
  CHECK(e.algebra.relations()[0].to_string() == "-a^4 + a^2*b^2");
  CHECK(e.images.at("c").to_string() == "a*b");
}
