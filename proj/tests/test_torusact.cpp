#include "coxring/torusact.hpp"

#include <random>

#include "coxring/error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace coxring;
using coxring::testing::vecs;

namespace {

AffinePoint pt(std::initializer_list<long> xs) {
  AffinePoint p;
  for (long x : xs) p.coordinates.emplace_back(x);
  return p;
}

GradedAlgebra plane(long d1, long d2) {
  auto r = make_ring({"T1", "T2"});
  return make_graded_algebra(r, Grading{FgAbelianGroup::free(1), {make_vector({d1}), make_vector({d2})}});
}

}  // namespace

TEST_CASE("orbits of the hyperbolic action on the plane") {
  auto a = plane(1, -1);
  auto generic = orbit_data(a, pt({1, 1}), 4);
  CHECK(generic.orbit_monoid.generators() == vecs({{-1}, {1}}));
  CHECK(generic.isotropy.is_trivial());
  CHECK(generic.orbit_closed);

  auto axis = orbit_data(a, pt({1, 0}), 4);
  CHECK(axis.orbit_monoid.generators() == vecs({{1}}));
  CHECK(axis.orbit_group.rank() == 1);
  CHECK(axis.isotropy.is_trivial());
  CHECK_FALSE(axis.orbit_closed);

  auto origin = orbit_data(a, pt({0, 0}), 4);
  CHECK(origin.orbit_monoid.generators().empty());
  CHECK(quasitorus_shape(origin.isotropy) == QuasitorusShape{1, {}});
  CHECK(origin.orbit_closed);
}

TEST_CASE("isotropy with torsion") {
  auto a = plane(2, 2);
  auto o = orbit_data(a, pt({1, 0}), 3);
  CHECK(quasitorus_shape(o.isotropy) == QuasitorusShape{0, {Int(2)}});
  CHECK_FALSE(o.orbit_closed);
  auto r = make_ring({"T1", "T2"});
  auto z2 = make_graded_algebra(r, Grading{FgAbelianGroup::cyclic(2), vecs({{1}, {0}})});
  auto t = orbit_data(z2, pt({3, 0}), 3);
  CHECK(t.isotropy.is_trivial());
  CHECK(t.orbit_closed);
}

TEST_CASE("points must lie on the variety") {
  auto r = make_ring({"x", "y"});
  auto a = make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}, {1}})}, {parse_poly(r, "x*y")});
  CHECK_THROWS_AS(orbit_data(a, pt({1, 1}), 3), PointOffVariety);
  CHECK_THROWS_AS(orbit_data(a, pt({1}), 3), PointOffVariety);
  auto o = orbit_data(a, pt({2, 0}), 3);
  CHECK_FALSE(o.exact);
  CHECK(o.probe_bound == 3);
  CHECK(o.orbit_monoid.generators() == vecs({{1}}));
  auto lr = make_ring({"u"}, {true});
  auto l = make_graded_algebra(lr, Grading{FgAbelianGroup::free(1), vecs({{1}})});
  CHECK_THROWS_AS(orbit_data(l, pt({0}), 3), PointOffVariety);
  CHECK(orbit_data(l, pt({5}), 3).orbit_closed);
}

TEST_CASE("effectiveness") {
  auto r = make_ring({"T1"});
  CHECK(is_effective(make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{1}})})));
  CHECK_FALSE(is_effective(make_graded_algebra(r, Grading{FgAbelianGroup::free(1), vecs({{2}})})));
  auto r2 = make_ring({"T1", "T2"});
  CHECK_FALSE(is_effective(make_graded_algebra(r2, Grading{FgAbelianGroup::free(2), vecs({{1, 0}, {0, 2}})})));
}

TEST_CASE("generic orbit agrees with the all-ones point") {
  for (auto [d1, d2] : {std::pair{1L, -1L}, {1L, 0L}, {2L, 3L}}) {
    auto a = plane(d1, d2);
    auto g = generic_orbit(a);
    auto o = orbit_data(a, pt({1, 1}), 4);
    CHECK(g.orbit_monoid.generators() == o.orbit_monoid.generators());
    CHECK(quasitorus_shape(g.orbit_group) == quasitorus_shape(o.orbit_group));
    CHECK(g.orbit_closed == o.orbit_closed);
  }
}

TEST_CASE("orbit properties on random gradings") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-3, 3), bit(0, 1);
  auto r = make_ring({"a", "b", "c"});
  for (int t = 0; t < 40; ++t) {
    Grading g{FgAbelianGroup::free(2), {}};
    for (int i = 0; i < 3; ++i) g.degrees.push_back(make_vector({d(rng), d(rng)}));
    auto a = make_graded_algebra(r, g);
    AffinePoint x = pt({bit(rng), bit(rng), bit(rng)});
    auto o = orbit_data(a, x, 3);
    for (const auto& s : o.orbit_monoid.generators()) CHECK(o.isotropy.is_zero_element(o.isotropy_projection.apply(s)));
    // zeroing a coordinate never enlarges S_x
    for (std::size_t i = 0; i < 3; ++i) {
      auto y = x;
      y.coordinates[i] = 0;
      auto oy = orbit_data(a, y, 3);
      for (const auto& s : oy.orbit_monoid.generators()) CHECK(member(o.orbit_monoid, s, 1));
    }
    // the bounded group test agrees with the exact one
    CHECK(o.orbit_closed == is_group(o.orbit_monoid, 40));
  }
}
