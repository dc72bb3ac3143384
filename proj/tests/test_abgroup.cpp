#include "coxring/abgroup.hpp"

#include <random>

#include "coxring/error.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace coxring;
using coxring::testing::random_matrix;
using coxring::testing::vecs;

TEST_CASE("element equality") {
  auto z2 = FgAbelianGroup::cyclic(2);
  CHECK(z2.element_eq(make_vector({1}), make_vector({3})));
  auto z = FgAbelianGroup::free(1);
  CHECK_FALSE(z.element_eq(make_vector({1}), make_vector({2})));
  FgAbelianGroup zz3(2, vecs({{0, 3}}));
  CHECK(zz3.element_eq(make_vector({5, 1}), make_vector({5, 4})));
  CHECK_THROWS_AS(zz3.element_eq(make_vector({1}), make_vector({5, 4})), DimensionMismatch);
}

TEST_CASE("quotients") {
  auto [q1, p1] = quotient(FgAbelianGroup::free(2), vecs({{1, 0}}));
  CHECK(quasitorus_shape(q1) == QuasitorusShape{1, {}});
  auto [q2, p2] = quotient(FgAbelianGroup::free(1), vecs({{2}}));
  CHECK(quasitorus_shape(q2) == QuasitorusShape{0, {Int(2)}});
  auto [q3, p3] = quotient(FgAbelianGroup::free(2), vecs({{2, 0}, {0, 3}}));
  CHECK(quasitorus_shape(q3) == QuasitorusShape{0, {Int(6)}});
  CHECK(p3.is_surjective());
  CHECK(p3.apply(make_vector({2, 3})) == make_vector({2, 3}));
  CHECK(q3.is_zero_element(p3.apply(make_vector({2, 3}))));
  CHECK_THROWS_AS(quotient(FgAbelianGroup::free(2), vecs({{1}})), DimensionMismatch);
}

TEST_CASE("quasitorus shapes") {
  CHECK(quasitorus_shape(FgAbelianGroup(2, vecs({{0, 2}}))) == QuasitorusShape{1, {Int(2)}});
  CHECK(quasitorus_shape(FgAbelianGroup::free(2)) == QuasitorusShape{2, {}});
  CHECK(quasitorus_shape(FgAbelianGroup(2, vecs({{2, 0}, {0, 3}}))) == QuasitorusShape{0, {Int(6)}});
}

TEST_CASE("free/torsion split") {
  auto s1 = free_torsion_split(FgAbelianGroup(2, vecs({{0, 2}})));
  CHECK(s1.free_rank == 1);
  CHECK(quasitorus_shape(s1.torsion) == QuasitorusShape{0, {Int(2)}});
  auto s2 = free_torsion_split(FgAbelianGroup::cyclic(4));
  CHECK(s2.free_rank == 0);
  CHECK(quasitorus_shape(s2.torsion) == QuasitorusShape{0, {Int(4)}});
  FgAbelianGroup g(2, vecs({{2, 0}}));
  auto s3 = free_torsion_split(g);
  CHECK(s3.free_rank == 1);
  CHECK(quasitorus_shape(s3.torsion) == QuasitorusShape{0, {Int(2)}});
  // the section splits the free projection
  CHECK(s3.free_projection * s3.free_section == IntMatrix::identity(1));
  // the free projection kills torsion
  CHECK(is_zero(s3.free_projection * make_vector({1, 0})));
}

TEST_CASE("shape is invariant under unimodular change of presentation") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 3, k = 1 + rng() % 3;
    IntMatrix rel = random_matrix(rng, r, k, 6);
    auto base = quasitorus_shape(FgAbelianGroup(r, rel.columns()));
    // random unimodular matrices from elementary operations
    IntMatrix u = IntMatrix::identity(r), v = IntMatrix::identity(k);
    for (int s = 0; s < 6; ++s) {
      if (r > 1) u.add_row_multiple(rng() % r, (rng() % (r - 1) + 1 + 0) % r, Int(long(rng() % 5) - 2));
      if (k > 1) v.add_col_multiple(rng() % k, (rng() % (k - 1) + 1) % k, Int(long(rng() % 5) - 2));
    }
    if (abs(determinant(u)) != 1 || abs(determinant(v)) != 1) continue;
    IntMatrix changed = u * rel * v;
    CHECK(quasitorus_shape(FgAbelianGroup(r, changed.columns())) == base);
    // permuting relator columns
    auto cols = rel.columns();
    std::reverse(cols.begin(), cols.end());
    CHECK(quasitorus_shape(FgAbelianGroup(r, cols)) == base);
    // character group round trip
    CHECK(quasitorus_shape(group_from_shape(base)) == base);
  }
}

TEST_CASE("successive quotients do not depend on generator order") {
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    auto g = FgAbelianGroup(3, random_matrix(rng, 3, 1, 5).columns());
    auto gens = random_matrix(rng, 3, 2, 5).columns();
    auto a = quotient(quotient(g, {gens[0]}).first, {gens[1]}).first;
    auto b = quotient(quotient(g, {gens[1]}).first, {gens[0]}).first;
    CHECK(quasitorus_shape(a) == quasitorus_shape(b));
  }
}

TEST_CASE("homomorphisms") {
  auto z = FgAbelianGroup::free(1);
  auto z2 = FgAbelianGroup::cyclic(2);
  GroupHom red(z, z2, IntMatrix{{1}});
  CHECK(red.is_surjective());
  CHECK_FALSE(red.is_injective());
  auto ker = red.kernel_generators();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == make_vector({2}));
  // Z/2 -> Z is not well defined
  CHECK_THROWS_AS(GroupHom(z2, z, IntMatrix{{1}}), InvalidInput);
  GroupHom dbl(z, z, IntMatrix{{2}});
  CHECK(dbl.is_injective());
  CHECK_FALSE(dbl.is_surjective());
}

TEST_CASE("subgroup presentation") {
  // <2> inside Z/6 is Z/3
  auto sub = subgroup_presentation(FgAbelianGroup::cyclic(6), vecs({{2}}));
  CHECK(quasitorus_shape(sub) == QuasitorusShape{0, {Int(3)}});
  auto sub2 = subgroup_presentation(FgAbelianGroup::free(1), vecs({{2}}));
  CHECK(quasitorus_shape(sub2) == QuasitorusShape{1, {}});
}
