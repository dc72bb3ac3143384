#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "coxring/zlattice.hpp"

namespace coxring::testing {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(make_vector(r));
  return out;
}

}  // namespace coxring::testing

namespace coxring::testing {

/// Brute-force Hilbert basis of the 2D cone spanned by r1, r2 (not opposite):
/// enumerate the lattice points of the closed parallelogram and keep those that
/// are not a sum of two nonzero lattice points of the cone. Cone membership and
/// parallelogram coordinates use Cramer's rule only.
inline std::vector<IntVector> brute_force_hilbert_2d(const IntVector& r1, const IntVector& r2) {
  const Int det = r1[0] * r2[1] - r1[1] * r2[0];
  auto p1 = primitive(r1);
  auto p2 = primitive(r2);
  if (det == 0) return {p1};
  // x = l1 r1 + l2 r2 with l1 = det(x, r2)/det, l2 = det(r1, x)/det
  auto coords = [&](const IntVector& x) {
    Int a = x[0] * r2[1] - x[1] * r2[0];
    Int b = r1[0] * x[1] - r1[1] * x[0];
    if (det < 0) {
      a = -a;
      b = -b;
    }
    return std::make_pair(a, b);  // scaled by |det|
  };
  const Int adet = abs(det);
  auto in_cone = [&](const IntVector& x) {
    auto [a, b] = coords(x);
    return a >= 0 && b >= 0;
  };
  Int bound = abs(r1[0]) + abs(r1[1]) + abs(r2[0]) + abs(r2[1]);
  std::vector<IntVector> box, para;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y) {
      IntVector v{x, y};
      if (is_zero(v) || !in_cone(v)) continue;
      box.push_back(v);
      auto [a, b] = coords(v);
      if (a <= adet && b <= adet) para.push_back(v);
    }
  std::vector<IntVector> out;
  for (const auto& v : para) {
    bool reducible = false;
    for (const auto& y : box) {
      if (y == v) continue;
      IntVector z{v[0] - y[0], v[1] - y[1]};
      if (!is_zero(z) && in_cone(z)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxring::testing
