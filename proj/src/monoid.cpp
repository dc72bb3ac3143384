#include "coxring/monoid.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "coxring/error.hpp"

namespace coxring {

AffineMonoid::AffineMonoid(std::size_t ambient_rank, const std::vector<IntVector>& generators)
    : ambient_rank_(ambient_rank) {
  std::set<IntVector> seen;
  for (const auto& g : generators) {
    if (g.size() != ambient_rank) {
      throw DimensionMismatch("generator " + to_string(g) + " not in Z^" + std::to_string(ambient_rank));
    }
    if (is_zero(g) || !seen.insert(g).second) continue;
    generators_.push_back(g);
  }
}

namespace {

/// Coordinates on the saturated lattice span(generators) ∩ Z^n.
struct SpanChart {
  std::size_t dim = 0;
  IntMatrix basis;        // n × dim, columns in Hermite form
  IntMatrix left_inverse;  // dim × n, left_inverse · basis = I
  std::vector<IntVector> orthogonal;

  SpanChart(const std::vector<IntVector>& generators, std::size_t n) {
    auto b = saturation_basis(generators, n);
    dim = b.size();
    basis = IntMatrix::from_columns(b, n);
    if (dim > 0) {
      auto s = snf(basis);
      IntMatrix proj(dim, n);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < n; ++j) proj(i, j) = s.U(i, j);
      left_inverse = s.V * proj;
    } else {
      left_inverse = IntMatrix(0, n);
    }
    orthogonal = generators.empty() ? IntMatrix::identity(n).columns()
                                    : kernel_basis(IntMatrix::from_rows(generators, n));
  }

  std::optional<IntVector> coords(const IntVector& x) const {
    for (const auto& o : orthogonal)
      if (dot(o, x) != 0) return std::nullopt;
    return left_inverse * x;
  }

  IntVector ambient(const IntVector& c) const { return basis * c; }
};

/// Primitive inner normals of the facets of the full-dimensional cone
/// generated by `gens` in Q^d.
std::vector<IntVector> facet_normals(const std::vector<IntVector>& gens, std::size_t d) {
  std::vector<IntVector> normals;
  if (d == 0) return normals;
  std::set<IntVector> dirs;
  for (const auto& g : gens)
    if (!is_zero(g)) dirs.insert(primitive(g));
  std::vector<IntVector> g(dirs.begin(), dirs.end());
  std::set<IntVector> found;
  const std::size_t k = d - 1;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      std::vector<IntVector> rows;
      for (auto i : idx) rows.push_back(g[i]);
      IntMatrix m = k ? IntMatrix::from_rows(rows, d) : IntMatrix(0, d);
      auto ker = kernel_basis(m);
      if (ker.size() != 1) return;
      for (int sign : {1, -1}) {
        IntVector n = Int(sign) * ker[0];
        bool ok = true;
        for (const auto& x : g)
          if (dot(n, x) < 0) {
            ok = false;
            break;
          }
        if (ok) found.insert(primitive(n));
      }
      return;
    }
    for (std::size_t i = start; i < g.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  normals.assign(found.begin(), found.end());
  // A half-space can show up when the cone is not pointed; a normal is a
  // facet only if some generator lies strictly inside its half-space.
  normals.erase(std::remove_if(normals.begin(), normals.end(),
                               [&](const IntVector& n) {
                                 return std::none_of(g.begin(), g.end(),
                                                     [&](const IntVector& x) { return dot(n, x) > 0; });
                               }),
                normals.end());
  return normals;
}

bool pointed_in_chart(const std::vector<IntVector>& normals, std::size_t d) {
  if (d == 0) return true;
  if (normals.empty()) return false;
  return rank(IntMatrix::from_rows(normals, d)) == d;
}

std::vector<IntVector> to_coords(const SpanChart& chart, const std::vector<IntVector>& xs) {
  std::vector<IntVector> out;
  for (const auto& x : xs) out.push_back(*chart.coords(x));
  return out;
}

bool satisfies(const std::vector<IntVector>& normals, const IntVector& x) {
  return std::all_of(normals.begin(), normals.end(), [&](const IntVector& n) { return dot(n, x) >= 0; });
}

void check_ambient(const std::vector<IntVector>& xs, std::size_t r) {
  for (const auto& x : xs)
    if (x.size() != r) throw DimensionMismatch("vector " + to_string(x) + " not in Z^" + std::to_string(r));
}

/// Lattice points in the half-open parallelepiped of a simplicial cone with
/// the d independent columns of `rays`.
std::vector<IntVector> parallelepiped_points(const IntMatrix& rays) {
  const std::size_t d = rays.rows();
  auto s = snf(rays);
  // Z^d / rays·Z^d ≅ ⊕ Z/D_ii via x ↦ U x; representatives are U^{-1} e.
  IntMatrix u_inv(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    IntVector e = zero_vector(d);
    e[j] = 1;
    auto x = solve_rational(s.U, e);
    for (std::size_t i = 0; i < d; ++i) u_inv(i, j) = (*x)[i].get_num();
  }
  std::vector<IntVector> points;
  IntVector e = zero_vector(d);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      IntVector x = u_inv * e;
      auto lambda = *solve_rational(rays, x);
      for (std::size_t t = 0; t < d; ++t) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), lambda[t].get_num_mpz_t(), lambda[t].get_den_mpz_t());
        if (fl != 0) x = x - fl * rays.column(t);
      }
      points.push_back(x);
      return;
    }
    for (Int v = 0; v < s.D(i, i); ++v) {
      e[i] = v;
      rec(i + 1);
    }
    e[i] = 0;
  };
  rec(0);
  return points;
}

/// Hilbert basis of a pointed cone that is full-dimensional in Z^d.
std::vector<IntVector> hilbert_basis_full(const std::vector<IntVector>& rays, std::size_t d) {
  if (d == 0) return {};
  auto normals = facet_normals(rays, d);
  if (!pointed_in_chart(normals, d)) throw NonPointedCone("cone contains a line");
  std::set<IntVector> candidates;
  for (const auto& r : rays) candidates.insert(primitive(r));
  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      std::vector<IntVector> cols;
      for (auto i : idx) cols.push_back(rays[i]);
      IntMatrix m = IntMatrix::from_columns(cols, d);
      if (determinant(m) == 0) return;
      for (auto& p : parallelepiped_points(m))
        if (!is_zero(p)) candidates.insert(p);
      return;
    }
    for (std::size_t i = start; i < rays.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  std::vector<IntVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      IntVector diff = x - y;
      if (satisfies(normals, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace

RationalCone cone_from_generators(std::size_t ambient_rank, const std::vector<IntVector>& generators) {
  check_ambient(generators, ambient_rank);
  std::set<IntVector> dirs;
  for (const auto& g : generators)
    if (!is_zero(g)) dirs.insert(primitive(g));
  std::vector<IntVector> rays(dirs.begin(), dirs.end());
  for (std::size_t i = 0; i < rays.size();) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (in_cone(others, rays[i], ambient_rank)) {
      rays.erase(rays.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  RationalCone cone{ambient_rank, rays, true};
  SpanChart chart(rays, ambient_rank);
  auto coords = to_coords(chart, rays);
  cone.pointed = pointed_in_chart(facet_normals(coords, chart.dim), chart.dim);
  return cone;
}

RationalCone weight_cone(const AffineMonoid& m) { return cone_from_generators(m.ambient_rank(), m.generators()); }

bool in_cone(const std::vector<IntVector>& generators, const IntVector& x, std::size_t ambient_rank) {
  check_ambient(generators, ambient_rank);
  check_ambient({x}, ambient_rank);
  if (is_zero(x)) return true;
  if (generators.empty()) return false;
  SpanChart chart(generators, ambient_rank);
  auto cx = chart.coords(x);
  if (!cx) return false;
  return satisfies(facet_normals(to_coords(chart, generators), chart.dim), *cx);
}

std::vector<IntVector> cone_inequalities(const std::vector<IntVector>& generators, std::size_t ambient_rank) {
  check_ambient(generators, ambient_rank);
  SpanChart chart(generators, ambient_rank);
  std::vector<IntVector> ineqs;
  for (const auto& n : facet_normals(to_coords(chart, generators), chart.dim)) {
    ineqs.push_back(chart.left_inverse.transpose() * n);
  }
  for (const auto& o : chart.orthogonal) {
    ineqs.push_back(o);
    ineqs.push_back(-o);
  }
  return ineqs;
}

std::vector<IntVector> hilbert_basis(const RationalCone& c) {
  return hilbert_basis_in_lattice(c.rays, IntMatrix::identity(c.ambient_rank).columns(), c.ambient_rank);
}

std::vector<IntVector> hilbert_basis_in_lattice(const std::vector<IntVector>& rays,
                                                const std::vector<IntVector>& lattice_basis_vectors,
                                                std::size_t ambient_rank) {
  check_ambient(rays, ambient_rank);
  check_ambient(lattice_basis_vectors, ambient_rank);
  std::vector<IntVector> nonzero;
  for (const auto& r : rays)
    if (!is_zero(r)) nonzero.push_back(r);
  if (nonzero.empty()) return {};
  // Express everything in coordinates of the lattice, then restrict to the
  // saturated lattice of the cone's span inside it.
  const std::size_t k = lattice_basis_vectors.size();
  IntMatrix lb = IntMatrix::from_columns(lattice_basis_vectors, ambient_rank);
  std::vector<IntVector> ray_coords;
  for (const auto& r : nonzero) {
    auto x = solve_rational(lb, r);
    if (!x) throw InvalidInput("ray " + to_string(r) + " does not lie in the span of the lattice");
    Int den = 1;
    for (const auto& q : *x) den = lcm(den, Int(q.get_den()));
    IntVector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = Int((*x)[i] * den);
    ray_coords.push_back(primitive(c));
  }
  SpanChart chart(ray_coords, k);
  auto hb = hilbert_basis_full(to_coords(chart, ray_coords), chart.dim);
  std::vector<IntVector> out;
  for (const auto& h : hb) out.push_back(lb * chart.ambient(h));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& inequalities, std::size_t dim) {
  check_ambient(inequalities, dim);
  if (dim == 0) return {};
  if (inequalities.empty() || rank(IntMatrix::from_rows(inequalities, dim)) < dim) {
    throw NonPointedCone("inequality system has a nontrivial lineality space");
  }
  std::set<IntVector> found;
  const std::size_t k = dim - 1;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      std::vector<IntVector> rows;
      for (auto i : idx) rows.push_back(inequalities[i]);
      IntMatrix m = k ? IntMatrix::from_rows(rows, dim) : IntMatrix(0, dim);
      auto ker = kernel_basis(m);
      if (ker.size() != 1) return;
      for (int sign : {1, -1}) {
        IntVector ray = Int(sign) * ker[0];
        if (satisfies(inequalities, ray)) found.insert(primitive(ray));
      }
      return;
    }
    for (std::size_t i = start; i < inequalities.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

bool member(const AffineMonoid& m, const IntVector& v, std::size_t bound) {
  check_ambient({v}, m.ambient_rank());
  if (is_zero(v)) return true;
  std::set<IntVector> level{zero_vector(m.ambient_rank())};
  for (std::size_t step = 0; step < bound && !level.empty(); ++step) {
    std::set<IntVector> next;
    for (const auto& x : level)
      for (const auto& g : m.generators()) {
        IntVector y = x + g;
        if (y == v) return true;
        next.insert(std::move(y));
      }
    level = std::move(next);
  }
  return false;
}

std::optional<std::size_t> sufficient_member_bound(const AffineMonoid& m, const IntVector& v) {
  check_ambient({v}, m.ambient_rank());
  const auto& gens = m.generators();
  if (gens.empty()) return 0;
  SpanChart chart(gens, m.ambient_rank());
  auto coords = to_coords(chart, gens);
  auto normals = facet_normals(coords, chart.dim);
  if (!pointed_in_chart(normals, chart.dim)) return std::nullopt;
  auto cv = chart.coords(v);
  if (!cv) return 0;
  // The sum of the facet normals is a positive integer on every nonzero
  // lattice point of the cone, so it bounds the coefficient sum.
  IntVector phi = zero_vector(chart.dim);
  for (const auto& n : normals) phi = phi + n;
  Int value = dot(phi, *cv);
  if (value < 0) return 0;
  return static_cast<std::size_t>(value.get_ui());
}

bool member_in_group(const FgAbelianGroup& g, const std::vector<IntVector>& generators, const IntVector& v,
                     std::size_t bound) {
  g.check_element(v);
  const IntVector target = g.canonical(v);
  const IntVector zero = g.canonical(g.zero());
  if (target == zero) return true;
  std::vector<IntVector> gens;
  for (const auto& x : generators) gens.push_back(g.canonical(x));
  std::set<IntVector> seen{zero};
  std::set<IntVector> level{zero};
  for (std::size_t step = 0; step < bound && !level.empty(); ++step) {
    std::set<IntVector> next;
    for (const auto& x : level)
      for (const auto& h : gens) {
        IntVector y = g.canonical(x + h);
        if (y == target) return true;
        next.insert(std::move(y));
      }
    level = std::move(next);
  }
  return false;
}

std::size_t default_group_bound(const AffineMonoid& m) {
  Int max_norm = 0;
  for (const auto& g : m.generators()) {
    Int norm = 0;
    for (const auto& x : g) norm += abs(x);
    max_norm = std::max(max_norm, norm);
  }
  Int bound = 2 * Int(static_cast<unsigned long>(m.ambient_rank())) * max_norm;
  return std::max<std::size_t>(1, bound.get_ui());
}

bool is_group(const AffineMonoid& m, std::optional<std::size_t> bound) {
  const std::size_t b = bound.value_or(default_group_bound(m));
  return std::all_of(m.generators().begin(), m.generators().end(),
                     [&](const IntVector& g) { return member(m, -g, b); });
}

bool is_group_in(const FgAbelianGroup& g, const std::vector<IntVector>& generators, std::optional<std::size_t> bound) {
  const std::size_t b = bound.value_or(default_group_bound(AffineMonoid(g.ambient_rank(), generators)));
  return std::all_of(generators.begin(), generators.end(),
                     [&](const IntVector& x) { return member_in_group(g, generators, -x, b); });
}

bool is_saturated(const AffineMonoid& m) {
  const auto& gens = m.generators();
  if (gens.empty()) return true;
  const std::size_t r = m.ambient_rank();
  SpanChart chart(gens, r);
  auto normals = facet_normals(to_coords(chart, gens), chart.dim);
  if (pointed_in_chart(normals, chart.dim)) {
    auto lattice = lattice_basis(gens, r);
    for (const auto& h : hilbert_basis_in_lattice(gens, lattice, r)) {
      if (!member(m, h, *sufficient_member_bound(m, h))) return false;
    }
    return true;
  }
  if (normals.empty()) return is_group(m);
  throw InvalidInput("saturation test is only available for pointed cones and groups");
}

AffineMonoid intersect(const AffineMonoid& l, const AffineMonoid& m) {
  if (l.ambient_rank() != m.ambient_rank()) throw DimensionMismatch("monoids in different ambient lattices");
  const std::size_t r = l.ambient_rank();
  if (!is_saturated(l)) throw UnsaturatedInput("left monoid is not saturated in its lattice");
  if (!is_saturated(m)) throw UnsaturatedInput("right monoid is not saturated in its lattice");
  auto lattice = lattice_intersection(l.generators(), m.generators(), r);
  if (lattice.empty()) return AffineMonoid(r, {});
  IntMatrix lb = IntMatrix::from_columns(lattice, r);
  std::vector<IntVector> ineqs;
  for (const auto* side : {&l, &m}) {
    for (const auto& a : cone_inequalities(side->generators(), r)) ineqs.push_back(lb.transpose() * a);
  }
  const std::size_t k = lattice.size();
  auto rays = extreme_rays(ineqs, k);
  std::vector<IntVector> gens;
  for (const auto& y : hilbert_basis_in_lattice(rays, IntMatrix::identity(k).columns(), k)) gens.push_back(lb * y);
  std::sort(gens.begin(), gens.end());
  return AffineMonoid(r, gens);
}

AffineMonoid preimage_monoid(const IntMatrix& alpha, const AffineMonoid& l, const std::vector<IntVector>& preimages) {
  if (alpha.rows() != l.ambient_rank()) throw DimensionMismatch("homomorphism target differs from monoid lattice");
  const auto& gens = l.generators();
  if (preimages.size() < gens.size()) {
    throw PreimageMissing("generator " + to_string(gens[preimages.size()]) + " has no supplied preimage");
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (alpha * preimages[i] != gens[i]) {
      throw PreimageMissing("supplied vector " + to_string(preimages[i]) + " does not map to " + to_string(gens[i]));
    }
    out.push_back(preimages[i]);
  }
  for (const auto& u : kernel_basis(alpha)) {
    out.push_back(u);
    out.push_back(-u);
  }
  return AffineMonoid(alpha.cols(), out);
}

}  // namespace coxring
