#include "coxring/abgroup.hpp"

#include <algorithm>

#include "coxring/error.hpp"

namespace coxring {

FgAbelianGroup::FgAbelianGroup(std::size_t ambient_rank, std::vector<IntVector> relators)
    : ambient_rank_(ambient_rank) {
  for (auto& rel : relators) {
    if (rel.size() != ambient_rank) {
      throw DimensionMismatch("relator " + to_string(rel) + " not in Z^" + std::to_string(ambient_rank));
    }
    if (!is_zero(rel)) relators_.push_back(std::move(rel));
  }
  relation_hnf_ = hnf(relation_matrix());
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) { return FgAbelianGroup(rank, {}); }

FgAbelianGroup FgAbelianGroup::cyclic(long n) {
  if (n == 0) return free(1);
  return FgAbelianGroup(1, {make_vector({n})});
}

FgAbelianGroup FgAbelianGroup::from_invariants(std::size_t torus_rank, const std::vector<Int>& finite_factors) {
  const std::size_t n = torus_rank + finite_factors.size();
  std::vector<IntVector> rels;
  for (std::size_t i = 0; i < finite_factors.size(); ++i) {
    IntVector rel = zero_vector(n);
    rel[torus_rank + i] = finite_factors[i];
    rels.push_back(rel);
  }
  return FgAbelianGroup(n, rels);
}

IntMatrix FgAbelianGroup::relation_matrix() const { return IntMatrix::from_columns(relators_, ambient_rank_); }

void FgAbelianGroup::check_element(const IntVector& v) const {
  if (v.size() != ambient_rank_) {
    throw DimensionMismatch("element " + to_string(v) + " not in Z^" + std::to_string(ambient_rank_));
  }
}

bool FgAbelianGroup::element_eq(const IntVector& u, const IntVector& v) const {
  check_element(u);
  check_element(v);
  return is_zero_element(u - v);
}

bool FgAbelianGroup::is_zero_element(const IntVector& v) const {
  check_element(v);
  return solve_in_lattice(relation_hnf_, v).has_value();
}

IntVector FgAbelianGroup::canonical(const IntVector& v) const {
  check_element(v);
  return reduce_modulo(relation_hnf_, v);
}

std::size_t FgAbelianGroup::rank() const { return quasitorus_shape(*this).torus_rank; }

std::vector<Int> FgAbelianGroup::torsion_factors() const { return quasitorus_shape(*this).finite_factors; }

bool FgAbelianGroup::is_trivial() const {
  auto s = quasitorus_shape(*this);
  return s.torus_rank == 0 && s.finite_factors.empty();
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.cols() != source_.ambient_rank() || matrix_.rows() != target_.ambient_rank()) {
    throw DimensionMismatch("homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", expected " +
                            std::to_string(target_.ambient_rank()) + "x" + std::to_string(source_.ambient_rank()));
  }
  for (const auto& rel : source_.relators()) {
    if (!target_.is_zero_element(matrix_ * rel)) {
      throw InvalidInput("matrix does not respect the source relation " + to_string(rel));
    }
  }
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.ambient_rank()));
}

GroupHom GroupHom::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  return GroupHom(source, target, IntMatrix(target.ambient_rank(), source.ambient_rank()));
}

IntVector GroupHom::apply(const IntVector& v) const {
  source_.check_element(v);
  return matrix_ * v;
}

bool GroupHom::is_surjective() const {
  return quotient(target_, matrix_.columns()).first.is_trivial();
}

bool GroupHom::is_injective() const {
  const auto gens = kernel_generators();
  return std::all_of(gens.begin(), gens.end(), [&](const IntVector& k) { return source_.is_zero_element(k); });
}

std::vector<IntVector> GroupHom::kernel_generators() const {
  const std::size_t r = source_.ambient_rank();
  IntMatrix combined = matrix_.hconcat(target_.relation_matrix());
  std::vector<IntVector> gens;
  for (const auto& k : kernel_basis(combined)) {
    IntVector v(k.begin(), k.begin() + static_cast<long>(r));
    if (!is_zero(v)) gens.push_back(v);
  }
  return lattice_basis(gens, r);
}

// ---------------------------------------------------------------------------

std::pair<FgAbelianGroup, GroupHom> quotient(const FgAbelianGroup& g, const std::vector<IntVector>& generators) {
  std::vector<IntVector> rels = g.relators();
  for (const auto& h : generators) {
    g.check_element(h);
    rels.push_back(h);
  }
  FgAbelianGroup q(g.ambient_rank(), rels);
  GroupHom proj(g, q, IntMatrix::identity(g.ambient_rank()));
  return {q, proj};
}

QuasitorusShape quasitorus_shape(const FgAbelianGroup& g) {
  QuasitorusShape shape;
  const auto diag = snf(g.relation_matrix()).diagonal();
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) shape.finite_factors.push_back(d);
  }
  for (std::size_t i = 1; i < shape.finite_factors.size(); ++i) {
    if (shape.finite_factors[i] % shape.finite_factors[i - 1] != 0) {
      throw InvalidInput("Smith diagonal violates the divisibility chain");
    }
  }
  shape.torus_rank = g.ambient_rank() - nonzero;
  return shape;
}

FgAbelianGroup group_from_shape(const QuasitorusShape& shape) {
  return FgAbelianGroup::from_invariants(shape.torus_rank, shape.finite_factors);
}

namespace {

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e = zero_vector(n);
    e[j] = 1;
    auto x = solve_rational(u, e);
    for (std::size_t i = 0; i < n; ++i) {
      if ((*x)[i].get_den() != 1) throw InvalidInput("matrix is not unimodular");
      inv(i, j) = (*x)[i].get_num();
    }
  }
  return inv;
}

}  // namespace

FreeTorsionSplit free_torsion_split(const FgAbelianGroup& g) {
  const std::size_t r = g.ambient_rank();
  const auto s = snf(g.relation_matrix());
  const auto diag = s.diagonal();
  std::size_t nonzero = 0;
  std::vector<std::size_t> torsion_rows;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0) continue;
    ++nonzero;
    if (diag[i] > 1) {
      torsion_rows.push_back(i);
      factors.push_back(diag[i]);
    }
  }
  FreeTorsionSplit split;
  split.free_rank = r - nonzero;
  split.torsion = FgAbelianGroup::from_invariants(0, factors);
  split.free_projection = IntMatrix(split.free_rank, r);
  for (std::size_t k = 0; k < split.free_rank; ++k)
    for (std::size_t j = 0; j < r; ++j) split.free_projection(k, j) = s.U(nonzero + k, j);
  split.torsion_projection = IntMatrix(torsion_rows.size(), r);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k)
    for (std::size_t j = 0; j < r; ++j) split.torsion_projection(k, j) = s.U(torsion_rows[k], j);
  const IntMatrix u_inv = unimodular_inverse(s.U);
  split.free_section = IntMatrix(r, split.free_rank);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < split.free_rank; ++k) split.free_section(i, k) = u_inv(i, nonzero + k);
  return split;
}

FgAbelianGroup subgroup_presentation(const FgAbelianGroup& g, const std::vector<IntVector>& generators) {
  const std::size_t k = generators.size();
  for (const auto& h : generators) g.check_element(h);
  if (k == 0) return FgAbelianGroup::free(0);
  IntMatrix combined = IntMatrix::from_columns(generators, g.ambient_rank()).hconcat(g.relation_matrix());
  std::vector<IntVector> rels;
  for (const auto& v : kernel_basis(combined)) {
    rels.emplace_back(v.begin(), v.begin() + static_cast<long>(k));
  }
  return FgAbelianGroup(k, rels);
}

}  // namespace coxring
