#include "coxring/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "coxring/error.hpp"

namespace coxring {

namespace {

using Term = std::pair<Exponent, Rational>;
/// Terms sorted by descending monomial order.
using TermList = std::vector<Term>;

class Engine {
 public:
  explicit Engine(MonomialOrder order) : order_(order) {}

  bool less(const Exponent& a, const Exponent& b) const { return monomial_less(order_, a, b); }

  TermList from_poly(const Poly& p) const {
    TermList t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [this](const Term& x, const Term& y) { return less(y.first, x.first); });
    return t;
  }

  static bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  static Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
  }

  static Exponent minus(const Exponent& a, const Exponent& b) {
    Exponent d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
  }

  /// p - c · x^shift · g
  TermList sub_scaled(const TermList& p, const Rational& c, const Exponent& shift, const TermList& g) const {
    TermList out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      Exponent ge(shift.size());
      for (std::size_t k = 0; k < shift.size(); ++k) ge[k] = g[j].first[k] + shift[k];
      if (i == p.size() || less(p[i].first, ge)) {
        out.emplace_back(std::move(ge), -c * g[j].second);
        ++j;
      } else if (p[i].first == ge) {
        Rational v = p[i].second - c * g[j].second;
        if (v != 0) out.emplace_back(std::move(ge), v);
        ++i;
        ++j;
      } else {
        out.push_back(p[i++]);
      }
    }
    return out;
  }

  TermList normal_form(TermList p, const std::vector<TermList>& basis, std::size_t skip = SIZE_MAX) const {
    TermList remainder;
    std::size_t start = 0;
    while (start < p.size()) {
      const Term& lt = p[start];
      const TermList* reducer = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || basis[k].empty()) continue;
        if (divides(basis[k].front().first, lt.first)) {
          reducer = &basis[k];
          break;
        }
      }
      if (!reducer) {
        remainder.push_back(lt);
        ++start;
        continue;
      }
      TermList rest(p.begin() + static_cast<long>(start), p.end());
      p = sub_scaled(rest, lt.second / reducer->front().second, minus(lt.first, reducer->front().first), *reducer);
      start = 0;
    }
    return remainder;
  }

  static void make_monic(TermList& p) {
    if (p.empty()) return;
    Rational lc = p.front().second;
    for (auto& t : p) t.second /= lc;
  }

  TermList s_polynomial(const TermList& f, const TermList& g) const {
    Exponent l = lcm(f.front().first, g.front().first);
    TermList a = sub_scaled(TermList{}, Rational(-1) / f.front().second, minus(l, f.front().first), f);
    return sub_scaled(a, Rational(1) / g.front().second, minus(l, g.front().first), g);
  }

  std::vector<TermList> groebner(const std::vector<TermList>& generators) const {
    std::vector<TermList> g;
    using Key = std::tuple<long, Exponent, std::size_t, std::size_t>;
    std::set<Key> queue;
    std::set<std::pair<std::size_t, std::size_t>> queued;
    auto key = [&](std::size_t i, std::size_t j) {
      Exponent l = lcm(g[i].front().first, g[j].front().first);
      long deg = std::accumulate(l.begin(), l.end(), 0L);
      return Key{deg, l, i, j};
    };
    auto add = [&](TermList h) {
      make_monic(h);
      g.push_back(std::move(h));
      const std::size_t n = g.size() - 1;
      for (std::size_t k = 0; k < n; ++k) {
        queue.insert(key(k, n));
        queued.insert({k, n});
      }
    };
    for (const auto& f : generators)
      if (!f.empty()) add(f);

    while (!queue.empty()) {
      auto [deg, l, i, j] = *queue.begin();
      queue.erase(queue.begin());
      queued.erase({i, j});
      const Exponent& li = g[i].front().first;
      const Exponent& lj = g[j].front().first;
      bool coprime = true;
      for (std::size_t k = 0; k < li.size(); ++k)
        if (li[k] > 0 && lj[k] > 0) {
          coprime = false;
          break;
        }
      if (coprime) continue;
      bool chain = false;
      for (std::size_t k = 0; k < g.size() && !chain; ++k) {
        if (k == i || k == j) continue;
        if (!divides(g[k].front().first, l)) continue;
        auto pk = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        if (!queued.count(pk(i, k)) && !queued.count(pk(j, k))) chain = true;
      }
      if (chain) continue;
      TermList h = normal_form(s_polynomial(g[i], g[j]), g);
      if (!h.empty()) add(std::move(h));
    }
    return reduce(g);
  }

  std::vector<TermList> reduce(const std::vector<TermList>& g) const {
    std::vector<TermList> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < g.size() && !drop; ++j) {
        if (i == j) continue;
        if (divides(g[j].front().first, g[i].front().first)) {
          // equal leading monomials: keep the earlier element
          drop = g[j].front().first != g[i].front().first || j < i;
        }
      }
      if (!drop) minimal.push_back(g[i]);
    }
    std::vector<TermList> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      TermList tail(minimal[i].begin() + 1, minimal[i].end());
      TermList r{minimal[i].front()};
      for (auto& t : normal_form(tail, minimal, i)) r.push_back(std::move(t));
      make_monic(r);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [this](const TermList& a, const TermList& b) { return less(a.front().first, b.front().first); });
    return reduced;
  }

 private:
  MonomialOrder order_;
};

/// Polynomial ring without inverses in which the Laurent ring is presented.
struct Extension {
  RingPtr ring;
  std::vector<std::size_t> inverse_index;  // per original variable; SIZE_MAX if none
  std::vector<Poly> inverse_relations;

  explicit Extension(const RingPtr& base) {
    std::vector<std::string> names = base->names();
    inverse_index.assign(base->num_vars(), SIZE_MAX);
    for (std::size_t i = 0; i < base->num_vars(); ++i) {
      if (!base->invertible(i)) continue;
      std::string name = base->name(i) + "~";
      while (base->index_of(name)) name += "~";
      inverse_index[i] = names.size();
      names.push_back(name);
    }
    ring = make_ring(names);
    for (std::size_t i = 0; i < base->num_vars(); ++i) {
      if (inverse_index[i] == SIZE_MAX) continue;
      inverse_relations.push_back(Poly::variable(ring, i) * Poly::variable(ring, inverse_index[i]) -
                                  Poly::constant(ring, 1));
    }
  }

  Poly to_extended(const Poly& p) const {
    Poly::Terms t;
    const std::size_t n = ring->num_vars();
    for (const auto& [e, c] : p.terms()) {
      Exponent x(n, 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= 0) {
          x[i] = e[i];
        } else {
          x[inverse_index[i]] = -e[i];
        }
      }
      t.emplace(std::move(x), c);
    }
    return Poly(ring, std::move(t));
  }

  Poly from_extended(const RingPtr& base, const TermList& terms) const {
    Poly out(base);
    for (const auto& [e, c] : terms) {
      Exponent x(base->num_vars(), 0);
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = e[i];
        if (inverse_index[i] != SIZE_MAX) x[i] -= e[inverse_index[i]];
      }
      out = out + Poly::monomial(base, x, c);
    }
    return out;
  }
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& generators, MonomialOrder order) {
  Extension ext(ring);
  Engine engine(order);
  std::vector<TermList> gens;
  for (const auto& r : ext.inverse_relations) gens.push_back(engine.from_poly(r));
  for (const auto& g : generators) {
    if (!(*g.ring() == *ring)) throw InvalidInput("generator over a different ring");
    gens.push_back(engine.from_poly(ext.to_extended(g)));
  }
  auto basis = engine.groebner(gens);

  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.order_ = order;
  gb.extended_ = ext.ring;
  for (const auto& b : basis) {
    gb.extended_basis_.push_back(Poly(ext.ring, Poly::Terms(b.begin(), b.end())));
    Poly back = ext.from_extended(ring, b);
    if (back.is_zero()) continue;
    if (std::find(gb.basis_.begin(), gb.basis_.end(), back) == gb.basis_.end()) gb.basis_.push_back(back);
  }
  return gb;
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(extended_basis_.begin(), extended_basis_.end(),
                     [](const Poly& p) { return !p.is_zero() && p.is_constant(); });
}

Poly GroebnerBasis::normal_form(const Poly& f) const {
  if (!(*f.ring() == *ring_)) throw InvalidInput("normal form of a polynomial over a different ring");
  Extension ext(ring_);
  Engine engine(order_);
  std::vector<TermList> basis;
  for (const auto& b : extended_basis_) basis.push_back(engine.from_poly(b));
  return ext.from_extended(ring_, engine.normal_form(engine.from_poly(ext.to_extended(f)), basis));
}

Poly normal_form(const GroebnerBasis& g, const Poly& f) { return g.normal_form(f); }

bool radical_member(const RingPtr& ring, const std::vector<Poly>& generators, const Poly& f) {
  std::vector<std::string> names = ring->names();
  std::vector<bool> inv = ring->invertible_flags();
  std::string t = "t";
  while (ring->index_of(t)) t += "_";
  names.push_back(t);
  inv.push_back(false);
  RingPtr ext = make_ring(names, inv);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) images.push_back(Poly::variable(ext, i));
  std::vector<Poly> gens;
  for (const auto& g : generators) gens.push_back(g.map_to(ext, images));
  gens.push_back(Poly::constant(ext, 1) - Poly::variable(ext, ring->num_vars()) * f.map_to(ext, images));
  return buchberger(ext, gens).is_unit_ideal();
}

bool ideal_homogeneous(const Grading& g, const RingPtr& ring, const std::vector<Poly>& generators) {
  bool all_homogeneous = std::all_of(generators.begin(), generators.end(),
                                     [&](const Poly& p) { return homogeneity_check(g, p).has_value(); });
  if (all_homogeneous) return true;
  auto gb = buchberger(ring, generators);
  for (const auto& p : generators)
    for (const auto& [deg, part] : homogeneous_components(g, p))
      if (!gb.contains(part)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Presentation simplification

namespace {

struct Substitution {
  std::size_t variable;
  Poly value;  // over the input ring, not involving `variable`
  std::size_t relation;
};

Elimination apply_substitution(const Elimination& current, const Substitution& sub, const std::string& note) {
  const GradedAlgebra& a = current.algebra;
  const RingPtr& ring = a.ring();
  std::vector<std::string> names;
  std::vector<bool> inv;
  Grading grading{a.group(), {}};
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    if (i == sub.variable) continue;
    names.push_back(ring->name(i));
    inv.push_back(ring->invertible(i));
    grading.degrees.push_back(a.grading().degrees[i]);
  }
  RingPtr target = make_ring(names, inv);
  std::vector<Poly> inclusion;
  for (std::size_t i = 0, k = 0; i < ring->num_vars(); ++i) {
    inclusion.push_back(i == sub.variable ? Poly(target) : Poly::variable(target, k++));
  }
  const Poly value = sub.value.map_to(target, inclusion);
  std::vector<Poly> images = inclusion;
  images[sub.variable] = value;

  std::vector<Poly> relations;
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    if (r == sub.relation) continue;
    Poly p = a.relations()[r].map_to(target, images);
    if (!p.is_zero()) relations.push_back(std::move(p));
  }
  Elimination next{GradedAlgebra(target, grading, relations), {}, current.notes};
  for (const auto& [name, img] : current.images) next.images.emplace(name, img.map_to(target, images));
  next.notes.push_back(note);
  return next;
}

Elimination identity_elimination(const GradedAlgebra& a) {
  Elimination e{a, {}, {}};
  for (std::size_t i = 0; i < a.ring()->num_vars(); ++i) {
    e.images.emplace(a.ring()->name(i), Poly::variable(a.ring(), i));
  }
  return e;
}

bool is_constant_exponent(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

std::optional<Substitution> find_unit_relation(const GradedAlgebra& a) {
  const RingPtr& ring = a.ring();
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const auto& terms = a.relations()[r].terms();
    if (terms.size() != 2) continue;
    auto first = terms.begin();
    auto second = std::next(first);
    const Poly::Terms::value_type* constant = nullptr;
    const Poly::Terms::value_type* mono = nullptr;
    if (is_constant_exponent(first->first)) {
      constant = &*first;
      mono = &*second;
    } else if (is_constant_exponent(second->first)) {
      constant = &*second;
      mono = &*first;
    } else {
      continue;
    }
    const Exponent& m = mono->first;
    bool invertible_only = true;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0 && !ring->invertible(i)) invertible_only = false;
    if (!invertible_only) continue;
    // c0 + c1·m = 0  =>  m = -c0/c1
    const Rational value = -constant->second / mono->second;
    std::size_t var = SIZE_MAX;
    for (std::size_t i = m.size(); i-- > 0;)
      if (m[i] == 1 || m[i] == -1) {
        var = i;
        break;
      }
    if (var == SIZE_MAX) continue;
    if (!a.group().is_zero_element(a.grading().degrees[var])) {
      throw GradingObstruction("variable " + ring->name(var) + " has nonzero degree " +
                               to_string(a.grading().degrees[var]) + " in the grading group");
    }
    // x^e · rest = value  =>  x = (value / rest)^e for e = ±1
    Exponent rest = m;
    rest[var] = 0;
    const long e = m[var];
    Exponent x_exp(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) x_exp[i] = -e * rest[i];
    Rational coeff = e == 1 ? value : Rational(1) / value;
    return Substitution{var, Poly::monomial(ring, x_exp, coeff), r};
  }
  return std::nullopt;
}

std::optional<Substitution> find_linear_generator(const GradedAlgebra& a) {
  const RingPtr& ring = a.ring();
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const Poly& rel = a.relations()[r];
    for (std::size_t var = ring->num_vars(); var-- > 0;) {
      if (ring->invertible(var)) continue;
      const Poly::Terms::value_type* linear = nullptr;
      bool ok = true;
      for (const auto& t : rel.terms()) {
        if (t.first[var] == 0) continue;
        Exponent unit(ring->num_vars(), 0);
        unit[var] = 1;
        if (t.first != unit || linear) {
          ok = false;
          break;
        }
        linear = &t;
      }
      if (!ok || !linear) continue;
      // c·x + p = 0  =>  x = -p / c
      Poly p = rel - Poly::monomial(ring, linear->first, linear->second);
      return Substitution{var, Rational(-1) / linear->second * p, r};
    }
  }
  return std::nullopt;
}

}  // namespace

Elimination eliminate_unit_relations(const GradedAlgebra& a) {
  Elimination current = identity_elimination(a);
  while (auto sub = find_unit_relation(current.algebra)) {
    const auto& ring = current.algebra.ring();
    std::string note = "removed " + ring->name(sub->variable) + " = " + sub->value.to_string() + " using " +
                       current.algebra.relations()[sub->relation].to_string();
    current = apply_substitution(current, *sub, note);
  }
  return current;
}

Elimination eliminate_redundant_generators(const GradedAlgebra& a) {
  Elimination current = identity_elimination(a);
  while (auto sub = find_linear_generator(current.algebra)) {
    const auto& ring = current.algebra.ring();
    std::string note = "removed " + ring->name(sub->variable) + " = " + sub->value.to_string() + " using " +
                       current.algebra.relations()[sub->relation].to_string();
    current = apply_substitution(current, *sub, note);
  }
  return current;
}

}  // namespace coxring
