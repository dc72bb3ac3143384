#include "coxring/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "coxring/error.hpp"
#include "coxring/groebner.hpp"

namespace coxring {

bool monomial_less(MonomialOrder order, const Exponent& a, const Exponent& b) {
  if (order == MonomialOrder::Lex) return a < b;
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "degrevlex" || name == "grevlex") return MonomialOrder::DegRevLex;
  if (name == "lex") return MonomialOrder::Lex;
  throw InvalidInput("unknown monomial order '" + std::string(name) + "'");
}

std::string to_string(MonomialOrder order) { return order == MonomialOrder::Lex ? "lex" : "degrevlex"; }

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(std::vector<std::string> names, std::vector<bool> invertible)
    : names_(std::move(names)), invertible_(std::move(invertible)) {
  if (invertible_.empty()) invertible_.assign(names_.size(), false);
  if (invertible_.size() != names_.size()) throw DimensionMismatch("one invertibility flag per variable expected");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw InvalidInput("invalid variable name '" + n + "'");
    }
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~')) {
        throw InvalidInput("invalid variable name '" + n + "'");
      }
    if (!seen.insert(n).second) throw InvalidInput("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool PolyRing::has_invertible() const {
  return std::any_of(invertible_.begin(), invertible_.end(), [](bool b) { return b; });
}

RingPtr make_ring(std::vector<std::string> names, std::vector<bool> invertible) {
  return std::make_shared<const PolyRing>(std::move(names), std::move(invertible));
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
}

Poly::Poly(RingPtr ring, Terms terms) : Poly(std::move(ring)) {
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    if (e.size() != ring_->num_vars()) throw DimensionMismatch("exponent length differs from variable count");
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && !ring_->invertible(i)) {
        throw InvalidInput("negative exponent on non-invertible variable " + ring_->name(i));
      }
    terms_.emplace(e, c);
  }
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Exponent e(ring->num_vars(), 0);
  return Poly(ring, Terms{{e, c}});
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
  Exponent e(ring->num_vars(), 0);
  e.at(i) = 1;
  return Poly(ring, Terms{{e, Rational(1)}});
}

Poly Poly::monomial(RingPtr ring, const Exponent& e, const Rational& c) { return Poly(ring, Terms{{e, c}}); }

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

long Poly::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
  return d;
}

void Poly::check_same_ring(const Poly& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) throw InvalidInput("polynomials from different rings");
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = r.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly r(a.ring_);
  const std::size_t n = a.ring_->num_vars();
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Poly operator*(const Rational& s, const Poly& p) {
  Poly r(p.ring_);
  if (s == 0) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return *a.ring_ == *b.ring_ && a.terms_ == b.terms_; }

Poly Poly::pow(unsigned long n) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->num_vars()) throw DimensionMismatch("point has wrong number of coordinates");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0) {
        throw PointOffVariety("invertible variable " + ring_->name(i) + " vanishes at the point");
      }
      Rational base = e[i] > 0 ? point[i] : Rational(1) / point[i];
      for (long k = 0; k < std::labs(e[i]); ++k) v *= base;
    }
    total += v;
  }
  return total;
}

namespace {

Poly invert_monomial(const Poly& p) {
  if (p.terms().size() != 1) throw InvalidInput("only monomials can be inverted: " + p.to_string());
  const auto& [e, c] = *p.terms().begin();
  Exponent neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  return Poly::monomial(p.ring(), neg, Rational(1) / c);
}

}  // namespace

Poly Poly::map_to(const RingPtr& target, const std::vector<Poly>& images) const {
  if (images.size() != ring_->num_vars()) throw DimensionMismatch("one image per variable expected");
  Poly result(target);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t = t * images[i].pow(static_cast<unsigned long>(e[i]));
      if (e[i] < 0) t = t * invert_monomial(images[i]).pow(static_cast<unsigned long>(-e[i]));
    }
    result = result + t;
  }
  return result;
}

std::vector<std::pair<Exponent, Rational>> Poly::sorted_terms(MonomialOrder order) const {
  std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [order](const auto& x, const auto& y) { return monomial_less(order, y.first, x.first); });
  return ts;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Poly::to_string(MonomialOrder order) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(order)) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += format_rational(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Int number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly result(ring_);
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    Poly t = term();
    result = negative ? -t : t;
    while (true) {
      if (accept('+')) {
        result = result + term();
      } else if (accept('-')) {
        result = result - term();
      } else {
        break;
      }
    }
    return result;
  }

  Poly term() {
    Poly result = power();
    while (accept('*')) result = result * power();
    return result;
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    Int n = number();
    if (!n.fits_ulong_p()) fail("exponent too large");
    if (!negative) return base.pow(n.get_ui());
    if (base.terms().size() != 1) fail("negative power of a non-monomial");
    const auto& e = base.terms().begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && !ring_->invertible(i)) fail("negative exponent on non-invertible variable " + ring_->name(i));
    return invert_monomial(base).pow(n.get_ui());
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = number();
      Int den = 1;
      if (accept('/')) den = number();
      if (den == 0) fail("division by zero");
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '~'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

// ---------------------------------------------------------------------------
// Gradings

IntVector Grading::degree_of(const Exponent& e) const {
  if (e.size() != degrees.size()) throw DimensionMismatch("exponent length differs from number of degrees");
  IntVector d = group.zero();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) d = d + Int(e[i]) * degrees[i];
  return d;
}

GradedAlgebra::GradedAlgebra(RingPtr ring, Grading grading, std::vector<Poly> relations)
    : ring_(std::move(ring)), grading_(std::move(grading)), relations_(std::move(relations)) {
  if (grading_.degrees.size() != ring_->num_vars()) {
    throw DimensionMismatch("grading has " + std::to_string(grading_.degrees.size()) + " degrees for " +
                            std::to_string(ring_->num_vars()) + " variables");
  }
  for (const auto& d : grading_.degrees) grading_.group.check_element(d);
  for (const auto& r : relations_)
    if (!(*r.ring() == *ring_)) throw InvalidInput("relation over a different ring");
}

bool GradedAlgebra::relations_homogeneous() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [&](const Poly& r) { return homogeneity_check(grading_, r).has_value(); });
}

void GradedAlgebra::check_homogeneous() const {
  for (const auto& r : relations_)
    if (!homogeneity_check(grading_, r)) throw NotHomogeneous("relation " + r.to_string() + " is not homogeneous");
}

GradedAlgebra make_graded_algebra(RingPtr ring, Grading grading, std::vector<Poly> relations) {
  GradedAlgebra a(std::move(ring), std::move(grading), std::move(relations));
  a.check_homogeneous();
  return a;
}

std::optional<IntVector> homogeneity_check(const Grading& g, const Poly& f) {
  if (f.is_zero()) return g.group.canonical(g.group.zero());
  std::optional<IntVector> degree;
  for (const auto& [e, c] : f.terms()) {
    IntVector d = g.group.canonical(g.degree_of(e));
    if (!degree) {
      degree = d;
    } else if (*degree != d) {
      return std::nullopt;
    }
  }
  return degree;
}

std::map<IntVector, Poly> homogeneous_components(const Grading& g, const Poly& f) {
  std::map<IntVector, Poly::Terms> parts;
  for (const auto& [e, c] : f.terms()) parts[g.group.canonical(g.degree_of(e))].emplace(e, c);
  std::map<IntVector, Poly> out;
  for (auto& [d, t] : parts) out.emplace(d, Poly(f.ring(), std::move(t)));
  return out;
}

GradedAlgebra coarsen(const GradedAlgebra& a, const GroupHom& psi) {
  const auto& k = a.group();
  if (psi.source().ambient_rank() != k.ambient_rank()) {
    throw DimensionMismatch("coarsening homomorphism does not start at the grading group");
  }
  for (const auto& rel : k.relators())
    if (!psi.source().is_zero_element(rel)) throw InvalidInput("homomorphism source differs from grading group");
  Grading g{psi.target(), {}};
  for (const auto& d : a.grading().degrees) g.degrees.push_back(psi.apply(d));
  return GradedAlgebra(a.ring(), g, a.relations());
}

GradedAlgebra lift(const GradedAlgebra& a, const GroupHom& g, const std::vector<IntVector>& degree_choices) {
  if (degree_choices.size() != a.ring()->num_vars()) throw DimensionMismatch("one degree choice per variable expected");
  if (g.target().ambient_rank() != a.group().ambient_rank()) {
    throw DimensionMismatch("lifting homomorphism does not end at the grading group");
  }
  for (std::size_t i = 0; i < degree_choices.size(); ++i) {
    if (!a.group().element_eq(g.apply(degree_choices[i]), a.grading().degrees[i])) {
      throw ChoiceMismatch("choice " + to_string(degree_choices[i]) + " for " + a.ring()->name(i) +
                           " does not map to its degree " + to_string(a.grading().degrees[i]));
    }
  }
  GradedAlgebra lifted(a.ring(), Grading{g.source(), degree_choices}, a.relations());
  return lifted;
}

GradedAlgebra trivial_extend(const GradedAlgebra& a, const GroupHom& embed) {
  if (!embed.is_injective()) throw NotInjective("embedding has a nontrivial kernel");
  return coarsen(a, embed);
}

std::vector<Exponent> monomials_up_to(const PolyRing& ring, std::size_t max_degree) {
  std::vector<Exponent> out;
  const std::size_t n = ring.num_vars();
  Exponent e(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
    if (i == n) {
      if (remaining < static_cast<long>(max_degree)) out.push_back(e);
      return;
    }
    const long lo = ring.invertible(i) ? -remaining : 0;
    for (long x = lo; x <= remaining; ++x) {
      e[i] = x;
      rec(i + 1, remaining - std::labs(x));
    }
    e[i] = 0;
  };
  rec(0, static_cast<long>(max_degree));
  return out;
}

WeightData weight_data(const GradedAlgebra& a, std::size_t degree_bound) {
  const auto& k = a.group();
  const std::size_t n = a.ring()->num_vars();
  std::vector<IntVector> degrees;
  WeightData wd;
  wd.degree_bound = degree_bound;
  if (a.relations().empty()) {
    wd.exact = true;
    for (std::size_t i = 0; i < n; ++i) {
      degrees.push_back(k.canonical(a.grading().degrees[i]));
      if (a.ring()->invertible(i)) degrees.push_back(k.canonical(-a.grading().degrees[i]));
    }
  } else {
    wd.exact = false;
    auto gb = buchberger(a.ring(), a.relations());
    for (const auto& e : monomials_up_to(*a.ring(), degree_bound)) {
      if (gb.normal_form(Poly::monomial(a.ring(), e)).is_zero()) continue;
      degrees.push_back(k.canonical(a.grading().degree_of(e)));
    }
  }
  std::vector<IntVector> nonzero;
  for (const auto& d : degrees)
    if (!k.is_zero_element(d)) nonzero.push_back(d);
  std::sort(nonzero.begin(), nonzero.end());
  nonzero.erase(std::unique(nonzero.begin(), nonzero.end()), nonzero.end());
  if (!wd.exact) {
    // keep only degrees that are not sums of smaller surviving degrees
    std::stable_sort(nonzero.begin(), nonzero.end(), [](const IntVector& x, const IntVector& y) {
      Int nx = 0, ny = 0;
      for (const auto& c : x) nx += abs(c);
      for (const auto& c : y) ny += abs(c);
      return nx < ny;
    });
    std::vector<IntVector> kept;
    for (const auto& d : nonzero) {
      if (!kept.empty() && member(AffineMonoid(k.ambient_rank(), kept), d, degree_bound)) continue;
      kept.push_back(d);
    }
    std::sort(kept.begin(), kept.end());
    nonzero = kept;
  }
  wd.weight_monoid = AffineMonoid(k.ambient_rank(), nonzero);
  wd.weight_group_generators = wd.weight_monoid.generators();
  wd.weight_group = subgroup_presentation(k, wd.weight_group_generators);
  auto split = free_torsion_split(k);
  if (split.torsion.ambient_rank() == 0) {
    std::vector<IntVector> coords;
    for (const auto& d : wd.weight_monoid.generators()) coords.push_back(split.free_projection * d);
    wd.weight_cone = cone_from_generators(split.free_rank, coords);
  }
  return wd;
}

bool homogeneous_unit_check(const GradedAlgebra& a, const Poly& f) {
  if (!a.relations().empty()) throw InvalidInput("unit check needs a relation-free (Laurent) polynomial ring");
  if (f.terms().size() != 1) return false;
  const auto& e = f.terms().begin()->first;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !a.ring()->invertible(i)) return false;
  return true;
}

}  // namespace coxring
