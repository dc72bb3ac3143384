#include "coxring/pmline.hpp"

#include <numeric>

#include "coxring/error.hpp"

namespace coxring {

P1Point normalize_point(long b, long c) {
  if (b == 0 && c == 0) throw InvalidInput("[0,0] is not a point of P^1");
  long g = std::gcd(b, c);
  b /= g;
  c /= g;
  if (b < 0 || (b == 0 && c < 0)) {
    b = -b;
    c = -c;
  }
  return {b, c};
}

std::string to_string(const PointId& p) {
  if (const auto* m = std::get_if<MarkedPoint>(&p)) return "a" + std::to_string(m->i) + "_" + std::to_string(m->j);
  const auto& q = std::get<P1Point>(p);
  return "[" + std::to_string(q.b) + "," + std::to_string(q.c) + "]";
}

Int CurveDivisor::coefficient(const PointId& p) const {
  auto it = coefficients.find(p);
  return it == coefficients.end() ? Int(0) : it->second;
}

bool CurveDivisor::is_effective() const {
  for (const auto& [p, c] : coefficients)
    if (c < 0) return false;
  return true;
}

namespace {

CurveDivisor combine(const CurveDivisor& a, const CurveDivisor& b, int sign) {
  CurveDivisor out = a;
  for (const auto& [p, c] : b.coefficients) {
    Int v = out.coefficient(p) + sign * c;
    if (v == 0) {
      out.coefficients.erase(p);
    } else {
      out.coefficients[p] = v;
    }
  }
  return out;
}

}  // namespace

CurveDivisor operator+(const CurveDivisor& a, const CurveDivisor& b) { return combine(a, b, 1); }
CurveDivisor operator-(const CurveDivisor& a, const CurveDivisor& b) { return combine(a, b, -1); }

CurveModel::CurveModel(const std::vector<std::pair<long, long>>& points, std::vector<std::size_t> multiplicities)
    : multiplicities_(std::move(multiplicities)) {
  if (points.empty()) throw InvalidInput("at least one marked point is required");
  if (points.size() != multiplicities_.size()) throw DimensionMismatch("one multiplicity per marked point expected");
  for (const auto& [b, c] : points) {
    auto p = normalize_point(b, c);
    for (const auto& q : points_)
      if (q == p) throw InvalidInput("marked points must be pairwise different");
    points_.push_back(p);
  }
  for (std::size_t n : multiplicities_)
    if (n < 1) throw InvalidInput("multiplicities must be at least 1");
  for (std::size_t j = 1; j <= multiplicities_[0]; ++j) basis_.push_back({0, j});
  for (std::size_t i = 1; i < points_.size(); ++i)
    for (std::size_t j = 1; j < multiplicities_[i]; ++j) basis_.push_back({i, j});
}

std::optional<std::size_t> CurveModel::marked_index(const P1Point& p) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == p) return i;
  return std::nullopt;
}

CurveDivisor CurveModel::pullback(const P1Point& p) const {
  CurveDivisor d;
  if (auto i = marked_index(p)) {
    for (std::size_t j = 1; j <= multiplicities_[*i]; ++j) d.coefficients[MarkedPoint{*i, j}] = 1;
  } else {
    d.coefficients[p] = 1;
  }
  return d;
}

void CurveModel::check_point(const PointId& p) const {
  if (const auto* m = std::get_if<MarkedPoint>(&p)) {
    if (m->i >= points_.size() || m->j < 1 || m->j > multiplicities_[m->i]) {
      throw InvalidInput("no marked point " + to_string(p));
    }
    return;
  }
  const auto& q = std::get<P1Point>(p);
  if (!(normalize_point(q.b, q.c) == q)) throw InvalidInput("point " + to_string(p) + " is not normalized");
  if (marked_index(q)) throw InvalidInput("point " + to_string(p) + " lies over a marked point");
}

std::optional<std::size_t> CurveModel::basis_index(const MarkedPoint& p) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k] == p) return k;
  return std::nullopt;
}

void RationalFn::check() const {
  if (scalar == 0) throw InvalidInput("the zero function has no divisor");
  long deg = 0;
  for (const auto& [p, e] : factors) deg += e;
  if (deg != 0) throw InvalidInput("numerator and denominator degrees differ");
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  RationalFn out{a.scalar * b.scalar, a.factors};
  for (const auto& [p, e] : b.factors) {
    long v = out.factors[p] + e;
    if (v == 0) {
      out.factors.erase(p);
    } else {
      out.factors[p] = v;
    }
  }
  return out;
}

RationalFn RationalFn::inverse() const {
  if (scalar == 0) throw InvalidInput("the zero function is not invertible");
  RationalFn out{1 / scalar, {}};
  for (const auto& [p, e] : factors) out.factors[p] = -e;
  return out;
}

std::string RationalFn::to_string() const {
  std::vector<std::string> num, den;
  for (const auto& [p, e] : factors) {
    std::string form = "(" + std::to_string(p.b) + "*w - " + std::to_string(p.c) + "*z)";
    long a = e > 0 ? e : -e;
    if (a != 1) form += "^" + std::to_string(a);
    (e > 0 ? num : den).push_back(form);
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& x : parts) s += (s.empty() ? "" : "*") + x;
    return s;
  };
  std::string out;
  if (num.empty()) {
    out = format_rational(scalar);
  } else {
    out = (scalar == 1 ? "" : format_rational(scalar) + "*") + join(num);
  }
  if (den.size() == 1) out += "/" + den[0];
  if (den.size() > 1) out += "/(" + join(den) + ")";
  return out;
}

RationalFn make_rational_fn(const Rational& scalar, const std::vector<std::pair<P1Point, long>>& factors) {
  RationalFn f{scalar, {}};
  for (const auto& [p, e] : factors) {
    auto q = normalize_point(p.b, p.c);
    f = f * RationalFn{1, {{q, e}}};
  }
  f.check();
  return f;
}

CurveDivisor principal_divisor(const CurveModel& x, const RationalFn& f) {
  f.check();
  CurveDivisor d;
  for (const auto& [p, e] : f.factors) {
    CurveDivisor fibre = x.pullback(p);
    for (auto& [q, c] : fibre.coefficients) c *= e;
    d = d + fibre;
  }
  return d;
}

GradedSection operator*(const GradedSection& a, const GradedSection& b) {
  if (a.degree.size() != b.degree.size()) throw DimensionMismatch("sections over different curves");
  return {a.degree + b.degree, a.function * b.function};
}

ClassGroup class_group(const CurveModel& x) {
  ClassGroup out{FgAbelianGroup::free(x.class_basis().size()), x.class_basis(), {}};
  for (const auto& p : x.class_basis()) out.labels.push_back(to_string(PointId{p}));
  return out;
}

IntVector divisor_class(const CurveModel& x, const CurveDivisor& d) {
  const auto& basis = x.class_basis();
  IntVector out = zero_vector(basis.size());
  IntVector fibre0 = zero_vector(basis.size());
  for (std::size_t j = 1; j <= x.multiplicity(0); ++j) fibre0[*x.basis_index({0, j})] = 1;
  for (const auto& [p, c] : d.coefficients) {
    x.check_point(p);
    if (const auto* m = std::get_if<MarkedPoint>(&p)) {
      if (auto k = x.basis_index(*m)) {
        out[*k] += c;
        continue;
      }
      // a_in_i ~ a_01 + ... + a_0n_0 - a_i1 - ... - a_i,n_i-1
      IntVector v = fibre0;
      for (std::size_t j = 1; j < x.multiplicity(m->i); ++j) v[*x.basis_index({m->i, j})] -= 1;
      out = out + c * v;
    } else {
      out = out + c * fibre0;
    }
  }
  return out;
}

CurveDivisor basis_divisor(const CurveModel& x, const IntVector& degree) {
  if (degree.size() != x.class_basis().size()) throw DimensionMismatch("degree has the wrong number of entries");
  CurveDivisor d;
  for (std::size_t k = 0; k < degree.size(); ++k)
    if (degree[k] != 0) d.coefficients[x.class_basis()[k]] = degree[k];
  return d;
}

std::optional<RationalFn> principal_test(const CurveModel& x, const CurveDivisor& d) {
  RationalFn f;
  std::map<std::size_t, Int> marked;
  for (const auto& [p, c] : d.coefficients) {
    x.check_point(p);
    if (const auto* m = std::get_if<MarkedPoint>(&p)) {
      marked.emplace(m->i, c);
    } else {
      f.factors[std::get<P1Point>(p)] = c.get_si();
    }
  }
  for (const auto& [i, c] : marked) {
    for (std::size_t j = 1; j <= x.multiplicity(i); ++j)
      if (d.coefficient(MarkedPoint{i, j}) != c) return std::nullopt;
    f.factors[x.points()[i]] = c.get_si();
  }
  long total = 0;
  for (const auto& [p, e] : f.factors) total += e;
  if (total != 0) return std::nullopt;
  return f;
}

CurveDivisor div_d(const CurveModel& x, const GradedSection& s) {
  auto d = principal_divisor(x, s.function) + basis_divisor(x, s.degree);
  if (!d.is_effective()) throw NotEffective("div(f) + D is not effective: not a section of degree D");
  return d;
}

bool divides(const CurveModel& x, const GradedSection& f, const GradedSection& g) {
  return (div_d(x, g) - div_d(x, f)).is_effective();
}

bool is_prime_section(const CurveModel& x, const GradedSection& f) {
  auto d = div_d(x, f);
  return d.coefficients.size() == 1 && d.coefficients.begin()->second == 1;
}

GradedSection pullback_section(const CurveModel& x, const P1Point& p) {
  const auto q = normalize_point(p.b, p.c);
  IntVector deg = zero_vector(x.class_basis().size());
  for (std::size_t j = 1; j <= x.multiplicity(0); ++j) deg[*x.basis_index({0, j})] = 1;
  RationalFn f{1, {}};
  if (!(q == x.points()[0])) f.factors = {{q, 1}, {x.points()[0], -1}};
  return {deg, f};
}

GradedSection canonical_section(const CurveModel& x, std::size_t i, std::size_t j) {
  x.check_point(MarkedPoint{i, j});
  IntVector deg = zero_vector(x.class_basis().size());
  if (auto k = x.basis_index({i, j})) {
    deg[*k] = 1;
    return {deg, RationalFn{}};
  }
  auto s = pullback_section(x, x.points()[i]);
  for (std::size_t l = 1; l < j; ++l) s.degree[*x.basis_index({i, l})] -= 1;
  return s;
}

std::string section_variable(std::size_t i, std::size_t j) {
  return "T" + std::to_string(i) + "_" + std::to_string(j);
}

GradedSection monomial_section(const CurveModel& x, const Exponent& e) {
  GradedSection s{zero_vector(x.class_basis().size()), RationalFn{}};
  std::size_t v = 0;
  for (std::size_t i = 0; i <= x.r(); ++i) {
    for (std::size_t j = 1; j <= x.multiplicity(i); ++j, ++v) {
      if (v >= e.size()) throw DimensionMismatch("exponent vector too short");
      if (e[v] < 0) throw InvalidInput("monomial sections need nonnegative exponents");
      auto t = canonical_section(x, i, j);
      for (long k = 0; k < e[v]; ++k) s = s * t;
    }
  }
  if (v != e.size()) throw DimensionMismatch("exponent vector too long");
  return s;
}

CoxPresentation cox_presentation(const CurveModel& x) {
  std::vector<std::string> names;
  std::vector<IntVector> degrees;
  std::vector<std::vector<std::size_t>> sheet_vars(x.r() + 1);
  for (std::size_t i = 0; i <= x.r(); ++i) {
    for (std::size_t j = 1; j <= x.multiplicity(i); ++j) {
      sheet_vars[i].push_back(names.size());
      names.push_back(section_variable(i, j));
      degrees.push_back(canonical_section(x, i, j).degree);
    }
  }
  auto ring = make_ring(names);
  auto cl = class_group(x);
  auto sheet_monomial = [&](std::size_t i) {
    Exponent e(names.size(), 0);
    for (auto v : sheet_vars[i]) e[v] = 1;
    return e;
  };
  std::vector<Poly> relations;
  std::vector<std::string> provenance;
  const auto& pts = x.points();
  for (std::size_t i = 0; i + 2 <= x.r(); ++i) {
    const std::size_t j = i + 1, k = i + 2;
    auto coeff = [&](std::size_t u, std::size_t v) { return Rational(pts[u].b * pts[v].c - pts[v].b * pts[u].c); };
    Poly g = Poly::monomial(ring, sheet_monomial(i), coeff(j, k)) + Poly::monomial(ring, sheet_monomial(j), coeff(k, i)) +
             Poly::monomial(ring, sheet_monomial(k), coeff(i, j));
    relations.push_back(g);
    provenance.push_back("trinomial g" + std::to_string(i) + " on sheets " + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k));
  }
  CoxPresentation out{make_graded_algebra(ring, Grading{cl.group, degrees}, relations), {}, provenance, {}};
  for (std::size_t v = 0; v < names.size(); ++v) out.variable_images.emplace(names[v], Poly::variable(ring, v));
  out.notes.push_back("class group basis: " + [&] {
    std::string s;
    for (const auto& l : cl.labels) s += (s.empty() ? "" : " ") + l;
    return s;
  }());
  return out;
}

}  // namespace coxring
