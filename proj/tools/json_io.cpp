#include "coxring/json_io.hpp"

#include <algorithm>

#include "coxring/error.hpp"

namespace coxring::io {

namespace {

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DocumentError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw DocumentError(std::string(what) + " must be a JSON array");
  return j;
}

}  // namespace

json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const std::vector<IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const FgAbelianGroup& g) {
  auto shape = quasitorus_shape(g);
  json factors = json::array();
  for (const auto& f : shape.finite_factors) factors.push_back(to_json(f));
  return {{"rank", g.ambient_rank()},
          {"relators", to_json(g.relators())},
          {"shape", {{"torus_rank", shape.torus_rank}, {"finite_factors", factors}}}};
}

json to_json(const GroupHom& h) {
  return {{"source", to_json(h.source())}, {"target", to_json(h.target())}, {"matrix", to_json(h.matrix())}};
}

json to_json(const RationalCone& c) {
  return {{"ambient_rank", c.ambient_rank}, {"rays", to_json(c.rays)}, {"pointed", c.pointed}};
}

json to_json(const GradedAlgebra& a) {
  const auto& ring = *a.ring();
  json invertible = json::array();
  for (std::size_t i = 0; i < ring.num_vars(); ++i)
    if (ring.invertible(i)) invertible.push_back(ring.name(i));
  json degrees = json::array();
  for (const auto& d : a.grading().degrees) degrees.push_back(to_json(a.group().canonical(d)));
  json relations = json::array();
  for (const auto& r : a.relations()) relations.push_back(r.to_string());
  return {{"variables", ring.names()},
          {"invertible", invertible},
          {"group", to_json(a.group())},
          {"degrees", degrees},
          {"relations", relations}};
}

json to_json(const CoxPresentation& p) {
  json images = json::object();
  for (const auto& [name, img] : p.variable_images) images[name] = img.to_string();
  return {{"algebra", to_json(p.algebra)}, {"variable_images", images}, {"provenance", p.provenance}, {"notes", p.notes}};
}

json to_json(const OrbitData& o) {
  return {{"orbit_monoid", to_json(o.orbit_monoid.generators())},
          {"orbit_group_generators", to_json(o.orbit_group_generators)},
          {"orbit_group", to_json(o.orbit_group)},
          {"isotropy", to_json(o.isotropy)},
          {"orbit_closed", o.orbit_closed},
          {"exact", o.exact},
          {"probe_bound", o.probe_bound}};
}

json to_json(const SubalgebraGens& s, bool expand) {
  json gens = json::array();
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    const auto& g = s.generators[i];
    gens.push_back({{"generator", s.describe(i, expand)},
                    {"exponents", g.exponents},
                    {"f_power", g.f_power},
                    {"degree", to_json(g.degree)},
                    {"hilbert_basis_element", to_json(g.source)}});
  }
  json out = {{"generators", gens}};
  if (s.denominator) out["denominator"] = s.denominator->to_string();
  return out;
}

json to_json(const CurveDivisor& d) {
  json out = json::array();
  for (const auto& [p, c] : d.coefficients) {
    json id;
    if (const auto* m = std::get_if<MarkedPoint>(&p)) {
      id = {{"marked", {m->i, m->j}}};
    } else {
      const auto& q = std::get<P1Point>(p);
      id = {{"point", {q.b, q.c}}};
    }
    id["label"] = to_string(p);
    id["coefficient"] = to_json(c);
    out.push_back(id);
  }
  return out;
}

json to_json(const GradedSection& s) {
  json factors = json::array();
  for (const auto& [p, e] : s.function.factors) factors.push_back({{p.b, p.c}, e});
  return {{"degree", to_json(s.degree)},
          {"scalar", format_rational(s.function.scalar)},
          {"factors", factors},
          {"function", s.function.to_string()}};
}

Int int_from(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw DocumentError("not an integer: " + j.dump());
    return x;
  }
  throw DocumentError("not an integer: " + j.dump());
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw DocumentError("not a rational number: " + j.dump());
    q.canonicalize();
    return q;
  }
  throw DocumentError("not a rational number: " + j.dump());
}

IntVector vector_from(const json& j) {
  IntVector v;
  for (const auto& x : array(j, "vector")) v.push_back(int_from(x));
  return v;
}

std::vector<IntVector> vectors_from(const json& j) {
  std::vector<IntVector> out;
  for (const auto& x : array(j, "vector list")) out.push_back(vector_from(x));
  return out;
}

IntMatrix matrix_from(const json& j) {
  auto rows = vectors_from(j);
  if (rows.empty()) throw DocumentError("matrix needs at least one row");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw DocumentError("matrix rows have different lengths");
  return IntMatrix::from_rows(rows, rows[0].size());
}

FgAbelianGroup group_from(const json& j) {
  if (j.is_number_integer()) return FgAbelianGroup::free(j.get<std::size_t>());
  std::vector<IntVector> relators;
  if (j.contains("relators")) relators = vectors_from(j.at("relators"));
  return FgAbelianGroup(at(j, "rank").get<std::size_t>(), relators);
}

RingPtr ring_from(const json& j) {
  auto names = array(at(j, "variables"), "variables").get<std::vector<std::string>>();
  std::vector<bool> inv(names.size(), false);
  if (j.contains("invertible")) {
    for (const auto& n : array(j.at("invertible"), "invertible").get<std::vector<std::string>>()) {
      auto it = std::find(names.begin(), names.end(), n);
      if (it == names.end()) throw DocumentError("invertible variable " + n + " is not a variable");
      inv[static_cast<std::size_t>(it - names.begin())] = true;
    }
  }
  return make_ring(names, inv);
}

std::vector<Poly> polys_from(const RingPtr& ring, const json& j) {
  std::vector<Poly> out;
  for (const auto& p : array(j, "polynomial list")) {
    if (!p.is_string()) throw DocumentError("polynomials are given as strings");
    out.push_back(parse_poly(ring, p.get<std::string>()));
  }
  return out;
}

GradedAlgebra algebra_from(const json& j) {
  auto ring = ring_from(j);
  auto group = group_from(at(j, "group"));
  auto degrees = vectors_from(at(j, "degrees"));
  std::vector<Poly> rels;
  if (j.contains("relations")) rels = polys_from(ring, j.at("relations"));
  return make_graded_algebra(ring, Grading{group, degrees}, rels);
}

GroupHom hom_from(const json& j, const FgAbelianGroup& source) {
  auto src = j.contains("source") ? group_from(j.at("source")) : source;
  return GroupHom(src, group_from(at(j, "target")), matrix_from(at(j, "matrix")));
}

CoxInput cox_input_from(const json& j) {
  auto a = algebra_from(at(j, "presentation"));
  auto c = hom_from(at(j, "projection"), a.group());
  std::vector<ChiValue> chi;
  if (j.contains("chi")) {
    for (const auto& x : array(j.at("chi"), "chi")) {
      chi.push_back(ChiValue{vector_from(at(x, "element")), parse_poly(a.ring(), at(x, "value").get<std::string>())});
    }
  }
  return CoxInput{a, c, chi};
}

CoxPresentation presentation_from(const json& j) {
  const json& doc = j.contains("algebra") ? j.at("algebra") : j;
  CoxPresentation p{algebra_from(doc), {}, {}, {}};
  for (std::size_t v = 0; v < p.algebra.ring()->num_vars(); ++v) {
    p.variable_images.emplace(p.algebra.ring()->name(v), Poly::variable(p.algebra.ring(), v));
  }
  return p;
}

CurveModel curve_from(const json& points, const json& multiplicities) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& p : array(points, "points")) {
    auto v = vector_from(p);
    if (v.size() != 2) throw DocumentError("points of P^1 are pairs [b, c]");
    pts.emplace_back(v[0].get_si(), v[1].get_si());
  }
  std::vector<std::size_t> mult;
  for (const auto& m : array(multiplicities, "multiplicities")) {
    long n = int_from(m).get_si();
    if (n < 0) throw InvalidInput("multiplicities must be at least 1");
    mult.push_back(static_cast<std::size_t>(n));
  }
  return CurveModel(pts, mult);
}

GradedSection section_from(const json& j) {
  GradedSection s{vector_from(at(j, "degree")), RationalFn{}};
  Rational scalar = j.contains("scalar") ? rational_from(j.at("scalar")) : Rational(1);
  std::vector<std::pair<P1Point, long>> factors;
  if (j.contains("factors")) {
    for (const auto& f : array(j.at("factors"), "factors")) {
      if (!f.is_array() || f.size() != 2) throw DocumentError("factors are [[b, c], exponent] pairs");
      auto p = vector_from(f[0]);
      if (p.size() != 2) throw DocumentError("points of P^1 are pairs [b, c]");
      factors.push_back({P1Point{p[0].get_si(), p[1].get_si()}, int_from(f[1]).get_si()});
    }
  }
  s.function = make_rational_fn(scalar, factors);
  return s;
}

AffinePoint point_from(const json& j) {
  AffinePoint p;
  for (const auto& x : array(j, "point")) p.coordinates.push_back(rational_from(x));
  return p;
}

}  // namespace coxring::io
