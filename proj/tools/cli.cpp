#include "coxring/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxring/error.hpp"
#include "coxring/json_io.hpp"

namespace coxring {

namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inline JSON, or @path for a file.
json load(const std::string& text, const std::string& option) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read " + text.substr(1) + " for " + option);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw UsageError("option " + option + " is not valid JSON: " + e.what());
  }
}

/// Inline text, or @path for a file (polynomials).
std::string load_text(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw UsageError("cannot read " + text.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  auto s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::vector<IntVector> vectors_with_rank(const json& j, std::optional<std::size_t> rank, std::size_t& r) {
  auto vs = io::vectors_from(j);
  if (rank) {
    r = *rank;
  } else if (!vs.empty()) {
    r = vs[0].size();
  } else {
    throw UsageError("cannot infer the ambient rank from an empty list; pass --rank");
  }
  return vs;
}

bool is_flat(const json& j) {
  if (j.is_object()) return false;
  if (j.is_array()) {
    for (const auto& x : j)
      if (!is_flat(x) || x.is_string()) return false;
  }
  return true;
}

void print_human(const json& j, std::ostream& out, std::size_t indent = 0) {
  const std::string pad(indent, ' ');
  if (!j.is_object()) {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << "\n";
    } else if (is_flat(value)) {
      out << pad << key << ": " << value.dump() << "\n";
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      print_human(value, out, indent + 2);
    } else {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          out << pad << "  -\n";
          print_human(item, out, indent + 4);
        } else {
          out << pad << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
        }
      }
    }
  }
}

struct Cli {
  CLI::App app{"Cox rings and graded algebras over the rationals", "coxring"};
  bool json_output = false;
  std::function<json()> action;

  // option storage
  std::string matrix, group, gens, left, right, vector, rays, algebra, poly, hom, ring, order = "degrevlex";
  std::string monoid, point, points, mult, section, section_f, section_g, input, presentation, cover;
  std::optional<std::size_t> rank, bound;
  std::size_t probe_bound = 3;
  bool expand = false, assume_closed = false;

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, std::function<json()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([this, fn] { action = fn; });
    return sub;
  }

  Cli() {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", json_output, "Machine-readable JSON output");
    app.set_help_all_flag("--help-all", "Show all subcommands");

    auto* snf_cmd = leaf(&app, "snf", "Smith normal form U*A*V = D", [this] { return cmd_snf(); });
    snf_cmd->add_option("--matrix", matrix, "Integer matrix as JSON rows")->required();

    auto* grp = app.add_subcommand("group", "Finitely generated abelian groups");
    grp->require_subcommand(1);
    leaf(grp, "shape", "Quasitorus shape Z^k + finite factors", [this] { return cmd_group_shape(); })
        ->add_option("--group", group, "{\"rank\": n, \"relators\": [[...]]}")
        ->required();
    auto* gq = leaf(grp, "quotient", "Quotient by a subgroup", [this] { return cmd_group_quotient(); });
    gq->add_option("--group", group, "Group document")->required();
    gq->add_option("--gens", gens, "Subgroup generators")->required();

    auto* mon = app.add_subcommand("monoid", "Affine monoids and rational cones");
    mon->require_subcommand(1);
    auto* mh = leaf(mon, "hilbert", "Hilbert basis of a pointed cone", [this] { return cmd_monoid_hilbert(); });
    mh->add_option("--rays", rays, "Cone generators")->required();
    mh->add_option("--rank", rank, "Ambient rank (for empty lists)");
    auto* mi = leaf(mon, "intersect", "Intersection of saturated monoids", [this] { return cmd_monoid_intersect(); });
    mi->add_option("--left", left, "Generators of L")->required();
    mi->add_option("--right", right, "Generators of M")->required();
    mi->add_option("--rank", rank, "Ambient rank (for empty lists)");
    auto* mm = leaf(mon, "member", "Monoid membership", [this] { return cmd_monoid_member(); });
    mm->add_option("--gens", gens, "Monoid generators")->required();
    mm->add_option("--vector", vector, "Candidate element")->required();
    mm->add_option("--bound", bound, "Maximal number of summands (default: exact bound for pointed cones)");

    auto* rng = app.add_subcommand("ring", "Graded polynomial rings");
    rng->require_subcommand(1);
    auto* rh = leaf(rng, "homcheck", "Degree of a homogeneous polynomial", [this] { return cmd_ring_homcheck(); });
    rh->add_option("--algebra", algebra, "Algebra document")->required();
    rh->add_option("--poly", poly, "Polynomial")->required();
    auto* rc = leaf(rng, "coarsen", "Push the grading along a homomorphism", [this] { return cmd_ring_coarsen(); });
    rc->add_option("--algebra", algebra, "Algebra document")->required();
    rc->add_option("--hom", hom, "{\"target\": group, \"matrix\": [[...]]}")->required();
    auto* rw = leaf(rng, "weights", "Weight monoid, group and cone", [this] { return cmd_ring_weights(); });
    rw->add_option("--algebra", algebra, "Algebra document")->required();
    rw->add_option("--bound", bound, "Monomial degree bound for algebras with relations");

    auto* gb = app.add_subcommand("gb", "Groebner bases");
    gb->require_subcommand(1);
    auto add_gb = [this](CLI::App* c, bool with_poly) {
      c->add_option("--ring", ring, "{\"variables\": [...], \"invertible\": [...]}")->required();
      c->add_option("--gens", gens, "Ideal generators as JSON strings")->required();
      c->add_option("--order", order, "degrevlex or lex");
      if (with_poly) c->add_option("--poly", poly, "Polynomial")->required();
    };
    add_gb(leaf(gb, "basis", "Reduced Groebner basis", [this] { return cmd_gb_basis(); }), false);
    add_gb(leaf(gb, "nf", "Normal form", [this] { return cmd_gb_nf(); }), true);
    add_gb(leaf(gb, "radical-member", "Radical membership", [this] { return cmd_gb_radical(); }), true);

    auto* ver = app.add_subcommand("veronese", "Veronese subalgebras and invariants");
    ver->require_subcommand(1);
    auto* vg = leaf(ver, "gens", "Generators of A(L)", [this] { return cmd_veronese_gens(); });
    vg->add_option("--algebra", algebra, "Algebra document")->required();
    vg->add_option("--monoid", monoid, "Generators of L")->required();
    vg->add_flag("--expand", expand, "Print expanded polynomials");
    auto* vi = leaf(ver, "invariants", "Invariants A(ker psi)", [this] { return cmd_veronese_invariants(); });
    vi->add_option("--algebra", algebra, "Algebra document")->required();
    vi->add_option("--hom", hom, "Homomorphism psi")->required();
    vi->add_flag("--expand", expand, "Print expanded polynomials");
    auto* vp = leaf(ver, "proj-chart", "Degree-zero part of A_f", [this] { return cmd_veronese_chart(); });
    vp->add_option("--algebra", algebra, "Algebra document")->required();
    vp->add_option("--poly", poly, "Localized element f")->required();
    vp->add_flag("--expand", expand, "Print expanded polynomials");

    auto* orb = app.add_subcommand("orbit", "Quasitorus orbits");
    orb->require_subcommand(1);
    auto* od = leaf(orb, "data", "Orbit monoid, orbit group, isotropy", [this] { return cmd_orbit_data(); });
    od->add_option("--algebra", algebra, "Algebra document")->required();
    od->add_option("--point", point, "Point coordinates")->required();
    od->add_option("--bound", probe_bound, "Monomial probe bound for algebras with relations");
    leaf(orb, "effective", "Whether the action is effective", [this] { return cmd_orbit_effective(); })
        ->add_option("--algebra", algebra, "Algebra document")
        ->required();

    auto* p1 = app.add_subcommand("p1an", "The curves P1(A,n)");
    p1->require_subcommand(1);
    auto add_curve = [this](CLI::App* c) {
      c->add_option("--points", points, "Marked points [[b,c],...]")->required();
      c->add_option("--mult", mult, "Multiplicities [n0,...]")->required();
    };
    add_curve(leaf(p1, "class-group", "Divisor class group", [this] { return cmd_p1_class_group(); }));
    add_curve(leaf(p1, "cox", "Cox ring presentation", [this] { return cmd_p1_cox(); }));
    auto* pd = leaf(p1, "div", "D-divisor of a section", [this] { return cmd_p1_div(); });
    add_curve(pd);
    pd->add_option("--section", section, "{\"degree\", \"scalar\", \"factors\"}")->required();
    auto* pdv = leaf(p1, "divides", "Divisibility of sections", [this] { return cmd_p1_divides(); });
    add_curve(pdv);
    pdv->add_option("--f", section_f, "Section f")->required();
    pdv->add_option("--g", section_g, "Section g")->required();
    auto* pp = leaf(p1, "prime", "Primality of a section", [this] { return cmd_p1_prime(); });
    add_curve(pp);
    pp->add_option("--section", section, "Section")->required();

    auto* cx = app.add_subcommand("cox", "Cox rings from presented data");
    cx->require_subcommand(1);
    leaf(cx, "quotient", "Cox ring as quotient by 1 - chi(E)", [this] { return cmd_cox_quotient(); })
        ->add_option("--input", input, "CoxInput document")
        ->required();
    auto* cl = leaf(cx, "local-class", "Local class group at a point", [this] { return cmd_cox_local(); });
    cl->add_option("--presentation", presentation, "Presentation document")->required();
    cl->add_option("--point", point, "Point of the total coordinate space")->required();
    cl->add_option("--bound", probe_bound, "Monomial probe bound");
    cl->add_flag("--assume-closed", assume_closed, "Skip the closed-orbit check");
    auto* cp = leaf(cx, "picard-cert", "Fixed-point certificate for Pic = 0", [this] { return cmd_cox_picard(); });
    cp->add_option("--presentation", presentation, "Presentation document")->required();
    cp->add_option("--point", point, "Probe point")->required();
    cp->add_option("--bound", probe_bound, "Monomial probe bound");
    auto* ci = leaf(cx, "irrelevant", "Membership in the irrelevant ideal", [this] { return cmd_cox_irrelevant(); });
    ci->add_option("--presentation", presentation, "Presentation document")->required();
    ci->add_option("--cover", cover, "Covering sections as JSON strings")->required();
    ci->add_option("--poly", poly, "Polynomial")->required();
  }

  json cmd_snf() {
    auto s = snf(io::matrix_from(load(matrix, "--matrix")));
    return {{"U", io::to_json(s.U)}, {"D", io::to_json(s.D)}, {"V", io::to_json(s.V)}, {"diagonal", io::to_json(s.diagonal())}};
  }

  json cmd_group_shape() {
    auto g = io::group_from(load(group, "--group"));
    return {{"group", io::to_json(g)}};
  }

  json cmd_group_quotient() {
    auto g = io::group_from(load(group, "--group"));
    auto [q, proj] = quotient(g, io::vectors_from(load(gens, "--gens")));
    return {{"quotient", io::to_json(q)}, {"projection", io::to_json(proj.matrix())}};
  }

  json cmd_monoid_hilbert() {
    std::size_t r = 0;
    auto vs = vectors_with_rank(load(rays, "--rays"), rank, r);
    auto cone = cone_from_generators(r, vs);
    return {{"cone", io::to_json(cone)}, {"hilbert_basis", io::to_json(hilbert_basis(cone))}};
  }

  json cmd_monoid_intersect() {
    std::size_t r = 0;
    auto l = vectors_with_rank(load(left, "--left"), rank, r);
    auto m = io::vectors_from(load(right, "--right"));
    auto meet = intersect(AffineMonoid(r, l), AffineMonoid(r, m));
    return {{"generators", io::to_json(meet.generators())}};
  }

  json cmd_monoid_member() {
    std::size_t r = 0;
    auto v = io::vector_from(load(vector, "--vector"));
    auto gs = vectors_with_rank(load(gens, "--gens"), v.size(), r);
    AffineMonoid m(r, gs);
    auto sufficient = sufficient_member_bound(m, v);
    if (!bound && !sufficient) throw UsageError("the cone is not pointed; pass --bound");
    std::size_t b = bound ? *bound : *sufficient;
    bool is_member = member(m, v, b);
    bool exact = is_member || (sufficient && b >= *sufficient);
    return {{"member", is_member}, {"bound", b}, {"exact", exact}};
  }

  json cmd_ring_homcheck() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    auto d = homogeneity_check(a.grading(), parse_poly(a.ring(), load_text(poly)));
    if (!d) return {{"homogeneous", false}};
    return {{"homogeneous", true}, {"degree", io::to_json(*d)}};
  }

  json cmd_ring_coarsen() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    auto psi = io::hom_from(load(hom, "--hom"), a.group());
    return {{"algebra", io::to_json(coarsen(a, psi))}};
  }

  json cmd_ring_weights() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    auto w = weight_data(a, bound.value_or(3));
    json out = {{"weight_monoid", io::to_json(w.weight_monoid.generators())},
                {"weight_group_generators", io::to_json(w.weight_group_generators)},
                {"weight_group", io::to_json(w.weight_group)},
                {"exact", w.exact},
                {"degree_bound", w.degree_bound}};
    if (w.weight_cone) out["weight_cone"] = io::to_json(*w.weight_cone);
    return out;
  }

  MonomialOrder parsed_order() {
    try {
      return parse_monomial_order(order);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  json cmd_gb_basis() {
    auto r = io::ring_from(load(ring, "--ring"));
    auto g = buchberger(r, io::polys_from(r, load(gens, "--gens")), parsed_order());
    json basis = json::array();
    for (const auto& p : g.basis()) basis.push_back(p.to_string(g.order()));
    return {{"basis", basis}, {"order", to_string(g.order())}, {"unit_ideal", g.is_unit_ideal()}};
  }

  json cmd_gb_nf() {
    auto r = io::ring_from(load(ring, "--ring"));
    auto g = buchberger(r, io::polys_from(r, load(gens, "--gens")), parsed_order());
    auto n = g.normal_form(parse_poly(r, load_text(poly)));
    return {{"normal_form", n.to_string(g.order())}, {"member", n.is_zero()}};
  }

  json cmd_gb_radical() {
    auto r = io::ring_from(load(ring, "--ring"));
    bool m = radical_member(r, io::polys_from(r, load(gens, "--gens")), parse_poly(r, load_text(poly)));
    return {{"radical_member", m}};
  }

  json cmd_veronese_gens() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    auto l = io::vectors_from(load(monoid, "--monoid"));
    return io::to_json(veronese_generators(a, AffineMonoid(a.group().ambient_rank(), l)), expand);
  }

  json cmd_veronese_invariants() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    return io::to_json(invariant_ring(a, io::hom_from(load(hom, "--hom"), a.group())), expand);
  }

  json cmd_veronese_chart() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    return io::to_json(degree_zero_part(a, parse_poly(a.ring(), load_text(poly))), expand);
  }

  json cmd_orbit_data() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    return io::to_json(orbit_data(a, io::point_from(load(point, "--point")), probe_bound));
  }

  json cmd_orbit_effective() {
    auto a = io::algebra_from(load(algebra, "--algebra"));
    return {{"effective", is_effective(a)}};
  }

  CurveModel curve() { return io::curve_from(load(points, "--points"), load(mult, "--mult")); }

  json cmd_p1_class_group() {
    auto cl = class_group(curve());
    return {{"group", io::to_json(cl.group)}, {"basis", cl.labels}};
  }

  json cmd_p1_cox() {
    auto x = curve();
    json out = io::to_json(cox_presentation(x));
    out["class_basis"] = class_group(x).labels;
    return out;
  }

  json cmd_p1_div() {
    auto x = curve();
    auto s = io::section_from(load(section, "--section"));
    auto d = div_d(x, s);
    return {{"divisor", io::to_json(d)}, {"class", io::to_json(divisor_class(x, d))}};
  }

  json cmd_p1_divides() {
    auto x = curve();
    return {{"divides", divides(x, io::section_from(load(section_f, "--f")), io::section_from(load(section_g, "--g")))}};
  }

  json cmd_p1_prime() {
    auto x = curve();
    return {{"prime", is_prime_section(x, io::section_from(load(section, "--section")))}};
  }

  json cmd_cox_quotient() { return io::to_json(cox_quotient(io::cox_input_from(load(input, "--input")))); }

  json cmd_cox_local() {
    auto p = io::presentation_from(load(presentation, "--presentation"));
    auto l = local_class_group(p, io::point_from(load(point, "--point")), probe_bound, !assume_closed);
    return {{"local_class_group", io::to_json(l.group)},
            {"orbit", io::to_json(l.orbit)},
            {"closed_orbit", l.closedness_verified ? "verified" : "asserted by caller"}};
  }

  json cmd_cox_picard() {
    auto p = io::presentation_from(load(presentation, "--presentation"));
    bool cert = picard_trivial_by_fixed_point(p, io::point_from(load(point, "--point")), probe_bound);
    return {{"picard_trivial_certificate", cert},
            {"meaning", cert ? "fixed point found: Pic(X) = 0" : "no certificate from this probe"},
            {"probe_bound", probe_bound}};
  }

  json cmd_cox_irrelevant() {
    auto p = io::presentation_from(load(presentation, "--presentation"));
    const auto& r = p.algebra.ring();
    bool m = irrelevant_ideal_membership(p, io::polys_from(r, load(cover, "--cover")), parse_poly(r, load_text(poly)));
    return {{"member", m}, {"cover_hypothesis", "asserted by caller"}};
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << cli.app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << cli.app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    json result = cli.action();
    if (cli.json_output) {
      out << result.dump(2) << "\n";
    } else {
      print_human(result, out);
    }
    return 0;
  } catch (const Error& e) {
    if (cli.json_output) out << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const io::DocumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "usage error: malformed document: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace coxring
