#include "coxring/cli.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = coxring::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

const std::string data = COXRING_DATA_DIR;

}  // namespace

TEST_CASE("snf command") {
  auto j = run_json({"snf", "--matrix", "[[2,0],[0,3]]"});
  CHECK(j["diagonal"] == json::parse("[1,6]"));
  CHECK(j["D"] == json::parse("[[1,0],[0,6]]"));
  auto h = run({"snf", "--matrix", "[[2,0],[0,3]]"});
  CHECK(h.code == 0);
  CHECK(h.out.find("diagonal: [1,6]") != std::string::npos);
}

TEST_CASE("p1an cox command") {
  auto j = run_json({"p1an", "cox", "--points", "[[1,0],[0,1],[1,1]]", "--mult", "[1,1,1]"});
  CHECK(j["algebra"]["relations"] == json::parse(R"(["-T0_1 - T1_1 + T2_1"])"));
  CHECK(j["algebra"]["degrees"] == json::parse("[[1],[1],[1]]"));
  auto c = run_json({"p1an", "class-group", "--points", "[[1,0],[0,1]]", "--mult", "[2,1]"});
  CHECK(c["basis"] == json::parse(R"(["a0_1","a0_2"])"));
  auto d = run_json({"p1an", "divides", "--points", "[[1,0],[0,1]]", "--mult", "[2,1]", "--f",
                     R"({"degree":[1,0]})", "--g", R"({"degree":[0,1]})"});
  CHECK(d["divides"] == false);
  auto p = run_json({"p1an", "prime", "--points", "[[1,0],[0,1]]", "--mult", "[2,1]", "--section",
                     R"({"degree":[1,0]})"});
  CHECK(p["prime"] == true);
  auto dv = run_json({"p1an", "div", "--points", "[[1,0],[0,1]]", "--mult", "[2,1]", "--section",
                      R"({"degree":[1,1],"factors":[[[0,1],1],[[1,0],-1]]})"});
  CHECK(dv["divisor"].size() == 1);
  CHECK(dv["divisor"][0]["label"] == "a1_1");
  auto bad = run({"p1an", "div", "--points", "[[1,0],[0,1]]", "--mult", "[2,1]", "--section",
                  R"({"degree":[0,0],"factors":[[[0,1],1],[[1,0],-1]]})"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotEffective") != std::string::npos);
}

TEST_CASE("ring commands") {
  auto j = run_json({"ring", "homcheck", "--algebra", "@" + data + "/z2_weights.json", "--poly", "T1*T2 + T3^2 + T4*T5"});
  CHECK(j["degree"] == json::parse("[0,2]"));
  auto c = run_json({"ring", "coarsen", "--algebra", "@" + data + "/z2_weights.json", "--hom",
                     R"({"target":{"rank":1},"matrix":[[1,1]]})"});
  CHECK(c["algebra"]["degrees"] == json::parse("[[1],[1],[1],[1],[1]]"));
  auto w = run_json({"ring", "weights", "--algebra", R"({"variables":["T1"],"group":{"rank":1},"degrees":[[2]]})"});
  CHECK(w["weight_monoid"] == json::parse("[[2]]"));
  CHECK(w["exact"] == true);
}

TEST_CASE("gb commands") {
  const std::string ring = R"({"variables":["x","y"]})";
  auto b = run_json({"gb", "basis", "--ring", ring, "--gens", R"(["x + y", "x - y"])"});
  CHECK(b["basis"] == json::parse(R"(["y","x"])"));
  auto n = run_json({"gb", "nf", "--ring", ring, "--gens", R"(["x^2 - y"])", "--poly", "x^4"});
  CHECK(n["normal_form"] == "y^2");
  auto r = run_json({"gb", "radical-member", "--ring", ring, "--gens", R"(["x^2", "y^2"])", "--poly", "x + y"});
  CHECK(r["radical_member"] == true);
  CHECK(run({"gb", "basis", "--ring", ring, "--gens", "[\"x\"]", "--order", "weird"}).code == 2);
}

TEST_CASE("monoid, group, veronese and orbit commands") {
  auto h = run_json({"monoid", "hilbert", "--rays", "[[1,0],[1,2]]"});
  CHECK(h["hilbert_basis"] == json::parse("[[1,0],[1,1],[1,2]]"));
  auto i = run_json({"monoid", "intersect", "--left", "[[1,0],[0,1]]", "--right", "[[1,1],[1,-1]]"});
  CHECK(i["generators"] == json::parse("[[1,1],[2,0]]"));
  auto m = run_json({"monoid", "member", "--gens", "[[2],[3]]", "--vector", "[7]", "--bound", "5"});
  CHECK(m["member"] == true);
  auto e = run_json({"monoid", "member", "--gens", "[[2]]", "--vector", "[3]"});
  CHECK(e["member"] == false);
  CHECK(e["exact"] == true);
  auto q = run_json({"group", "quotient", "--group", "1", "--gens", "[[6]]"});
  CHECK(q["quotient"]["shape"]["finite_factors"] == json::parse("[6]"));
  const std::string zw = R"({"variables":["z","w"],"group":{"rank":1},"degrees":[[1],[-1]]})";
  auto v = run_json({"veronese", "invariants", "--algebra", zw, "--hom", R"({"target":{"rank":1},"matrix":[[1]]})"});
  REQUIRE(v["generators"].size() == 1);
  CHECK(v["generators"][0]["generator"] == "z*w");
  auto pc = run_json({"veronese", "proj-chart", "--algebra",
                      R"({"variables":["T0","T1"],"group":{"rank":1},"degrees":[[1],[1]]})", "--poly", "T0"});
  CHECK(pc["generators"][0]["generator"] == "T1/(T0)");
  auto o = run_json({"orbit", "data", "--algebra", zw, "--point", "[1,0]"});
  CHECK(o["orbit_closed"] == false);
  auto ef = run_json({"orbit", "effective", "--algebra", zw});
  CHECK(ef["effective"] == true);
}

TEST_CASE("cox commands and round trips") {
  auto q = run({"--json", "cox", "quotient", "--input", "@" + data + "/quadric.json"});
  REQUIRE(q.code == 0);
  auto pres = json::parse(q.out);
  CHECK(pres["algebra"]["variables"] == json::parse(R"(["Z1","Z2"])"));
  CHECK(pres["algebra"]["degrees"] == json::parse("[[1],[1]]"));
  // the reported presentation is accepted as input
  auto local = run_json({"cox", "local-class", "--presentation", q.out, "--point", "[0,0]"});
  CHECK(local["local_class_group"]["shape"]["finite_factors"] == json::parse("[2]"));
  auto local1 = run_json({"cox", "local-class", "--presentation", q.out, "--point", "[1,0]"});
  CHECK(local1["local_class_group"]["shape"]["finite_factors"] == json::parse("[]"));
  CHECK(local1["local_class_group"]["shape"]["torus_rank"] == 0);
  auto pic = run_json({"cox", "picard-cert", "--presentation", q.out, "--point", "[0,0]"});
  CHECK(pic["picard_trivial_certificate"] == true);
  auto again = run_json({"cox", "quotient", "--input", "@" + data + "/quadric.json"});
  CHECK(again == pres);
  auto alg = pres["algebra"].dump();
  auto back = run_json({"ring", "homcheck", "--algebra", alg, "--poly", "Z1*Z2"});
  CHECK(back["degree"] == json::parse("[0]"));
  auto sl = run_json({"cox", "quotient", "--input", "@" + data + "/sl2n.json"});
  CHECK(sl["algebra"]["relations"] == json::parse(R"(["a2^2 - a1*a3 - 1"])"));
  auto irr = run_json({"cox", "irrelevant", "--presentation",
                       R"({"variables":["T0","T1"],"group":{"rank":1},"degrees":[[1],[1]]})", "--cover",
                       R"(["T0","T1"])", "--poly", "T0 + T1"});
  CHECK(irr["member"] == true);
}

TEST_CASE("determinism") {
  std::vector<std::string> args{"--json", "cox", "quotient", "--input", "@" + data + "/sl2n.json"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"snf"}).code == 2);
  CHECK(run({"snf", "--matrix", "[[1,2"}).code == 2);
  CHECK(run({"snf", "--matrix", R"({"a":1})"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  auto dom = run({"--json", "monoid", "intersect", "--left", "[[2,0],[0,1],[1,1]]", "--right", "[[1,0],[0,1]]"});
  CHECK(dom.code == 1);
  CHECK(json::parse(dom.out)["error"]["kind"] == "UnsaturatedInput");
  CHECK(run({"ring", "homcheck", "--algebra", R"({"variables":["x"],"group":1,"degrees":[[1]]})", "--poly", "x^-1"})
            .code == 1);
  CHECK(run({"snf", "--matrix", "@/nonexistent/file.json"}).code == 2);
}
