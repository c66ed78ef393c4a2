#include "dg/io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace dg;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string(DOPPEL_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

int count_of(const std::string& s, const std::string& needle) {
  int c = 0;
  for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

std::string tmp_path(const std::string& name) { return "/tmp/doppel_test_" + std::to_string(getpid()) + "_" + name; }

}  // namespace

TEST_CASE("poset JSON round trip") {
  for (std::string spec : {"gr:3,6", "og:5", "rootH3", "dual:rootB:2,5", "chain:4", "antichain:3", "cayley"}) {
    CAPTURE(spec);
    Poset P = load_poset(spec);
    json j = poset_json(P);
    Poset Q = poset_from_json(json::parse(j.dump()));
    CHECK(Q.size() == P.size());
    CHECK(Q.covers() == P.covers());
    CHECK(Q.labels == P.labels);
    CHECK(Q.coords == P.coords);
  }
  CHECK_THROWS_AS(load_poset("nonsense"), Error);
  CHECK_THROWS_AS(poset_from_json(json::parse("{\"covers\": []}")), Error);
  CHECK_THROWS_AS(poset_from_json(json::parse("{\"size\": 2, \"covers\": [[0,1],[1,0]]}")), Error);
  CHECK_THROWS_AS(poset_from_json(json::parse("{\"size\": 2, \"labels\": [1]}")), Error);
  CHECK(load_poset("dual:chain:3").size() == 3);
}

TEST_CASE("DOT export") {
  Poset D = Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  std::string dot = export_dot(D);
  CHECK(dot.rfind("digraph P {", 0) == 0);
  CHECK(count_of(dot, "->") == 4);
  CHECK(count_of(dot, "[label=") == 4);
  CHECK(export_dot(Poset()) == "digraph P {\n}\n");
  std::string t = export_dot(build_triple("B:2,4"));
  CHECK(count_of(t, "fillcolor=gray") == 4);
  CHECK(count_of(t, "penwidth=3") == 4);
  CHECK(count_of(t, "label=\"s") == 6);
}

TEST_CASE("shape parsing") {
  Minuscule G = minuscule("gr:3,6");
  CHECK(set_size(parse_shape(G, "2,1")) == 3);
  CHECK(parse_shape(G, "s3") == parse_shape(G, "1"));
  Minuscule E = minuscule("cayley");
  CHECK(set_size(parse_shape(E, "1,3,4")) == 3);
  CHECK_THROWS_AS(parse_shape(G, "2,x"), Error);
  json e = expansion_json(G, {{parse_shape(G, "2,1"), 1}});
  CHECK(e["ambient"] == "gr:3,6");
  CHECK(e["terms"].size() == 1);
}

TEST_CASE("CLI: counting") {
  auto r = run("count pp --poset gr:4,8 --ell 4");
  CHECK(r.code == 0);
  CHECK(r.out == "232848\n");
  r = run("count pp --poset dual:rootB:4,8 --ell 4");
  CHECK(r.out == "232848\n");
  r = run("count orderpoly --poset gr:2,4 --ell 4");
  CHECK(r.out == "1 6 20 50 105\n");
  r = run("count linext --poset gr:3,6 --json");
  CHECK(json::parse(r.out)["count"] == 42);
  r = run("count ideals --poset freudenthal");
  CHECK(r.out == "56\n");
}

TEST_CASE("CLI: coefficients") {
  auto r = run("coeff --ambient gr:3,6 --w 2,1 --u 1,1");
  CHECK(r.code == 0);
  CHECK(count_of(r.out, "\n") == 4);
  CHECK(r.out.find("-2\t(3,2,1)\n") != std::string::npos);
  r = run("coeff --ambient gr:3,6 --w 2,1 --u 1,1 --v 3,2,1 --json");
  auto j = json::parse(r.out);
  CHECK(j["terms"][0]["coeff"] == -2);
  r = run("coeff --ambient gr:4,8 --w 2,2 --u 2,2 --threads 3 --json");
  CHECK(json::parse(r.out)["terms"].size() == 13);
}

TEST_CASE("CLI: bijections") {
  auto r = run("doppel verify --triple I:3 --ell 2");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["counts"]["pp_X"] == j["counts"]["pp_Y"]);

  std::string in = tmp_path("pp.json");
  std::ofstream(in) << "[[4,4,3,2],[4,3,3,2],[4,3,2,1],[2,1,1]]";
  r = run("doppel map --triple B:4,8 --ell 4 --input " + in + " --json");
  CHECK(r.code == 0);
  auto out = json::parse(r.out)["output"];
  std::string back = tmp_path("out.json");
  std::ofstream(back) << json{{"values", out}}.dump();
  r = run("doppel invmap --triple B:4,8 --ell 4 --input " + back + " --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["output"] == json::parse(run("doppel map --triple B:4,8 --ell 4 --input " + in + " --json").out)["input"]);
  std::remove(in.c_str());
  std::remove(back.c_str());
}

TEST_CASE("CLI: heaps, export and errors") {
  auto r = run("heap --type E7 --word 1,3,4,5,6,7,2,5,6,4,5,2,3,4,1 --json");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["reduced"] == true);
  CHECK(j["linear_extensions"] == 286);

  r = run("export --poset gr:2,4");
  CHECK(count_of(r.out, "->") == 4);
  std::string dot = tmp_path("t.dot");
  r = run("export --triple B:2,4 --out " + dot);
  CHECK(r.code == 0);
  std::ifstream f(dot);
  std::string body((std::istreambuf_iterator<char>(f)), {});
  CHECK(body.rfind("digraph P {", 0) == 0);
  std::remove(dot.c_str());

  CHECK(run("count pp").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("count pp --poset gr:9,3").code == 2);
  CHECK(run("export --poset gr:2,4 --triple B:2,4").code == 2);
  r = run("--json count pp --poset nope", true);
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"] == "BadParams");
  r = run("count ideals --poset antichain:30", true);
  CHECK(r.code == 1);
  r = run("heap --type A3 --word 1,5", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("IndexOutOfRange") != std::string::npos);
}

TEST_CASE("CLI: explosion cap from the environment") {
  std::string cmd = "DOPPEL_MAX_IDEALS=10 " + std::string(DOPPEL_CLI) + " count ideals --poset antichain:6 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[512];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  CHECK(WEXITSTATUS(st) == 1);
  CHECK(out.find("ExplosionGuard") != std::string::npos);
}
