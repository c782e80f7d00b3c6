#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "leavitt/leavitt.h"

namespace {

std::string data(const std::string& file) { return std::string(LEAVITT_TEST_DATA) + "/" + file; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Graph {
  lv_graph* g = nullptr;
  explicit Graph(const std::string& file) { REQUIRE(lv_graph_from_json(slurp(data(file)).c_str(), &g) == LV_OK); }
  ~Graph() { lv_graph_free(g); }
};

struct Ring {
  lv_ring* r = nullptr;
  explicit Ring(const char* text) { REQUIRE(lv_ring_parse(text, &r) == LV_OK); }
  ~Ring() { lv_ring_free(r); }
};

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  lv_string_free(s);
  return out;
}

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + LEAVITT_CLI + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("graph and ring handles") {
  CHECK(std::strlen(lv_version()) > 0);
  Graph ex("emitter_loop.json");
  CHECK(lv_graph_vertex_count(ex.g) == 2);
  CHECK(lv_graph_edge_count(ex.g) == 1);

  lv_graph* bad = nullptr;
  CHECK(lv_graph_from_json(slurp(data("bad_dangling.json")).c_str(), &bad) == LV_ERR_VALIDATION);
  CHECK(bad == nullptr);
  CHECK(std::string(lv_last_error()).find("dangling endpoint") != std::string::npos);
  CHECK(lv_last_error_line() == 5);
  CHECK(lv_graph_from_json("{", &bad) == LV_ERR_PARSE);
  CHECK(lv_last_error_line() == 1);

  lv_ring* r = nullptr;
  CHECK(lv_ring_parse("R", &r) == LV_ERR_PARSE);
  CHECK(lv_ring_parse("Z/1", &r) == LV_ERR_ARGUMENT);
  CHECK(lv_ring_parse("GF(7)", &r) == LV_OK);
  lv_ring_free(r);
  CHECK(lv_graph_from_json(nullptr, &bad) == LV_ERR_ARGUMENT);
}

TEST_CASE("queries through the C API") {
  Graph t("toeplitz.json");
  Ring z("Z"), q("Q");
  char* out = nullptr;

  REQUIRE(lv_primes(t.g, z.r, LV_FORMAT_TEXT, &out) == LV_OK);
  CHECK(take(out).find("({z}, {})") != std::string::npos);
  CHECK(lv_primitives(t.g, z.r, LV_FORMAT_TEXT, &out) == LV_HYPOTHESIS_FAILED);
  CHECK(take(out).find("not a field") != std::string::npos);
  REQUIRE(lv_primitives(t.g, q.r, LV_FORMAT_JSON, &out) == LV_OK);
  CHECK(take(out).find("\"diagnostic\": null") != std::string::npos);

  REQUIRE(lv_analyze(t.g, q.r, LV_FORMAT_JSON, &out) == LV_OK);
  CHECK(take(out).find("\"primitive\": true") != std::string::npos);
  REQUIRE(lv_ideals(t.g, LV_FORMAT_TEXT, &out) == LV_OK);
  take(out);

  int truncated = -1;
  REQUIRE(lv_ideal_graph(t.g, "z", "", 3, LV_FORMAT_JSON, &out, &truncated) == LV_OK);
  CHECK(truncated == 1);
  CHECK(take(out).find("\"truncated\": true") != std::string::npos);
  CHECK(lv_quotient(t.g, "u", "", LV_FORMAT_JSON, &out) == LV_ERR_VALIDATION);
  CHECK(lv_quotient(t.g, "nope", "", LV_FORMAT_JSON, &out) == LV_ERR_ARGUMENT);

  Graph c1("c1.json");
  REQUIRE(lv_check(c1.g, "L,K", LV_FORMAT_TEXT, &out) == LV_OK);
  CHECK(take(out) == "L: false\nK: false\n");

  Graph a2("a2.json");
  REQUIRE(lv_eval(a2.g, z.r, "e.e^*", LV_FORMAT_TEXT, &out) == LV_OK);
  CHECK(take(out) == "v1\n");
  CHECK(lv_eval(a2.g, z.r, "e +", LV_FORMAT_TEXT, &out) == LV_ERR_PARSE);
  CHECK(lv_last_error_column() == 4);

  Graph ex("emitter_loop.json");
  int member = -1;
  REQUIRE(lv_member(ex.g, z.r, "v", "w", "w - f.f^*", LV_FORMAT_TEXT, &out, &member) == LV_OK);
  take(out);
  CHECK(member == 1);
  REQUIRE(lv_member(ex.g, z.r, "v", "", "w - f.f^*", LV_FORMAT_TEXT, &out, &member) == LV_OK);
  take(out);
  CHECK(member == 0);

  Graph c3("c3.json");
  Ring z6("Z/6");
  int passed = -1;
  REQUIRE(lv_laurent_check(c3.g, z6.r, 3, LV_FORMAT_TEXT, &out, &passed) == LV_OK);
  take(out);
  CHECK(passed == 1);
  CHECK(lv_laurent_check(t.g, z6.r, 3, LV_FORMAT_TEXT, &out, &passed) == LV_ERR_ARGUMENT);
}

TEST_CASE("quotient output re-ingests") {
  Graph ex("emitter_loop.json");
  char* out = nullptr;
  REQUIRE(lv_quotient(ex.g, "v", "", LV_FORMAT_JSON, &out) == LV_OK);
  const std::string doc = take(out);
  lv_graph* q = nullptr;
  REQUIRE(lv_graph_from_json(doc.c_str(), &q) == LV_OK);
  CHECK(lv_graph_vertex_count(q) == 2);
  CHECK(lv_graph_edge_count(q) == 2);
  lv_graph_free(q);
}

TEST_CASE("cli examples") {
  const Run primes = cli("primes " + data("toeplitz.json") + " --ring Z");
  CHECK(primes.code == 0);
  CHECK(primes.out == "prime graded basic ideals (2):\n  ({}, {})\n  ({z}, {})\n");

  const Run eval = cli("eval " + data("a2.json") + " --ring Z \"e.e^*\"");
  CHECK(eval.code == 0);
  CHECK(eval.out == "v1\n");

  const Run check = cli("check " + data("c1.json") + " --conditions L");
  CHECK(check.code == 0);
  CHECK(check.out == "L: false\n");

  const Run prim = cli("primitives " + data("toeplitz.json") + " --ring Z");
  CHECK(prim.code == 1);
  CHECK(prim.out.find("not a field") != std::string::npos);

  const Run member = cli("member " + data("emitter_loop.json") + " --ring Z --H v --S w \"w - f.f^*\"");
  CHECK(member.code == 0);
  CHECK(member.out.find("true") != std::string::npos);

  const Run laurent = cli("laurent " + data("c2.json") + " --ring Q --degree 2");
  CHECK(laurent.code == 0);
  CHECK(laurent.out.find("result: pass") != std::string::npos);
}

TEST_CASE("cli errors") {
  const Run dangling = cli("ideals " + data("bad_dangling.json"));
  CHECK(dangling.code == 2);
  CHECK(dangling.out.find("bad_dangling.json:5") != std::string::npos);
  CHECK(dangling.out.find("dangling endpoint") != std::string::npos);

  const Run syntax = cli("ideals " + data("bad_syntax.json"));
  CHECK(syntax.code == 2);
  CHECK(syntax.out.find("bad_syntax.json:4:") != std::string::npos);

  const Run expr = cli("eval " + data("a2.json") + " --ring Z \"e + zz\"");
  CHECK(expr.code == 2);
  CHECK(expr.out.find("expression:1:5: error") != std::string::npos);

  CHECK(cli("primes " + data("a2.json") + " --ring R").code == 2);
  CHECK(cli("primes " + data("a2.json")).code == 2);
  CHECK(cli("quotient " + data("a2.json") + " --H v2").code == 2);
  CHECK(cli("ideals " + data("missing.json")).code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("cli output is deterministic and re-ingests") {
  const std::string args = "analyze " + data("emitter_loop.json") + " --ring Q --format json";
  const Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const Run q = cli("quotient " + data("emitter_loop.json") + " --H v --format json");
  REQUIRE(q.code == 0);
  lv_graph* g = nullptr;
  REQUIRE(lv_graph_from_json(q.out.c_str(), &g) == LV_OK);
  CHECK(lv_graph_vertex_count(g) == 2);
  lv_graph_free(g);

  const Run dot = cli("ideal-graph " + data("toeplitz.json") + " --H z --path-bound 2 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(dot.out.find("truncated") != std::string::npos);
}
