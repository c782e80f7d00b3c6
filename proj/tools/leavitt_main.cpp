// Command-line front end. Talks to the library only through leavitt.h.
//
// Exit codes: 0 success, 1 the coefficient ring fails a hypothesis of the
// requested classification, 2 bad input (usage, JSON, graph, ring, pair or
// expression), 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "leavitt/leavitt.h"

namespace {

enum Exit { kOk = 0, kHypothesis = 1, kInput = 2, kInternal = 3 };

struct Options {
  std::string graph_path;
  std::string ring;
  std::string format = "text";
  std::string h, s;
  std::string conditions = "L,K,MT3";
  std::string expr;
  std::size_t path_bound = 0;
  int degree = 3;
};

// Owns a handle or a returned string.
struct GraphHandle {
  lv_graph* p = nullptr;
  ~GraphHandle() { lv_graph_free(p); }
};
struct RingHandle {
  lv_ring* p = nullptr;
  ~RingHandle() { lv_ring_free(p); }
};
struct OutString {
  char* p = nullptr;
  ~OutString() { lv_string_free(p); }
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

lv_format parse_format(const std::string& f) {
  if (f == "text") return LV_FORMAT_TEXT;
  if (f == "json") return LV_FORMAT_JSON;
  return LV_FORMAT_DOT;
}

// "where:line:col: error: msg" with whatever position the library reported.
std::string located(const std::string& where) {
  std::ostringstream os;
  os << where;
  if (lv_last_error_line() > 0) {
    os << ':' << lv_last_error_line();
    if (lv_last_error_column() > 0) os << ':' << lv_last_error_column();
  }
  os << ": error: " << lv_last_error();
  return os.str();
}

int exit_for(lv_status st) {
  switch (st) {
    case LV_OK: return kOk;
    case LV_HYPOTHESIS_FAILED: return kHypothesis;
    case LV_ERR_PARSE:
    case LV_ERR_VALIDATION:
    case LV_ERR_ARGUMENT: return kInput;
    default: return kInternal;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": error: cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  lv_graph* graph() {
    if (!graph_.p) {
      const std::string text = read_file(o_.graph_path);
      const lv_status st = lv_graph_from_json(text.c_str(), &graph_.p);
      if (st != LV_OK) throw Failure{located(o_.graph_path), exit_for(st)};
    }
    return graph_.p;
  }

  lv_ring* ring() {
    if (!ring_.p) {
      if (o_.ring.empty()) throw Failure{"leavitt: error: --ring is required", kInput};
      const lv_status st = lv_ring_parse(o_.ring.c_str(), &ring_.p);
      if (st != LV_OK) throw Failure{located("--ring"), exit_for(st)};
    }
    return ring_.p;
  }

  // Prints the output (also on hypothesis failure) and maps the status.
  int finish(lv_status st, const OutString& out, const std::string& where) {
    if (out.p) std::cout << out.p;
    if (st == LV_OK) return kOk;
    if (st == LV_HYPOTHESIS_FAILED) {
      std::cerr << "leavitt: hypothesis not met: " << lv_last_error() << '\n';
      return kHypothesis;
    }
    if (lv_last_error_line() > 0)
      std::cerr << located(where) << '\n';
    else
      std::cerr << "leavitt: error: " << lv_last_error() << '\n';
    return exit_for(st);
  }

  struct Failure {
    std::string message;
    int code;
  };

  const Options& o_;
  GraphHandle graph_;
  RingHandle ring_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal lattices, prime and primitive ideals, and exact arithmetic in Leavitt path algebras"};
  app.require_subcommand(1);
  Options o;

  const auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("graph", o.graph_path, "Graph document (JSON)")->required();
  };
  const auto add_ring = [&](CLI::App* cmd) {
    cmd->add_option("--ring,-r", o.ring, "Coefficient ring: Z, Q, Z/<n> or GF(<p>)")->required();
  };
  const auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--H", o.h, "Saturated hereditary set, comma-separated vertex ids");
    cmd->add_option("--S", o.s, "Subset of B_H, comma-separated vertex ids");
  };
  const auto add_format = [&](CLI::App* cmd, bool dot) {
    auto* opt = cmd->add_option("--format,-f", o.format, "Output format");
    if (dot)
      opt->check(CLI::IsMember({"json", "dot", "text"}));
    else
      opt->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Full classification report");
  add_graph(analyze);
  add_ring(analyze);
  add_format(analyze, false);

  auto* ideals = app.add_subcommand("ideals", "Admissible pairs with Hasse covers");
  add_graph(ideals);
  add_format(ideals, false);

  auto* primes = app.add_subcommand("primes", "Prime graded basic ideals");
  add_graph(primes);
  add_ring(primes);
  add_format(primes, false);

  auto* primitives = app.add_subcommand("primitives", "Primitive graded ideals");
  add_graph(primitives);
  add_ring(primitives);
  add_format(primitives, false);

  auto* quotient = app.add_subcommand("quotient", "Quotient graph E/(H,S)");
  add_graph(quotient);
  add_pair(quotient);
  add_format(quotient, true);

  auto* subalgebra = app.add_subcommand("subalgebra", "Subgraph E_(H,S) on H and S");
  add_graph(subalgebra);
  add_pair(subalgebra);
  add_format(subalgebra, true);

  auto* ideal_graph = app.add_subcommand("ideal-graph", "Graph whose algebra is the ideal I(H,S)");
  add_graph(ideal_graph);
  add_pair(ideal_graph);
  add_format(ideal_graph, true);
  ideal_graph->add_option("--path-bound", o.path_bound, "Longest path materialised as a vertex")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Evaluate graph conditions");
  add_graph(check);
  add_format(check, false);
  check->add_option("--conditions,-c", o.conditions, "Comma-separated subset of L, K, MT3");

  auto* eval = app.add_subcommand("eval", "Normal form of an element");
  add_graph(eval);
  add_ring(eval);
  add_format(eval, false);
  eval->add_option("expr", o.expr, "Element, e.g. \"2.e1.e2^* - v3\"")->required();

  auto* member = app.add_subcommand("member", "Is an element in the graded basic ideal I(H,S)?");
  add_graph(member);
  add_ring(member);
  add_pair(member);
  add_format(member, false);
  member->add_option("expr", o.expr, "Element literal")->required();

  auto* laurent = app.add_subcommand("laurent", "Bounded check of L_R(C_n) against n x n Laurent matrices");
  add_graph(laurent);
  add_ring(laurent);
  add_format(laurent, false);
  laurent->add_option("--degree,-d", o.degree, "Largest path length in the checked monomials")
      ->envname("LEAVITT_DEGREE_BOUND")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  const lv_format fmt = parse_format(o.format);
  Runner run(o);
  OutString out;
  try {
    const char* h = o.h.c_str();
    const char* s = o.s.c_str();
    if (*analyze) return run.finish(lv_analyze(run.graph(), run.ring(), fmt, &out.p), out, "analyze");
    if (*ideals) return run.finish(lv_ideals(run.graph(), fmt, &out.p), out, "ideals");
    if (*primes) return run.finish(lv_primes(run.graph(), run.ring(), fmt, &out.p), out, "primes");
    if (*primitives)
      return run.finish(lv_primitives(run.graph(), run.ring(), fmt, &out.p), out, "primitives");
    if (*quotient) return run.finish(lv_quotient(run.graph(), h, s, fmt, &out.p), out, "--H/--S");
    if (*subalgebra) return run.finish(lv_subalgebra(run.graph(), h, s, fmt, &out.p), out, "--H/--S");
    if (*ideal_graph) {
      int truncated = 0;
      const lv_status st = lv_ideal_graph(run.graph(), h, s, o.path_bound, fmt, &out.p, &truncated);
      if (st == LV_OK && truncated)
        std::cerr << "leavitt: warning: ideal graph truncated at the path bound\n";
      return run.finish(st, out, "--H/--S");
    }
    if (*check) return run.finish(lv_check(run.graph(), o.conditions.c_str(), fmt, &out.p), out, "--conditions");
    if (*eval)
      return run.finish(lv_eval(run.graph(), run.ring(), o.expr.c_str(), fmt, &out.p), out, "expression");
    if (*member) {
      lv_graph* g = run.graph();
      lv_ring* r = run.ring();
      return run.finish(lv_member(g, r, h, s, o.expr.c_str(), fmt, &out.p, nullptr), out, "expression");
    }
    if (*laurent) {
      int passed = 0;
      const lv_status st = lv_laurent_check(run.graph(), run.ring(), o.degree, fmt, &out.p, &passed);
      const int code = run.finish(st, out, "laurent");
      return code == kOk && !passed ? kHypothesis : code;
    }
  } catch (const Runner::Failure& f) {
    std::cerr << f.message << '\n';
    return f.code;
  } catch (const InputError& e) {
    std::cerr << e.what() << '\n';
    return kInput;
  }
  return kInternal;
}
