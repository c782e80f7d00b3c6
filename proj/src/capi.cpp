#include "leavitt/leavitt.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "leavitt/algebra.hpp"
#include "leavitt/error.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/graph_io.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "leavitt/ideal_membership.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/report.hpp"

struct lv_graph {
  std::shared_ptr<const leavitt::Graph> graph;
};

struct lv_ring {
  leavitt::RingSpec ring;
};

namespace {

using namespace leavitt;
using json = nlohmann::ordered_json;

struct LastError {
  std::string message;
  int line = 0;
  int column = 0;
};

thread_local LastError last_error;

lv_status fail(lv_status status, std::string message, int line = 0, int column = 0) {
  last_error = {std::move(message), line, column};
  return status;
}

lv_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return LV_ERR_PARSE;
    case ErrorKind::Validation: return LV_ERR_VALIDATION;
    case ErrorKind::Argument: return LV_ERR_ARGUMENT;
    case ErrorKind::Internal: break;
  }
  return LV_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <class F>
lv_status guarded(F&& f) {
  try {
    last_error = {};
    return f();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what(), e.line(), e.column());
  } catch (const std::bad_alloc&) {
    return fail(LV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LV_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw_argument(std::string(what) + " must not be null");
}

std::vector<std::string> split_list(const char* text) {
  std::vector<std::string> out;
  if (!text) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

AdmissiblePair pair_arg(const Graph& g, const char* h, const char* s) {
  return make_pair(g, split_list(h), split_list(s));
}

void require_format(lv_format fmt, bool dot_allowed) {
  if (fmt == LV_FORMAT_TEXT || fmt == LV_FORMAT_JSON) return;
  if (fmt == LV_FORMAT_DOT && dot_allowed) return;
  throw_argument("output format not supported by this command");
}

std::string graph_out(const Graph& g, lv_format fmt, const DotOptions& dot) {
  return fmt == LV_FORMAT_DOT ? write_graph_dot(g, dot) : write_graph_json(g);
}

lv_status list_out(const Graph& g, const IdealList& l, const std::string& title, lv_format fmt,
                   char** out) {
  *out = copy_out(fmt == LV_FORMAT_JSON ? ideal_list_json(g, l) : ideal_list_text(g, l, title));
  if (l.diagnostic) return fail(LV_HYPOTHESIS_FAILED, *l.diagnostic);
  return LV_OK;
}

json element_json(const Algebra& a, const Element& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back({{"monomial", a.to_string(m)}, {"coefficient", c.get_str()}, {"degree", m.degree()}});
  return {{"normal_form", a.to_string(x)}, {"terms", std::move(terms)}};
}

}  // namespace

extern "C" {

const char* lv_version(void) { return "1.0.0"; }

const char* lv_last_error(void) { return last_error.message.c_str(); }
int lv_last_error_line(void) { return last_error.line; }
int lv_last_error_column(void) { return last_error.column; }

void lv_string_free(char* s) { std::free(s); }

lv_status lv_graph_from_json(const char* text, lv_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto g = std::make_shared<const Graph>(read_graph_json(text));
    *out = new lv_graph{std::move(g)};
    return LV_OK;
  });
}

void lv_graph_free(lv_graph* g) { delete g; }
size_t lv_graph_vertex_count(const lv_graph* g) { return g ? g->graph->vertex_count() : 0; }
size_t lv_graph_edge_count(const lv_graph* g) { return g ? g->graph->edge_count() : 0; }

lv_status lv_ring_parse(const char* text, lv_ring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    *out = new lv_ring{RingSpec::parse(text)};
    return LV_OK;
  });
}

void lv_ring_free(lv_ring* r) { delete r; }

lv_status lv_analyze(const lv_graph* g, const lv_ring* r, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(r, "ring");
    require(out, "out");
    require_format(fmt, false);
    const auto rep = classify(*g->graph, r->ring);
    *out = copy_out(fmt == LV_FORMAT_JSON ? report_json(*g->graph, rep) : report_text(*g->graph, rep));
    return LV_OK;
  });
}

lv_status lv_ideals(const lv_graph* g, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    require_format(fmt, false);
    const auto l = ideal_lattice(*g->graph);
    *out = copy_out(fmt == LV_FORMAT_JSON ? lattice_json(*g->graph, l) : lattice_text(*g->graph, l));
    return LV_OK;
  });
}

lv_status lv_primes(const lv_graph* g, const lv_ring* r, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(r, "ring");
    require(out, "out");
    require_format(fmt, false);
    return list_out(*g->graph, prime_graded_basic_ideals(*g->graph, r->ring),
                    "prime graded basic ideals", fmt, out);
  });
}

lv_status lv_primitives(const lv_graph* g, const lv_ring* r, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(r, "ring");
    require(out, "out");
    require_format(fmt, false);
    return list_out(*g->graph, primitive_graded_ideals(*g->graph, r->ring),
                    "primitive graded ideals", fmt, out);
  });
}

lv_status lv_quotient(const lv_graph* g, const char* h, const char* s, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    require_format(fmt, true);
    const auto q = build_quotient(*g->graph, pair_arg(*g->graph, h, s));
    VertexSet primed(q.graph.vertex_count());
    for (const auto& v : q.vertex_prime)
      if (v) primed.insert(*v);
    *out = copy_out(graph_out(q.graph, fmt, {.name = "quotient", .marked = primed, .banner = {}}));
    return LV_OK;
  });
}

lv_status lv_subalgebra(const lv_graph* g, const char* h, const char* s, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    require_format(fmt, true);
    const Graph sub = subalgebra_graph(*g->graph, pair_arg(*g->graph, h, s));
    *out = copy_out(graph_out(sub, fmt, {.name = "subalgebra", .marked = {}, .banner = {}}));
    return LV_OK;
  });
}

lv_status lv_ideal_graph(const lv_graph* g, const char* h, const char* s, size_t path_bound,
                         lv_format fmt, char** out, int* truncated) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    require_format(fmt, true);
    std::optional<std::size_t> bound;
    if (path_bound > 0) bound = path_bound;
    const auto ig = ideal_graph(*g->graph, pair_arg(*g->graph, h, s), bound);
    if (truncated) *truncated = ig.truncated ? 1 : 0;
    if (fmt == LV_FORMAT_DOT) {
      VertexSet paths(ig.graph.vertex_count());
      for (VertexId v = 0; v < ig.graph.vertex_count(); ++v)
        if (ig.vertex_origin[v].kind != IdealGraph::Origin::Vertex) paths.insert(v);
      DotOptions dot{.name = "ideal_graph", .marked = paths, .banner = {}};
      if (ig.truncated)
        dot.banner = "TRUNCATED: path vertices cut off at length " + std::to_string(ig.path_bound) +
                     (ig.infinite ? " (the full graph is infinite)" : "");
      *out = copy_out(write_graph_dot(ig.graph, dot));
    } else {
      json doc = json::parse(write_graph_json(ig.graph));
      doc["truncated"] = ig.truncated;
      doc["infinite"] = ig.infinite;
      doc["path_bound"] = ig.path_bound;
      *out = copy_out(doc.dump(2) + "\n");
    }
    return LV_OK;
  });
}

lv_status lv_check(const lv_graph* g, const char* conditions, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    require_format(fmt, false);
    auto names = split_list(conditions);
    if (names.empty()) names = {"L", "K", "MT3"};
    const auto results = check_conditions(*g->graph, names);
    *out = copy_out(fmt == LV_FORMAT_JSON ? conditions_json(results) : conditions_text(results));
    return LV_OK;
  });
}

lv_status lv_eval(const lv_graph* g, const lv_ring* r, const char* expr, lv_format fmt, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(r, "ring");
    require(expr, "expression");
    require(out, "out");
    require_format(fmt, false);
    const Algebra a(g->graph, r->ring);
    const Element x = parse_element(a, expr);
    *out = copy_out(fmt == LV_FORMAT_JSON ? element_json(a, x).dump(2) + "\n" : a.to_string(x) + "\n");
    return LV_OK;
  });
}

lv_status lv_member(const lv_graph* g, const lv_ring* r, const char* h, const char* s,
                    const char* expr, lv_format fmt, char** out, int* is_member) {
  return guarded([&] {
    require(g, "graph");
    require(r, "ring");
    require(expr, "expression");
    require(out, "out");
    require_format(fmt, false);
    const Algebra a(g->graph, r->ring);
    const AdmissiblePair p = pair_arg(*g->graph, h, s);
    const Element x = parse_element(a, expr);
    const QuotientMap q(a, p);
    const Element image = q(x);
    const bool member = image.is_zero();
    if (is_member) *is_member = member ? 1 : 0;
    if (fmt == LV_FORMAT_JSON) {
      json doc = {{"member", member},
                  {"pair", to_string(*g->graph, p)},
                  {"element", a.to_string(x)},
                  {"quotient_image", q.target().to_string(image)}};
      *out = copy_out(doc.dump(2) + "\n");
    } else {
      *out = copy_out(std::string(member ? "true" : "false") + "\n");
    }
    return LV_OK;
  });
}

lv_status lv_laurent_check(const lv_graph* g, const lv_ring* r, int degree_bound, lv_format fmt,
                           char** out, int* passed) {
  return guarded([&] {
    require(g, "graph");
    require(r, "ring");
    require(out, "out");
    require_format(fmt, false);
    const Algebra a(g->graph, r->ring);
    const LaurentReport rep = laurent_matrix_check(a, degree_bound);
    if (passed) *passed = rep.passed() ? 1 : 0;
    if (fmt == LV_FORMAT_JSON) {
      json doc = {{"cycle_length", rep.cycle_length},
                  {"degree_bound", rep.degree_bound},
                  {"monomials", rep.monomials},
                  {"products_checked", rep.products_checked},
                  {"images_distinct", rep.images_distinct},
                  {"multiplicative", rep.multiplicative},
                  {"passed", rep.passed()},
                  {"first_failure", rep.first_failure ? json(*rep.first_failure) : json(nullptr)}};
      *out = copy_out(doc.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "cycle length: " << rep.cycle_length << '\n'
         << "degree bound: " << rep.degree_bound << '\n'
         << "normal-form monomials: " << rep.monomials << '\n'
         << "products checked: " << rep.products_checked << '\n'
         << "images distinct: " << (rep.images_distinct ? "true" : "false") << '\n'
         << "multiplicative: " << (rep.multiplicative ? "true" : "false") << '\n';
      if (rep.first_failure) os << "first failure: " << *rep.first_failure << '\n';
      os << "result: " << (rep.passed() ? "pass" : "fail") << '\n';
      *out = copy_out(os.str());
    }
    return LV_OK;
  });
}

}  // extern "C"
