#include <algorithm>
#include <map>
#include <set>

#include "leavitt/error.hpp"
#include "leavitt/ideal_lattice.hpp"

namespace leavitt {

namespace {

// Hands out names not yet used in a graph by appending primes.
class NameAllocator {
 public:
  template <class Range>
  void reserve(const Range& names) {
    for (const auto& n : names) used_.insert(n);
  }
  std::string fresh(std::string base) {
    while (used_.count(base)) base += '\'';
    used_.insert(base);
    return base;
  }

 private:
  std::set<std::string> used_;
};

std::vector<std::string> edge_ids(const Graph& g) {
  std::vector<std::string> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  return ids;
}

}  // namespace

QuotientGraph build_quotient(const Graph& g, const AdmissiblePair& p) {
  require_admissible(g, p);
  const VertexSet unsaturated = b_h(g, p.h) - p.s;

  // One namespace for vertices and edges keeps element literals unambiguous.
  NameAllocator names;
  names.reserve(g.vertex_names());
  names.reserve(edge_ids(g));

  std::vector<std::optional<std::string>> prime_name(g.vertex_count());
  std::vector<std::optional<std::string>> edge_prime_name(g.edge_count());

  GraphDescription d;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (p.h.contains(v)) continue;
    d.vertices.push_back(g.vertex_name(v));
    if (unsaturated.contains(v)) {
      prime_name[v] = names.fresh(g.vertex_name(v) + "'");
      d.vertices.push_back(*prime_name[v]);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (p.h.contains(edge.dst)) continue;
    d.edges.push_back({edge.id, g.vertex_name(edge.src), g.vertex_name(edge.dst)});
    if (unsaturated.contains(edge.dst)) {
      edge_prime_name[e] = names.fresh(edge.id + "'");
      d.edges.push_back({*edge_prime_name[e], g.vertex_name(edge.src), *prime_name[edge.dst]});
    }
  }
  for (const auto& b : g.bundles()) {
    if (p.h.contains(b.dst)) continue;
    d.bundles.push_back({g.vertex_name(b.src), g.vertex_name(b.dst)});
    if (unsaturated.contains(b.dst))
      d.bundles.push_back({g.vertex_name(b.src), *prime_name[b.dst]});
  }

  QuotientGraph q{Graph::build(d, true), {}, {}, {}, {}};
  q.vertex_image.resize(g.vertex_count());
  q.vertex_prime.resize(g.vertex_count());
  q.edge_image.resize(g.edge_count());
  q.edge_prime.resize(g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (p.h.contains(v)) continue;
    q.vertex_image[v] = q.graph.vertex(g.vertex_name(v));
    if (prime_name[v]) q.vertex_prime[v] = q.graph.vertex(*prime_name[v]);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (p.h.contains(g.edge(e).dst)) continue;
    q.edge_image[e] = q.graph.find_edge(g.edge(e).id);
    if (edge_prime_name[e]) q.edge_prime[e] = q.graph.find_edge(*edge_prime_name[e]);
  }
  return q;
}

Graph quotient_graph(const Graph& g, const AdmissiblePair& p) {
  return build_quotient(g, p).graph;
}

Graph subalgebra_graph(const Graph& g, const AdmissiblePair& p) {
  require_admissible(g, p);
  const VertexSet keep = p.h | p.s;
  auto kept_edge = [&](VertexId src, VertexId dst) {
    return p.h.contains(src) || (p.s.contains(src) && p.h.contains(dst));
  };
  GraphDescription d;
  d.vertices = g.names(keep);
  for (const auto& e : g.edges())
    if (kept_edge(e.src, e.dst))
      d.edges.push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.dst)});
  for (const auto& b : g.bundles())
    if (kept_edge(b.src, b.dst))
      d.bundles.push_back({g.vertex_name(b.src), g.vertex_name(b.dst)});
  return Graph::build(d, true);
}

std::size_t default_path_bound(const Graph& g) { return 2 * g.edge_count() + 2; }

namespace {

constexpr std::size_t kMaxIdealGraphPaths = 4096;

std::string path_name(const Graph& g, const std::vector<EdgeId>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += g.edge(path[i]).id;
  }
  return out;
}

}  // namespace

IdealGraph ideal_graph(const Graph& g, const AdmissiblePair& p,
                       std::optional<std::size_t> path_bound) {
  require_admissible(g, p);
  const std::size_t bound = path_bound.value_or(default_path_bound(g));
  if (bound < 1) throw_argument("path-length bound must be at least 1");
  const VertexSet h_or_s = p.h | p.s;

  auto f1_terminal = [&](VertexId src, VertexId dst) {
    return !h_or_s.contains(src) && p.h.contains(dst);
  };
  auto f2_terminal = [&](VertexId dst) { return p.s.contains(dst); };

  IdealGraph out;
  out.path_bound = bound;

  // F1 u F2 is infinite exactly when a bundle is a terminal edge, or some
  // path into a terminal edge's source passes a closed path or a bundle.
  VertexSet terminal_sources = g.empty_set();
  std::vector<EdgeId> terminals;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (f1_terminal(edge.src, edge.dst) || f2_terminal(edge.dst)) {
      terminals.push_back(e);
      terminal_sources.insert(edge.src);
    }
  }
  for (const auto& b : g.bundles())
    if (f1_terminal(b.src, b.dst) || f2_terminal(b.dst)) out.infinite = true;
  const VertexSet feeders = ancestors(g, terminal_sources);
  feeders.for_each([&](VertexId v) {
    if (on_closed_path(g, v)) out.infinite = true;
  });
  for (const auto& b : g.bundles())
    if (feeders.contains(b.dst)) out.infinite = true;

  // Materialise named-edge paths ending in a terminal edge, up to the bound.
  std::vector<std::vector<EdgeId>> paths;
  bool cut = false;
  std::vector<std::vector<EdgeId>> frontier;
  for (EdgeId t : terminals) frontier.push_back({t});
  while (!frontier.empty()) {
    std::vector<std::vector<EdgeId>> next;
    for (auto& path : frontier) {
      if (paths.size() >= kMaxIdealGraphPaths) {
        cut = true;
        break;
      }
      const VertexId head = g.edge(path.front()).src;
      if (path.size() < bound) {
        for (EdgeId f : g.in_edges(head)) {
          std::vector<EdgeId> longer{f};
          longer.insert(longer.end(), path.begin(), path.end());
          next.push_back(std::move(longer));
        }
      } else if (!g.in_edges(head).empty()) {
        cut = true;
      }
      paths.push_back(std::move(path));
    }
    frontier = std::move(next);
    if (paths.size() >= kMaxIdealGraphPaths && !frontier.empty()) {
      cut = true;
      break;
    }
  }
  out.truncated = out.infinite || cut;
  std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  NameAllocator names;
  names.reserve(g.names(h_or_s));
  GraphDescription d;
  d.vertices = g.names(h_or_s);
  std::map<std::string, IdealGraph::VertexOrigin> vertex_origin;
  std::map<std::string, IdealGraph::EdgeOrigin> edge_origin;
  h_or_s.for_each([&](VertexId v) {
    vertex_origin[g.vertex_name(v)] = {IdealGraph::Origin::Vertex, v, {}};
  });

  auto kept_edge = [&](VertexId src, VertexId dst) {
    return p.h.contains(src) || (p.s.contains(src) && p.h.contains(dst));
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (!kept_edge(edge.src, edge.dst)) continue;
    d.edges.push_back({edge.id, g.vertex_name(edge.src), g.vertex_name(edge.dst)});
    edge_origin[edge.id] = {IdealGraph::Origin::Vertex, e, {}};
  }
  for (const auto& b : g.bundles())
    if (kept_edge(b.src, b.dst))
      d.bundles.push_back({g.vertex_name(b.src), g.vertex_name(b.dst)});
  for (const auto& e : d.edges) names.fresh(e.id);

  for (const auto& path : paths) {
    const auto& last = g.edge(path.back());
    const auto kind = p.h.contains(last.dst) ? IdealGraph::Origin::PathF1
                                             : IdealGraph::Origin::PathF2;
    const std::string base = path_name(g, path);
    const std::string vname = names.fresh(base);
    const std::string ename = names.fresh(base + "~bar");
    d.vertices.push_back(vname);
    d.edges.push_back({ename, vname, g.vertex_name(last.dst)});
    vertex_origin[vname] = {kind, 0, path};
    edge_origin[ename] = {kind, 0, path};
  }

  out.graph = Graph::build(d, true);
  out.vertex_origin.resize(out.graph.vertex_count());
  out.edge_origin.resize(out.graph.edge_count());
  for (auto& [name, origin] : vertex_origin) out.vertex_origin[out.graph.vertex(name)] = origin;
  for (auto& [name, origin] : edge_origin) out.edge_origin[*out.graph.find_edge(name)] = origin;
  return out;
}

}  // namespace leavitt
