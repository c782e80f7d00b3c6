#include "leavitt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "leavitt/error.hpp"

namespace leavitt {

Graph Graph::build(const GraphDescription& raw, bool allow_empty) {
  auto line_of_vertex = [&](std::size_t i) {
    return i < raw.vertex_lines.size() ? raw.vertex_lines[i] : 0;
  };
  if (raw.vertices.empty() && !allow_empty) throw_validation("empty vertex set");

  Graph g;
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) {
    if (!seen.insert(raw.vertices[i]).second)
      throw_validation("duplicate vertex id '" + raw.vertices[i] + "'", line_of_vertex(i));
  }
  g.vertex_names_.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < g.vertex_names_.size(); ++i)
    g.vertex_index_.emplace(g.vertex_names_[i], static_cast<VertexId>(i));

  auto endpoint = [&](const std::string& name, int line, std::string_view what) {
    auto it = g.vertex_index_.find(name);
    if (it == g.vertex_index_.end())
      throw_validation("dangling endpoint: " + std::string(what) + " '" + name +
                           "' is not a declared vertex",
                       line);
    return it->second;
  };

  std::vector<std::size_t> order(raw.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return raw.edges[a].id < raw.edges[b].id; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& spec = raw.edges[order[k]];
    if (k > 0 && raw.edges[order[k - 1]].id == spec.id)
      throw_validation("duplicate edge id '" + spec.id + "'", spec.line);
    if (spec.id.empty()) throw_validation("edge with empty id", spec.line);
    Edge e{spec.id, endpoint(spec.src, spec.line, "edge '" + spec.id + "' source"),
           endpoint(spec.dst, spec.line, "edge '" + spec.id + "' range")};
    g.edge_index_.emplace(e.id, static_cast<EdgeId>(g.edges_.size()));
    g.edges_.push_back(std::move(e));
  }

  std::set<Bundle> bundles;
  for (const auto& spec : raw.bundles)
    bundles.insert(Bundle{endpoint(spec.src, spec.line, "bundle source"),
                          endpoint(spec.dst, spec.line, "bundle range")});
  g.bundles_.assign(bundles.begin(), bundles.end());

  const auto n = g.vertex_names_.size();
  g.out_edges_.resize(n);
  g.in_edges_.resize(n);
  g.bundle_targets_.resize(n);
  g.successors_.resize(n);
  g.predecessors_.resize(n);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    g.out_edges_[g.edges_[e].src].push_back(e);
    g.in_edges_[g.edges_[e].dst].push_back(e);
    g.successors_[g.edges_[e].src].push_back(g.edges_[e].dst);
    g.predecessors_[g.edges_[e].dst].push_back(g.edges_[e].src);
  }
  for (const auto& b : g.bundles_) {
    g.bundle_targets_[b.src].push_back(b.dst);
    g.successors_[b.src].push_back(b.dst);
    g.predecessors_[b.dst].push_back(b.src);
  }
  for (auto* adj : {&g.successors_, &g.predecessors_}) {
    for (auto& list : *adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
  return g;
}

Graph validate_graph(const GraphDescription& raw) { return Graph::build(raw, false); }

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw_argument("unknown vertex '" + std::string(name) + "'");
}

std::optional<EdgeId> Graph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexSet Graph::sinks() const {
  VertexSet s = empty_set();
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (is_sink(v)) s.insert(v);
  return s;
}

VertexSet Graph::infinite_emitters() const {
  VertexSet s = empty_set();
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (is_infinite_emitter(v)) s.insert(v);
  return s;
}

VertexSet Graph::vertex_set(const std::vector<std::string>& names) const {
  VertexSet s = empty_set();
  for (const auto& n : names) s.insert(vertex(n));
  return s;
}

std::vector<std::string> Graph::names(const VertexSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](VertexId v) { out.push_back(vertex_names_.at(v)); });
  return out;
}

GraphDescription Graph::describe() const {
  GraphDescription d;
  d.vertices = vertex_names_;
  for (const auto& e : edges_)
    d.edges.push_back({e.id, vertex_names_[e.src], vertex_names_[e.dst]});
  for (const auto& b : bundles_)
    d.bundles.push_back({vertex_names_[b.src], vertex_names_[b.dst]});
  return d;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_names_ != b.vertex_names_ || a.bundles_ != b.bundles_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
  }
  return true;
}

}  // namespace leavitt
