#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/vertex_set.hpp"

namespace leavitt {

// Unvalidated graph as read from a document. Positions (1-based source lines)
// are optional and only used to anchor validation messages.
struct GraphDescription {
  struct EdgeSpec {
    std::string id;
    std::string src;
    std::string dst;
    int line = 0;
  };
  struct BundleSpec {
    std::string src;
    std::string dst;
    int line = 0;
  };

  std::vector<std::string> vertices;
  std::vector<int> vertex_lines;
  std::vector<EdgeSpec> edges;
  std::vector<BundleSpec> bundles;
};

struct Edge {
  std::string id;
  VertexId src;
  VertexId dst;
};

// A bundle stands for countably many unnamed parallel edges src -> dst.
struct Bundle {
  VertexId src;
  VertexId dst;
  friend auto operator<=>(const Bundle&, const Bundle&) = default;
};

// Immutable finite graph. Vertex indices follow the lexicographic order of
// vertex names and edge indices follow the lexicographic order of edge ids.
class Graph {
 public:
  Graph() = default;

  // Builds a graph and checks every structural invariant. An empty vertex
  // set is accepted only when allow_empty is set (quotients by the top ideal).
  static Graph build(const GraphDescription& raw, bool allow_empty = false);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;  // throws on unknown vertex
  std::optional<EdgeId> find_edge(std::string_view id) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Bundle>& bundles() const noexcept { return bundles_; }

  std::span<const EdgeId> out_edges(VertexId v) const { return out_edges_.at(v); }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_edges_.at(v); }
  std::span<const VertexId> bundle_targets(VertexId v) const { return bundle_targets_.at(v); }
  // Distinct vertices reachable by one named edge or bundle.
  std::span<const VertexId> successors(VertexId v) const { return successors_.at(v); }
  std::span<const VertexId> predecessors(VertexId v) const { return predecessors_.at(v); }

  bool is_sink(VertexId v) const { return out_edges(v).empty() && bundle_targets(v).empty(); }
  bool is_infinite_emitter(VertexId v) const { return !bundle_targets(v).empty(); }
  bool is_finite_emitter(VertexId v) const {
    return !out_edges(v).empty() && bundle_targets(v).empty();
  }
  bool is_row_finite() const noexcept { return bundles_.empty(); }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet sinks() const;
  VertexSet infinite_emitters() const;

  // Resolves vertex names; throws Argument on unknown names.
  VertexSet vertex_set(const std::vector<std::string>& names) const;
  std::vector<std::string> names(const VertexSet& set) const;

  GraphDescription describe() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertex_names_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::vector<Edge> edges_;
  std::map<std::string, EdgeId, std::less<>> edge_index_;
  std::vector<Bundle> bundles_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::vector<std::vector<VertexId>> bundle_targets_;
  std::vector<std::vector<VertexId>> successors_;
  std::vector<std::vector<VertexId>> predecessors_;
};

// Validating constructor for user input: rejects empty vertex sets,
// duplicate ids and dangling endpoints.
Graph validate_graph(const GraphDescription& raw);

}  // namespace leavitt
