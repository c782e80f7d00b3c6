#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "leavitt/graph.hpp"

namespace leavitt {

// {"vertices": [...], "edges": [{"id","src","dst"}], "bundles": [{"src","dst"}]}
// "edges" and "bundles" may be omitted; other keys are ignored. Syntax errors
// are Parse errors with line and column; each vertex, edge and bundle keeps
// the line it starts on so validation messages can point at it.
GraphDescription parse_graph_json(std::string_view text);
Graph read_graph_json(std::string_view text);

// Deterministic, pretty-printed; re-reads to an equal graph.
std::string write_graph_json(const Graph& g);

struct DotOptions {
  std::string name = "E";
  std::optional<VertexSet> marked;  // drawn dashed, e.g. primed copies
  std::optional<std::string> banner;
};

// Bundles are bold edges labelled with an infinity sign.
std::string write_graph_dot(const Graph& g, const DotOptions& options = {});

}  // namespace leavitt
