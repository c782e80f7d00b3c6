#include "leavitt/graph_io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

using nlohmann::json;

struct Position {
  int line = 1;
  int column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Lines on which the elements of the top-level arrays "vertices", "edges" and
// "bundles" start. Runs on text that already parsed, so it can be lenient.
struct LineIndex {
  std::vector<int> vertices, edges, bundles;
};

LineIndex index_lines(std::string_view text) {
  struct Frame {
    bool object;
    std::string key;
  };
  LineIndex out;
  std::vector<Frame> stack;
  std::string last_string;
  int line = 1;
  const auto element_start = [&]() {
    if (stack.size() != 2 || !stack[0].object || stack[1].object) return;
    const std::string& key = stack[0].key;
    if (key == "vertices") out.vertices.push_back(line);
    else if (key == "edges") out.edges.push_back(line);
    else if (key == "bundles") out.bundles.push_back(line);
  };
  const auto in_array_value = [&]() { return !stack.empty() && !stack.back().object; };
  bool expect_value = false;  // inside an array after '[' or ','
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    switch (c) {
      case '\n': ++line; break;
      case '"': {
        if (expect_value && in_array_value()) element_start();
        expect_value = false;
        std::string s;
        for (++i; i < text.size() && text[i] != '"'; ++i) {
          if (text[i] == '\\' && i + 1 < text.size()) ++i;
          if (text[i] == '\n') ++line;
          s += text[i];
        }
        last_string = std::move(s);
        break;
      }
      case ':':
        if (!stack.empty() && stack.back().object) stack.back().key = last_string;
        break;
      case '{':
      case '[':
        if (expect_value && in_array_value()) element_start();
        stack.push_back({c == '{', {}});
        expect_value = c == '[';
        break;
      case '}':
      case ']':
        if (!stack.empty()) stack.pop_back();
        expect_value = false;
        break;
      case ',': expect_value = in_array_value(); break;
      default:
        if (expect_value && in_array_value() && !std::isspace(static_cast<unsigned char>(c))) {
          element_start();
          expect_value = false;
        }
    }
  }
  return out;
}

int line_at(const std::vector<int>& lines, std::size_t i) {
  return i < lines.size() ? lines[i] : 0;
}

[[noreturn]] void structure_error(const std::string& msg, int line) {
  throw Error(ErrorKind::Parse, msg, line, 0);
}

std::string string_field(const json& obj, const char* key, const std::string& where, int line) {
  auto it = obj.find(key);
  if (it == obj.end()) structure_error(where + " is missing \"" + key + "\"", line);
  if (!it->is_string()) structure_error(where + " field \"" + key + "\" must be a string", line);
  return it->get<std::string>();
}

}  // namespace

GraphDescription parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const Position p = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto cut = what.find("syntax error"); cut != std::string::npos) what = what.substr(cut);
    throw Error(ErrorKind::Parse, "invalid JSON: " + what, p.line, p.column);
  }
  if (!doc.is_object()) structure_error("graph document must be a JSON object", 1);
  const LineIndex lines = index_lines(text);

  GraphDescription d;
  auto vertices = doc.find("vertices");
  if (vertices == doc.end()) structure_error("graph document is missing \"vertices\"", 1);
  if (!vertices->is_array()) structure_error("\"vertices\" must be an array", 1);
  for (std::size_t i = 0; i < vertices->size(); ++i) {
    const int line = line_at(lines.vertices, i);
    if (!(*vertices)[i].is_string()) structure_error("vertex ids must be strings", line);
    d.vertices.push_back((*vertices)[i].get<std::string>());
    d.vertex_lines.push_back(line);
  }
  if (auto edges = doc.find("edges"); edges != doc.end()) {
    if (!edges->is_array()) structure_error("\"edges\" must be an array", 1);
    for (std::size_t i = 0; i < edges->size(); ++i) {
      const int line = line_at(lines.edges, i);
      const json& e = (*edges)[i];
      const std::string where = "edge #" + std::to_string(i + 1);
      if (!e.is_object()) structure_error(where + " must be an object", line);
      d.edges.push_back({string_field(e, "id", where, line), string_field(e, "src", where, line),
                         string_field(e, "dst", where, line), line});
    }
  }
  if (auto bundles = doc.find("bundles"); bundles != doc.end()) {
    if (!bundles->is_array()) structure_error("\"bundles\" must be an array", 1);
    for (std::size_t i = 0; i < bundles->size(); ++i) {
      const int line = line_at(lines.bundles, i);
      const json& b = (*bundles)[i];
      const std::string where = "bundle #" + std::to_string(i + 1);
      if (!b.is_object()) structure_error(where + " must be an object", line);
      d.bundles.push_back({string_field(b, "src", where, line), string_field(b, "dst", where, line),
                           line});
    }
  }

  // Element literals name vertices and edges from one namespace.
  std::map<std::string, int> vertex_line;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) vertex_line.emplace(d.vertices[i], d.vertex_lines[i]);
  for (const auto& e : d.edges)
    if (vertex_line.count(e.id))
      structure_error("identifier '" + e.id + "' names both a vertex and an edge", e.line);
  return d;
}

Graph read_graph_json(std::string_view text) { return Graph::build(parse_graph_json(text)); }

std::string write_graph_json(const Graph& g) {
  using ordered = nlohmann::ordered_json;
  ordered doc = ordered::object();
  doc["vertices"] = g.vertex_names();
  ordered edges = ordered::array();
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id}, {"src", g.vertex_name(e.src)}, {"dst", g.vertex_name(e.dst)}});
  doc["edges"] = std::move(edges);
  ordered bundles = ordered::array();
  for (const auto& b : g.bundles())
    bundles.push_back({{"src", g.vertex_name(b.src)}, {"dst", g.vertex_name(b.dst)}});
  doc["bundles"] = std::move(bundles);
  return doc.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string write_graph_dot(const Graph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph " << dot_quote(options.name) << " {\n";
  if (options.banner) {
    os << "  labelloc=\"t\";\n  label=" << dot_quote(*options.banner) << ";\n";
    os << "  fontcolor=\"red\";\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  " << dot_quote(g.vertex_name(v));
    if (options.marked && options.marked->contains(v)) os << " [style=dashed, color=blue]";
    os << ";\n";
  }
  for (const auto& e : g.edges())
    os << "  " << dot_quote(g.vertex_name(e.src)) << " -> " << dot_quote(g.vertex_name(e.dst))
       << " [label=" << dot_quote(e.id) << "];\n";
  for (const auto& b : g.bundles())
    os << "  " << dot_quote(g.vertex_name(b.src)) << " -> " << dot_quote(g.vertex_name(b.dst))
       << " [style=bold, label=\"∞\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace leavitt
