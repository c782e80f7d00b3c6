#include "fixtures.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace testing_support {

namespace {

leavitt::Graph make(std::vector<std::string> vertices,
                    std::vector<std::array<std::string, 3>> edges,
                    std::vector<std::array<std::string, 2>> bundles = {}) {
  leavitt::GraphDescription d;
  d.vertices = std::move(vertices);
  for (auto& e : edges) d.edges.push_back({e[0], e[1], e[2], 0});
  for (auto& b : bundles) d.bundles.push_back({b[0], b[1], 0});
  return leavitt::Graph::build(d);
}

}  // namespace

std::shared_ptr<const leavitt::Graph> fixture(const std::string& name) {
  static const std::map<std::string, std::shared_ptr<const leavitt::Graph>> all = [] {
    std::map<std::string, std::shared_ptr<const leavitt::Graph>> m;
    auto add = [&](const std::string& n, leavitt::Graph g) {
      m[n] = std::make_shared<const leavitt::Graph>(std::move(g));
    };
    add("a2", make({"v1", "v2"}, {{"e", "v1", "v2"}}));
    add("a3", make({"v1", "v2", "v3"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}}));
    add("a3_fork", make({"v1", "v2", "v3", "v4"},
                        {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}, {"e3", "v2", "v4"}}));
    add("c1", make({"v"}, {{"e", "v", "v"}}));
    add("c2", make({"v0", "v1"}, {{"e0", "v0", "v1"}, {"e1", "v1", "v0"}}));
    add("c3", make({"v0", "v1", "v2"},
                   {{"e0", "v0", "v1"}, {"e1", "v1", "v2"}, {"e2", "v2", "v0"}}));
    add("toeplitz", make({"u", "z"}, {{"e", "u", "u"}, {"f", "u", "z"}}));
    add("emitter_loop", make({"v", "w"}, {{"f", "w", "w"}}, {{"w", "v"}}));
    add("rose2", make({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}}));
    add("two_points", make({"p", "q"}, {}));
    add("single", make({"v"}, {}));
    add("bundle_fork", make({"a", "b", "c"}, {{"g", "a", "c"}}, {{"a", "b"}}));
    add("bundle_fork_loop",
        make({"a", "b", "c"}, {{"g", "a", "c"}, {"h", "c", "c"}}, {{"a", "b"}}));
    add("bundle_loop", make({"v"}, {}, {{"v", "v"}}));
    return m;
  }();
  auto it = all.find(name);
  if (it == all.end()) throw std::runtime_error("unknown fixture " + name);
  return it->second;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_path(const std::string& file) { return std::string(LEAVITT_TEST_DATA) + "/" + file; }

}  // namespace testing_support
