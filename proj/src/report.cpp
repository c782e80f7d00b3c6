#include "leavitt/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "leavitt/error.hpp"
#include "leavitt/graph_algorithms.hpp"

namespace leavitt {

namespace {

using json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "true" : "false"; }

json pair_json(const Graph& g, const AdmissiblePair& p) {
  return {{"H", g.names(p.h)}, {"S", g.names(p.s)}};
}

json list_json(const Graph& g, const IdealList& l) {
  json pairs = json::array();
  for (const auto& p : l.pairs) pairs.push_back(pair_json(g, p));
  return {{"pairs", std::move(pairs)},
          {"diagnostic", l.diagnostic ? json(*l.diagnostic) : json(nullptr)}};
}

void list_text(std::ostream& os, const Graph& g, const IdealList& l, const std::string& title) {
  os << title << " (" << l.pairs.size() << "):";
  if (l.diagnostic) os << " none, " << *l.diagnostic;
  os << '\n';
  for (const auto& p : l.pairs) os << "  " << to_string(g, p) << '\n';
}

}  // namespace

std::string report_text(const Graph& g, const ClassificationReport& r) {
  std::ostringstream os;
  os << "ring: " << r.ring.to_string() << '\n';
  os << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
     << g.bundles().size() << " bundles\n";
  os << "condition L: " << yes_no(r.condition_L) << '\n';
  os << "condition K: " << yes_no(r.condition_K) << '\n';
  os << "MT3: " << yes_no(r.mt3) << '\n';
  os << "ring is an integral domain: " << yes_no(r.ring_is_integral_domain) << '\n';
  os << "ring is a field: " << yes_no(r.ring_is_field) << '\n';
  os << "algebra is prime: " << yes_no(r.algebra_is_prime) << '\n';
  os << "algebra is primitive: " << yes_no(r.algebra_is_primitive) << '\n';
  os << "simplicity: "
     << (r.simple_by_criterion ? "simple (condition K, field, no proper maximal tails, no breaking vertices)"
                               : "not determined by the maximal-tail criterion")
     << '\n';
  os << "all basic ideals graded: " << yes_no(r.all_basic_ideals_graded) << '\n';
  os << "maximal tails (" << r.maximal_tails.size() << "):";
  for (const auto& m : r.maximal_tails) os << ' ' << to_string(g, m);
  os << '\n';
  os << "breaking vertices: " << to_string(g, r.breaking_vertices) << '\n';
  os << "line points: " << to_string(g, r.line_points) << '\n';
  os << "admissible pairs (" << r.admissible_pairs.size() << "):\n";
  for (const auto& p : r.admissible_pairs) os << "  " << to_string(g, p) << '\n';
  list_text(os, g, r.prime_ideals, "prime graded basic ideals");
  list_text(os, g, r.primitive_ideals, "primitive graded ideals");
  return os.str();
}

std::string report_json(const Graph& g, const ClassificationReport& r) {
  json tails = json::array();
  for (const auto& m : r.maximal_tails) tails.push_back(g.names(m));
  json pairs = json::array();
  for (const auto& p : r.admissible_pairs) pairs.push_back(pair_json(g, p));
  json doc = {
      {"ring", r.ring.to_string()},
      {"graph",
       {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"bundles", g.bundles().size()}}},
      {"conditions", {{"L", r.condition_L}, {"K", r.condition_K}, {"MT3", r.mt3}}},
      {"ring_properties", {{"integral_domain", r.ring_is_integral_domain}, {"field", r.ring_is_field}}},
      {"algebra",
       {{"prime", r.algebra_is_prime},
        {"primitive", r.algebra_is_primitive},
        {"simple_by_criterion", r.simple_by_criterion},
        {"all_basic_ideals_graded", r.all_basic_ideals_graded}}},
      {"maximal_tails", std::move(tails)},
      {"breaking_vertices", g.names(r.breaking_vertices)},
      {"line_points", g.names(r.line_points)},
      {"admissible_pairs", std::move(pairs)},
      {"prime_ideals", list_json(g, r.prime_ideals)},
      {"primitive_ideals", list_json(g, r.primitive_ideals)},
  };
  return doc.dump(2) + "\n";
}

IdealLattice ideal_lattice(const Graph& g) {
  IdealLattice l;
  l.pairs = enumerate_admissible_pairs(g);
  l.covers = hasse_edges(g, l.pairs);
  return l;
}

std::string lattice_text(const Graph& g, const IdealLattice& l) {
  std::ostringstream os;
  os << "admissible pairs (" << l.pairs.size() << "):\n";
  for (std::size_t i = 0; i < l.pairs.size(); ++i)
    os << "  [" << i << "] " << to_string(g, l.pairs[i]) << '\n';
  os << "covers (" << l.covers.size() << "):\n";
  for (const auto& [lo, hi] : l.covers) os << "  [" << lo << "] < [" << hi << "]\n";
  return os.str();
}

std::string lattice_json(const Graph& g, const IdealLattice& l) {
  json pairs = json::array();
  for (const auto& p : l.pairs) pairs.push_back(pair_json(g, p));
  json covers = json::array();
  for (const auto& [lo, hi] : l.covers) covers.push_back({lo, hi});
  return json{{"pairs", std::move(pairs)}, {"covers", std::move(covers)}}.dump(2) + "\n";
}

std::string ideal_list_text(const Graph& g, const IdealList& l, const std::string& title) {
  std::ostringstream os;
  list_text(os, g, l, title);
  return os.str();
}

std::string ideal_list_json(const Graph& g, const IdealList& l) {
  return list_json(g, l).dump(2) + "\n";
}

std::vector<ConditionResult> check_conditions(const Graph& g, const std::vector<std::string>& names) {
  std::vector<ConditionResult> out;
  for (const auto& raw : names) {
    std::string n = raw;
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (n == "L")
      out.push_back({"L", condition_L(g)});
    else if (n == "K")
      out.push_back({"K", condition_K(g)});
    else if (n == "MT3")
      out.push_back({"MT3", mt3_check(g, g.all_vertices())});
    else
      throw_argument("unknown condition '" + raw + "' (expected L, K or MT3)");
  }
  return out;
}

std::string conditions_text(const std::vector<ConditionResult>& c) {
  std::string out;
  for (const auto& r : c) out += r.name + ": " + yes_no(r.holds) + "\n";
  return out;
}

std::string conditions_json(const std::vector<ConditionResult>& c) {
  json doc = json::object();
  for (const auto& r : c) doc[r.name] = r.holds;
  return doc.dump(2) + "\n";
}

}  // namespace leavitt
