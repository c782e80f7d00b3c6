#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leavitt/ideal_lattice.hpp"

namespace leavitt {

std::string report_text(const Graph& g, const ClassificationReport& r);
std::string report_json(const Graph& g, const ClassificationReport& r);

// Admissible pairs with the covering relations of the containment order.
struct IdealLattice {
  std::vector<AdmissiblePair> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
};

IdealLattice ideal_lattice(const Graph& g);
std::string lattice_text(const Graph& g, const IdealLattice& l);
std::string lattice_json(const Graph& g, const IdealLattice& l);

// `title` heads the text form, e.g. "prime graded basic ideals".
std::string ideal_list_text(const Graph& g, const IdealList& l, const std::string& title);
std::string ideal_list_json(const Graph& g, const IdealList& l);

struct ConditionResult {
  std::string name;
  bool holds;
};

// Names: L, K, MT3 (case-insensitive). Throws Argument on anything else.
std::vector<ConditionResult> check_conditions(const Graph& g, const std::vector<std::string>& names);
std::string conditions_text(const std::vector<ConditionResult>& c);
std::string conditions_json(const std::vector<ConditionResult>& c);

}  // namespace leavitt
