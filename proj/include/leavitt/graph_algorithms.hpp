#pragma once

#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/vertex_set.hpp"

namespace leavitt {

// Reachability (v >= w): a directed path, possibly of length zero, through
// named edges or bundles.
bool reaches(const Graph& g, VertexId from, VertexId to);

// T(v) = {w : v >= w}.
VertexSet tree(const Graph& g, VertexId v);

// Smallest hereditary set containing X (union of the trees of its members).
VertexSet hereditary_closure(const Graph& g, const VertexSet& x);

// All vertices w with w >= x for some x in X, including X itself.
VertexSet ancestors(const Graph& g, const VertexSet& x);

// Trees of every vertex, computed once.
class Reachability {
 public:
  explicit Reachability(const Graph& g);
  const VertexSet& tree(VertexId v) const { return trees_.at(v); }
  bool reaches(VertexId from, VertexId to) const { return trees_.at(from).contains(to); }

 private:
  std::vector<VertexSet> trees_;
};

bool is_hereditary(const Graph& g, const VertexSet& x);
// No finite emitter outside X sends all of its edges into X.
bool is_saturated(const Graph& g, const VertexSet& x);
bool is_saturated_hereditary(const Graph& g, const VertexSet& x);

// Least saturated superset of X.
VertexSet saturation(const Graph& g, const VertexSet& x);

// Least saturated hereditary superset of X.
VertexSet saturated_hereditary_closure(const Graph& g, const VertexSet& x);

// Every saturated hereditary subset of the vertex set, ordered by size and
// then lexicographically. Enumerated as the closed sets of the closure
// operator above (Ganter's NextClosure), so the cost is polynomial per set.
std::vector<VertexSet> saturated_hereditary_sets(const Graph& g);

// Omega(X) = {w not in X : w reaches no vertex of X}. X must be nonempty.
VertexSet omega(const Graph& g, const VertexSet& x);

// B_H for a saturated hereditary H: infinite emitters outside H whose bundles
// all land in H and which have at least one named edge leaving H.
VertexSet b_h(const Graph& g, const VertexSet& h);
// Membership test behind b_h without the saturated-hereditary check.
bool in_b_h(const Graph& g, const VertexSet& h, VertexId v);

// BV(E) = {infinite emitters v : v in B_{Omega(v)}}.
VertexSet breaking_vertices(const Graph& g);

// Every nonempty M with g.vertices \ M saturated hereditary and satisfying
// (MT3), ordered by size then lexicographically.
std::vector<VertexSet> maximal_tails(const Graph& g);

// For all v, w in M there is y in M with v >= y and w >= y. M nonempty.
bool mt3_check(const Graph& g, const VertexSet& m);
bool mt3_check(const Reachability& reach, const VertexSet& m);

// Every cycle has an exit.
bool condition_L(const Graph& g);
// No vertex is the base of exactly one closed simple path.
bool condition_K(const Graph& g);

enum class ClosedPathCount { Zero, One, TwoOrMore };
const char* to_string(ClosedPathCount c);

// Number of closed simple paths (first-return paths) based at v, saturated
// at two. A bundle counts as at least two parallel edges.
ClosedPathCount closed_simple_path_count(const Graph& g, VertexId v);

// v lies on a closed path.
bool on_closed_path(const Graph& g, VertexId v);

// Vertices whose tree has no bifurcation and no vertex on a closed path.
VertexSet line_points(const Graph& g);

// Number of edges leaving v with a bundle counted as two.
std::size_t emission_count(const Graph& g, VertexId v);

// If g is exactly one cycle v_0 -> v_1 -> ... -> v_{n-1} -> v_0 through named
// edges (no bundles, no other edges), returns the cycle's edges in order
// starting from vertex 0. Otherwise returns an empty vector.
std::vector<EdgeId> single_cycle_edges(const Graph& g);

}  // namespace leavitt
