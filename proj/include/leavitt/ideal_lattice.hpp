#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/graph_algorithms.hpp"
#include "leavitt/ring.hpp"

namespace leavitt {

// (H, S) with H saturated hereditary and S a subset of B_H. Stands for the
// graded basic ideal generated by the vertices of H and the v^H, v in S.
struct AdmissiblePair {
  VertexSet h;
  VertexSet s;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend std::strong_ordering operator<=>(const AdmissiblePair& a, const AdmissiblePair& b) {
    if (auto c = a.h <=> b.h; c != 0) return c;
    return a.s <=> b.s;
  }
};

bool is_admissible(const Graph& g, const AdmissiblePair& p);
// Throws Validation naming the violated condition.
void require_admissible(const Graph& g, const AdmissiblePair& p);
AdmissiblePair make_pair(const Graph& g, const std::vector<std::string>& h,
                         const std::vector<std::string>& s);
// "{a,b}" and "({a,b}, {c})", names in vertex order.
std::string to_string(const Graph& g, const VertexSet& x);
std::string to_string(const Graph& g, const AdmissiblePair& p);

// All admissible pairs, ordered by H then S.
std::vector<AdmissiblePair> enumerate_admissible_pairs(const Graph& g);

// The ideal generated by a hereditary X is I(saturation(X), {}).
AdmissiblePair ideal_from_hereditary(const Graph& g, const VertexSet& x);

// Meet of two graded basic ideals:
// (H1 n H2, (H1 u S1) n (H2 u S2) n B_{H1 n H2}).
AdmissiblePair intersect(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b);

// I(a) is contained in I(b), decided as intersect(a, b) == a.
bool pair_leq(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b);

// Covering relations of the containment order on `pairs`, as index pairs
// (lower, upper).
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const Graph& g, const std::vector<AdmissiblePair>& pairs);

// --- graph constructions -------------------------------------------------

// E/(H,S) together with the vertex and edge correspondences used by the
// quotient homomorphism. Entries are empty where no image exists.
struct QuotientGraph {
  Graph graph;
  std::vector<std::optional<VertexId>> vertex_image;  // v not in H
  std::vector<std::optional<VertexId>> vertex_prime;  // v in B_H \ S
  std::vector<std::optional<EdgeId>> edge_image;      // r(e) not in H
  std::vector<std::optional<EdgeId>> edge_prime;      // r(e) in B_H \ S
};

QuotientGraph build_quotient(const Graph& g, const AdmissiblePair& p);
Graph quotient_graph(const Graph& g, const AdmissiblePair& p);

// E_(H,S): vertices H u S, edges out of H and edges from S into H.
Graph subalgebra_graph(const Graph& g, const AdmissiblePair& p);

// _H E_S. Path vertices come from F1 (last edge leaves a vertex outside
// H u S and lands in H) and F2 (nonempty paths ending in S).
struct IdealGraph {
  enum class Origin { Vertex, PathF1, PathF2 };
  struct VertexOrigin {
    Origin kind;
    VertexId vertex;             // for Origin::Vertex
    std::vector<EdgeId> path;    // for path vertices
  };
  struct EdgeOrigin {
    Origin kind;
    EdgeId edge;                 // for Origin::Vertex (an edge of E)
    std::vector<EdgeId> path;    // the path alpha behind an edge alpha-bar
  };

  Graph graph;
  bool truncated = false;   // F1 u F2 not fully materialised
  bool infinite = false;    // F1 u F2 is an infinite set
  std::size_t path_bound = 0;
  std::vector<VertexOrigin> vertex_origin;  // indexed by vertex of `graph`
  std::vector<EdgeOrigin> edge_origin;      // indexed by edge of `graph`
};

std::size_t default_path_bound(const Graph& g);
IdealGraph ideal_graph(const Graph& g, const AdmissiblePair& p,
                       std::optional<std::size_t> path_bound = std::nullopt);

// --- classification ------------------------------------------------------

// Ideal list produced under a ring hypothesis; `diagnostic` explains an empty
// answer forced by the ring.
struct IdealList {
  std::vector<AdmissiblePair> pairs;
  std::optional<std::string> diagnostic;
};

// R is an integral domain and E/(H,S) is nonempty and satisfies (MT3).
bool ideal_is_prime(const Graph& g, const RingSpec& r, const AdmissiblePair& p);
// R is a field and E/(H,S) is nonempty and satisfies (L) and (MT3).
bool ideal_is_primitive(const Graph& g, const RingSpec& r, const AdmissiblePair& p);

// Closed forms indexed by maximal tails and breaking vertices.
IdealList prime_graded_basic_ideals(const Graph& g, const RingSpec& r);
IdealList primitive_graded_ideals(const Graph& g, const RingSpec& r);

// Maximal tails M whose subgraph (M, r^{-1}(M)) satisfies Condition (L).
std::vector<VertexSet> primitive_maximal_tails(const Graph& g);

bool algebra_is_prime(const Graph& g, const RingSpec& r);
bool algebra_is_primitive(const Graph& g, const RingSpec& r);
// Sufficient test for simplicity: field, Condition (K), the only maximal
// tail is the whole vertex set and there are no breaking vertices.
bool algebra_is_simple_hint(const Graph& g, const RingSpec& r);
// Condition (K): exactly the graphs where admissible pairs describe all
// basic ideals.
bool all_basic_ideals_graded(const Graph& g);
bool vertex_generates_minimal_left_ideal(const Graph& g, const RingSpec& r, VertexId v);

struct ClassificationReport {
  RingSpec ring;
  std::vector<AdmissiblePair> admissible_pairs;
  std::vector<VertexSet> maximal_tails;
  VertexSet breaking_vertices;
  VertexSet line_points;
  IdealList prime_ideals;
  IdealList primitive_ideals;
  bool condition_L = false;
  bool condition_K = false;
  bool mt3 = false;
  bool ring_is_integral_domain = false;
  bool ring_is_field = false;
  bool algebra_is_prime = false;
  bool algebra_is_primitive = false;
  bool simple_by_criterion = false;
  bool all_basic_ideals_graded = false;
};

ClassificationReport classify(const Graph& g, const RingSpec& r);

}  // namespace leavitt
