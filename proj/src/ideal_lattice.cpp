#include "leavitt/ideal_lattice.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

bool is_admissible(const Graph& g, const AdmissiblePair& p) {
  if (p.h.universe() != g.vertex_count() || p.s.universe() != g.vertex_count()) return false;
  if (!is_saturated_hereditary(g, p.h)) return false;
  return p.s.is_subset_of(b_h(g, p.h));
}

void require_admissible(const Graph& g, const AdmissiblePair& p) {
  if (p.h.universe() != g.vertex_count() || p.s.universe() != g.vertex_count())
    throw_validation("admissible pair does not belong to this graph");
  if (!is_hereditary(g, p.h)) throw_validation("H is not hereditary");
  if (!is_saturated(g, p.h)) throw_validation("H is not saturated");
  if (!p.s.is_subset_of(b_h(g, p.h))) throw_validation("S is not a subset of B_H");
}

AdmissiblePair make_pair(const Graph& g, const std::vector<std::string>& h,
                         const std::vector<std::string>& s) {
  return AdmissiblePair{g.vertex_set(h), g.vertex_set(s)};
}

std::string to_string(const Graph& g, const VertexSet& x) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : g.names(x)) {
    out += (first ? "" : ",") + n;
    first = false;
  }
  return out + "}";
}

std::string to_string(const Graph& g, const AdmissiblePair& p) {
  return "(" + to_string(g, p.h) + ", " + to_string(g, p.s) + ")";
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(const Graph& g) {
  std::vector<AdmissiblePair> out;
  for (const auto& h : saturated_hereditary_sets(g)) {
    const auto breaking = b_h(g, h).members();
    if (breaking.size() >= 63) throw_argument("B_H too large to enumerate its subsets");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << breaking.size()); ++mask) {
      VertexSet s = g.empty_set();
      for (std::size_t i = 0; i < breaking.size(); ++i)
        if ((mask >> i) & 1u) s.insert(breaking[i]);
      out.push_back({h, std::move(s)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdmissiblePair ideal_from_hereditary(const Graph& g, const VertexSet& x) {
  if (!is_hereditary(g, x)) throw_argument("ideal_from_hereditary requires a hereditary set");
  return {saturation(g, x), g.empty_set()};
}

AdmissiblePair intersect(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b) {
  require_admissible(g, a);
  require_admissible(g, b);
  VertexSet k = a.h & b.h;
  VertexSet t = (a.h | a.s) & (b.h | b.s) & b_h(g, k);
  return {std::move(k), std::move(t)};
}

bool pair_leq(const Graph& g, const AdmissiblePair& a, const AdmissiblePair& b) {
  return intersect(g, a, b) == a;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const Graph& g, const std::vector<AdmissiblePair>& pairs) {
  const auto n = pairs.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = i == j || pair_leq(g, pairs[i], pairs[j]);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  }
  return out;
}

// --- classification ------------------------------------------------------

bool ideal_is_prime(const Graph& g, const RingSpec& r, const AdmissiblePair& p) {
  require_admissible(g, p);
  if (!r.is_integral_domain()) return false;
  const Graph q = quotient_graph(g, p);
  if (q.vertex_count() == 0) return false;  // the improper ideal
  return mt3_check(q, q.all_vertices());
}

bool ideal_is_primitive(const Graph& g, const RingSpec& r, const AdmissiblePair& p) {
  require_admissible(g, p);
  if (!r.is_field()) return false;
  const Graph q = quotient_graph(g, p);
  if (q.vertex_count() == 0) return false;
  return condition_L(q) && mt3_check(q, q.all_vertices());
}

namespace {

void add_breaking_vertex_ideals(const Graph& g, std::vector<AdmissiblePair>& out) {
  breaking_vertices(g).for_each([&](VertexId v) {
    VertexSet h = omega(g, VertexSet(g.vertex_count(), {v}));
    VertexSet s = b_h(g, h);
    s.erase(v);
    out.push_back({std::move(h), std::move(s)});
  });
}

void sort_unique(std::vector<AdmissiblePair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

AdmissiblePair tail_ideal(const Graph& g, const VertexSet& tail) {
  VertexSet h = omega(g, tail);
  VertexSet s = b_h(g, h);
  return {std::move(h), std::move(s)};
}

// (M, r^{-1}(M)) for a set M whose complement is hereditary.
Graph restrict_to(const Graph& g, const VertexSet& m) {
  GraphDescription d;
  d.vertices = g.names(m);
  for (const auto& e : g.edges())
    if (m.contains(e.dst))
      d.edges.push_back({e.id, g.vertex_name(e.src), g.vertex_name(e.dst)});
  for (const auto& b : g.bundles())
    if (m.contains(b.dst)) d.bundles.push_back({g.vertex_name(b.src), g.vertex_name(b.dst)});
  return Graph::build(d, true);
}

}  // namespace

IdealList prime_graded_basic_ideals(const Graph& g, const RingSpec& r) {
  IdealList out;
  if (!r.is_integral_domain()) {
    out.diagnostic = "coefficient ring " + r.to_string() + " is not an integral domain";
    return out;
  }
  for (const auto& m : maximal_tails(g)) out.pairs.push_back(tail_ideal(g, m));
  add_breaking_vertex_ideals(g, out.pairs);
  sort_unique(out.pairs);
  return out;
}

std::vector<VertexSet> primitive_maximal_tails(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& m : maximal_tails(g))
    if (condition_L(restrict_to(g, m))) out.push_back(m);
  return out;
}

IdealList primitive_graded_ideals(const Graph& g, const RingSpec& r) {
  IdealList out;
  if (!r.is_field()) {
    out.diagnostic = "coefficient ring " + r.to_string() + " is not a field";
    return out;
  }
  for (const auto& m : primitive_maximal_tails(g)) out.pairs.push_back(tail_ideal(g, m));
  add_breaking_vertex_ideals(g, out.pairs);
  sort_unique(out.pairs);
  return out;
}

bool algebra_is_prime(const Graph& g, const RingSpec& r) {
  return r.is_integral_domain() && mt3_check(g, g.all_vertices());
}

bool algebra_is_primitive(const Graph& g, const RingSpec& r) {
  return r.is_field() && condition_L(g) && mt3_check(g, g.all_vertices());
}

bool algebra_is_simple_hint(const Graph& g, const RingSpec& r) {
  if (!r.is_field() || !condition_K(g)) return false;
  const auto tails = maximal_tails(g);
  return tails.size() == 1 && tails.front() == g.all_vertices() &&
         breaking_vertices(g).empty();
}

bool all_basic_ideals_graded(const Graph& g) { return condition_K(g); }

bool vertex_generates_minimal_left_ideal(const Graph& g, const RingSpec& r, VertexId v) {
  if (v >= g.vertex_count()) throw_argument("unknown vertex index " + std::to_string(v));
  return r.is_field() && line_points(g).contains(v);
}

ClassificationReport classify(const Graph& g, const RingSpec& r) {
  ClassificationReport rep{
      .ring = r,
      .admissible_pairs = enumerate_admissible_pairs(g),
      .maximal_tails = maximal_tails(g),
      .breaking_vertices = breaking_vertices(g),
      .line_points = line_points(g),
      .prime_ideals = prime_graded_basic_ideals(g, r),
      .primitive_ideals = primitive_graded_ideals(g, r),
  };
  rep.condition_L = condition_L(g);
  rep.condition_K = condition_K(g);
  rep.mt3 = mt3_check(g, g.all_vertices());
  rep.ring_is_integral_domain = r.is_integral_domain();
  rep.ring_is_field = r.is_field();
  rep.algebra_is_prime = algebra_is_prime(g, r);
  rep.algebra_is_primitive = algebra_is_primitive(g, r);
  rep.simple_by_criterion = algebra_is_simple_hint(g, r);
  rep.all_basic_ideals_graded = rep.condition_K;
  return rep;
}

}  // namespace leavitt
