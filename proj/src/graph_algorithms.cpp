#include "leavitt/graph_algorithms.hpp"

#include <algorithm>
#include <deque>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw_argument("unknown vertex index " + std::to_string(v));
}

void check_set(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count()) throw_argument("vertex set does not belong to graph");
}

}  // namespace

VertexSet hereditary_closure(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  VertexSet seen = x;
  std::vector<VertexId> stack = x.members();
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.successors(v)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

VertexSet ancestors(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  VertexSet seen = x;
  std::vector<VertexId> stack = x.members();
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.predecessors(v)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

VertexSet tree(const Graph& g, VertexId v) {
  check_vertex(g, v);
  return hereditary_closure(g, VertexSet(g.vertex_count(), {v}));
}

bool reaches(const Graph& g, VertexId from, VertexId to) {
  check_vertex(g, to);
  return tree(g, from).contains(to);
}

Reachability::Reachability(const Graph& g) {
  trees_.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) trees_.push_back(leavitt::tree(g, v));
}

bool is_hereditary(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  bool ok = true;
  x.for_each([&](VertexId v) {
    for (VertexId w : g.successors(v))
      if (!x.contains(w)) ok = false;
  });
  return ok;
}

namespace {

bool all_edges_into(const Graph& g, VertexId v, const VertexSet& x) {
  for (EdgeId e : g.out_edges(v))
    if (!x.contains(g.edge(e).dst)) return false;
  return true;
}

}  // namespace

bool is_saturated(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!x.contains(v) && g.is_finite_emitter(v) && all_edges_into(g, v, x)) return false;
  return true;
}

bool is_saturated_hereditary(const Graph& g, const VertexSet& x) {
  return is_hereditary(g, x) && is_saturated(g, x);
}

VertexSet saturation(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  VertexSet s = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!s.contains(v) && g.is_finite_emitter(v) && all_edges_into(g, v, s)) {
        s.insert(v);
        changed = true;
      }
    }
  }
  return s;
}

VertexSet saturated_hereditary_closure(const Graph& g, const VertexSet& x) {
  return saturation(g, hereditary_closure(g, x));
}

std::vector<VertexSet> saturated_hereditary_sets(const Graph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<VertexSet> out;
  VertexSet current = saturated_hereditary_closure(g, g.empty_set());
  out.push_back(current);
  // Lectic order with vertex n-1 as the least significant position.
  for (;;) {
    bool advanced = false;
    VertexSet prefix = current;
    for (VertexId i = n; i-- > 0;) {
      if (current.contains(i)) {
        prefix.erase(i);
        continue;
      }
      // prefix now holds the members of current below i.
      VertexSet candidate = prefix;
      candidate.insert(i);
      VertexSet closed = saturated_hereditary_closure(g, candidate);
      bool same_prefix = true;
      for (VertexId j = 0; j < i; ++j) {
        if (closed.contains(j) != prefix.contains(j)) {
          same_prefix = false;
          break;
        }
      }
      if (same_prefix) {
        current = std::move(closed);
        out.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet omega(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  if (x.empty()) throw_argument("omega requires a nonempty vertex set");
  return ancestors(g, x).complement();
}

bool in_b_h(const Graph& g, const VertexSet& h, VertexId v) {
  if (h.contains(v) || !g.is_infinite_emitter(v)) return false;
  for (VertexId w : g.bundle_targets(v))
    if (!h.contains(w)) return false;
  for (EdgeId e : g.out_edges(v))
    if (!h.contains(g.edge(e).dst)) return true;
  return false;
}

VertexSet b_h(const Graph& g, const VertexSet& h) {
  check_set(g, h);
  if (!is_saturated_hereditary(g, h))
    throw_argument("B_H requires a saturated hereditary set");
  VertexSet out = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in_b_h(g, h, v)) out.insert(v);
  return out;
}

VertexSet breaking_vertices(const Graph& g) {
  VertexSet out = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_infinite_emitter(v)) continue;
    if (in_b_h(g, omega(g, VertexSet(g.vertex_count(), {v})), v)) out.insert(v);
  }
  return out;
}

bool mt3_check(const Reachability& reach, const VertexSet& m) {
  if (m.empty()) throw_argument("MT3 check requires a nonempty vertex set");
  const auto members = m.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const VertexSet in_m = reach.tree(members[i]) & m;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!in_m.intersects(reach.tree(members[j]))) return false;
  }
  return true;
}

bool mt3_check(const Graph& g, const VertexSet& m) {
  check_set(g, m);
  return mt3_check(Reachability(g), m);
}

std::vector<VertexSet> maximal_tails(const Graph& g) {
  const Reachability reach(g);
  std::vector<VertexSet> out;
  for (const auto& h : saturated_hereditary_sets(g)) {
    VertexSet m = h.complement();
    if (!m.empty() && mt3_check(reach, m)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t emission_count(const Graph& g, VertexId v) {
  return g.out_edges(v).size() + 2 * g.bundle_targets(v).size();
}

bool condition_L(const Graph& g) {
  // A cycle without exit runs through vertices that each emit exactly one
  // named edge and no bundle; following those edges from such a vertex
  // must come back to it.
  const auto n = g.vertex_count();
  auto single_next = [&](VertexId v) -> std::optional<VertexId> {
    if (emission_count(g, v) != 1) return std::nullopt;
    return g.edge(g.out_edges(v)[0]).dst;
  };
  for (VertexId start = 0; start < n; ++start) {
    VertexId v = start;
    for (std::size_t step = 0; step < n; ++step) {
      auto next = single_next(v);
      if (!next) break;
      v = *next;
      if (v == start) return false;
    }
  }
  return true;
}

const char* to_string(ClosedPathCount c) {
  switch (c) {
    case ClosedPathCount::Zero: return "zero";
    case ClosedPathCount::One: return "one";
    case ClosedPathCount::TwoOrMore: return "two_or_more";
  }
  return "?";
}

ClosedPathCount closed_simple_path_count(const Graph& g, VertexId v) {
  check_vertex(g, v);
  const auto n = g.vertex_count();

  // Multiplicity of x -> y, with bundles counted as two and saturated at two.
  auto multiplicity = [&](VertexId x, VertexId y) {
    std::size_t m = 0;
    for (EdgeId e : g.out_edges(x))
      if (g.edge(e).dst == y) ++m;
    for (VertexId t : g.bundle_targets(x))
      if (t == y) m += 2;
    return std::min<std::size_t>(m, 2);
  };

  // Inner vertices of first-return paths: reachable from v and reaching v
  // without passing through v.
  VertexSet forward(n), backward(n);
  std::vector<VertexId> stack;
  for (VertexId w : g.successors(v))
    if (w != v && !forward.contains(w)) forward.insert(w), stack.push_back(w);
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (VertexId y : g.successors(x))
      if (y != v && !forward.contains(y)) forward.insert(y), stack.push_back(y);
  }
  for (VertexId w : g.predecessors(v))
    if (w != v && !backward.contains(w)) backward.insert(w), stack.push_back(w);
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (VertexId y : g.predecessors(x))
      if (y != v && !backward.contains(y)) backward.insert(y), stack.push_back(y);
  }
  const VertexSet inner = forward & backward;

  // A closed walk among inner vertices can be spliced in arbitrarily often.
  for (VertexId x : inner.members()) {
    VertexSet seen(n);
    std::vector<VertexId> todo;
    for (VertexId y : g.successors(x))
      if (inner.contains(y) && !seen.contains(y)) seen.insert(y), todo.push_back(y);
    while (!todo.empty()) {
      auto y = todo.back();
      todo.pop_back();
      if (y == x) return ClosedPathCount::TwoOrMore;
      for (VertexId z : g.successors(y))
        if (inner.contains(z) && !seen.contains(z)) seen.insert(z), todo.push_back(z);
    }
  }

  // inner induces a DAG: count walks to v with memoisation, capped at two.
  std::vector<int> memo(n, -1);
  auto count_from = [&](auto&& self, VertexId x) -> std::size_t {
    if (memo[x] >= 0) return static_cast<std::size_t>(memo[x]);
    std::size_t total = multiplicity(x, v);
    for (VertexId y : g.successors(x)) {
      if (y == v || !inner.contains(y)) continue;
      total += multiplicity(x, y) * self(self, y);
      if (total >= 2) break;
    }
    total = std::min<std::size_t>(total, 2);
    memo[x] = static_cast<int>(total);
    return total;
  };
  std::size_t total = multiplicity(v, v);
  for (VertexId y : g.successors(v)) {
    if (y == v || !inner.contains(y)) continue;
    total += multiplicity(v, y) * count_from(count_from, y);
    if (total >= 2) break;
  }
  if (total == 0) return ClosedPathCount::Zero;
  if (total == 1) return ClosedPathCount::One;
  return ClosedPathCount::TwoOrMore;
}

bool condition_K(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (closed_simple_path_count(g, v) == ClosedPathCount::One) return false;
  return true;
}

bool on_closed_path(const Graph& g, VertexId v) {
  check_vertex(g, v);
  VertexSet starts(g.vertex_count());
  for (VertexId w : g.successors(v)) starts.insert(w);
  return hereditary_closure(g, starts).contains(v);
}

VertexSet line_points(const Graph& g) {
  VertexSet bad = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (emission_count(g, v) >= 2 || on_closed_path(g, v)) bad.insert(v);
  return ancestors(g, bad).complement();
}

std::vector<EdgeId> single_cycle_edges(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0 || !g.is_row_finite() || g.edge_count() != n) return {};
  for (VertexId v = 0; v < n; ++v)
    if (g.out_edges(v).size() != 1 || g.in_edges(v).size() != 1) return {};
  std::vector<EdgeId> cycle;
  VertexId v = 0;
  do {
    EdgeId e = g.out_edges(v)[0];
    cycle.push_back(e);
    v = g.edge(e).dst;
  } while (v != 0 && cycle.size() <= n);
  if (cycle.size() != n) return {};
  return cycle;
}

}  // namespace leavitt
