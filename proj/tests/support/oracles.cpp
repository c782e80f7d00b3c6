#include "oracles.hpp"

#include <functional>

namespace testing_support {

Brute::Brute(const SmallGraph& g)
    : n_(g.n), g_(g), reach_(g.n), named_out_(g.n, 0), bundles_out_(g.n, 0) {
  for (const auto& [s, r] : g.edges) ++named_out_[s];
  for (const auto& [s, r] : g.bundles) ++bundles_out_[s];
  for (int v = 0; v < n_; ++v) reach_[v] = Mask(1) << v;
  for (const auto& [s, r] : g.edges) reach_[s] |= Mask(1) << r;
  for (const auto& [s, r] : g.bundles) reach_[s] |= Mask(1) << r;
  // Warshall.
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if ((reach_[i] >> k) & 1u) reach_[i] |= reach_[k];
}

bool Brute::hereditary(Mask x) const {
  for (const auto& [s, r] : g_.edges)
    if (((x >> s) & 1u) && !((x >> r) & 1u)) return false;
  for (const auto& [s, r] : g_.bundles)
    if (((x >> s) & 1u) && !((x >> r) & 1u)) return false;
  return true;
}

bool Brute::saturated(Mask x) const {
  for (int v = 0; v < n_; ++v) {
    if (((x >> v) & 1u) || !is_finite_emitter(v)) continue;
    bool all_in = true;
    for (const auto& [s, r] : g_.edges)
      if (s == v && !((x >> r) & 1u)) all_in = false;
    if (all_in) return false;
  }
  return true;
}

Brute::Mask Brute::saturation(Mask x) const {
  // Smallest saturated superset: intersection of all saturated supersets.
  Mask out = all();
  for (Mask y = 0; y <= all(); ++y)
    if ((y & x) == x && saturated(y)) out &= y;
  return out;
}

std::vector<Brute::Mask> Brute::saturated_hereditary_sets() const {
  std::vector<Mask> out;
  for (Mask x = 0; x <= all(); ++x)
    if (hereditary(x) && saturated(x)) out.push_back(x);
  return out;
}

Brute::Mask Brute::b_h(Mask h) const {
  Mask out = 0;
  for (int v = 0; v < n_; ++v) {
    if (((h >> v) & 1u) || !is_infinite_emitter(v)) continue;
    bool bundles_in = true;
    for (const auto& [s, r] : g_.bundles)
      if (s == v && !((h >> r) & 1u)) bundles_in = false;
    int leaving = 0;
    for (const auto& [s, r] : g_.edges)
      if (s == v && !((h >> r) & 1u)) ++leaving;
    if (bundles_in && leaving >= 1) out |= Mask(1) << v;
  }
  return out;
}

Brute::Mask Brute::omega(Mask x) const {
  Mask out = 0;
  for (int w = 0; w < n_; ++w)
    if (!((x >> w) & 1u) && (reach_[w] & x) == 0) out |= Mask(1) << w;
  return out;
}

Brute::Mask Brute::breaking_vertices() const {
  Mask out = 0;
  for (int v = 0; v < n_; ++v)
    if (is_infinite_emitter(v) && ((b_h(omega(Mask(1) << v)) >> v) & 1u)) out |= Mask(1) << v;
  return out;
}

bool Brute::mt3(Mask m) const {
  for (int v = 0; v < n_; ++v) {
    if (!((m >> v) & 1u)) continue;
    for (int w = 0; w < n_; ++w) {
      if (!((m >> w) & 1u)) continue;
      if ((reach_[v] & reach_[w] & m) == 0) return false;
    }
  }
  return true;
}

std::vector<Brute::Mask> Brute::maximal_tails() const {
  std::vector<Mask> out;
  for (Mask h : saturated_hereditary_sets()) {
    const Mask m = all() & ~h;
    if (m != 0 && mt3(m)) out.push_back(m);
  }
  return out;
}

std::vector<Brute::Pair> Brute::admissible_pairs() const {
  std::vector<Pair> out;
  for (Mask h : saturated_hereditary_sets()) {
    const Mask b = b_h(h);
    for (Mask s = 0; s <= all(); ++s)
      if ((s & ~b) == 0) out.push_back({h, s});
  }
  return out;
}

bool Brute::condition_L() const {
  // DFS over simple cycles of named edges starting at their least vertex.
  const int m = static_cast<int>(g_.edges.size());
  bool ok = true;
  std::vector<int> path;
  std::function<void(int, int, Mask)> dfs = [&](int start, int v, Mask used) {
    for (int i = 0; i < m && ok; ++i) {
      if (g_.edges[i].first != v) continue;
      const int r = g_.edges[i].second;
      if (r == start) {
        bool exit = false;
        Mask on_cycle = used;
        for (int u = 0; u < n_; ++u)
          if (((on_cycle >> u) & 1u) && (named_out_[u] > 1 || bundles_out_[u] > 0)) exit = true;
        if (!exit) ok = false;
      } else if (r > start && !((used >> r) & 1u)) {
        dfs(start, r, used | (Mask(1) << r));
      }
    }
  };
  for (int v = 0; v < n_ && ok; ++v) dfs(v, v, Mask(1) << v);
  return ok;
}

int Brute::closed_simple_paths(int v) const {
  struct Arrow {
    int s, r;
  };
  std::vector<Arrow> arrows;
  for (const auto& [s, r] : g_.edges) arrows.push_back({s, r});
  for (const auto& [s, r] : g_.bundles) {
    arrows.push_back({s, r});
    arrows.push_back({s, r});
  }
  const int bound = 2 * static_cast<int>(arrows.size()) + 2;
  int count = 0;
  std::function<void(int, int)> walk = [&](int at, int len) {
    if (count >= 2 || len >= bound) return;
    for (const auto& a : arrows) {
      if (a.s != at || count >= 2) continue;
      if (a.r == v) {
        ++count;
      } else if (reaches(a.r, v)) {
        walk(a.r, len + 1);
      }
    }
  };
  walk(v, 0);
  return count;
}

bool Brute::condition_K() const {
  for (int v = 0; v < n_; ++v)
    if (closed_simple_paths(v) == 1) return false;
  return true;
}

Brute::Mask Brute::line_points() const {
  Mask bad = 0;
  for (int w = 0; w < n_; ++w) {
    const int emission = named_out_[w] + 2 * bundles_out_[w];
    bool on_closed_path = false;
    for (const auto& [s, r] : g_.edges)
      if (s == w && reaches(r, w)) on_closed_path = true;
    for (const auto& [s, r] : g_.bundles)
      if (s == w && reaches(r, w)) on_closed_path = true;
    if (emission >= 2 || on_closed_path) bad |= Mask(1) << w;
  }
  Mask out = 0;
  for (int v = 0; v < n_; ++v)
    if ((reach_[v] & bad) == 0) out |= Mask(1) << v;
  return out;
}

bool Brute::contained(const Pair& a, const Pair& b) {
  return (a.h & ~b.h) == 0 && (a.s & ~(b.h | b.s)) == 0;
}

Brute::Pair Brute::glb(const std::vector<Pair>& pairs, const Pair& a, const Pair& b) {
  std::vector<Pair> lower;
  for (const auto& p : pairs)
    if (contained(p, a) && contained(p, b)) lower.push_back(p);
  for (const auto& p : lower) {
    bool greatest = true;
    for (const auto& q : lower)
      if (!contained(q, p)) greatest = false;
    if (greatest) return p;
  }
  return {~Mask(0), ~Mask(0)};
}

leavitt::VertexSet to_set(const Brute::Mask m, int n) {
  leavitt::VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if ((m >> v) & 1u) s.insert(v);
  return s;
}

Brute::Mask to_mask(const leavitt::VertexSet& s) {
  Brute::Mask m = 0;
  for (auto v : s.members()) m |= Brute::Mask(1) << v;
  return m;
}

leavitt::AdmissiblePair to_pair(const Brute::Pair& p, int n) {
  return {to_set(p.h, n), to_set(p.s, n)};
}

Brute::Pair to_brute(const leavitt::AdmissiblePair& p) { return {to_mask(p.h), to_mask(p.s)}; }

}  // namespace testing_support
