#include "leavitt/leavitt_family.hpp"

#include "leavitt/error.hpp"
#include "leavitt/graph_algorithms.hpp"

namespace leavitt {

std::vector<Violation> verify_leavitt_family(const Graph& g, const LeavittFamily& family,
                                             const ZeroTest& is_zero) {
  if (family.vertex.size() != g.vertex_count())
    throw_argument("family is missing vertex images");
  if (family.edge.size() != g.edge_count() || family.ghost.size() != g.edge_count())
    throw_argument("family is missing edge or ghost-edge images");

  const auto zero = [&](const Element& x) { return is_zero ? is_zero(x) : x.is_zero(); };
  std::vector<Violation> out;
  const auto check = [&](int rel, const Element& lhs, const Element& rhs, std::string detail) {
    if (!zero(lhs - rhs)) out.push_back({rel, std::move(detail)});
  };
  const auto vn = [&](VertexId v) -> const std::string& { return g.vertex_name(v); };
  const auto en = [&](EdgeId e) -> const std::string& { return g.edge(e).id; };
  const auto& a = family.vertex;
  const auto& b = family.edge;
  const auto& bs = family.ghost;

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      const Element rhs = v == w ? a[v] : a[v].algebra().zero();
      check(1, a[v] * a[w], rhs,
            vn(v) + "." + vn(w) + (v == w ? " != " + vn(v) : " != 0"));
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId s = g.edge(e).src;
    const VertexId r = g.edge(e).dst;
    check(2, a[s] * b[e], b[e], vn(s) + "." + en(e) + " != " + en(e));
    check(2, b[e] * a[r], b[e], en(e) + "." + vn(r) + " != " + en(e));
    check(2, a[r] * bs[e], bs[e], vn(r) + "." + en(e) + "^* != " + en(e) + "^*");
    check(2, bs[e] * a[s], bs[e], en(e) + "^*." + vn(s) + " != " + en(e) + "^*");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      const VertexId r = g.edge(e).dst;
      const Element rhs = e == f ? a[r] : a[r].algebra().zero();
      check(3, bs[e] * b[f], rhs,
            en(e) + "^*." + en(f) + (e == f ? " != " + vn(r) : " != 0"));
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_finite_emitter(v)) continue;
    Element sum = a[v].algebra().zero();
    for (EdgeId e : g.out_edges(v)) sum += b[e] * bs[e];
    check(4, sum, a[v], vn(v) + " != sum of e.e^* over its edges");
  }
  return out;
}

LeavittFamily identity_family(const Algebra& a) {
  const Graph& g = a.graph();
  LeavittFamily f;
  for (VertexId v = 0; v < g.vertex_count(); ++v) f.vertex.push_back(a.vertex(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    f.edge.push_back(a.edge(e));
    f.ghost.push_back(a.ghost(e));
  }
  return f;
}

LeavittFamily quotient_family(const QuotientMap& q) {
  const Graph& g = q.source().graph();
  LeavittFamily f;
  for (VertexId v = 0; v < g.vertex_count(); ++v) f.vertex.push_back(q.vertex_image(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    f.edge.push_back(q.edge_image(e));
    f.ghost.push_back(q.ghost_image(e));
  }
  return f;
}

LeavittFamily quotient_lift_family(const Algebra& a, const AdmissiblePair& p,
                                   const QuotientGraph& q) {
  const Graph& g = a.graph();
  require_admissible(g, p);
  const Graph& qg = q.graph;
  std::vector<std::optional<Element>> va(qg.vertex_count());
  // a_v for v in E, a_{v'} for the primed copies.
  std::vector<std::optional<Element>> unprimed(g.vertex_count());
  std::vector<std::optional<Element>> primed(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (q.vertex_prime[v]) {
      Element vh = a.vh_element(v, p.h);
      unprimed[v] = a.vertex(v) - vh;
      primed[v] = vh;
      va[*q.vertex_prime[v]] = *primed[v];
    } else if (q.vertex_image[v]) {
      unprimed[v] = a.vertex(v);
    }
    if (q.vertex_image[v]) va[*q.vertex_image[v]] = *unprimed[v];
  }
  std::vector<std::optional<Element>> eb(qg.edge_count());
  std::vector<std::optional<Element>> gb(qg.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const VertexId r = g.edge(e).dst;
    if (q.edge_image[e]) {
      eb[*q.edge_image[e]] = a.edge(e) * *unprimed[r];
      gb[*q.edge_image[e]] = *unprimed[r] * a.ghost(e);
    }
    if (q.edge_prime[e]) {
      eb[*q.edge_prime[e]] = a.edge(e) * *primed[r];
      gb[*q.edge_prime[e]] = *primed[r] * a.ghost(e);
    }
  }
  LeavittFamily f;
  for (auto& x : va) {
    if (!x) throw_argument("quotient graph vertex without a preimage");
    f.vertex.push_back(std::move(*x));
  }
  for (EdgeId e = 0; e < qg.edge_count(); ++e) {
    if (!eb[e]) throw_argument("quotient graph edge without a preimage");
    f.edge.push_back(std::move(*eb[e]));
    f.ghost.push_back(std::move(*gb[e]));
  }
  return f;
}

LeavittFamily ideal_graph_family(const Algebra& a, const AdmissiblePair& p,
                                 const IdealGraph& ig) {
  const Graph& g = a.graph();
  require_admissible(g, p);
  if (ig.truncated) throw_argument("ideal graph is truncated; its generator family is incomplete");
  const auto path = [&](const std::vector<EdgeId>& alpha) {
    return a.monomial(Monomial{alpha, {}, g.edge(alpha.back()).dst});
  };
  const auto tail_vh = [&](const std::vector<EdgeId>& alpha) {
    return path(alpha) * a.vh_element(g.edge(alpha.back()).dst, p.h);
  };
  LeavittFamily f;
  for (const auto& o : ig.vertex_origin) {
    switch (o.kind) {
      case IdealGraph::Origin::Vertex:
        f.vertex.push_back(p.h.contains(o.vertex) ? a.vertex(o.vertex)
                                                  : a.vh_element(o.vertex, p.h));
        break;
      case IdealGraph::Origin::PathF1: {
        Element x = path(o.path);
        f.vertex.push_back(x * a.involution(x));
        break;
      }
      case IdealGraph::Origin::PathF2: {
        Element x = tail_vh(o.path);
        f.vertex.push_back(x * a.involution(path(o.path)));
        break;
      }
    }
  }
  for (const auto& o : ig.edge_origin) {
    Element x = a.zero();
    switch (o.kind) {
      case IdealGraph::Origin::Vertex: x = a.edge(o.edge); break;
      case IdealGraph::Origin::PathF1: x = path(o.path); break;
      case IdealGraph::Origin::PathF2: x = tail_vh(o.path); break;
    }
    f.ghost.push_back(a.involution(x));
    f.edge.push_back(std::move(x));
  }
  return f;
}

}  // namespace leavitt
