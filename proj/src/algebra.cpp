#include "leavitt/algebra.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "leavitt/error.hpp"
#include "leavitt/graph_algorithms.hpp"

namespace leavitt {

namespace detail {
struct AlgebraContext {
  std::shared_ptr<const Graph> graph;
  RingSpec ring;
  SpecialEdgeMap special;
};
}  // namespace detail

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto la = a.alpha.size() + a.beta.size();
  const auto lb = b.alpha.size() + b.beta.size();
  if (auto c = la <=> lb; c != 0) return c;
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  if (auto c = a.beta <=> b.beta; c != 0) return c;
  return a.vertex <=> b.vertex;
}

SpecialEdgeMap SpecialEdgeMap::lexicographic(const Graph& g) {
  SpecialEdgeMap m;
  m.special_.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.is_finite_emitter(v)) m.special_[v] = *std::min_element(g.out_edges(v).begin(),
                                                                  g.out_edges(v).end());
  return m;
}

SpecialEdgeMap SpecialEdgeMap::from_edges(const Graph& g, const std::vector<EdgeId>& choice) {
  SpecialEdgeMap m;
  m.special_.resize(g.vertex_count());
  for (EdgeId e : choice) {
    if (e >= g.edge_count()) throw_argument("special edge index out of range");
    const VertexId v = g.edge(e).src;
    if (!g.is_finite_emitter(v))
      throw_argument("special edge '" + g.edge(e).id + "' leaves a vertex that is not a finite emitter");
    if (m.special_[v]) throw_argument("two special edges at vertex '" + g.vertex_name(v) + "'");
    m.special_[v] = e;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.is_finite_emitter(v) && !m.special_[v])
      throw_argument("no special edge at finite emitter '" + g.vertex_name(v) + "'");
  return m;
}

namespace {

using Ctx = detail::AlgebraContext;

void accumulate(const Ctx& ctx, Element::Terms& terms, const Monomial& m, const mpq_class& c) {
  auto it = terms.try_emplace(m, 0).first;
  it->second = ctx.ring.canonical(it->second + c);
  if (sgn(it->second) == 0) terms.erase(it);
}

// One rewrite at the tail of m if it ends in e0 e0^* of a finite emitter.
// Returns false when m is irreducible.
bool rewrite_once(const Ctx& ctx, const Monomial& m, const mpq_class& c,
                  std::vector<RawTerm>& out) {
  if (m.alpha.empty() || m.beta.empty() || m.alpha.back() != m.beta.back()) return false;
  const Graph& g = *ctx.graph;
  const EdgeId e = m.alpha.back();
  const VertexId v = g.edge(e).src;
  const auto special = ctx.special.at(v);
  if (!special || *special != e) return false;
  Monomial shorter{{m.alpha.begin(), m.alpha.end() - 1}, {m.beta.begin(), m.beta.end() - 1}, v};
  for (EdgeId f : g.out_edges(v)) {
    if (f == e) continue;
    Monomial t = shorter;
    t.alpha.push_back(f);
    t.beta.push_back(f);
    t.vertex = g.edge(f).dst;
    out.push_back({std::move(t), ctx.ring.canonical(-c)});
  }
  out.push_back({std::move(shorter), c});
  return true;
}

// Fully reduces c*m into terms. Only the common tail of alpha and beta can be
// a redex, and every rewrite either shortens it or makes it irreducible.
void reduce_into(const Ctx& ctx, Monomial m, const mpq_class& c, Element::Terms& terms) {
  const Graph& g = *ctx.graph;
  for (;;) {
    if (m.alpha.empty() || m.beta.empty() || m.alpha.back() != m.beta.back()) break;
    const EdgeId e = m.alpha.back();
    const VertexId v = g.edge(e).src;
    const auto special = ctx.special.at(v);
    if (!special || *special != e) break;
    m.alpha.pop_back();
    m.beta.pop_back();
    m.vertex = v;
    for (EdgeId f : g.out_edges(v)) {
      if (f == e) continue;
      Monomial t = m;
      t.alpha.push_back(f);
      t.beta.push_back(f);
      t.vertex = g.edge(f).dst;
      accumulate(ctx, terms, t, -c);
    }
  }
  accumulate(ctx, terms, m, c);
}

// (alpha beta^*)(mu nu^*) as a single monomial, or nothing when it vanishes.
std::optional<Monomial> product(const Graph& g, const Monomial& a, const Monomial& b) {
  const auto& beta = a.beta;
  const auto& mu = b.alpha;
  Monomial r;
  if (beta.size() <= mu.size()) {
    if (!std::equal(beta.begin(), beta.end(), mu.begin())) return std::nullopt;
    if (beta.empty()) {
      const VertexId start = mu.empty() ? b.vertex : g.edge(mu.front()).src;
      if (start != a.vertex) return std::nullopt;
    }
    r.alpha = a.alpha;
    r.alpha.insert(r.alpha.end(), mu.begin() + static_cast<std::ptrdiff_t>(beta.size()), mu.end());
    r.beta = b.beta;
    r.vertex = b.vertex;
  } else {
    if (!std::equal(mu.begin(), mu.end(), beta.begin())) return std::nullopt;
    if (mu.empty() && g.edge(beta.front()).src != b.vertex) return std::nullopt;
    r.alpha = a.alpha;
    r.beta = b.beta;
    r.beta.insert(r.beta.end(), beta.begin() + static_cast<std::ptrdiff_t>(mu.size()), beta.end());
    r.vertex = a.vertex;
  }
  return r;
}

}  // namespace

Algebra::Algebra(std::shared_ptr<const Graph> graph, RingSpec ring)
    : Algebra(graph, ring, SpecialEdgeMap::lexicographic(*graph)) {}

Algebra::Algebra(std::shared_ptr<const Graph> graph, RingSpec ring, SpecialEdgeMap special)
    : ctx_(std::make_shared<const detail::AlgebraContext>(
          detail::AlgebraContext{std::move(graph), ring, std::move(special)})) {}

const Graph& Algebra::graph() const { return *ctx_->graph; }
std::shared_ptr<const Graph> Algebra::graph_ptr() const { return ctx_->graph; }
const RingSpec& Algebra::ring() const { return ctx_->ring; }
const SpecialEdgeMap& Algebra::special_edges() const { return ctx_->special; }

void Algebra::require_member(const Element& x) const {
  if (x.ctx_ != ctx_) {
    if (x.ctx_ && x.ctx_->graph != ctx_->graph)
      throw_argument("element belongs to a different graph");
    throw_argument("element belongs to a different algebra (ring or special edges differ)");
  }
}

void Algebra::check_monomial(const Monomial& m) const {
  const Graph& g = graph();
  if (m.vertex >= g.vertex_count()) throw_argument("ill-formed monomial: unknown vertex");
  for (const auto* path : {&m.alpha, &m.beta}) {
    for (std::size_t i = 0; i < path->size(); ++i) {
      if ((*path)[i] >= g.edge_count()) throw_argument("ill-formed monomial: unknown edge");
      if (i > 0 && g.edge((*path)[i - 1]).dst != g.edge((*path)[i]).src)
        throw_argument("ill-formed monomial: edges " + g.edge((*path)[i - 1]).id + " and " +
                       g.edge((*path)[i]).id + " do not compose");
    }
    if (!path->empty() && g.edge(path->back()).dst != m.vertex)
      throw_argument("ill-formed monomial: r(alpha) != r(beta)");
  }
}

bool Algebra::is_reducible(const Monomial& m) const {
  std::vector<RawTerm> scratch;
  return rewrite_once(*ctx_, m, mpq_class(1), scratch);
}

Element Algebra::zero() const { return Element(ctx_); }

Element Algebra::vertex(VertexId v) const {
  if (v >= graph().vertex_count()) throw_argument("unknown vertex index");
  return monomial(Monomial{{}, {}, v});
}

Element Algebra::edge(EdgeId e) const {
  if (e >= graph().edge_count()) throw_argument("unknown edge index");
  return monomial(Monomial{{e}, {}, graph().edge(e).dst});
}

Element Algebra::ghost(EdgeId e) const {
  if (e >= graph().edge_count()) throw_argument("unknown edge index");
  return monomial(Monomial{{}, {e}, graph().edge(e).dst});
}

Element Algebra::monomial(const Monomial& m, const RingElement& coefficient) const {
  if (!(coefficient.ring() == ring())) throw_argument("coefficient from a different ring");
  check_monomial(m);
  Element out(ctx_);
  if (!coefficient.is_zero()) reduce_into(*ctx_, m, coefficient.value(), out.terms_);
  return out;
}

Element Algebra::monomial(const Monomial& m) const {
  return monomial(m, RingElement::one(ring()));
}

Element Algebra::scalar(const RingElement& r, const Element& x) const {
  require_member(x);
  if (!(r.ring() == ring())) throw_argument("coefficient from a different ring");
  Element out(ctx_);
  for (const auto& [m, c] : x.terms_) accumulate(*ctx_, out.terms_, m, c * r.value());
  return out;
}

Element Algebra::normal_form(const std::vector<RawTerm>& raw, RewriteOrder order) const {
  Element out(ctx_);
  std::vector<RawTerm> pending;
  pending.reserve(raw.size());
  for (const auto& t : raw) {
    check_monomial(t.monomial);
    pending.push_back({t.monomial, ring().canonical(t.coefficient)});
  }
  if (!order.seed) {
    std::deque<RawTerm> queue(pending.begin(), pending.end());
    std::vector<RawTerm> produced;
    while (!queue.empty()) {
      RawTerm t = std::move(queue.front());
      queue.pop_front();
      produced.clear();
      if (rewrite_once(*ctx_, t.monomial, t.coefficient, produced))
        for (auto& p : produced) queue.push_back(std::move(p));
      else
        accumulate(*ctx_, out.terms_, t.monomial, t.coefficient);
    }
    return out;
  }
  std::mt19937_64 rng(*order.seed);
  std::vector<RawTerm> produced;
  while (!pending.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
    const std::size_t i = pick(rng);
    std::swap(pending[i], pending.back());
    RawTerm t = std::move(pending.back());
    pending.pop_back();
    produced.clear();
    if (rewrite_once(*ctx_, t.monomial, t.coefficient, produced))
      for (auto& p : produced) pending.push_back(std::move(p));
    else
      accumulate(*ctx_, out.terms_, t.monomial, t.coefficient);
  }
  return out;
}

Element Algebra::add(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  Element out = a;
  for (const auto& [m, c] : b.terms_) accumulate(*ctx_, out.terms_, m, c);
  return out;
}

Element Algebra::negate(const Element& a) const {
  require_member(a);
  Element out(ctx_);
  for (const auto& [m, c] : a.terms_) accumulate(*ctx_, out.terms_, m, -c);
  return out;
}

Element Algebra::subtract(const Element& a, const Element& b) const {
  return add(a, negate(b));
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  Element out(ctx_);
  const Graph& g = graph();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto m = product(g, ma, mb);
      if (!m) continue;
      const mpq_class c = ring().canonical(ca * cb);
      if (sgn(c) == 0) continue;
      reduce_into(*ctx_, std::move(*m), c, out.terms_);
    }
  }
  return out;
}

Element Algebra::involution(const Element& x) const {
  require_member(x);
  Element out(ctx_);
  for (const auto& [m, c] : x.terms_) out.terms_.emplace(Monomial{m.beta, m.alpha, m.vertex}, c);
  return out;
}

std::map<int, Element> Algebra::degree_components(const Element& x) const {
  require_member(x);
  std::map<int, Element> out;
  for (const auto& [m, c] : x.terms_) {
    auto [it, _] = out.try_emplace(m.degree(), Element(ctx_));
    it->second.terms_.emplace(m, c);
  }
  return out;
}

Element Algebra::local_unit(const VertexSet& x) const {
  if (x.universe() != graph().vertex_count()) throw_argument("vertex set does not belong to graph");
  if (x.empty()) throw_argument("local unit requires a nonempty vertex set");
  Element out(ctx_);
  x.for_each([&](VertexId v) { out.terms_.emplace(Monomial{{}, {}, v}, mpq_class(1)); });
  return out;
}

Element Algebra::vh_element(VertexId v, const VertexSet& h) const {
  const Graph& g = graph();
  if (v >= g.vertex_count()) throw_argument("unknown vertex index");
  if (!b_h(g, h).contains(v))
    throw_argument("vertex '" + g.vertex_name(v) + "' is not in B_H");
  std::vector<RawTerm> raw{{Monomial{{}, {}, v}, mpq_class(1)}};
  for (EdgeId e : g.out_edges(v))
    if (!h.contains(g.edge(e).dst)) raw.push_back({Monomial{{e}, {e}, g.edge(e).dst}, mpq_class(-1)});
  return normal_form(raw);
}

std::string Algebra::to_string(const Monomial& m) const {
  const Graph& g = graph();
  if (m.alpha.empty() && m.beta.empty()) return g.vertex_name(m.vertex);
  std::string out;
  for (EdgeId e : m.alpha) {
    if (!out.empty()) out += '.';
    out += g.edge(e).id;
  }
  for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += g.edge(*it).id + "^*";
  }
  return out;
}

std::string Algebra::to_string(const Element& x) const {
  require_member(x);
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms_) {
    const bool negative = sgn(c) < 0;
    const mpq_class magnitude = negative ? mpq_class(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (magnitude != 1) out += magnitude.get_str() + ".";
    out += to_string(m);
    first = false;
  }
  return out;
}

// --- Element ----------------------------------------------------------------

const RingSpec& Element::ring() const { return ctx_->ring; }
Algebra Element::algebra() const { return Algebra(ctx_); }

RingElement Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RingElement::zero(ring()) : RingElement(ring(), it->second);
}

Element operator+(const Element& a, const Element& b) { return a.algebra().add(a, b); }
Element operator-(const Element& a, const Element& b) { return a.algebra().subtract(a, b); }
Element operator-(const Element& a) { return a.algebra().negate(a); }
Element operator*(const Element& a, const Element& b) { return a.algebra().multiply(a, b); }
Element operator*(const RingElement& r, const Element& a) { return a.algebra().scalar(r, a); }

bool operator==(const Element& a, const Element& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

}  // namespace leavitt
