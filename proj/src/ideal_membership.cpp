#include "leavitt/ideal_membership.hpp"

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

std::shared_ptr<const QuotientGraph> checked_quotient(const Algebra& a, const AdmissiblePair& p) {
  require_admissible(a.graph(), p);
  return std::make_shared<const QuotientGraph>(build_quotient(a.graph(), p));
}

}  // namespace

QuotientMap::QuotientMap(const Algebra& source, const AdmissiblePair& p)
    : source_(source),
      pair_(p),
      quotient_(checked_quotient(source, p)),
      target_(std::shared_ptr<const Graph>(quotient_, &quotient_->graph), source.ring()) {
  const Graph& g = source_.graph();
  const QuotientGraph& q = *quotient_;
  vertex_.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Element x = target_.zero();
    if (q.vertex_image[v]) x = target_.vertex(*q.vertex_image[v]);
    if (q.vertex_prime[v]) x += target_.vertex(*q.vertex_prime[v]);
    vertex_.push_back(std::move(x));
  }
  edge_.reserve(g.edge_count());
  ghost_.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Element x = target_.zero();
    Element y = target_.zero();
    if (q.edge_image[e]) {
      x = target_.edge(*q.edge_image[e]);
      y = target_.ghost(*q.edge_image[e]);
    }
    if (q.edge_prime[e]) {
      x += target_.edge(*q.edge_prime[e]);
      y += target_.ghost(*q.edge_prime[e]);
    }
    edge_.push_back(std::move(x));
    ghost_.push_back(std::move(y));
  }
}

Element QuotientMap::image(const Monomial& m) const {
  source_.check_monomial(m);
  if (m.alpha.empty() && m.beta.empty()) return vertex_[m.vertex];
  // alpha beta^* = e_1 ... e_n f_m^* ... f_1^*
  std::vector<const Element*> factors;
  for (EdgeId e : m.alpha) factors.push_back(&edge_[e]);
  for (auto it = m.beta.rbegin(); it != m.beta.rend(); ++it) factors.push_back(&ghost_[*it]);
  Element x = *factors.front();
  for (std::size_t i = 1; i < factors.size() && !x.is_zero(); ++i) x = x * *factors[i];
  return x;
}

Element QuotientMap::operator()(const Element& x) const {
  if (!(x.algebra() == source_)) throw_argument("element does not belong to the source algebra");
  Element out = target_.zero();
  for (const auto& [m, c] : x.terms()) {
    Element y = image(m);
    if (!y.is_zero()) out += target_.scalar(RingElement(target_.ring(), c), y);
  }
  return out;
}

Element quotient_image(const Algebra& a, const AdmissiblePair& p, const Element& x) {
  return QuotientMap(a, p)(x);
}

bool in_graded_basic_ideal(const Algebra& a, const AdmissiblePair& p, const Element& x) {
  return quotient_image(a, p, x).is_zero();
}

}  // namespace leavitt
