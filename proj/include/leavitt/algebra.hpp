#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leavitt/graph.hpp"
#include "leavitt/ring.hpp"

namespace leavitt {

// alpha * beta^* with r(alpha) = r(beta) = vertex. Paths use named edges only;
// an empty path stands for `vertex`.
struct Monomial {
  std::vector<EdgeId> alpha;
  std::vector<EdgeId> beta;
  VertexId vertex = 0;

  int degree() const {
    return static_cast<int>(alpha.size()) - static_cast<int>(beta.size());
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Shorter monomials first, then by alpha, beta and vertex.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

// One designated edge e0(v) per finite emitter v; orients the relation
// v = sum_{s(e)=v} e e^* into the rewrite e0 e0^* -> v - sum_{e != e0} e e^*.
class SpecialEdgeMap {
 public:
  // Lexicographically least edge id at every finite emitter.
  static SpecialEdgeMap lexicographic(const Graph& g);
  // Explicit choice; must be total on finite emitters.
  static SpecialEdgeMap from_edges(const Graph& g, const std::vector<EdgeId>& choice);

  std::optional<EdgeId> at(VertexId v) const { return special_.at(v); }

 private:
  std::vector<std::optional<EdgeId>> special_;
};

namespace detail {
struct AlgebraContext;
}

class Algebra;

// Finite R-linear combination of normal-form monomials. Zero coefficients
// are never stored. Carries its algebra so arithmetic can be checked.
class Element {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const RingSpec& ring() const;
  Algebra algebra() const;

  RingElement coefficient(const Monomial& m) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const RingElement& r, const Element& a);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }

  // Same algebra and same terms.
  friend bool operator==(const Element& a, const Element& b);

 private:
  friend class Algebra;
  explicit Element(std::shared_ptr<const detail::AlgebraContext> ctx) : ctx_(std::move(ctx)) {}

  std::shared_ptr<const detail::AlgebraContext> ctx_;
  Terms terms_;
};

struct RawTerm {
  Monomial monomial;
  mpq_class coefficient;
};

// Order in which pending rewrites are applied. Without a seed terms are
// processed first-in-first-out; with a seed the next term is drawn at random.
struct RewriteOrder {
  std::optional<std::uint64_t> seed;
};

// L_R(E) for a graph E and coefficient ring R. Cheap to copy; copies share
// the graph and the special-edge choice.
class Algebra {
 public:
  Algebra(std::shared_ptr<const Graph> graph, RingSpec ring);
  Algebra(std::shared_ptr<const Graph> graph, RingSpec ring, SpecialEdgeMap special);

  const Graph& graph() const;
  std::shared_ptr<const Graph> graph_ptr() const;
  const RingSpec& ring() const;
  const SpecialEdgeMap& special_edges() const;

  Element zero() const;
  Element vertex(VertexId v) const;
  Element edge(EdgeId e) const;
  Element ghost(EdgeId e) const;
  // alpha beta^* (reduced); throws Argument when ill-formed.
  Element monomial(const Monomial& m, const RingElement& coefficient) const;
  Element monomial(const Monomial& m) const;
  Element scalar(const RingElement& r, const Element& x) const;

  // Reduces an arbitrary combination of well-formed monomials.
  Element normal_form(const std::vector<RawTerm>& raw, RewriteOrder order = {}) const;
  bool is_reducible(const Monomial& m) const;
  // Throws Argument unless alpha and beta are paths ending at `vertex`.
  void check_monomial(const Monomial& m) const;

  Element add(const Element& a, const Element& b) const;
  Element subtract(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element multiply(const Element& a, const Element& b) const;

  // Linear map fixing R with (alpha beta^*)^* = beta alpha^*.
  Element involution(const Element& x) const;
  // Homogeneous components keyed by |alpha| - |beta|.
  std::map<int, Element> degree_components(const Element& x) const;

  // Sum of the vertices of X (nonempty).
  Element local_unit(const VertexSet& x) const;
  // v^H = v - sum of e e^* over named edges e out of v with r(e) not in H.
  Element vh_element(VertexId v, const VertexSet& h) const;

  // Text form accepted by the expression parser, e.g. "v1 - 2.e.f^*".
  std::string to_string(const Element& x) const;
  std::string to_string(const Monomial& m) const;

  bool operator==(const Algebra& other) const { return ctx_ == other.ctx_; }

 private:
  friend class Element;
  explicit Algebra(std::shared_ptr<const detail::AlgebraContext> ctx) : ctx_(std::move(ctx)) {}
  void require_member(const Element& x) const;

  std::shared_ptr<const detail::AlgebraContext> ctx_;
};

}  // namespace leavitt
