#pragma once

#include <memory>
#include <vector>

#include "leavitt/algebra.hpp"
#include "leavitt/ideal_lattice.hpp"

namespace leavitt {

// The homomorphism L_R(E) -> L_R(E/(H,S)) given on generators by
//   v -> 0 (v in H), v + v' (v in B_H \ S), v otherwise;
//   e -> 0 (r(e) in H), e + e' (r(e) in B_H \ S), e otherwise;
// and the adjoint rule for ghost edges. Its kernel is I(H,S).
class QuotientMap {
 public:
  QuotientMap(const Algebra& source, const AdmissiblePair& p);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  const AdmissiblePair& pair() const noexcept { return pair_; }
  const QuotientGraph& quotient() const noexcept { return *quotient_; }

  const Element& vertex_image(VertexId v) const { return vertex_.at(v); }
  const Element& edge_image(EdgeId e) const { return edge_.at(e); }
  const Element& ghost_image(EdgeId e) const { return ghost_.at(e); }

  Element image(const Monomial& m) const;
  Element operator()(const Element& x) const;

 private:
  Algebra source_;
  AdmissiblePair pair_;
  std::shared_ptr<const QuotientGraph> quotient_;
  Algebra target_;
  std::vector<Element> vertex_;
  std::vector<Element> edge_;
  std::vector<Element> ghost_;
};

Element quotient_image(const Algebra& a, const AdmissiblePair& p, const Element& x);
// x lies in I(H,S) iff its quotient image vanishes.
bool in_graded_basic_ideal(const Algebra& a, const AdmissiblePair& p, const Element& x);

}  // namespace leavitt
