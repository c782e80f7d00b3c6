#pragma once

#include <functional>
#include <string>
#include <vector>

#include "leavitt/algebra.hpp"
#include "leavitt/ideal_lattice.hpp"
#include "leavitt/ideal_membership.hpp"

namespace leavitt {

// Candidate images of the generators of L_R(E) in some target algebra,
// indexed by the vertices and named edges of E.
struct LeavittFamily {
  std::vector<Element> vertex;
  std::vector<Element> edge;
  std::vector<Element> ghost;
};

struct Violation {
  int relation;        // 1..4
  std::string detail;  // e.g. "e^*.f != 0"
};

// Decides whether an element of the target vanishes (exactly, or modulo an
// ideal when the target is a quotient).
using ZeroTest = std::function<bool(const Element&)>;

// Checks
//   (1) v w = delta_{v,w} v,
//   (2) s(e) e = e r(e) = e and r(e) e^* = e^* s(e) = e^*,
//   (3) e^* f = delta_{e,f} r(e) for named edges,
//   (4) v = sum e e^* at every finite emitter v.
// Relations involving the unnamed edges of a bundle are not materialised.
// Throws Argument when an image is missing.
std::vector<Violation> verify_leavitt_family(const Graph& g, const LeavittFamily& family,
                                             const ZeroTest& is_zero = {});

LeavittFamily identity_family(const Algebra& a);

// Generator images of the quotient homomorphism, in L_R(E/(H,S)).
LeavittFamily quotient_family(const QuotientMap& q);

// Family of E/(H,S) inside L_R(E):
//   v -> v, v -> v - v^H and v' -> v^H for v in B_H \ S,
//   e -> e a_{r(e)}, e' -> e a_{r(e)'}, ghosts adjoint.
// It is a Leavitt family only modulo I(H,S).
LeavittFamily quotient_lift_family(const Algebra& a, const AdmissiblePair& p,
                                   const QuotientGraph& q);

// Family of _H E_S inside I(H,S) <= L_R(E):
//   v -> v (v in H), v^H (v in S); alpha -> alpha alpha^* (F1),
//   alpha r(alpha)^H alpha^* (F2); alpha-bar -> alpha, alpha r(alpha)^H.
// Requires a complete (untruncated) ideal graph.
LeavittFamily ideal_graph_family(const Algebra& a, const AdmissiblePair& p,
                                 const IdealGraph& ig);

}  // namespace leavitt
