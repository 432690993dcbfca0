#pragma once

#include "aqg/dual.hpp"

namespace aqg {

// The duality of a pairing as a multiplier of B(x)A.  Finite-dimensional
// pairs carry the closed element sum_i e^i (x) e_i, characterized by
// evaluating like the pairing itself: <V, a(x)b> = <a,b> with the flipped
// pairing in the first leg.  In general V only exists through its slices
//
//   V (b(x)a)  = sum phi(c_(2) .) (x) S(c_(1)) a     with b = phi(c .)
//   (b(x)a) V  = sum psi(. c_(1)) (x) a S(c_(2))     with b = psi(. c)
//
// which need nothing but the coordinate bridges between B and represented
// functionals on A; those are stored as closures.
struct DualityV {
    Pairing pairing;
    std::optional<TensorElement> element; // sum e^i (x) e_i, finite-dimensional only

    std::function<Element(const Element&)> phi_left_rep;   // b -> c with b = phi(c .)
    std::function<Element(const Element&)> phi_left_lift;  // c -> phi(c .) as an element of B
    std::function<Element(const Element&)> psi_right_rep;  // b -> c with b = psi(. c)
    std::function<Element(const Element&)> psi_right_lift; // c -> psi(. c) in B
};

DualityV build_v(const DualResult& d);
// slice-only form over the integer pair (function side acted on, Laurent
// side as B)
DualityV build_v_integer(const InfinitePair& pair);

// the closed element; throws precondition_error when the duality is only a
// multiplier (infinite-dimensional pairs)
TensorElement v_element(const DualityV& v);

TensorElement v_mul_left(const DualityV& v, const Element& b, const Element& a);  // V (b(x)a)
TensorElement v_mul_right(const DualityV& v, const Element& b, const Element& a); // (b(x)a) V

// (i(x)S)V, the inverse of the element form
TensorElement v_inverse(const DualityV& v);

// V acting on A(x)A through b |> x on the first leg and left multiplication
// on the second; equals the canonical map below
TensorElement act_as_t(const DualityV& v, const TensorElement& xs);

// the canonical map T(x(x)x') = Delta(x)(1(x)x') and its inverse
// sum x_(1) (x) S(x_(2)) x', both directly from the slices
TensorElement t_map(const HopfPtr& h, const TensorElement& xs);
TensorElement t_inverse(const HopfPtr& h, const TensorElement& xs);

// Element form against the defining evaluation, counit and antipode slices,
// the inverse, the comultiplication identities in three legs, slice forms
// against element multiplication, the intertwiner and conjugation relations
// in the realized operator picture, the canonical-map action, and both
// pentagon forms; finite-dimensional.
Report duality_v_suite(const HopfPtr& h);

// The operator pentagon T_23 T_12 = T_12 T_13 T_23 and the T round trip on
// basis triples; empty window means the full basis (finite-dimensional).
Report pentagon_t_suite(const HopfPtr& h, const std::vector<std::int64_t>& window = {});

} // namespace aqg
