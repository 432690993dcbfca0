#pragma once

#include "aqg/examples.hpp"
#include "aqg/hopf.hpp"
#include "aqg/multiplier.hpp"
#include "aqg/report.hpp"

#include <utility>
#include <vector>

namespace aqg {

// Bilinear pairing <.,.> : A x B -> k whose products and coproducts are
// mutually adjoint.  It induces four module actions, characterized by
//
//   <a', a |> y>  = <a'a, y>        (A on B, left)
//   <a', y <| a>  = <aa', y>        (A on B, right)
//   <y |> x, y'>  = <x, y'y>        (B on A, left)
//   <x <| y, y'>  = <x, yy'>        (B on A, right)
//
// equivalently, in Sweedler form,
//
//   a |> y = sum y_(1) <a, y_(2)>      y <| a = sum <a, y_(1)> y_(2)
//   y |> x = sum x_(1) <x_(2), y>      x <| y = sum <x_(1), y> x_(2)
//
// When a side has a closed coproduct the actions on the other side are
// computed from it; builders of infinite examples install closed-form
// closures instead (actor first).
struct Pairing {
    HopfPtr a_side, b_side;
    std::function<Scalar(std::int64_t, std::int64_t)> eval_basis;

    std::function<Element(const Element&, const Element&)> act_left_a_fn;
    std::function<Element(const Element&, const Element&)> act_right_a_fn;
    std::function<Element(const Element&, const Element&)> act_left_b_fn;
    std::function<Element(const Element&, const Element&)> act_right_b_fn;

    Scalar eval(const Element& x, const Element& y) const;
    // legwise pairing of equal-arity tensors, all legs of t in A, of s in B
    Scalar eval_tensor(const TensorElement& t, const TensorElement& s) const;

    Element act_left_a(const Element& a, const Element& y) const;  // a |> y
    Element act_right_a(const Element& a, const Element& y) const; // y <| a
    Element act_left_b(const Element& y, const Element& x) const;  // y |> x
    Element act_right_b(const Element& y, const Element& x) const; // x <| y

    // The pairing extends to M(A) x B and A x M(B) through the actions:
    // <m, sum a_i |> y_i> = sum <m a_i, y_i>, independent of the chosen
    // decomposition, and symmetrically <sum y_i |> x_i, n> = sum <x_i, n y_i>.
    Scalar eval_multiplier_left(const Multiplier& m,
                                const std::vector<std::pair<Element, Element>>& decomp) const;
    Scalar eval_multiplier_right(const std::vector<std::pair<Element, Element>>& decomp,
                                 const Multiplier& n) const;

    // write y as sum e_i |> w_i over the basis of A (finite dimensions only)
    std::vector<std::pair<Element, Element>> decompose_left(const Element& y) const;
    // write x as sum f_j |> v_j over the basis of B
    std::vector<std::pair<Element, Element>> decompose_right(const Element& x) const;
};

// dual-basis pairing <e_i, f_j> = [i == j] between a structure and a dual
// realized on matching indices
Pairing dual_basis_pairing(const HopfPtr& a, const HopfPtr& b);

// the closed-form pairing <d[k], u^n> = [k == n] of the integer pair
Pairing integer_pairing(const InfinitePair& pair);

struct PairingCheckOptions {
    // basis ids to probe on each side; empty means the full basis, which
    // requires that side to be finite-dimensional
    std::vector<std::int64_t> window_a, window_b;
    // span tests and extension evaluators need both sides finite
    bool check_spans = true;
    bool check_extensions = true;
};

// Adjointness in sliced form, counit and antipode compatibility, module
// laws, commuting left/right actions, nondegeneracy of the pairing matrix,
// unital spans, and decomposition independence of the extended evaluation.
Report check_pairing(const Pairing& p, const PairingCheckOptions& opts = {});

} // namespace aqg
