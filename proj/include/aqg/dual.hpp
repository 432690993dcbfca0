#pragma once

#include "aqg/integrals.hpp"
#include "aqg/pairing.hpp"

namespace aqg {

// The dual of a finite-dimensional unital structure, realized on the dual
// basis e^0, ..., e^(n-1): the product is adjoint to the coproduct, the
// coproduct adjoint to the product, the counit evaluates at the unit, the
// unit is the counit, and the antipode matrix is transposed.  The canonical
// pairing is <e_i, e^j> = [i == j].
//
// Canonical integrals on the dual come from the primal ones: every dual
// element is phi(. c) for a unique c, and
//
//   psi_hat(phi(. c))      = counit(c)     (right integral on the dual)
//   phi_hat(psi(S(.) c))   = counit(c)     (left integral on the dual)
//
// The three coordinate bridges b = phi(. c), b = phi(c .), b = psi(. c) are
// exposed below; their matrices (and inverses) are kept for reuse.
struct DualResult {
    HopfPtr primal, dual;
    Pairing pairing;
    ModularData primal_data;
    Functional phi_hat, psi_hat;
    Mat gram_phi, gram_phi_inv;         // phi(e_i e_j)
    Mat gram_psi, gram_psi_inv;         // psi(e_i e_j)
    Mat gram_fourier, gram_fourier_inv; // psi(S(e_i) e_j)
};

DualResult build_dual(const HopfPtr& h);
DualResult build_dual(const HopfPtr& h, const ModularData& md);

// c with b = phi(. c), for b in the dual
Element rep_phi_right(const DualResult& d, const Element& b);
// c with b = phi(c .)
Element rep_phi_left(const DualResult& d, const Element& b);
// c with b = psi(. c)
Element rep_psi_right(const DualResult& d, const Element& b);

// the functionals phi(. c), phi(c .), psi(. c) as elements of the dual
Element dual_element_phi_right(const DualResult& d, const Element& c);
Element dual_element_phi_left(const DualResult& d, const Element& c);
Element dual_element_psi_right(const DualResult& d, const Element& c);

// identification of dual elements with functionals on the primal side
Functional functional_of_dual_element(const DualResult& d, const Element& b);
Element dual_element_of_functional(const DualResult& d, const Functional& f);

// Axioms and integrals of the dual, canonical integrals against the solver,
// invariance of psi_hat/phi_hat, psi_hat = phi_hat . S, the modular objects
// of the dual against the primal ones through the pairing, the two-path
// product formula for psi_hat, the fourth antipode power as a double
// conjugation, biduality on the nose, and the closed forms of the four
// actions on represented functionals.
Report dual_suite(const HopfPtr& h);

} // namespace aqg
