#pragma once

#include "aqg/dual.hpp"

namespace aqg {

// The transform F(x) = psi(S(.) x) from A to its dual and the companions,
// kept as closures so the finite dual and the integer pair share one
// interface:
//
//   F      x |-> psi(S(.) x)     inverted by   b |-> phi_hat(. b)
//   F_alt  a |-> phi(. a)        inverted by   b |-> psi_hat(S(.) b)
//
// Normalization is inherited from the integrals; there are no extra
// scalar factors.
struct FourierPack {
    Pairing pairing;
    std::function<Element(const Element&)> fwd, inv;
    std::function<Element(const Element&)> fwd_alt, inv_alt;
};

FourierPack build_fourier(const DualResult& d);
FourierPack build_fourier_integer(const InfinitePair& pair);

// (F (x) F)(Delta(x)(1 (x) x')), the canonical map carried over to B (x) B;
// computed through the coproduct slices of A and the transform only
TensorElement transformed_canonical(const FourierPack& fp, const TensorElement& xs);

// w(y (x) y') = Delta(y')(y (x) 1) on B (x) B, and its inverse
// sum S^{-1}(y'_(1)) y (x) y'_(2); the transform turns the canonical map of
// A into this inverse, using nothing but the structure of B
TensorElement w_map(const HopfPtr& hb, const TensorElement& ys);
TensorElement w_inv(const HopfPtr& hb, const TensorElement& ys);

Report fourier_suite(const HopfPtr& h);
Report fourier_suite_windowed(const InfinitePair& pair,
                              const std::vector<std::int64_t>& window);

} // namespace aqg
