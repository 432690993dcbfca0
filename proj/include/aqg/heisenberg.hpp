#pragma once

#include "aqg/dual.hpp"

namespace aqg {

// The twisted algebra on A(x)B induced by a pairing.  Elements act on A by
// (a(x)b) |> x = a (b |> x), and the product mirrors composition of those
// operators:
//
//   (a(x)b)(a'(x)b') = sum <a'_(2), b_(1)> a a'_(1) (x) b_(2) b'
//                    = sum a (b_(1) |> a') (x) b_(2) b'.
//
// The second form consumes the A-side Sweedler legs through the module
// action, so only the B side needs a closed coproduct; the integer pair
// qualifies with its Laurent side in the B slot.
TensorElement heis_mul(const Pairing& p, const TensorElement& s, const TensorElement& t);

// (a(x)b) |> x = a (b |> x), extended linearly
Element heis_act(const Pairing& p, const TensorElement& s, const Element& x);

// Embeddings of the two sides as multipliers of the twisted algebra:
// j_a_mul(a, t) = (a(x)1)t and j_b_mul(b, t) = (1(x)b)t, with the
// corresponding right versions.  All four make sense without units, and
// a(x)b = j_A(a) j_B(b) recovers the product rule.
TensorElement j_a_mul(const Pairing& p, const Element& a, const TensorElement& t);
TensorElement j_b_mul(const Pairing& p, const Element& b, const TensorElement& t);
TensorElement mul_j_a(const Pairing& p, const TensorElement& t, const Element& a);
TensorElement mul_j_b(const Pairing& p, const TensorElement& t, const Element& b);

// The twist R(a(x)b) = sum <a_(2), b_(1)> a_(1) (x) b_(2), which is the
// product 1(x)b . a(x)1 read back in A(x)B coordinates, and its inverse,
// which feeds b_(1) through the inverse antipode first.
TensorElement r_map(const Pairing& p, const TensorElement& s);
TensorElement r_inv(const Pairing& p, const TensorElement& s);

// matrix of x -> (a(x)b) |> x on a finite-dimensional A side
Mat heis_op_matrix(const Pairing& p, const TensorElement& s);

// Rank-one realization: a (x) phi(c .) acts as x -> sum a S(c_(1)) phi(c_(2) x),
// so to_rank_one rewrites s into sum a_i (x) b_i whose operator is
// x -> sum a_i <x, b_i>.  On such sums composition of operators is the
// diamond product
//
//   (a_1 (x) b_1) <> (a_2 (x) b_2) = <a_2, b_1> a_1 (x) b_2
//
// and to_rank_one is an algebra isomorphism from the twisted product onto it.
TensorElement to_rank_one(const DualResult& d, const TensorElement& s);
TensorElement diamond_mul(const Pairing& p, const TensorElement& s, const TensorElement& t);
// matrix of x -> sum a_i <x, b_i> for a sum in the rank-one picture
Mat rank_one_matrix(const Pairing& p, const TensorElement& s);

// Associativity of the twisted product (two independent expansions), the
// module law and faithfulness of the action, unit and embedding laws, the
// twist round trip, the commutation rule between multiplication operators
// and B-action operators, and the rank-one realization; finite-dimensional.
Report heisenberg_suite(const HopfPtr& h);

// The same laws probed on a window of basis elements for pairings with an
// infinite side (the B side must still carry a closed coproduct).
Report heisenberg_suite_windowed(const Pairing& p, const std::vector<std::int64_t>& window_a,
                                 const std::vector<std::int64_t>& window_b);

} // namespace aqg
