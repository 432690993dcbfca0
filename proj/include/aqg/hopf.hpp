#pragma once

#include "aqg/multiplier.hpp"
#include "aqg/report.hpp"
#include "aqg/tensor.hpp"

namespace aqg {

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Coalgebra and antipode structure over an Algebra.  The coproduct lands in
// the multiplier algebra of A(x)A, so it is exposed through slice maps that
// always produce honest tensors:
//   delta_right(a, b)      = Delta(a) (1(x)b)
//   delta_left(b, a)       = (b(x)1) Delta(a)
//   delta_right_leg1(a, b) = Delta(a) (b(x)1)
//   delta_left_leg2(b, a)  = (1(x)b) Delta(a)
// The last two exist because we only treat regular structures (bijective
// antipode).  Builders install basis-level closures; unital finite cases can
// instead provide the closed coproduct from which all four slices derive.
class HopfAlgebra : public std::enable_shared_from_this<HopfAlgebra> {
  public:
    AlgebraPtr alg;

    std::function<TensorElement(std::int64_t, std::int64_t)> dr_basis;   // Delta(e_i)(1(x)e_j)
    std::function<TensorElement(std::int64_t, std::int64_t)> dl_basis;   // (e_j(x)1)Delta(e_i)
    std::function<TensorElement(std::int64_t, std::int64_t)> dr1_basis;  // Delta(e_i)(e_j(x)1)
    std::function<TensorElement(std::int64_t, std::int64_t)> dl2_basis;  // (1(x)e_j)Delta(e_i)
    std::function<Scalar(std::int64_t)> counit_basis;
    std::function<Element(std::int64_t)> antipode_basis;
    std::function<Element(std::int64_t)> antipode_inv_basis;
    // closed coproduct of a basis element, when it lies in A(x)A
    std::function<TensorElement(std::int64_t)> coproduct_basis;
    // closed Delta2(e_i)(1(x)e_j(x)e_k) for non-unital builders
    std::function<TensorElement(std::int64_t, std::int64_t, std::int64_t)> delta2_basis;

    const ScalarField& field() const { return alg->field; }

    TensorElement delta_right(const Element& a, const Element& b) const;
    TensorElement delta_left(const Element& b, const Element& a) const;
    TensorElement delta_right_leg1(const Element& a, const Element& b) const;
    TensorElement delta_left_leg2(const Element& b, const Element& a) const;

    Scalar counit(const Element& a) const;
    Element antipode(const Element& a) const;
    Element antipode_inv(const Element& a) const;

    bool has_closed_coproduct() const { return static_cast<bool>(coproduct_basis); }
    TensorElement coproduct(const Element& a) const; // requires closed form

    // Delta2(a)(1(x)b(x)c) through the (Delta(x)id)Delta association order
    TensorElement delta2(const Element& a, const Element& b, const Element& c) const;
    // same tensor through (id(x)Delta)Delta (closed coproduct) or the
    // builder's closed three-fold slice; used to cross-check associativity
    // of the coproduct against an independent route
    TensorElement delta2_alt(const Element& a, const Element& b, const Element& c) const;

    // antipode extended to multipliers: S(m) with S(m)b = S(S^{-1}(b) m)
    Multiplier antipode_multiplier(const Multiplier& m) const;

  private:
    TensorElement slice2(const std::function<TensorElement(std::int64_t, std::int64_t)>& f,
                         const Element& main, const Element& cover) const;
};

// Installs the four slice maps (and delta2) from a closed coproduct table;
// for finite-dimensional unital algebras.
void install_closed_coproduct(HopfAlgebra& h,
                              std::function<TensorElement(std::int64_t)> coproduct);

// Re-expresses a finite-dimensional structure with a closed coproduct over
// the approximate complex field, comparing with tolerance eps.  Used to
// cross-check exact runs in floating point; throws precondition_error when
// the structure is infinite-dimensional or has no closed coproduct.
HopfPtr approximate_hopf(const HopfPtr& h, double eps);

struct AxiomOptions {
    // basis ids to probe; empty means the full basis (finite-dimensional only)
    std::vector<std::int64_t> window;
    bool check_surjectivity = true; // finite-dimensional only
    bool check_nondegeneracy = true;
};

// Verifies the defining structure: nondegenerate associative product,
// coproduct slices multiplicative and coassociative, counit and antipode
// laws in sliced form, antipode antihomomorphism and bijectivity, and (for
// finite dimension) that the sliced coproducts span A(x)A.
Report check_hopf_axioms(const HopfPtr& h, const AxiomOptions& opts = {});

} // namespace aqg
