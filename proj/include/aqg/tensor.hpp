#pragma once

#include <vector>

#include "aqg/algebra.hpp"

namespace aqg {

// Sparse element of A_1 (x) ... (x) A_k with componentwise product.
class TensorElement {
  public:
    TensorElement() = default;
    explicit TensorElement(std::vector<AlgebraPtr> algs) : algs_(std::move(algs)) {}

    const std::vector<AlgebraPtr>& algebras() const { return algs_; }
    size_t arity() const { return algs_.size(); }
    const std::map<std::vector<std::int64_t>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<std::int64_t>& key, const Scalar& c);
    Scalar coeff(const std::vector<std::int64_t>& key) const;

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const Scalar& c) const;
    TensorElement operator*(const TensorElement& o) const; // componentwise

    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
    TensorElement& operator-=(const TensorElement& o) { return *this = *this - o; }

    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::vector<AlgebraPtr> algs_;
    std::map<std::vector<std::int64_t>, Scalar> terms_;
};

TensorElement tensor(const Element& a, const Element& b);
TensorElement tensor(const TensorElement& t, const Element& b);
TensorElement tensor(const Element& a, const TensorElement& t);

// arity-2 flip a(x)b -> b(x)a
TensorElement flip(const TensorElement& t);

// Embeds an arity-2 tensor into arity `arity` at legs (i, j), filling the
// remaining legs with the ambient algebras' units.  Requires i < j and
// unital ambient algebras on the unused legs.
TensorElement leg_embed(const TensorElement& t, size_t i, size_t j, size_t arity,
                        const std::vector<AlgebraPtr>& ambient);

// multiply one leg by an element, from the right (t * (1(x)..(x)b(x)..(x)1))
// or from the left
TensorElement mult_leg_right(const TensorElement& t, size_t leg, const Element& b);
TensorElement mult_leg_left(const Element& b, size_t leg, const TensorElement& t);

// apply a linear map to one leg
TensorElement apply_leg(const TensorElement& t, size_t leg,
                        const std::function<Element(const Element&)>& f);

// apply a linear functional to one leg, contracting the tensor's arity by one
TensorElement contract_leg(const TensorElement& t, size_t leg,
                           const std::function<Scalar(std::int64_t)>& f);
// arity-2 convenience: contract one leg, producing an element of the other
Element contract_to_element(const TensorElement& t, size_t leg,
                            const std::function<Scalar(std::int64_t)>& f);

// decomposition sum p_i (x) q_i induced by the sparse support (arity 2)
std::vector<std::pair<Element, Element>> sweedler_pairs(const TensorElement& t);

} // namespace aqg
