#pragma once

#include "aqg/algebra.hpp"

namespace aqg {

// Two-sided multiplier of an algebra: a pair of maps L(a) = m*a, R(a) = a*m
// with the compatibility R(a)*b = a*L(b).  When the multiplier lies in the
// algebra itself, `closed` carries that element.
struct Multiplier {
    AlgebraPtr alg;
    std::function<Element(const Element&)> left;
    std::function<Element(const Element&)> right;
    std::optional<Element> closed;

    Element apply_left(const Element& a) const { return left(a); }
    Element apply_right(const Element& a) const { return right(a); }
};

Multiplier multiplier_identity(const AlgebraPtr& alg);
Multiplier multiplier_from_element(const Element& m);

// Builds a multiplier from the two maps after verifying compatibility on a
// spanning set (the basis for finite-dimensional algebras, the given probe
// elements otherwise).  Throws on incompatibility.
Multiplier multiplier_from_pair(const AlgebraPtr& alg,
                                std::function<Element(const Element&)> left,
                                std::function<Element(const Element&)> right,
                                const std::vector<Element>& probes = {});

Multiplier multiplier_compose(const Multiplier& m, const Multiplier& n); // m*n

// For finite-dimensional unital algebras, recovers the element m*1.
Element multiplier_as_element(const Multiplier& m);

} // namespace aqg
