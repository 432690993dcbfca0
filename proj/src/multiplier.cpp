#include "aqg/multiplier.hpp"

namespace aqg {

Multiplier multiplier_identity(const AlgebraPtr& alg) {
    Multiplier m;
    m.alg = alg;
    m.left = [](const Element& a) { return a; };
    m.right = [](const Element& a) { return a; };
    if (alg->unital && alg->unit) m.closed = *alg->unit;
    return m;
}

Multiplier multiplier_from_element(const Element& e) {
    Multiplier m;
    m.alg = e.algebra();
    m.left = [e](const Element& a) { return e * a; };
    m.right = [e](const Element& a) { return a * e; };
    m.closed = e;
    return m;
}

Multiplier multiplier_from_pair(const AlgebraPtr& alg,
                                std::function<Element(const Element&)> left,
                                std::function<Element(const Element&)> right,
                                const std::vector<Element>& probes) {
    std::vector<Element> span = probes;
    if (span.empty()) {
        if (!alg->finite_dim)
            throw error("multiplier_from_pair needs probe elements for an "
                        "infinite-dimensional algebra");
        for (std::int64_t i = 0; i < alg->dim; ++i) span.push_back(alg->basis_element(i));
    }
    for (const auto& a : span)
        for (const auto& b : span) {
            if (right(a) * b != a * left(b))
                throw error("multiplier maps are incompatible at (" + a.str() + ", " + b.str() + ")");
        }
    Multiplier m;
    m.alg = alg;
    m.left = std::move(left);
    m.right = std::move(right);
    return m;
}

Multiplier multiplier_compose(const Multiplier& m, const Multiplier& n) {
    if (m.alg != n.alg) throw error("multiplier algebra mismatch");
    Multiplier r;
    r.alg = m.alg;
    auto ml = m.left, nl = n.left, mr = m.right, nr = n.right;
    r.left = [ml, nl](const Element& a) { return ml(nl(a)); };
    r.right = [mr, nr](const Element& a) { return nr(mr(a)); };
    if (m.closed && n.closed) r.closed = (*m.closed) * (*n.closed);
    return r;
}

Element multiplier_as_element(const Multiplier& m) {
    if (m.closed) return *m.closed;
    if (m.alg->finite_dim && m.alg->unital && m.alg->unit) return m.left(*m.alg->unit);
    throw error("multiplier of " + m.alg->name + " is not an element of the algebra");
}

} // namespace aqg
