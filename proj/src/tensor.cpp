#include "aqg/tensor.hpp"

#include <sstream>

namespace aqg {

void TensorElement::add_term(const std::vector<std::int64_t>& key, const Scalar& c) {
    if (key.size() != algs_.size()) throw error("tensor key arity mismatch");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar TensorElement::coeff(const std::vector<std::int64_t>& key) const {
    auto it = terms_.find(key);
    if (it == terms_.end())
        return Scalar::zero(algs_.empty() ? ScalarField{} : algs_[0]->field);
    return it->second;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    if (algs_ != o.algs_) {
        if (algs_.empty()) return o;
        if (o.algs_.empty()) return *this;
        throw error("tensor algebra mismatch");
    }
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    return *this + o.scaled(Scalar::integer(-1, o.algs_.empty() ? ScalarField{} : o.algs_[0]->field));
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement r(algs_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

namespace {

// expand the componentwise product of per-leg basis products into `out`
void expand_product(TensorElement& out, const std::vector<Element>& legs, size_t leg,
                    std::vector<std::int64_t>& key, const Scalar& c) {
    if (c.is_zero()) return;
    if (leg == legs.size()) {
        out.add_term(key, c);
        return;
    }
    for (const auto& [id, v] : legs[leg].terms()) {
        key[leg] = id;
        expand_product(out, legs, leg + 1, key, c * v);
    }
}

} // namespace

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (algs_ != o.algs_) throw error("tensor algebra mismatch in product");
    TensorElement r(algs_);
    size_t k = algs_.size();
    std::vector<Element> legs(k);
    std::vector<std::int64_t> key(k, 0);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            for (size_t l = 0; l < k; ++l) legs[l] = algs_[l]->mult_basis(ka[l], kb[l]);
            expand_product(r, legs, 0, key, ca * cb);
        }
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (algs_ != o.algs_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        std::string cs = c.str();
        if (!c.is_one()) out << "(" << cs << ")*";
        for (size_t l = 0; l < key.size(); ++l) {
            if (l) out << "(x)";
            out << algs_[l]->label_of(key[l]);
        }
    }
    return out.str();
}

TensorElement tensor(const Element& a, const Element& b) {
    TensorElement r({a.algebra(), b.algebra()});
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms()) r.add_term({i, j}, ci * cj);
    return r;
}

TensorElement tensor(const TensorElement& t, const Element& b) {
    std::vector<AlgebraPtr> algs = t.algebras();
    algs.push_back(b.algebra());
    TensorElement r(std::move(algs));
    for (const auto& [k, c] : t.terms())
        for (const auto& [j, cj] : b.terms()) {
            std::vector<std::int64_t> key = k;
            key.push_back(j);
            r.add_term(key, c * cj);
        }
    return r;
}

TensorElement tensor(const Element& a, const TensorElement& t) {
    std::vector<AlgebraPtr> algs{a.algebra()};
    algs.insert(algs.end(), t.algebras().begin(), t.algebras().end());
    TensorElement r(std::move(algs));
    for (const auto& [i, ci] : a.terms())
        for (const auto& [k, c] : t.terms()) {
            std::vector<std::int64_t> key{i};
            key.insert(key.end(), k.begin(), k.end());
            r.add_term(key, ci * c);
        }
    return r;
}

TensorElement flip(const TensorElement& t) {
    if (t.arity() != 2) throw error("flip needs an arity-2 tensor");
    TensorElement r({t.algebras()[1], t.algebras()[0]});
    for (const auto& [k, c] : t.terms()) r.add_term({k[1], k[0]}, c);
    return r;
}

TensorElement leg_embed(const TensorElement& t, size_t i, size_t j, size_t arity,
                        const std::vector<AlgebraPtr>& ambient) {
    if (t.arity() != 2) throw error("leg_embed places arity-2 tensors");
    if (!(i < j && j < arity)) throw error("leg_embed needs legs i < j < arity");
    if (ambient.size() != arity) throw error("leg_embed ambient size mismatch");
    if (ambient[i] != t.algebras()[0] || ambient[j] != t.algebras()[1])
        throw error("leg_embed ambient algebras must match the tensor legs");
    // unit expansions for the unused legs
    std::vector<Element> fill(arity);
    for (size_t l = 0; l < arity; ++l) {
        if (l == i || l == j) continue;
        if (!ambient[l]->unital || !ambient[l]->unit)
            throw error("leg_embed: ambient leg " + std::to_string(l) +
                        " is not unital; use a sliced computation instead");
        fill[l] = *ambient[l]->unit;
    }
    TensorElement r(ambient);
    std::vector<std::int64_t> key(arity, 0);
    // recursive expansion over the unit supports
    std::function<void(size_t, const Scalar&)> rec = [&](size_t l, const Scalar& c) {
        if (l == arity) {
            r.add_term(key, c);
            return;
        }
        if (l == i || l == j) {
            rec(l + 1, c);
            return;
        }
        for (const auto& [id, v] : fill[l].terms()) {
            key[l] = id;
            rec(l + 1, c * v);
        }
    };
    for (const auto& [k, c] : t.terms()) {
        key[i] = k[0];
        key[j] = k[1];
        rec(0, c);
    }
    return r;
}

TensorElement mult_leg_right(const TensorElement& t, size_t leg, const Element& b) {
    if (leg >= t.arity()) throw error("mult_leg_right: bad leg");
    if (t.algebras()[leg] != b.algebra()) throw error("mult_leg_right: algebra mismatch");
    TensorElement r(t.algebras());
    for (const auto& [k, c] : t.terms()) {
        Element prod = t.algebras()[leg]->basis_element(k[leg]) * b;
        for (const auto& [id, v] : prod.terms()) {
            std::vector<std::int64_t> key = k;
            key[leg] = id;
            r.add_term(key, c * v);
        }
    }
    return r;
}

TensorElement mult_leg_left(const Element& b, size_t leg, const TensorElement& t) {
    if (leg >= t.arity()) throw error("mult_leg_left: bad leg");
    if (t.algebras()[leg] != b.algebra()) throw error("mult_leg_left: algebra mismatch");
    TensorElement r(t.algebras());
    for (const auto& [k, c] : t.terms()) {
        Element prod = b * t.algebras()[leg]->basis_element(k[leg]);
        for (const auto& [id, v] : prod.terms()) {
            std::vector<std::int64_t> key = k;
            key[leg] = id;
            r.add_term(key, c * v);
        }
    }
    return r;
}

TensorElement apply_leg(const TensorElement& t, size_t leg,
                        const std::function<Element(const Element&)>& f) {
    if (leg >= t.arity()) throw error("apply_leg: bad leg");
    TensorElement r;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        Element img = f(t.algebras()[leg]->basis_element(k[leg]));
        if (first) {
            std::vector<AlgebraPtr> algs = t.algebras();
            algs[leg] = img.algebra();
            r = TensorElement(std::move(algs));
            first = false;
        }
        for (const auto& [id, v] : img.terms()) {
            std::vector<std::int64_t> key = k;
            key[leg] = id;
            r.add_term(key, c * v);
        }
    }
    if (first) return t; // zero tensor: leg algebra unchanged
    return r;
}

TensorElement contract_leg(const TensorElement& t, size_t leg,
                           const std::function<Scalar(std::int64_t)>& f) {
    if (leg >= t.arity()) throw error("contract_leg: bad leg");
    if (t.arity() < 2) throw error("contract_leg needs arity >= 2");
    std::vector<AlgebraPtr> algs;
    for (size_t l = 0; l < t.arity(); ++l)
        if (l != leg) algs.push_back(t.algebras()[l]);
    TensorElement r(std::move(algs));
    for (const auto& [k, c] : t.terms()) {
        Scalar w = f(k[leg]);
        if (w.is_zero()) continue;
        std::vector<std::int64_t> key;
        for (size_t l = 0; l < k.size(); ++l)
            if (l != leg) key.push_back(k[l]);
        r.add_term(key, c * w);
    }
    return r;
}

Element contract_to_element(const TensorElement& t, size_t leg,
                            const std::function<Scalar(std::int64_t)>& f) {
    if (t.arity() != 2) throw error("contract_to_element needs an arity-2 tensor");
    size_t keep = 1 - leg;
    Element r(t.algebras()[keep]);
    for (const auto& [k, c] : t.terms()) {
        Scalar w = f(k[leg]);
        if (w.is_zero()) continue;
        r.add_term(k[keep], c * w);
    }
    return r;
}

std::vector<std::pair<Element, Element>> sweedler_pairs(const TensorElement& t) {
    if (t.arity() != 2) throw error("sweedler_pairs needs an arity-2 tensor");
    std::vector<std::pair<Element, Element>> out;
    const AlgebraPtr& a0 = t.algebras()[0];
    const AlgebraPtr& a1 = t.algebras()[1];
    std::map<std::int64_t, Element> grouped;
    for (const auto& [k, c] : t.terms()) {
        auto it = grouped.find(k[0]);
        if (it == grouped.end()) it = grouped.emplace(k[0], Element(a1)).first;
        it->second.add_term(k[1], c);
    }
    for (const auto& [i, q] : grouped) {
        Element p(a0);
        p.add_term(i, Scalar::one(a0->field));
        out.emplace_back(p, q);
    }
    return out;
}

} // namespace aqg
