#include "aqg/hopf.hpp"

#include "aqg/linalg.hpp"

namespace aqg {

TensorElement HopfAlgebra::slice2(
    const std::function<TensorElement(std::int64_t, std::int64_t)>& f, const Element& main,
    const Element& cover) const {
    TensorElement r({alg, alg});
    for (const auto& [i, ci] : main.terms())
        for (const auto& [j, cj] : cover.terms()) {
            TensorElement t = f(i, j);
            Scalar c = ci * cj;
            for (const auto& [k, v] : t.terms()) r.add_term(k, v * c);
        }
    return r;
}

TensorElement HopfAlgebra::delta_right(const Element& a, const Element& b) const {
    return slice2(dr_basis, a, b);
}

TensorElement HopfAlgebra::delta_left(const Element& b, const Element& a) const {
    return slice2(dl_basis, a, b);
}

TensorElement HopfAlgebra::delta_right_leg1(const Element& a, const Element& b) const {
    return slice2(dr1_basis, a, b);
}

TensorElement HopfAlgebra::delta_left_leg2(const Element& b, const Element& a) const {
    return slice2(dl2_basis, a, b);
}

Scalar HopfAlgebra::counit(const Element& a) const {
    Scalar acc = Scalar::zero(field());
    for (const auto& [i, c] : a.terms()) acc += c * counit_basis(i);
    return acc;
}

Element HopfAlgebra::antipode(const Element& a) const {
    Element r(alg);
    for (const auto& [i, c] : a.terms()) r += antipode_basis(i).scaled(c);
    return r;
}

Element HopfAlgebra::antipode_inv(const Element& a) const {
    Element r(alg);
    for (const auto& [i, c] : a.terms()) r += antipode_inv_basis(i).scaled(c);
    return r;
}

TensorElement HopfAlgebra::coproduct(const Element& a) const {
    if (!coproduct_basis)
        throw error("coproduct of " + alg->name + " has no closed form; use the slice maps");
    TensorElement r({alg, alg});
    for (const auto& [i, c] : a.terms()) {
        TensorElement t = coproduct_basis(i);
        for (const auto& [k, v] : t.terms()) r.add_term(k, v * c);
    }
    return r;
}

TensorElement HopfAlgebra::delta2(const Element& a, const Element& b, const Element& c) const {
    // (Delta(x)id) route: slice the right leg with c first, then comultiply
    // the left legs against b
    TensorElement u = delta_right(a, c);
    TensorElement r({alg, alg, alg});
    for (const auto& [p, q] : sweedler_pairs(u)) {
        TensorElement left = delta_right(p, b);
        TensorElement three = tensor(left, q);
        r += three;
    }
    return r;
}

TensorElement HopfAlgebra::delta2_alt(const Element& a, const Element& b, const Element& c) const {
    if (delta2_basis) {
        TensorElement r({alg, alg, alg});
        for (const auto& [i, ci] : a.terms())
            for (const auto& [j, cj] : b.terms())
                for (const auto& [k, ck] : c.terms()) {
                    TensorElement t = delta2_basis(i, j, k);
                    Scalar w = ci * cj * ck;
                    for (const auto& [key, v] : t.terms()) r.add_term(key, v * w);
                }
        return r;
    }
    if (!coproduct_basis)
        throw error("delta2_alt needs a closed coproduct or a builder three-fold slice");
    // (id(x)Delta) route on the closed coproduct
    TensorElement t = coproduct(a);
    TensorElement r({alg, alg, alg});
    for (const auto& [p, q] : sweedler_pairs(t)) {
        TensorElement inner = coproduct(q);              // Delta(a_(2))
        inner = mult_leg_right(inner, 0, b);             // (b (x) c) from the right
        inner = mult_leg_right(inner, 1, c);
        r += tensor(p, inner);
    }
    return r;
}

Multiplier HopfAlgebra::antipode_multiplier(const Multiplier& m) const {
    Multiplier r;
    r.alg = alg;
    auto self = shared_from_this();
    auto mleft = m.left, mright = m.right;
    r.left = [self, mright](const Element& b) {
        return self->antipode(mright(self->antipode_inv(b)));
    };
    r.right = [self, mleft](const Element& b) {
        return self->antipode(mleft(self->antipode_inv(b)));
    };
    if (m.closed) r.closed = antipode(*m.closed);
    return r;
}

void install_closed_coproduct(HopfAlgebra& h, std::function<TensorElement(std::int64_t)> coproduct) {
    AlgebraPtr alg = h.alg;
    h.coproduct_basis = coproduct;
    h.dr_basis = [alg, coproduct](std::int64_t i, std::int64_t j) {
        return mult_leg_right(coproduct(i), 1, alg->basis_element(j));
    };
    h.dl_basis = [alg, coproduct](std::int64_t i, std::int64_t j) {
        return mult_leg_left(alg->basis_element(j), 0, coproduct(i));
    };
    h.dr1_basis = [alg, coproduct](std::int64_t i, std::int64_t j) {
        return mult_leg_right(coproduct(i), 0, alg->basis_element(j));
    };
    h.dl2_basis = [alg, coproduct](std::int64_t i, std::int64_t j) {
        return mult_leg_left(alg->basis_element(j), 1, coproduct(i));
    };
}

namespace {

std::string pair_witness(const Element& a, const Element& b) {
    return "(" + a.str() + ", " + b.str() + ")";
}

} // namespace

Report check_hopf_axioms(const HopfPtr& h, const AxiomOptions& opts) {
    const AlgebraPtr& alg = h->alg;
    Report rep;
    rep.suite = "axioms";
    rep.algebra = alg->name;

    std::vector<std::int64_t> ids = opts.window;
    if (ids.empty()) {
        if (!alg->finite_dim)
            throw error("axiom check on an infinite-dimensional algebra needs a window");
        for (std::int64_t i = 0; i < alg->dim; ++i) ids.push_back(i);
    }
    std::vector<Element> basis;
    basis.reserve(ids.size());
    for (auto i : ids) basis.push_back(alg->basis_element(i));

    // associativity
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                for (const auto& c : basis)
                    if ((a * b) * c != a * (b * c)) {
                        ok = false;
                        wit = "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.add("product_associative", ok, wit);
    }

    if (opts.check_nondegeneracy && alg->finite_dim) {
        auto nd = check_nondegenerate(alg);
        std::string wit;
        if (nd.left_witness) wit = "a*A = 0 for a = " + nd.left_witness->str();
        if (nd.right_witness) wit = "A*a = 0 for a = " + nd.right_witness->str();
        rep.add("product_nondegenerate", nd.nondegenerate, wit);
    }

    // coproduct slices are multiplicative: Delta(ab)(1(x)c) built two ways
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                for (const auto& c : basis) {
                    TensorElement lhs = h->delta_right(a * b, c);
                    TensorElement rhs({alg, alg});
                    for (const auto& [p, q] : sweedler_pairs(h->delta_right(b, c)))
                        rhs += mult_leg_right(h->delta_right(a, q), 0, p);
                    if (lhs != rhs) {
                        ok = false;
                        wit = "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.add("coproduct_homomorphism", ok, wit);
    }

    // coassociativity through two association orders
    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            for (const auto& b : basis) {
                for (const auto& c : basis)
                    if (h->delta2(a, b, c) != h->delta2_alt(a, b, c)) {
                        ok = false;
                        wit = "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.add("coassociativity", ok, wit);
    }

    auto counit_fn = [&](std::int64_t id) { return h->counit_basis(id); };

    // counit laws in sliced form
    {
        bool okl = true, okr = true;
        std::string witl, witr;
        for (const auto& a : basis)
            for (const auto& b : basis) {
                if (okl && contract_to_element(h->delta_right(a, b), 0, counit_fn) != a * b) {
                    okl = false;
                    witl = pair_witness(a, b);
                }
                if (okr && contract_to_element(h->delta_left(b, a), 1, counit_fn) != b * a) {
                    okr = false;
                    witr = pair_witness(a, b);
                }
            }
        rep.add("counit_left", okl, witl);
        rep.add("counit_right", okr, witr);
    }

    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            for (const auto& b : basis)
                if (!(h->counit(a * b) == h->counit(a) * h->counit(b))) {
                    ok = false;
                    wit = pair_witness(a, b);
                    break;
                }
            if (!ok) break;
        }
        rep.add("counit_homomorphism", ok, wit);
    }

    // antipode laws in sliced form
    {
        bool okl = true, okr = true;
        std::string witl, witr;
        for (const auto& a : basis)
            for (const auto& b : basis) {
                if (okl) {
                    Element acc(alg);
                    TensorElement dr = h->delta_right(a, b);
                    for (const auto& [key, c] : dr.terms())
                        acc += (h->antipode(alg->basis_element(key[0])) * alg->basis_element(key[1]))
                                   .scaled(c);
                    if (acc != b.scaled(h->counit(a))) {
                        okl = false;
                        witl = pair_witness(a, b);
                    }
                }
                if (okr) {
                    Element acc(alg);
                    TensorElement dl = h->delta_left(b, a);
                    for (const auto& [key, c] : dl.terms())
                        acc += (alg->basis_element(key[0]) * h->antipode(alg->basis_element(key[1])))
                                   .scaled(c);
                    if (acc != b.scaled(h->counit(a))) {
                        okr = false;
                        witr = pair_witness(a, b);
                    }
                }
            }
        rep.add("antipode_left", okl, witl);
        rep.add("antipode_right", okr, witr);
    }

    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis) {
            for (const auto& b : basis)
                if (h->antipode(a * b) != h->antipode(b) * h->antipode(a)) {
                    ok = false;
                    wit = pair_witness(a, b);
                    break;
                }
            if (!ok) break;
        }
        rep.add("antipode_antihomomorphism", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis)
            if (h->antipode_inv(h->antipode(a)) != a || h->antipode(h->antipode_inv(a)) != a) {
                ok = false;
                wit = a.str();
                break;
            }
        rep.add("antipode_bijective", ok, wit);
    }

    {
        bool ok = true;
        std::string wit;
        for (const auto& a : basis)
            if (!(h->counit(h->antipode(a)) == h->counit(a))) {
                ok = false;
                wit = a.str();
                break;
            }
        rep.add("counit_antipode_compat", ok, wit);
    }

    if (opts.check_surjectivity && alg->finite_dim) {
        size_t n = static_cast<size_t>(alg->dim);
        auto span_rank = [&](bool right_slice) {
            Mat m;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    TensorElement t = right_slice
                                          ? h->dr_basis(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j))
                                          : h->dl_basis(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
                    Vec row(n * n, Scalar::zero(alg->field));
                    for (const auto& [key, c] : t.terms())
                        row[static_cast<size_t>(key[0]) * n + static_cast<size_t>(key[1])] = c;
                    m.push_back(std::move(row));
                }
            return mat_rank(std::move(m));
        };
        rep.add("coproduct_slices_span_right", span_rank(true) == n * n);
        rep.add("coproduct_slices_span_left", span_rank(false) == n * n);
    }

    {
        bool ok = true;
        std::string wit;
        try {
            Element e = local_unit(alg, basis);
            for (const auto& a : basis)
                if (e * a != a || a * e != a) {
                    ok = false;
                    wit = a.str();
                    break;
                }
        } catch (const error& ex) {
            ok = false;
            wit = ex.what();
        }
        rep.add("local_units", ok, wit);
    }

    rep.sort_items();
    return rep;
}

namespace {

Element approx_element(const AlgebraPtr& target, const Element& x, double eps) {
    Element out(target);
    for (const auto& [id, c] : x.terms()) out.add_term(id, Scalar::approx(c.to_complex(), eps));
    return out;
}

} // namespace

HopfPtr approximate_hopf(const HopfPtr& h, double eps) {
    if (!h->alg->finite_dim)
        throw precondition_error("approximate_hopf: finite-dimensional structures only");
    if (!h->has_closed_coproduct())
        throw precondition_error("approximate_hopf: needs a closed coproduct");
    const AlgebraPtr src = h->alg;

    auto alg = std::make_shared<Algebra>();
    alg->name = src->name;
    alg->field = ScalarField{false, 1, eps};
    alg->finite_dim = true;
    alg->dim = src->dim;
    alg->unital = src->unital;
    alg->label = src->label;
    std::weak_ptr<const Algebra> w = alg;
    alg->mult_basis = [w, src, eps](std::int64_t i, std::int64_t j) {
        return approx_element(w.lock(), src->mult_basis(i, j), eps);
    };
    if (src->unit) alg->unit = approx_element(alg, *src->unit, eps);

    auto g = std::make_shared<HopfAlgebra>();
    g->alg = alg;
    g->counit_basis = [h, eps](std::int64_t i) {
        return Scalar::approx(h->counit_basis(i).to_complex(), eps);
    };
    g->antipode_basis = [w, h, eps](std::int64_t i) {
        return approx_element(w.lock(), h->antipode_basis(i), eps);
    };
    g->antipode_inv_basis = [w, h, eps](std::int64_t i) {
        return approx_element(w.lock(), h->antipode_inv_basis(i), eps);
    };
    install_closed_coproduct(*g, [w, h, eps](std::int64_t i) {
        const AlgebraPtr a = w.lock();
        TensorElement t({a, a});
        const TensorElement d = h->coproduct_basis(i);
        for (const auto& [key, c] : d.terms())
            t.add_term(key, Scalar::approx(c.to_complex(), eps));
        return t;
    });
    return g;
}

} // namespace aqg
