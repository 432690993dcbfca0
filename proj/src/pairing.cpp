#include "aqg/pairing.hpp"

#include "aqg/linalg.hpp"

#include <string>

namespace aqg {

namespace {

Scalar pair_with_left(const Pairing& p, const Element& a, std::int64_t k) {
    Scalar s = Scalar::zero(p.a_side->field());
    for (const auto& [i, c] : a.terms()) s += c * p.eval_basis(i, k);
    return s;
}

Scalar pair_with_right(const Pairing& p, std::int64_t i, const Element& y) {
    Scalar s = Scalar::zero(p.a_side->field());
    for (const auto& [j, c] : y.terms()) s += c * p.eval_basis(i, j);
    return s;
}

Element default_act_left_a(const Pairing& p, const Element& a, const Element& y) {
    if (!p.b_side->has_closed_coproduct())
        throw error("pairing: action of the left side needs a closed coproduct on "
                    "the right side or an installed closed form");
    TensorElement cp = p.b_side->coproduct(y);
    return contract_to_element(cp, 1, [&](std::int64_t k) { return pair_with_left(p, a, k); });
}

Element default_act_right_a(const Pairing& p, const Element& a, const Element& y) {
    if (!p.b_side->has_closed_coproduct())
        throw error("pairing: action of the left side needs a closed coproduct on "
                    "the right side or an installed closed form");
    TensorElement cp = p.b_side->coproduct(y);
    return contract_to_element(cp, 0, [&](std::int64_t k) { return pair_with_left(p, a, k); });
}

Element default_act_left_b(const Pairing& p, const Element& y, const Element& x) {
    if (!p.a_side->has_closed_coproduct())
        throw error("pairing: action of the right side needs a closed coproduct on "
                    "the left side or an installed closed form");
    TensorElement cp = p.a_side->coproduct(x);
    return contract_to_element(cp, 1, [&](std::int64_t i) { return pair_with_right(p, i, y); });
}

Element default_act_right_b(const Pairing& p, const Element& y, const Element& x) {
    if (!p.a_side->has_closed_coproduct())
        throw error("pairing: action of the right side needs a closed coproduct on "
                    "the left side or an installed closed form");
    TensorElement cp = p.a_side->coproduct(x);
    return contract_to_element(cp, 0, [&](std::int64_t i) { return pair_with_right(p, i, y); });
}

// columns indexed (i, k): coordinates of e_i |> f_k in the right side
Mat stacked_left_action(const Pairing& p) {
    const AlgebraPtr& a = p.a_side->alg;
    const AlgebraPtr& b = p.b_side->alg;
    Mat m = mat_zero(static_cast<size_t>(b->dim), static_cast<size_t>(a->dim * b->dim), a->field);
    for (std::int64_t i = 0; i < a->dim; ++i)
        for (std::int64_t k = 0; k < b->dim; ++k) {
            Element img = p.act_left_a(a->basis_element(i), b->basis_element(k));
            Vec co = b->coords(img);
            for (std::int64_t r = 0; r < b->dim; ++r)
                m[static_cast<size_t>(r)][static_cast<size_t>(i * b->dim + k)] = co[static_cast<size_t>(r)];
        }
    return m;
}

// columns indexed (j, i): coordinates of f_j |> e_i in the left side
Mat stacked_right_action(const Pairing& p) {
    const AlgebraPtr& a = p.a_side->alg;
    const AlgebraPtr& b = p.b_side->alg;
    Mat m = mat_zero(static_cast<size_t>(a->dim), static_cast<size_t>(a->dim * b->dim), a->field);
    for (std::int64_t j = 0; j < b->dim; ++j)
        for (std::int64_t i = 0; i < a->dim; ++i) {
            Element img = p.act_left_b(b->basis_element(j), a->basis_element(i));
            Vec co = a->coords(img);
            for (std::int64_t r = 0; r < a->dim; ++r)
                m[static_cast<size_t>(r)][static_cast<size_t>(j * a->dim + i)] = co[static_cast<size_t>(r)];
        }
    return m;
}

} // namespace

Scalar Pairing::eval(const Element& x, const Element& y) const {
    Scalar s = Scalar::zero(a_side->field());
    for (const auto& [i, cx] : x.terms())
        for (const auto& [j, cy] : y.terms()) s += cx * cy * eval_basis(i, j);
    return s;
}

Scalar Pairing::eval_tensor(const TensorElement& t, const TensorElement& s) const {
    if (t.arity() != s.arity()) throw error("pairing: tensor arities differ");
    Scalar acc = Scalar::zero(a_side->field());
    for (const auto& [kt, ct] : t.terms())
        for (const auto& [ks, cs] : s.terms()) {
            Scalar prod = ct * cs;
            for (size_t leg = 0; leg < kt.size() && !prod.is_zero(); ++leg)
                prod *= eval_basis(kt[leg], ks[leg]);
            acc += prod;
        }
    return acc;
}

Element Pairing::act_left_a(const Element& a, const Element& y) const {
    if (act_left_a_fn) return act_left_a_fn(a, y);
    return default_act_left_a(*this, a, y);
}

Element Pairing::act_right_a(const Element& a, const Element& y) const {
    if (act_right_a_fn) return act_right_a_fn(a, y);
    return default_act_right_a(*this, a, y);
}

Element Pairing::act_left_b(const Element& y, const Element& x) const {
    if (act_left_b_fn) return act_left_b_fn(y, x);
    return default_act_left_b(*this, y, x);
}

Element Pairing::act_right_b(const Element& y, const Element& x) const {
    if (act_right_b_fn) return act_right_b_fn(y, x);
    return default_act_right_b(*this, y, x);
}

Scalar Pairing::eval_multiplier_left(const Multiplier& m,
                                     const std::vector<std::pair<Element, Element>>& decomp) const {
    Scalar s = Scalar::zero(a_side->field());
    for (const auto& [ai, yi] : decomp) s += eval(m.apply_left(ai), yi);
    return s;
}

Scalar Pairing::eval_multiplier_right(const std::vector<std::pair<Element, Element>>& decomp,
                                      const Multiplier& n) const {
    Scalar s = Scalar::zero(a_side->field());
    for (const auto& [yi, xi] : decomp) s += eval(xi, n.apply_left(yi));
    return s;
}

std::vector<std::pair<Element, Element>> Pairing::decompose_left(const Element& y) const {
    const AlgebraPtr& a = a_side->alg;
    const AlgebraPtr& b = b_side->alg;
    if (!a->finite_dim || !b->finite_dim)
        throw error("pairing: decomposition needs finite dimensions on both sides");
    Mat m = stacked_left_action(*this);
    auto sol = solve_linear(m, b->coords(y), a->field);
    if (!sol) throw error("pairing: element does not lie in the span of the left action");
    std::vector<std::pair<Element, Element>> out;
    for (std::int64_t i = 0; i < a->dim; ++i) {
        Element w = b->zero();
        for (std::int64_t k = 0; k < b->dim; ++k)
            w.add_term(k, (*sol)[static_cast<size_t>(i * b->dim + k)]);
        if (!w.is_zero()) out.emplace_back(a->basis_element(i), w);
    }
    return out;
}

std::vector<std::pair<Element, Element>> Pairing::decompose_right(const Element& x) const {
    const AlgebraPtr& a = a_side->alg;
    const AlgebraPtr& b = b_side->alg;
    if (!a->finite_dim || !b->finite_dim)
        throw error("pairing: decomposition needs finite dimensions on both sides");
    Mat m = stacked_right_action(*this);
    auto sol = solve_linear(m, a->coords(x), a->field);
    if (!sol) throw error("pairing: element does not lie in the span of the right action");
    std::vector<std::pair<Element, Element>> out;
    for (std::int64_t j = 0; j < b->dim; ++j) {
        Element v = a->zero();
        for (std::int64_t i = 0; i < a->dim; ++i)
            v.add_term(i, (*sol)[static_cast<size_t>(j * a->dim + i)]);
        if (!v.is_zero()) out.emplace_back(b->basis_element(j), v);
    }
    return out;
}

Pairing dual_basis_pairing(const HopfPtr& a, const HopfPtr& b) {
    Pairing p;
    p.a_side = a;
    p.b_side = b;
    ScalarField f = a->field();
    p.eval_basis = [f](std::int64_t i, std::int64_t j) {
        return i == j ? Scalar::one(f) : Scalar::zero(f);
    };
    return p;
}

Pairing integer_pairing(const InfinitePair& pair) {
    Pairing p;
    p.a_side = pair.fun;
    p.b_side = pair.grp;
    ScalarField f = pair.fun->field();
    p.eval_basis = [f](std::int64_t k, std::int64_t n) {
        return k == n ? Scalar::one(f) : Scalar::zero(f);
    };
    AlgebraPtr fun = pair.fun->alg;
    AlgebraPtr grp = pair.grp->alg;
    // point functions act on group-likes by evaluation; group-likes act on
    // point functions by translation
    p.act_left_a_fn = [grp](const Element& a, const Element& y) {
        Element out = grp->zero();
        for (const auto& [n, c] : y.terms()) {
            Scalar v = c * a.coeff(n);
            if (!v.is_zero()) out.add_term(n, v);
        }
        return out;
    };
    p.act_right_a_fn = p.act_left_a_fn;
    p.act_left_b_fn = [fun](const Element& y, const Element& x) {
        Element out = fun->zero();
        for (const auto& [n, cy] : y.terms())
            for (const auto& [k, cx] : x.terms()) out.add_term(k - n, cy * cx);
        return out;
    };
    p.act_right_b_fn = p.act_left_b_fn;
    return p;
}

Report check_pairing(const Pairing& p, const PairingCheckOptions& opts) {
    const HopfPtr& ha = p.a_side;
    const HopfPtr& hb = p.b_side;
    const ScalarField f = ha->field();
    Report r;
    r.suite = "pairing";
    r.algebra = ha->alg->name + " ~ " + hb->alg->name;

    auto window_ids = [](const HopfPtr& h, const std::vector<std::int64_t>& given,
                         const char* side) {
        if (!given.empty()) return given;
        if (!h->alg->finite_dim)
            throw error(std::string("check_pairing: infinite-dimensional ") + side +
                        " side needs an explicit window");
        std::vector<std::int64_t> ids;
        for (std::int64_t i = 0; i < h->alg->dim; ++i) ids.push_back(i);
        return ids;
    };
    std::vector<std::int64_t> wa = window_ids(ha, opts.window_a, "left");
    std::vector<std::int64_t> wb = window_ids(hb, opts.window_b, "right");

    std::vector<Element> ea, eb;
    ea.reserve(wa.size());
    eb.reserve(wb.size());
    for (std::int64_t i : wa) ea.push_back(ha->alg->basis_element(i));
    for (std::int64_t j : wb) eb.push_back(hb->alg->basis_element(j));

    const bool both_finite = ha->alg->finite_dim && hb->alg->finite_dim;

    {
        Mat pm = mat_zero(wa.size(), wb.size(), f);
        for (size_t i = 0; i < wa.size(); ++i)
            for (size_t j = 0; j < wb.size(); ++j) pm[i][j] = p.eval_basis(wa[i], wb[j]);
        size_t rank = mat_rank(pm);
        bool ok;
        if (both_finite)
            ok = rank == static_cast<size_t>(ha->alg->dim) &&
                 rank == static_cast<size_t>(hb->alg->dim);
        else
            ok = wa.size() == wb.size() && rank == wa.size();
        r.add("pairing_matrix_nondegenerate", ok,
              ok ? "" : "pairing matrix rank " + std::to_string(rank));
    }

    // <Delta(x)(1 (x) x'), y (x) y'> = <x (x) x', (y (x) 1) Delta(y')>
    {
        std::vector<std::vector<TensorElement>> dl(wb.size(),
                                                   std::vector<TensorElement>(wb.size()));
        for (size_t yi = 0; yi < wb.size(); ++yi)
            for (size_t yj = 0; yj < wb.size(); ++yj)
                dl[yi][yj] = hb->delta_left(eb[yi], eb[yj]);
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t aj = 0; aj < wa.size() && ok; ++aj) {
                TensorElement dr = ha->delta_right(ea[ai], ea[aj]);
                TensorElement xs = tensor(ea[ai], ea[aj]);
                for (size_t yi = 0; yi < wb.size() && ok; ++yi)
                    for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                        TensorElement ys = tensor(eb[yi], eb[yj]);
                        Scalar lhs = p.eval_tensor(dr, ys);
                        Scalar rhs = p.eval_tensor(xs, dl[yi][yj]);
                        if (lhs != rhs) {
                            ok = false;
                            w = "x=" + ea[ai].str() + " x'=" + ea[aj].str() +
                                " y=" + eb[yi].str() + " y'=" + eb[yj].str() +
                                " lhs=" + lhs.str() + " rhs=" + rhs.str();
                        }
                    }
            }
        r.add("adjoint_sliced", ok, w);
    }

    // <x x', y> = <x', y <| x> = <x, x' |> y>
    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t aj = 0; aj < wa.size() && ok; ++aj) {
                Element prod = ea[ai] * ea[aj];
                for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                    Scalar lhs = p.eval(prod, eb[yj]);
                    Scalar r1 = p.eval(ea[aj], p.act_right_a(ea[ai], eb[yj]));
                    Scalar r2 = p.eval(ea[ai], p.act_left_a(ea[aj], eb[yj]));
                    if (lhs != r1 || lhs != r2) {
                        ok = false;
                        w = "x=" + ea[ai].str() + " x'=" + ea[aj].str() + " y=" + eb[yj].str();
                    }
                }
            }
        r.add("adjoint_product_left_side", ok, w);
    }

    // <x, y y'> = <x <| y, y'> = <y' |> x, y>
    {
        bool ok = true;
        std::string w;
        for (size_t yi = 0; yi < wb.size() && ok; ++yi)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                Element prod = eb[yi] * eb[yj];
                for (size_t ai = 0; ai < wa.size() && ok; ++ai) {
                    Scalar lhs = p.eval(ea[ai], prod);
                    Scalar r1 = p.eval(p.act_right_b(eb[yi], ea[ai]), eb[yj]);
                    Scalar r2 = p.eval(p.act_left_b(eb[yj], ea[ai]), eb[yi]);
                    if (lhs != r1 || lhs != r2) {
                        ok = false;
                        w = "x=" + ea[ai].str() + " y=" + eb[yi].str() + " y'=" + eb[yj].str();
                    }
                }
            }
        r.add("adjoint_product_right_side", ok, w);
    }

    if (hb->alg->unital) {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai) {
            Scalar lhs = p.eval(ea[ai], *hb->alg->unit);
            Scalar rhs = ha->counit(ea[ai]);
            if (lhs != rhs) {
                ok = false;
                w = "x=" + ea[ai].str() + " <x,1>=" + lhs.str() + " counit=" + rhs.str();
            }
        }
        r.add("counit_via_unit_right", ok, w);
    }
    if (ha->alg->unital) {
        bool ok = true;
        std::string w;
        for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
            Scalar lhs = p.eval(*ha->alg->unit, eb[yj]);
            Scalar rhs = hb->counit(eb[yj]);
            if (lhs != rhs) {
                ok = false;
                w = "y=" + eb[yj].str() + " <1,y>=" + lhs.str() + " counit=" + rhs.str();
            }
        }
        r.add("counit_via_unit_left", ok, w);
    }

    // counit of an action recovers the pairing, no units needed
    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                Scalar v = p.eval(ea[ai], eb[yj]);
                Scalar c1 = hb->counit(p.act_left_a(ea[ai], eb[yj]));
                Scalar c2 = hb->counit(p.act_right_a(ea[ai], eb[yj]));
                if (c1 != v || c2 != v) {
                    ok = false;
                    w = "x=" + ea[ai].str() + " y=" + eb[yj].str();
                }
            }
        r.add("counit_of_action_right_side", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                Scalar v = p.eval(ea[ai], eb[yj]);
                Scalar c1 = ha->counit(p.act_left_b(eb[yj], ea[ai]));
                Scalar c2 = ha->counit(p.act_right_b(eb[yj], ea[ai]));
                if (c1 != v || c2 != v) {
                    ok = false;
                    w = "x=" + ea[ai].str() + " y=" + eb[yj].str();
                }
            }
        r.add("counit_of_action_left_side", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                Element sx = ha->antipode(ea[ai]);
                Element sy = hb->antipode(eb[yj]);
                if (p.eval(sx, eb[yj]) != p.eval(ea[ai], sy)) {
                    ok = false;
                    w = "x=" + ea[ai].str() + " y=" + eb[yj].str();
                }
            }
        r.add("antipode_adjoint", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                Element sx = ha->antipode_inv(ea[ai]);
                Element sy = hb->antipode_inv(eb[yj]);
                if (p.eval(sx, eb[yj]) != p.eval(ea[ai], sy)) {
                    ok = false;
                    w = "x=" + ea[ai].str() + " y=" + eb[yj].str();
                }
            }
        r.add("antipode_inverse_adjoint", ok, w);
    }

    // module laws for all four actions
    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t aj = 0; aj < wa.size() && ok; ++aj)
                for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                    Element lhs = p.act_left_a(ea[ai] * ea[aj], eb[yj]);
                    Element rhs = p.act_left_a(ea[ai], p.act_left_a(ea[aj], eb[yj]));
                    if (lhs != rhs) {
                        ok = false;
                        w = "x=" + ea[ai].str() + " x'=" + ea[aj].str() + " y=" + eb[yj].str();
                    }
                }
        r.add("module_law_left_action_left_side", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t aj = 0; aj < wa.size() && ok; ++aj)
                for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                    Element lhs = p.act_right_a(ea[ai] * ea[aj], eb[yj]);
                    Element rhs = p.act_right_a(ea[aj], p.act_right_a(ea[ai], eb[yj]));
                    if (lhs != rhs) {
                        ok = false;
                        w = "x=" + ea[ai].str() + " x'=" + ea[aj].str() + " y=" + eb[yj].str();
                    }
                }
        r.add("module_law_right_action_left_side", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t yi = 0; yi < wb.size() && ok; ++yi)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj)
                for (size_t ai = 0; ai < wa.size() && ok; ++ai) {
                    Element lhs = p.act_left_b(eb[yi] * eb[yj], ea[ai]);
                    Element rhs = p.act_left_b(eb[yi], p.act_left_b(eb[yj], ea[ai]));
                    if (lhs != rhs) {
                        ok = false;
                        w = "y=" + eb[yi].str() + " y'=" + eb[yj].str() + " x=" + ea[ai].str();
                    }
                }
        r.add("module_law_left_action_right_side", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t yi = 0; yi < wb.size() && ok; ++yi)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj)
                for (size_t ai = 0; ai < wa.size() && ok; ++ai) {
                    Element lhs = p.act_right_b(eb[yi] * eb[yj], ea[ai]);
                    Element rhs = p.act_right_b(eb[yj], p.act_right_b(eb[yi], ea[ai]));
                    if (lhs != rhs) {
                        ok = false;
                        w = "y=" + eb[yi].str() + " y'=" + eb[yj].str() + " x=" + ea[ai].str();
                    }
                }
        r.add("module_law_right_action_right_side", ok, w);
    }

    // left and right actions of one side on the other commute
    {
        bool ok = true;
        std::string w;
        for (size_t ai = 0; ai < wa.size() && ok; ++ai)
            for (size_t aj = 0; aj < wa.size() && ok; ++aj)
                for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                    Element lhs = p.act_right_a(ea[aj], p.act_left_a(ea[ai], eb[yj]));
                    Element rhs = p.act_left_a(ea[ai], p.act_right_a(ea[aj], eb[yj]));
                    if (lhs != rhs) {
                        ok = false;
                        w = "x=" + ea[ai].str() + " x'=" + ea[aj].str() + " y=" + eb[yj].str();
                    }
                }
        r.add("actions_commute_left_side", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (size_t yi = 0; yi < wb.size() && ok; ++yi)
            for (size_t yj = 0; yj < wb.size() && ok; ++yj)
                for (size_t ai = 0; ai < wa.size() && ok; ++ai) {
                    Element lhs = p.act_right_b(eb[yj], p.act_left_b(eb[yi], ea[ai]));
                    Element rhs = p.act_left_b(eb[yi], p.act_right_b(eb[yj], ea[ai]));
                    if (lhs != rhs) {
                        ok = false;
                        w = "y=" + eb[yi].str() + " y'=" + eb[yj].str() + " x=" + ea[ai].str();
                    }
                }
        r.add("actions_commute_right_side", ok, w);
    }

    // installed closed-form actions agree with the coproduct route
    {
        bool any = false;
        bool ok = true;
        std::string w;
        auto compare = [&](const char* which, auto&& closed, auto&& fallback, bool actor_is_a) {
            any = true;
            for (size_t ai = 0; ai < wa.size() && ok; ++ai)
                for (size_t yj = 0; yj < wb.size() && ok; ++yj) {
                    Element lhs = actor_is_a ? closed(ea[ai], eb[yj]) : closed(eb[yj], ea[ai]);
                    Element rhs = actor_is_a ? fallback(p, ea[ai], eb[yj]) : fallback(p, eb[yj], ea[ai]);
                    if (lhs != rhs) {
                        ok = false;
                        w = std::string(which) + " x=" + ea[ai].str() + " y=" + eb[yj].str();
                    }
                }
        };
        if (p.act_left_a_fn && hb->has_closed_coproduct())
            compare("a|>y", p.act_left_a_fn, default_act_left_a, true);
        if (p.act_right_a_fn && hb->has_closed_coproduct())
            compare("y<|a", p.act_right_a_fn, default_act_right_a, true);
        if (p.act_left_b_fn && ha->has_closed_coproduct())
            compare("y|>x", p.act_left_b_fn, default_act_left_b, false);
        if (p.act_right_b_fn && ha->has_closed_coproduct())
            compare("x<|y", p.act_right_b_fn, default_act_right_b, false);
        if (any) r.add("action_closed_form_matches", ok, w);
    }

    if (both_finite && opts.check_spans) {
        const std::int64_t da = ha->alg->dim, db = hb->alg->dim;
        {
            Mat m = stacked_right_action(p); // columns f_j |> e_i
            bool ok = mat_rank(m) == static_cast<size_t>(da);
            r.add("action_spans_left_side", ok, ok ? "" : "left side not spanned by the action");
        }
        {
            Mat m = stacked_left_action(p); // columns e_i |> f_k
            bool ok = mat_rank(m) == static_cast<size_t>(db);
            r.add("action_spans_right_side", ok, ok ? "" : "right side not spanned by the action");
        }
    }

    if (both_finite && opts.check_extensions) {
        const std::int64_t da = ha->alg->dim, db = hb->alg->dim;
        std::vector<std::vector<std::pair<Element, Element>>> left_decomps, right_decomps;
        for (std::int64_t j = 0; j < db; ++j)
            left_decomps.push_back(p.decompose_left(hb->alg->basis_element(j)));
        for (std::int64_t i = 0; i < da; ++i)
            right_decomps.push_back(p.decompose_right(ha->alg->basis_element(i)));
        {
            bool ok = true;
            std::string w;
            for (std::int64_t i = 0; i < da && ok; ++i) {
                Multiplier m = multiplier_from_element(ha->alg->basis_element(i));
                for (std::int64_t j = 0; j < db && ok; ++j) {
                    Scalar lhs = p.eval_multiplier_left(m, left_decomps[static_cast<size_t>(j)]);
                    Scalar rhs = p.eval_basis(i, j);
                    if (lhs != rhs) {
                        ok = false;
                        w = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                            " extended=" + lhs.str() + " plain=" + rhs.str();
                    }
                }
            }
            r.add("extension_left_matches_plain", ok, w);
        }
        {
            bool ok = true;
            std::string w;
            Multiplier one = multiplier_identity(ha->alg);
            for (std::int64_t j = 0; j < db && ok; ++j) {
                Element fj = hb->alg->basis_element(j);
                Scalar lhs = p.eval_multiplier_left(one, left_decomps[static_cast<size_t>(j)]);
                Scalar rhs = hb->counit(fj);
                if (lhs != rhs) {
                    ok = false;
                    w = "y=" + fj.str() + " <1,y>=" + lhs.str() + " counit=" + rhs.str();
                }
            }
            r.add("extension_left_identity_is_counit", ok, w);
        }
        {
            bool ok = true;
            std::string w;
            for (std::int64_t j = 0; j < db && ok; ++j) {
                Multiplier n = multiplier_from_element(hb->alg->basis_element(j));
                for (std::int64_t i = 0; i < da && ok; ++i) {
                    Scalar lhs = p.eval_multiplier_right(right_decomps[static_cast<size_t>(i)], n);
                    Scalar rhs = p.eval_basis(i, j);
                    if (lhs != rhs) {
                        ok = false;
                        w = "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                            " extended=" + lhs.str() + " plain=" + rhs.str();
                    }
                }
            }
            r.add("extension_right_matches_plain", ok, w);
        }
        {
            bool ok = true;
            std::string w;
            Multiplier one = multiplier_identity(hb->alg);
            for (std::int64_t i = 0; i < da && ok; ++i) {
                Element ei = ha->alg->basis_element(i);
                Scalar lhs = p.eval_multiplier_right(right_decomps[static_cast<size_t>(i)], one);
                Scalar rhs = ha->counit(ei);
                if (lhs != rhs) {
                    ok = false;
                    w = "x=" + ei.str() + " <x,1>=" + lhs.str() + " counit=" + rhs.str();
                }
            }
            r.add("extension_right_identity_is_counit", ok, w);
        }
        // the extended value must not depend on the decomposition: every
        // relation sum a_i |> w_i = 0 must evaluate to zero
        {
            bool ok = true;
            std::string w;
            Mat m = stacked_left_action(p);
            auto null_vecs = kernel_basis(m, f);
            size_t used = 0;
            std::vector<Multiplier> probes;
            probes.push_back(multiplier_identity(ha->alg));
            probes.push_back(multiplier_from_element(ha->alg->basis_element(0)));
            probes.push_back(multiplier_from_element(ha->alg->basis_element(da - 1)));
            for (const Vec& v : null_vecs) {
                if (used >= 3) break;
                ++used;
                std::vector<std::pair<Element, Element>> d;
                for (std::int64_t i = 0; i < da; ++i) {
                    Element wv = hb->alg->zero();
                    for (std::int64_t k = 0; k < db; ++k)
                        wv.add_term(k, v[static_cast<size_t>(i * db + k)]);
                    if (!wv.is_zero()) d.emplace_back(ha->alg->basis_element(i), wv);
                }
                for (const Multiplier& m2 : probes) {
                    Scalar s = p.eval_multiplier_left(m2, d);
                    if (!s.is_zero()) {
                        ok = false;
                        w = "null decomposition evaluates to " + s.str();
                    }
                }
            }
            r.add("extension_left_well_defined", ok, w);
        }
        {
            bool ok = true;
            std::string w;
            Mat m = stacked_right_action(p);
            auto null_vecs = kernel_basis(m, f);
            size_t used = 0;
            std::vector<Multiplier> probes;
            probes.push_back(multiplier_identity(hb->alg));
            probes.push_back(multiplier_from_element(hb->alg->basis_element(0)));
            probes.push_back(multiplier_from_element(hb->alg->basis_element(db - 1)));
            for (const Vec& v : null_vecs) {
                if (used >= 3) break;
                ++used;
                std::vector<std::pair<Element, Element>> d;
                for (std::int64_t j = 0; j < db; ++j) {
                    Element vv = ha->alg->zero();
                    for (std::int64_t i = 0; i < da; ++i)
                        vv.add_term(i, v[static_cast<size_t>(j * da + i)]);
                    if (!vv.is_zero()) d.emplace_back(hb->alg->basis_element(j), vv);
                }
                for (const Multiplier& n2 : probes) {
                    Scalar s = p.eval_multiplier_right(d, n2);
                    if (!s.is_zero()) {
                        ok = false;
                        w = "null decomposition evaluates to " + s.str();
                    }
                }
            }
            r.add("extension_right_well_defined", ok, w);
        }
    }

    r.sort_items();
    return r;
}

} // namespace aqg
