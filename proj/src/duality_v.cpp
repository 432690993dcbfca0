#include "aqg/duality_v.hpp"

#include "aqg/linalg.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace aqg {

namespace {

// the integer pair identifies u^n with the functionals phi(d[n] .) and
// psi(. d[n]), so all four bridges just carry coordinates across
Element move_coords(const AlgebraPtr& target, const Element& x) {
    Element out = target->zero();
    for (const auto& [id, c] : x.terms()) out.add_term(id, c);
    return out;
}

Element as_matrix_element(const AlgebraPtr& mn, const Mat& m) {
    const size_t n = m.size();
    Element out = mn->zero();
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (!m[r][c].is_zero())
                out.add_term(static_cast<std::int64_t>(r * n + c), m[r][c]);
    return out;
}

// T applied to legs (li, lj) of an arity-3 tensor, the other leg untouched
TensorElement t_on_legs(const HopfPtr& h, const TensorElement& t, size_t li, size_t lj) {
    const AlgebraPtr& A = h->alg;
    TensorElement out(t.algebras());
    for (const auto& [key, c] : t.terms()) {
        const TensorElement two =
            h->delta_right(A->basis_element(key[li]), A->basis_element(key[lj]));
        for (const auto& [tk, tc] : two.terms()) {
            std::vector<std::int64_t> nk = key;
            nk[li] = tk[0];
            nk[lj] = tk[1];
            out.add_term(nk, c * tc);
        }
    }
    return out;
}

} // namespace

DualityV build_v(const DualResult& d) {
    DualityV v;
    v.pairing = d.pairing;
    TensorElement el({d.dual->alg, d.primal->alg});
    const Scalar one = Scalar::one(d.primal->alg->field);
    for (std::int64_t i = 0; i < d.primal->alg->dim; ++i) el.add_term({i, i}, one);
    v.element = el;
    const auto dp = std::make_shared<const DualResult>(d);
    v.phi_left_rep = [dp](const Element& b) { return rep_phi_left(*dp, b); };
    v.phi_left_lift = [dp](const Element& c) { return dual_element_phi_left(*dp, c); };
    v.psi_right_rep = [dp](const Element& b) { return rep_psi_right(*dp, b); };
    v.psi_right_lift = [dp](const Element& c) { return dual_element_psi_right(*dp, c); };
    return v;
}

DualityV build_v_integer(const InfinitePair& pair) {
    DualityV v;
    v.pairing = integer_pairing(pair);
    const AlgebraPtr fa = pair.fun->alg;
    const AlgebraPtr ga = pair.grp->alg;
    v.phi_left_rep = [fa](const Element& b) { return move_coords(fa, b); };
    v.phi_left_lift = [ga](const Element& c) { return move_coords(ga, c); };
    v.psi_right_rep = [fa](const Element& b) { return move_coords(fa, b); };
    v.psi_right_lift = [ga](const Element& c) { return move_coords(ga, c); };
    return v;
}

TensorElement v_element(const DualityV& v) {
    if (!v.element)
        throw precondition_error("duality element: the pairing is not represented by an "
                                 "element of B(x)A in infinite dimensions; use the slice forms");
    return *v.element;
}

TensorElement v_mul_left(const DualityV& v, const Element& b, const Element& a) {
    const HopfPtr& ha = v.pairing.a_side;
    const AlgebraPtr& A = ha->alg;
    TensorElement out({v.pairing.b_side->alg, A});
    const Element c = v.phi_left_rep(b);
    // S(S^{-1}(a) c_(1)) = S(c_(1)) a turns the target sum
    // phi(c_(2) .) (x) S(c_(1)) a into a slice of (S^{-1}(a) (x) 1) Delta(c)
    const TensorElement sl = ha->delta_left(ha->antipode_inv(a), c);
    for (const auto& [key, cc] : sl.terms())
        out += tensor(v.phi_left_lift(A->basis_element(key[1])),
                      ha->antipode(A->basis_element(key[0])))
                   .scaled(cc);
    return out;
}

TensorElement v_mul_right(const DualityV& v, const Element& b, const Element& a) {
    const HopfPtr& ha = v.pairing.a_side;
    const AlgebraPtr& A = ha->alg;
    TensorElement out({v.pairing.b_side->alg, A});
    const Element c = v.psi_right_rep(b);
    // likewise S(c_(2) S^{-1}(a)) = a S(c_(2)) against Delta(c) (1 (x) S^{-1}(a))
    const TensorElement sl = ha->delta_right(c, ha->antipode_inv(a));
    for (const auto& [key, cc] : sl.terms())
        out += tensor(v.psi_right_lift(A->basis_element(key[0])),
                      ha->antipode(A->basis_element(key[1])))
                   .scaled(cc);
    return out;
}

TensorElement v_inverse(const DualityV& v) {
    const TensorElement el = v_element(v);
    const HopfPtr& ha = v.pairing.a_side;
    return apply_leg(el, 1, [&](const Element& x) { return ha->antipode(x); });
}

TensorElement act_as_t(const DualityV& v, const TensorElement& xs) {
    const HopfPtr& hb = v.pairing.b_side;
    const AlgebraPtr& A = v.pairing.a_side->alg;
    const AlgebraPtr& B = hb->alg;
    if (!B->unital)
        throw precondition_error("act_as_t: the dual side must be unital");
    TensorElement out({A, A});
    if (xs.is_zero()) return out;
    // a local unit on the second legs makes V (1 (x) a0) a finite slice that
    // acts exactly like the multiplier itself on the given tensor
    std::vector<Element> rights;
    for (const auto& [key, c] : xs.terms()) rights.push_back(A->basis_element(key[1]));
    const Element a0 = local_unit(A, rights);
    const TensorElement sl = v_mul_left(v, *B->unit, a0);
    for (const auto& [key, c] : xs.terms())
        for (const auto& [sk, sc] : sl.terms()) {
            const Element moved =
                v.pairing.act_left_b(B->basis_element(sk[0]), A->basis_element(key[0]));
            if (moved.is_zero()) continue;
            out += tensor(moved, A->basis_element(sk[1]) * A->basis_element(key[1]))
                       .scaled(c * sc);
        }
    return out;
}

TensorElement t_map(const HopfPtr& h, const TensorElement& xs) {
    const AlgebraPtr& A = h->alg;
    TensorElement out({A, A});
    for (const auto& [key, c] : xs.terms())
        out += h->delta_right(A->basis_element(key[0]), A->basis_element(key[1])).scaled(c);
    return out;
}

TensorElement t_inverse(const HopfPtr& h, const TensorElement& xs) {
    const AlgebraPtr& A = h->alg;
    TensorElement out({A, A});
    for (const auto& [key, c] : xs.terms()) {
        // sum u_(1) (x) S(u_(2)) v = (i (x) S)((1 (x) S^{-1}(v)) Delta(u))
        const TensorElement sl =
            h->delta_left_leg2(h->antipode_inv(A->basis_element(key[1])), A->basis_element(key[0]));
        out += apply_leg(sl, 1, [&](const Element& x) { return h->antipode(x); }).scaled(c);
    }
    return out;
}

Report duality_v_suite(const HopfPtr& h) {
    const DualResult d = build_dual(h);
    const DualityV v = build_v(d);
    const Pairing& p = d.pairing;
    const HopfPtr& ha = d.primal;
    const HopfPtr& hb = d.dual;
    const AlgebraPtr& A = ha->alg;
    const AlgebraPtr& B = hb->alg;
    const ScalarField f = A->field;
    const std::int64_t n = A->dim;
    const TensorElement el = *v.element;
    const TensorElement one2 = tensor(*B->unit, *A->unit);

    Report r;
    r.suite = "duality-v";
    r.algebra = A->name;

    auto plabel = [&](std::int64_t i, std::int64_t j) {
        return A->label_of(i) + ", " + B->label_of(j);
    };

    {
        // <V, a (x) b> = <a, b> with the flipped pairing on the first leg
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i)
            for (std::int64_t j = 0; j < n && ok; ++j) {
                Scalar lhs = Scalar::zero(f);
                for (const auto& [key, c] : el.terms())
                    lhs = lhs + c * p.eval_basis(i, key[0]) * p.eval_basis(key[1], j);
                if (lhs != p.eval_basis(i, j)) {
                    ok = false;
                    w = "at " + plabel(i, j);
                }
            }
        r.add("defining_evaluation", ok, w);
    }

    r.add("counit_first_leg",
          contract_to_element(el, 0, hb->counit_basis) == *A->unit);
    r.add("counit_second_leg",
          contract_to_element(el, 1, ha->counit_basis) == *B->unit);

    const TensorElement vinv = v_inverse(v);
    r.add("inverse_two_forms",
          apply_leg(el, 0, [&](const Element& x) { return hb->antipode(x); }) == vinv);
    r.add("inverse_product", el * vinv == one2 && vinv * el == one2);

    {
        // (i (x) Delta)V = V_12 V_13 inside B (x) A (x) A
        const std::vector<AlgebraPtr> amb{B, A, A};
        TensorElement lhs(amb);
        for (const auto& [key, c] : el.terms()) {
            const TensorElement cop = ha->coproduct(A->basis_element(key[1]));
            for (const auto& [ck, cc] : cop.terms()) lhs.add_term({key[0], ck[0], ck[1]}, c * cc);
        }
        const TensorElement rhs = leg_embed(el, 0, 1, 3, amb) * leg_embed(el, 0, 2, 3, amb);
        r.add("coproduct_second_leg", lhs == rhs);
    }
    {
        // (Delta (x) i)V = V_13 V_23 inside B (x) B (x) A
        const std::vector<AlgebraPtr> amb{B, B, A};
        TensorElement lhs(amb);
        for (const auto& [key, c] : el.terms()) {
            const TensorElement cop = hb->coproduct(B->basis_element(key[0]));
            for (const auto& [ck, cc] : cop.terms()) lhs.add_term({ck[0], ck[1], key[1]}, c * cc);
        }
        const TensorElement rhs = leg_embed(el, 0, 2, 3, amb) * leg_embed(el, 1, 2, 3, amb);
        r.add("coproduct_first_leg", lhs == rhs);
    }

    {
        bool okl = true, okr = true;
        std::string wl, wr;
        for (std::int64_t j = 0; j < n; ++j)
            for (std::int64_t i = 0; i < n; ++i) {
                const TensorElement ba = tensor(B->basis_element(j), A->basis_element(i));
                if (okl && v_mul_left(v, B->basis_element(j), A->basis_element(i)) != el * ba) {
                    okl = false;
                    wl = "at " + plabel(i, j);
                }
                if (okr && v_mul_right(v, B->basis_element(j), A->basis_element(i)) != ba * el) {
                    okr = false;
                    wr = "at " + plabel(i, j);
                }
            }
        r.add("slice_left_matches_element", okl, wl);
        r.add("slice_right_matches_element", okr, wr);
    }

    {
        // ((b1 (x) 1) V) (b2 (x) 1) = (b1 (x) 1) (V (b2 (x) 1))
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i)
            for (std::int64_t j = 0; j < n && ok; ++j) {
                const TensorElement left = mult_leg_left(
                    B->basis_element(i), 0, v_mul_left(v, B->basis_element(j), *A->unit));
                const TensorElement right = mult_leg_right(
                    v_mul_right(v, B->basis_element(i), *A->unit), 0, B->basis_element(j));
                if (left != right) {
                    ok = false;
                    w = "at " + B->label_of(i) + ", " + B->label_of(j);
                }
            }
        r.add("slice_multiplier_compat", ok, w);
    }

    {
        // <V(b (x) 1), a' (x) b'> = <b |> a', b'> and
        // <(b (x) 1)V, a' (x) b'> = <a' <| b, b'>
        bool okl = true, okr = true;
        std::string wl, wr;
        for (std::int64_t b = 0; b < n; ++b) {
            const TensorElement sl = v_mul_left(v, B->basis_element(b), *A->unit);
            const TensorElement sr = v_mul_right(v, B->basis_element(b), *A->unit);
            for (std::int64_t ap = 0; ap < n; ++ap)
                for (std::int64_t bp = 0; bp < n; ++bp) {
                    Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
                    for (const auto& [key, c] : sl.terms())
                        lhs = lhs + c * p.eval_basis(ap, key[0]) * p.eval_basis(key[1], bp);
                    for (const auto& [key, c] : sr.terms())
                        rhs = rhs + c * p.eval_basis(ap, key[0]) * p.eval_basis(key[1], bp);
                    if (okl && lhs != p.eval(p.act_left_b(B->basis_element(b),
                                                          A->basis_element(ap)),
                                             B->basis_element(bp))) {
                        okl = false;
                        wl = "at " + plabel(ap, b);
                    }
                    if (okr && rhs != p.eval(p.act_right_b(B->basis_element(b),
                                                           A->basis_element(ap)),
                                             B->basis_element(bp))) {
                        okr = false;
                        wr = "at " + plabel(ap, b);
                    }
                }
        }
        r.add("slice_left_evaluation", okl, wl);
        r.add("slice_right_evaluation", okr, wr);
    }

    {
        bool ok = true;
        std::string w;
        for (std::int64_t x = 0; x < n && ok; ++x)
            for (std::int64_t y = 0; y < n && ok; ++y) {
                const TensorElement t2 = tensor(A->basis_element(x), A->basis_element(y));
                if (act_as_t(v, t2) != t_map(ha, t2)) {
                    ok = false;
                    w = "at " + A->label_of(x) + " (x) " + A->label_of(y);
                }
            }
        r.add("acts_as_canonical_map", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::int64_t x = 0; x < n && ok; ++x)
            for (std::int64_t y = 0; y < n && ok; ++y) {
                const TensorElement t2 = tensor(A->basis_element(x), A->basis_element(y));
                if (t_inverse(ha, t_map(ha, t2)) != t2 || t_map(ha, t_inverse(ha, t2)) != t2) {
                    ok = false;
                    w = "at " + A->label_of(x) + " (x) " + A->label_of(y);
                }
            }
        r.add("canonical_map_round_trip", ok, w);
    }

    {
        // the canonical map as a matrix on A (x) A has full rank
        const size_t n2 = static_cast<size_t>(n * n);
        Mat m(n2, Vec(n2, Scalar::zero(f)));
        for (std::int64_t x = 0; x < n; ++x)
            for (std::int64_t y = 0; y < n; ++y) {
                const TensorElement img =
                    t_map(ha, tensor(A->basis_element(x), A->basis_element(y)));
                for (const auto& [key, c] : img.terms())
                    m[static_cast<size_t>(key[0] * n + key[1])]
                     [static_cast<size_t>(x * n + y)] = c;
            }
        const size_t rank = mat_rank(m);
        r.add("canonical_map_bijective", rank == n2,
              rank == n2 ? "" : "rank " + std::to_string(rank));
        r.derived["canonical_map_rank"] = std::to_string(rank);
    }

    // realized operator picture: A acts on itself by multiplication, B by
    // its left action, inside mat(dim A)
    const AlgebraPtr mn = matrix_algebra(static_cast<size_t>(n), f);
    std::vector<Element> lmat, amat;
    lmat.reserve(static_cast<size_t>(n));
    amat.reserve(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        lmat.push_back(as_matrix_element(mn, basis_map_matrix(A, [&](std::int64_t j) {
            return A->basis_element(i) * A->basis_element(j);
        })));
        amat.push_back(as_matrix_element(mn, basis_map_matrix(A, [&](std::int64_t j) {
            return p.act_left_b(B->basis_element(i), A->basis_element(j));
        })));
    }
    TensorElement v_ma({mn, A}), v_bm({B, mn});
    for (std::int64_t i = 0; i < n; ++i) {
        v_ma += tensor(amat[static_cast<size_t>(i)], A->basis_element(i));
        v_bm += tensor(B->basis_element(i), lmat[static_cast<size_t>(i)]);
    }
    TensorElement v_ma_inv({mn, A});
    for (std::int64_t k = 0; k < n; ++k)
        v_ma_inv += tensor(amat[static_cast<size_t>(k)], ha->antipode(A->basis_element(k)));

    {
        // Delta(a) V = V (a (x) 1) with the first leg realized
        bool oki = true, okc = true;
        std::string wi, wc;
        for (std::int64_t a = 0; a < n; ++a) {
            TensorElement da({mn, A});
            const TensorElement cop = ha->coproduct(A->basis_element(a));
            for (const auto& [ck, cc] : cop.terms())
                da += tensor(lmat[static_cast<size_t>(ck[0])], A->basis_element(ck[1])).scaled(cc);
            const TensorElement rhs = v_ma * tensor(lmat[static_cast<size_t>(a)], *A->unit);
            if (oki && da * v_ma != rhs) {
                oki = false;
                wi = "at " + A->label_of(a);
            }
            if (okc && da != rhs * v_ma_inv) {
                okc = false;
                wc = "at " + A->label_of(a);
            }
        }
        r.add("intertwines_coproduct_a", oki, wi);
        r.add("conjugation_gives_coproduct", okc, wc);
    }

    {
        // V Delta(b) = (1 (x) b) V with the second leg realized
        bool ok = true;
        std::string w;
        for (std::int64_t b = 0; b < n && ok; ++b) {
            TensorElement db({B, mn});
            const TensorElement cop = hb->coproduct(B->basis_element(b));
            for (const auto& [ck, cc] : cop.terms())
                db += tensor(B->basis_element(ck[0]), amat[static_cast<size_t>(ck[1])]).scaled(cc);
            if (v_bm * db != tensor(*B->unit, amat[static_cast<size_t>(b)]) * v_bm) {
                ok = false;
                w = "at " + B->label_of(b);
            }
        }
        r.add("intertwines_coproduct_b", ok, w);
    }

    {
        // element pentagon V_12 V_13 V_23 = V_23 V_12 in B (x) mat (x) A
        const std::vector<AlgebraPtr> amb{B, mn, A};
        TensorElement v12(amb), v13(amb), v23(amb);
        for (std::int64_t i = 0; i < n; ++i) {
            v12 += tensor(tensor(B->basis_element(i), lmat[static_cast<size_t>(i)]), *A->unit);
            v13 += tensor(tensor(B->basis_element(i), *mn->unit), A->basis_element(i));
            v23 += tensor(tensor(*B->unit, amat[static_cast<size_t>(i)]), A->basis_element(i));
        }
        r.add("pentagon_element", v12 * v13 * v23 == v23 * v12);
    }

    {
        bool ok = true;
        std::string w;
        const Scalar one = Scalar::one(f);
        for (std::int64_t x = 0; x < n && ok; ++x)
            for (std::int64_t y = 0; y < n && ok; ++y)
                for (std::int64_t z = 0; z < n && ok; ++z) {
                    TensorElement t3({A, A, A});
                    t3.add_term({x, y, z}, one);
                    const TensorElement lhs = t_on_legs(ha, t_on_legs(ha, t3, 0, 1), 1, 2);
                    const TensorElement rhs = t_on_legs(
                        ha, t_on_legs(ha, t_on_legs(ha, t3, 1, 2), 0, 2), 0, 1);
                    if (lhs != rhs) {
                        ok = false;
                        w = "at " + A->label_of(x) + ", " + A->label_of(y) + ", " +
                            A->label_of(z);
                    }
                }
        r.add("pentagon_operator", ok, w);
    }

    r.sort_items();
    return r;
}

Report pentagon_t_suite(const HopfPtr& h, const std::vector<std::int64_t>& window) {
    const AlgebraPtr& A = h->alg;
    std::vector<std::int64_t> ids = window;
    if (ids.empty()) {
        if (!A->finite_dim)
            throw precondition_error(
                "pentagon_t_suite: an explicit window is required in infinite dimensions");
        ids.reserve(static_cast<size_t>(A->dim));
        for (std::int64_t i = 0; i < A->dim; ++i) ids.push_back(i);
    }
    const Scalar one = Scalar::one(A->field);

    Report r;
    r.suite = "pentagon";
    r.algebra = A->name;

    {
        bool ok = true;
        std::string w;
        for (size_t x = 0; x < ids.size() && ok; ++x)
            for (size_t y = 0; y < ids.size() && ok; ++y) {
                const TensorElement t2 =
                    tensor(A->basis_element(ids[x]), A->basis_element(ids[y]));
                if (t_inverse(h, t_map(h, t2)) != t2 || t_map(h, t_inverse(h, t2)) != t2) {
                    ok = false;
                    w = "at " + A->label_of(ids[x]) + " (x) " + A->label_of(ids[y]);
                }
            }
        r.add("canonical_map_round_trip", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (size_t x = 0; x < ids.size() && ok; ++x)
            for (size_t y = 0; y < ids.size() && ok; ++y)
                for (size_t z = 0; z < ids.size() && ok; ++z) {
                    TensorElement t3({A, A, A});
                    t3.add_term({ids[x], ids[y], ids[z]}, one);
                    const TensorElement lhs = t_on_legs(h, t_on_legs(h, t3, 0, 1), 1, 2);
                    const TensorElement rhs =
                        t_on_legs(h, t_on_legs(h, t_on_legs(h, t3, 1, 2), 0, 2), 0, 1);
                    if (lhs != rhs) {
                        ok = false;
                        w = "at " + A->label_of(ids[x]) + ", " + A->label_of(ids[y]) + ", " +
                            A->label_of(ids[z]);
                    }
                }
        r.add("pentagon_operator", ok, w);
    }

    r.sort_items();
    return r;
}

} // namespace aqg
