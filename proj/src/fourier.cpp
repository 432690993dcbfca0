#include "aqg/fourier.hpp"

#include <memory>
#include <string>
#include <vector>

namespace aqg {

namespace {

Element move_coords(const AlgebraPtr& target, const Element& x) {
    Element out = target->zero();
    for (const auto& [id, c] : x.terms()) out.add_term(id, c);
    return out;
}

} // namespace

FourierPack build_fourier(const DualResult& d) {
    FourierPack fp;
    fp.pairing = d.pairing;
    const auto dp = std::make_shared<const DualResult>(d);
    fp.fwd = [dp](const Element& x) {
        const AlgebraPtr& A = dp->primal->alg;
        Element out = dp->dual->alg->zero();
        for (std::int64_t i = 0; i < A->dim; ++i) {
            const Scalar c =
                dp->primal_data.psi(dp->primal->antipode(A->basis_element(i)) * x);
            if (!c.is_zero()) out.add_term(i, c);
        }
        return out;
    };
    fp.fwd_alt = [dp](const Element& a) {
        const AlgebraPtr& A = dp->primal->alg;
        Element out = dp->dual->alg->zero();
        for (std::int64_t i = 0; i < A->dim; ++i) {
            const Scalar c = dp->primal_data.phi(A->basis_element(i) * a);
            if (!c.is_zero()) out.add_term(i, c);
        }
        return out;
    };
    fp.inv = [dp](const Element& b) {
        const AlgebraPtr& B = dp->dual->alg;
        Element out = dp->primal->alg->zero();
        for (std::int64_t j = 0; j < B->dim; ++j) {
            const Scalar c = dp->phi_hat(B->basis_element(j) * b);
            if (!c.is_zero()) out.add_term(j, c);
        }
        return out;
    };
    fp.inv_alt = [dp](const Element& b) {
        const AlgebraPtr& B = dp->dual->alg;
        Element out = dp->primal->alg->zero();
        for (std::int64_t j = 0; j < B->dim; ++j) {
            const Scalar c = dp->psi_hat(dp->dual->antipode(B->basis_element(j)) * b);
            if (!c.is_zero()) out.add_term(j, c);
        }
        return out;
    };
    return fp;
}

FourierPack build_fourier_integer(const InfinitePair& pair) {
    FourierPack fp;
    fp.pairing = integer_pairing(pair);
    const AlgebraPtr fa = pair.fun->alg;
    const AlgebraPtr ga = pair.grp->alg;
    // closed forms on the integer pair, frozen against the defining
    // evaluations in the windowed suite:
    //   psi(S(d[m]) x) = x at -m, so F(d[k]) = u^-k
    //   phi_hat(u^j u^n) = [j == -n], so F^-1(u^n) = d[-n]
    //   phi(d[m] a) = a at m, so F_alt(d[k]) = u^k, inverted by u^n -> d[n]
    fp.fwd = [ga](const Element& x) {
        Element out = ga->zero();
        for (const auto& [k, c] : x.terms()) out.add_term(-k, c);
        return out;
    };
    fp.inv = [fa](const Element& b) {
        Element out = fa->zero();
        for (const auto& [k, c] : b.terms()) out.add_term(-k, c);
        return out;
    };
    fp.fwd_alt = [ga](const Element& a) { return move_coords(ga, a); };
    fp.inv_alt = [fa](const Element& b) { return move_coords(fa, b); };
    return fp;
}

TensorElement transformed_canonical(const FourierPack& fp, const TensorElement& xs) {
    const HopfPtr& ha = fp.pairing.a_side;
    const AlgebraPtr& A = ha->alg;
    const AlgebraPtr& B = fp.pairing.b_side->alg;
    TensorElement out({B, B});
    for (const auto& [key, c] : xs.terms()) {
        const TensorElement sl =
            ha->delta_right(A->basis_element(key[0]), A->basis_element(key[1]));
        for (const auto& [sk, sc] : sl.terms())
            out += tensor(fp.fwd(A->basis_element(sk[0])), fp.fwd(A->basis_element(sk[1])))
                       .scaled(c * sc);
    }
    return out;
}

TensorElement w_map(const HopfPtr& hb, const TensorElement& ys) {
    const AlgebraPtr& B = hb->alg;
    TensorElement out({B, B});
    for (const auto& [key, c] : ys.terms())
        out += hb->delta_right_leg1(B->basis_element(key[1]), B->basis_element(key[0])).scaled(c);
    return out;
}

TensorElement w_inv(const HopfPtr& hb, const TensorElement& ys) {
    const AlgebraPtr& B = hb->alg;
    TensorElement out({B, B});
    for (const auto& [key, c] : ys.terms()) {
        // sum S^{-1}(y'_(1)) y (x) y'_(2) = (S^{-1} (x) i)((S(y) (x) 1) Delta(y'))
        const TensorElement sl =
            hb->delta_left(hb->antipode(B->basis_element(key[0])), B->basis_element(key[1]));
        out += apply_leg(sl, 0, [&](const Element& e) { return hb->antipode_inv(e); }).scaled(c);
    }
    return out;
}

Report fourier_suite(const HopfPtr& h) {
    const DualResult d = build_dual(h);
    const FourierPack fp = build_fourier(d);
    const Pairing& p = d.pairing;
    const HopfPtr& ha = d.primal;
    const HopfPtr& hb = d.dual;
    const AlgebraPtr& A = ha->alg;
    const AlgebraPtr& B = hb->alg;
    const std::int64_t n = A->dim;

    Report r;
    r.suite = "fourier";
    r.algebra = A->name;

    {
        bool ok = true;
        std::string w;
        for (std::int64_t j = 0; j < n && ok; ++j) {
            if (fp.inv(fp.fwd(A->basis_element(j))) != A->basis_element(j)) {
                ok = false;
                w = "at " + A->label_of(j);
            }
            if (ok && fp.fwd(fp.inv(B->basis_element(j))) != B->basis_element(j)) {
                ok = false;
                w = "at " + B->label_of(j);
            }
        }
        r.add("round_trip", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t j = 0; j < n && ok; ++j) {
            if (fp.inv_alt(fp.fwd_alt(A->basis_element(j))) != A->basis_element(j)) {
                ok = false;
                w = "at " + A->label_of(j);
            }
            if (ok && fp.fwd_alt(fp.inv_alt(B->basis_element(j))) != B->basis_element(j)) {
                ok = false;
                w = "at " + B->label_of(j);
            }
        }
        r.add("round_trip_alt", ok, w);
    }

    {
        // F(a x) = F(x) <| S^{-1}(a): multiplication becomes convolution
        bool ok = true;
        std::string w;
        for (std::int64_t a = 0; a < n && ok; ++a)
            for (std::int64_t x = 0; x < n && ok; ++x) {
                const Element lhs = fp.fwd(A->basis_element(a) * A->basis_element(x));
                const Element rhs = p.act_right_a(ha->antipode_inv(A->basis_element(a)),
                                                  fp.fwd(A->basis_element(x)));
                if (lhs != rhs) {
                    ok = false;
                    w = "at " + A->label_of(a) + ", " + A->label_of(x);
                }
            }
        r.add("convolution_product_to_action", ok, w);
    }
    {
        // F(b |> x) = b F(x): the action becomes multiplication
        bool ok = true;
        std::string w;
        for (std::int64_t b = 0; b < n && ok; ++b)
            for (std::int64_t x = 0; x < n && ok; ++x) {
                const Element lhs =
                    fp.fwd(p.act_left_b(B->basis_element(b), A->basis_element(x)));
                const Element rhs = B->basis_element(b) * fp.fwd(A->basis_element(x));
                if (lhs != rhs) {
                    ok = false;
                    w = "at " + B->label_of(b) + ", " + A->label_of(x);
                }
            }
        r.add("convolution_action_to_product", ok, w);
    }

    {
        // the transform carries the canonical map of A to the w-inverse on
        // B; left side through the slices of A, right side through the dual
        // structure alone
        bool ok = true;
        std::string w;
        for (std::int64_t x = 0; x < n && ok; ++x)
            for (std::int64_t y = 0; y < n && ok; ++y) {
                const TensorElement lhs =
                    transformed_canonical(fp, tensor(A->basis_element(x), A->basis_element(y)));
                const TensorElement rhs = w_inv(
                    hb, tensor(fp.fwd(A->basis_element(x)), fp.fwd(A->basis_element(y))));
                if (lhs != rhs) {
                    ok = false;
                    w = "at " + A->label_of(x) + " (x) " + A->label_of(y);
                }
            }
        r.add("transformed_canonical_matches", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i)
            for (std::int64_t j = 0; j < n && ok; ++j) {
                const TensorElement t2 = tensor(B->basis_element(i), B->basis_element(j));
                if (w_map(hb, w_inv(hb, t2)) != t2 || w_inv(hb, w_map(hb, t2)) != t2) {
                    ok = false;
                    w = "at " + B->label_of(i) + " (x) " + B->label_of(j);
                }
            }
        r.add("w_round_trip", ok, w);
    }

    {
        // psi_hat(F_alt(a) F_alt(a')) = phi(S^{-1}(a') a)
        bool ok = true;
        std::string w;
        for (std::int64_t a = 0; a < n && ok; ++a)
            for (std::int64_t ap = 0; ap < n && ok; ++ap) {
                const Scalar lhs = d.psi_hat(fp.fwd_alt(A->basis_element(a)) *
                                             fp.fwd_alt(A->basis_element(ap)));
                const Scalar rhs = d.primal_data.phi(
                    ha->antipode_inv(A->basis_element(ap)) * A->basis_element(a));
                if (lhs != rhs) {
                    ok = false;
                    w = "at " + A->label_of(a) + ", " + A->label_of(ap);
                }
            }
        r.add("plancherel_through_alt", ok, w);
    }

    r.sort_items();
    return r;
}

Report fourier_suite_windowed(const InfinitePair& pair,
                              const std::vector<std::int64_t>& window) {
    if (window.empty())
        throw precondition_error("fourier_suite_windowed: the window must not be empty");
    const FourierPack fp = build_fourier_integer(pair);
    const Pairing& p = fp.pairing;
    const HopfPtr& hf = pair.fun;
    const HopfPtr& hg = pair.grp;
    const AlgebraPtr& F = hf->alg;
    const AlgebraPtr& G = hg->alg;

    Report r;
    r.suite = "fourier";
    r.algebra = F->name + " ~ " + G->name;

    {
        // <d[m], F(d[k])> = psi(S(d[m]) d[k]) and the inverse, alternative,
        // and alternative-inverse defining evaluations on the window
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < window.size() && ok; ++i)
            for (size_t j = 0; j < window.size() && ok; ++j) {
                const std::int64_t k = window[i], m = window[j];
                const Element dk = F->basis_element(k), dm = F->basis_element(m);
                const Element uk = G->basis_element(k), uj = G->basis_element(m);
                bool good =
                    p.eval(dm, fp.fwd(dk)) == pair.psi_fun(hf->antipode(dm) * dk) &&
                    p.eval(fp.inv(uk), uj) == pair.phi_grp(uj * uk) &&
                    p.eval(dm, fp.fwd_alt(dk)) == pair.phi_fun(dm * dk) &&
                    p.eval(fp.inv_alt(uk), uj) == pair.psi_grp(hg->antipode(uj) * uk);
                if (!good) {
                    ok = false;
                    w = "at ids " + std::to_string(k) + ", " + std::to_string(m);
                }
            }
        r.add("defining_evaluations_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < window.size() && ok; ++i) {
            const std::int64_t k = window[i];
            const bool good = fp.inv(fp.fwd(F->basis_element(k))) == F->basis_element(k) &&
                              fp.fwd(fp.inv(G->basis_element(k))) == G->basis_element(k) &&
                              fp.inv_alt(fp.fwd_alt(F->basis_element(k))) ==
                                  F->basis_element(k) &&
                              fp.fwd_alt(fp.inv_alt(G->basis_element(k))) == G->basis_element(k);
            if (!good) {
                ok = false;
                w = "at id " + std::to_string(k);
            }
        }
        r.add("round_trip_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < window.size() && ok; ++i)
            for (size_t j = 0; j < window.size() && ok; ++j) {
                const Element a = F->basis_element(window[i]);
                const Element x = F->basis_element(window[j]);
                const Element b = G->basis_element(window[i]);
                const bool good =
                    fp.fwd(a * x) == p.act_right_a(hf->antipode_inv(a), fp.fwd(x)) &&
                    fp.fwd(p.act_left_b(b, x)) == b * fp.fwd(x);
                if (!good) {
                    ok = false;
                    w = "at ids " + std::to_string(window[i]) + ", " +
                        std::to_string(window[j]);
                }
            }
        r.add("convolution_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < window.size() && ok; ++i)
            for (size_t j = 0; j < window.size() && ok; ++j) {
                const TensorElement xs =
                    tensor(F->basis_element(window[i]), F->basis_element(window[j]));
                const TensorElement ys =
                    tensor(G->basis_element(window[i]), G->basis_element(window[j]));
                const bool good =
                    transformed_canonical(fp, xs) ==
                        w_inv(hg, tensor(fp.fwd(F->basis_element(window[i])),
                                         fp.fwd(F->basis_element(window[j])))) &&
                    w_map(hg, w_inv(hg, ys)) == ys && w_inv(hg, w_map(hg, ys)) == ys;
                if (!good) {
                    ok = false;
                    w = "at ids " + std::to_string(window[i]) + ", " +
                        std::to_string(window[j]);
                }
            }
        r.add("transformed_canonical_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < window.size() && ok; ++i)
            for (size_t j = 0; j < window.size() && ok; ++j) {
                const Element a = F->basis_element(window[i]);
                const Element ap = F->basis_element(window[j]);
                if (pair.psi_grp(fp.fwd_alt(a) * fp.fwd_alt(ap)) !=
                    pair.phi_fun(hf->antipode_inv(ap) * a)) {
                    ok = false;
                    w = "at ids " + std::to_string(window[i]) + ", " +
                        std::to_string(window[j]);
                }
            }
        r.add("plancherel_window", ok, w);
    }

    r.sort_items();
    return r;
}

} // namespace aqg
