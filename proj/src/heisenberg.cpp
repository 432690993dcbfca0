#include "aqg/heisenberg.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace aqg {

namespace {

TensorElement twisted_zero(const Pairing& p) {
    return TensorElement({p.a_side->alg, p.b_side->alg});
}

// both-side Sweedler expansion sum <a'_(2), b_(1)> a a'_(1) (x) b_(2) b';
// needs closed coproducts on both sides, used to cross-check heis_mul
TensorElement twisted_product_direct(const Pairing& p, const TensorElement& s,
                                     const TensorElement& t) {
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    TensorElement out = twisted_zero(p);
    for (const auto& [skey, sc] : s.terms()) {
        const Element a = A->basis_element(skey[0]);
        const TensorElement db = p.b_side->coproduct(B->basis_element(skey[1]));
        for (const auto& [tkey, tc] : t.terms()) {
            const TensorElement da = p.a_side->coproduct(A->basis_element(tkey[0]));
            const Element bp = B->basis_element(tkey[1]);
            for (const auto& [akey, ac] : da.terms())
                for (const auto& [bkey, bc] : db.terms()) {
                    const Scalar c = p.eval_basis(akey[1], bkey[0]) * sc * tc * ac * bc;
                    if (c.is_zero()) continue;
                    const Element left = a * A->basis_element(akey[0]);
                    if (left.is_zero()) continue;
                    out += tensor(left, B->basis_element(bkey[1]) * bp).scaled(c);
                }
        }
    }
    return out;
}

} // namespace

TensorElement heis_mul(const Pairing& p, const TensorElement& s, const TensorElement& t) {
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    TensorElement out = twisted_zero(p);
    for (const auto& [skey, sc] : s.terms()) {
        const Element a = A->basis_element(skey[0]);
        const TensorElement db = p.b_side->coproduct(B->basis_element(skey[1]));
        for (const auto& [tkey, tc] : t.terms()) {
            const Element ap = A->basis_element(tkey[0]);
            const Element bp = B->basis_element(tkey[1]);
            for (const auto& [dkey, dc] : db.terms()) {
                const Element left = a * p.act_left_b(B->basis_element(dkey[0]), ap);
                if (left.is_zero()) continue;
                out += tensor(left, B->basis_element(dkey[1]) * bp).scaled(sc * tc * dc);
            }
        }
    }
    return out;
}

Element heis_act(const Pairing& p, const TensorElement& s, const Element& x) {
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    Element out = A->zero();
    for (const auto& [key, c] : s.terms())
        out += (A->basis_element(key[0]) * p.act_left_b(B->basis_element(key[1]), x)).scaled(c);
    return out;
}

TensorElement j_a_mul(const Pairing& p, const Element& a, const TensorElement& t) {
    if (t.is_zero()) return twisted_zero(p);
    return mult_leg_left(a, 0, t);
}

TensorElement mul_j_b(const Pairing& p, const TensorElement& t, const Element& b) {
    if (t.is_zero()) return twisted_zero(p);
    return mult_leg_right(t, 1, b);
}

TensorElement j_b_mul(const Pairing& p, const Element& b, const TensorElement& t) {
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    TensorElement out = twisted_zero(p);
    const TensorElement db = p.b_side->coproduct(b);
    for (const auto& [dkey, dc] : db.terms()) {
        const Element b1 = B->basis_element(dkey[0]);
        const Element b2 = B->basis_element(dkey[1]);
        for (const auto& [tkey, tc] : t.terms()) {
            const Element left = p.act_left_b(b1, A->basis_element(tkey[0]));
            if (left.is_zero()) continue;
            out += tensor(left, b2 * B->basis_element(tkey[1])).scaled(dc * tc);
        }
    }
    return out;
}

TensorElement mul_j_a(const Pairing& p, const TensorElement& t, const Element& a) {
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    TensorElement out = twisted_zero(p);
    for (const auto& [tkey, tc] : t.terms()) {
        const Element ap = A->basis_element(tkey[0]);
        const TensorElement db = p.b_side->coproduct(B->basis_element(tkey[1]));
        for (const auto& [dkey, dc] : db.terms()) {
            const Element left = ap * p.act_left_b(B->basis_element(dkey[0]), a);
            if (left.is_zero()) continue;
            out += tensor(left, B->basis_element(dkey[1])).scaled(tc * dc);
        }
    }
    return out;
}

TensorElement r_map(const Pairing& p, const TensorElement& s) {
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    TensorElement out = twisted_zero(p);
    for (const auto& [key, c] : s.terms()) {
        const Element a = A->basis_element(key[0]);
        const TensorElement db = p.b_side->coproduct(B->basis_element(key[1]));
        for (const auto& [dkey, dc] : db.terms()) {
            const Element moved = p.act_left_b(B->basis_element(dkey[0]), a);
            if (moved.is_zero()) continue;
            out += tensor(moved, B->basis_element(dkey[1])).scaled(c * dc);
        }
    }
    return out;
}

TensorElement r_inv(const Pairing& p, const TensorElement& s) {
    // <S^{-1}(a_(2)), b_(1)> = <a_(2), S^{-1}(b_(1))>, so the inverse twist
    // is the same slice sum with b_(1) fed through the inverse antipode
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    TensorElement out = twisted_zero(p);
    for (const auto& [key, c] : s.terms()) {
        const Element a = A->basis_element(key[0]);
        const TensorElement db = p.b_side->coproduct(B->basis_element(key[1]));
        for (const auto& [dkey, dc] : db.terms()) {
            const Element moved =
                p.act_left_b(p.b_side->antipode_inv(B->basis_element(dkey[0])), a);
            if (moved.is_zero()) continue;
            out += tensor(moved, B->basis_element(dkey[1])).scaled(c * dc);
        }
    }
    return out;
}

Mat heis_op_matrix(const Pairing& p, const TensorElement& s) {
    const AlgebraPtr& A = p.a_side->alg;
    if (!A->finite_dim)
        throw precondition_error("heis_op_matrix: the acted-on side must be finite-dimensional");
    return basis_map_matrix(A, [&](std::int64_t j) { return heis_act(p, s, A->basis_element(j)); });
}

TensorElement to_rank_one(const DualResult& d, const TensorElement& s) {
    const AlgebraPtr& A = d.primal->alg;
    TensorElement out({A, d.dual->alg});
    for (const auto& [key, sc] : s.terms()) {
        const Element a = A->basis_element(key[0]);
        const Element c = rep_phi_left(d, d.dual->alg->basis_element(key[1]));
        const TensorElement dc = d.primal->coproduct(c);
        for (const auto& [dkey, cc] : dc.terms()) {
            const Element left = a * d.primal->antipode(A->basis_element(dkey[0]));
            if (left.is_zero()) continue;
            out += tensor(left, dual_element_phi_left(d, A->basis_element(dkey[1]))).scaled(sc * cc);
        }
    }
    return out;
}

TensorElement diamond_mul(const Pairing& p, const TensorElement& s, const TensorElement& t) {
    TensorElement out = twisted_zero(p);
    for (const auto& [skey, sc] : s.terms())
        for (const auto& [tkey, tc] : t.terms()) {
            const Scalar c = p.eval_basis(tkey[0], skey[1]) * sc * tc;
            if (c.is_zero()) continue;
            out.add_term({skey[0], tkey[1]}, c);
        }
    return out;
}

Mat rank_one_matrix(const Pairing& p, const TensorElement& s) {
    const AlgebraPtr& A = p.a_side->alg;
    if (!A->finite_dim)
        throw precondition_error("rank_one_matrix: the acted-on side must be finite-dimensional");
    return basis_map_matrix(A, [&](std::int64_t j) {
        Element out = A->zero();
        for (const auto& [key, c] : s.terms())
            out += A->basis_element(key[0]).scaled(c * p.eval_basis(j, key[1]));
        return out;
    });
}

Report heisenberg_suite(const HopfPtr& h) {
    const DualResult d = build_dual(h);
    const Pairing& p = d.pairing;
    const AlgebraPtr& A = d.primal->alg;
    const AlgebraPtr& B = d.dual->alg;
    const ScalarField f = A->field;
    const std::int64_t na = A->dim;
    const std::int64_t nb = B->dim;
    const std::int64_t nt = na * nb;

    Report r;
    r.suite = "heisenberg";
    r.algebra = A->name;

    std::vector<TensorElement> basis;
    basis.reserve(static_cast<size_t>(nt));
    for (std::int64_t i = 0; i < na; ++i)
        for (std::int64_t j = 0; j < nb; ++j)
            basis.push_back(tensor(A->basis_element(i), B->basis_element(j)));
    auto at = [&](std::int64_t k) -> const TensorElement& {
        return basis[static_cast<size_t>(k)];
    };
    auto tlabel = [&](std::int64_t k) {
        return A->label_of(k / nb) + "(x)" + B->label_of(k % nb);
    };
    const TensorElement one = tensor(*A->unit, *B->unit);

    // the criterion: triples exhaustively for small algebras, and always a
    // fixed sampled batch from a deterministic generator
    const bool small = na <= 4;
    std::mt19937 rng(12345u);
    auto pick = [&]() { return static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(nt)); };
    const int samples = 128;

    {
        bool ok = true;
        std::string w;
        for (int n = 0; n < samples && ok; ++n) {
            const std::int64_t s = pick(), t = pick(), u = pick();
            if (heis_mul(p, heis_mul(p, at(s), at(t)), at(u)) !=
                heis_mul(p, at(s), heis_mul(p, at(t), at(u)))) {
                ok = false;
                w = "at " + tlabel(s) + ", " + tlabel(t) + ", " + tlabel(u);
            }
        }
        r.add("product_associative_sampled", ok, w);
    }
    if (small) {
        std::vector<std::vector<TensorElement>> prod(
            static_cast<size_t>(nt), std::vector<TensorElement>(static_cast<size_t>(nt)));
        for (std::int64_t s = 0; s < nt; ++s)
            for (std::int64_t t = 0; t < nt; ++t)
                prod[static_cast<size_t>(s)][static_cast<size_t>(t)] = heis_mul(p, at(s), at(t));
        bool ok = true;
        std::string w;
        for (std::int64_t s = 0; s < nt && ok; ++s)
            for (std::int64_t t = 0; t < nt && ok; ++t)
                for (std::int64_t u = 0; u < nt && ok; ++u)
                    if (heis_mul(p, prod[static_cast<size_t>(s)][static_cast<size_t>(t)], at(u)) !=
                        heis_mul(p, at(s), prod[static_cast<size_t>(t)][static_cast<size_t>(u)])) {
                        ok = false;
                        w = "at " + tlabel(s) + ", " + tlabel(t) + ", " + tlabel(u);
                    }
        r.add("product_associative_exhaustive", ok, w);
    }

    {
        // the action-based product against the two-sided Sweedler expansion
        bool ok = true;
        std::string w;
        auto check_pair = [&](std::int64_t s, std::int64_t t) {
            if (heis_mul(p, at(s), at(t)) != twisted_product_direct(p, at(s), at(t))) {
                ok = false;
                w = "at " + tlabel(s) + ", " + tlabel(t);
            }
        };
        if (small) {
            for (std::int64_t s = 0; s < nt && ok; ++s)
                for (std::int64_t t = 0; t < nt && ok; ++t) check_pair(s, t);
        } else {
            for (int n = 0; n < samples && ok; ++n) check_pair(pick(), pick());
        }
        r.add("product_two_routes", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        auto check_triple = [&](std::int64_t s, std::int64_t t, std::int64_t x) {
            if (heis_act(p, heis_mul(p, at(s), at(t)), A->basis_element(x)) !=
                heis_act(p, at(s), heis_act(p, at(t), A->basis_element(x)))) {
                ok = false;
                w = "at " + tlabel(s) + ", " + tlabel(t) + " on " + A->label_of(x);
            }
        };
        for (int n = 0; n < samples && ok; ++n)
            check_triple(pick(), pick(),
                         static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(na)));
        r.add("action_module_law_sampled", ok, w);
        if (small) {
            ok = true;
            w.clear();
            for (std::int64_t s = 0; s < nt && ok; ++s)
                for (std::int64_t t = 0; t < nt && ok; ++t)
                    for (std::int64_t x = 0; x < na && ok; ++x) check_triple(s, t, x);
            r.add("action_module_law_exhaustive", ok, w);
        }
    }

    {
        // stack every basis operator into one matrix; a trivial kernel is
        // faithfulness, and the rank is the dimension of the realized
        // operator algebra
        const size_t sna = static_cast<size_t>(na);
        Mat stacked = mat_zero(sna * sna, static_cast<size_t>(nt), f);
        for (std::int64_t k = 0; k < nt; ++k) {
            const Mat op = heis_op_matrix(p, at(k));
            for (size_t row = 0; row < sna; ++row)
                for (size_t col = 0; col < sna; ++col)
                    stacked[row * sna + col][static_cast<size_t>(k)] = op[row][col];
        }
        const size_t rank = mat_rank(stacked);
        r.add("action_faithful", rank == static_cast<size_t>(nt),
              rank == static_cast<size_t>(nt)
                  ? ""
                  : "operator matrix rank " + std::to_string(rank) + " of " + std::to_string(nt));
        r.add("operator_span_dimension", rank == sna * sna,
              rank == sna * sna ? "" : "span dimension " + std::to_string(rank));
        r.derived["operator_algebra_dimension"] = std::to_string(rank);
    }

    r.add("action_unit_identity", mat_eq(heis_op_matrix(p, one), mat_identity(static_cast<size_t>(na), f)));

    {
        bool ok = true;
        std::string w;
        for (std::int64_t s = 0; s < nt && ok; ++s) {
            if (heis_mul(p, one, at(s)) != at(s) || heis_mul(p, at(s), one) != at(s)) {
                ok = false;
                w = "at " + tlabel(s);
            }
        }
        r.add("unit_two_sided", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < na && ok; ++i)
            for (std::int64_t j = 0; j < nb && ok; ++j) {
                const TensorElement lhs = heis_mul(p, tensor(A->basis_element(i), *B->unit),
                                                   tensor(*A->unit, B->basis_element(j)));
                if (lhs != at(i * nb + j)) {
                    ok = false;
                    w = "at " + tlabel(i * nb + j);
                }
            }
        r.add("unit_factorization", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        auto check_one = [&](std::int64_t i, std::int64_t j, std::int64_t s) {
            const Element a = A->basis_element(i);
            const Element b = B->basis_element(j);
            if (j_a_mul(p, a, j_b_mul(p, b, at(s))) != heis_mul(p, at(i * nb + j), at(s))) {
                ok = false;
                w = "at " + tlabel(i * nb + j) + " on " + tlabel(s);
            }
        };
        if (small) {
            for (std::int64_t i = 0; i < na && ok; ++i)
                for (std::int64_t j = 0; j < nb && ok; ++j)
                    for (std::int64_t s = 0; s < nt && ok; ++s) check_one(i, j, s);
        } else {
            for (int n = 0; n < samples && ok; ++n) {
                const std::int64_t k = pick();
                check_one(k / nb, k % nb, pick());
            }
        }
        r.add("embedding_factorization", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        auto check_one = [&](std::int64_t i, std::int64_t k, std::int64_t s) {
            const Element ai = A->basis_element(i), ak = A->basis_element(k);
            const Element bi = B->basis_element(i % nb), bk = B->basis_element(k % nb);
            if (j_a_mul(p, ai * ak, at(s)) != j_a_mul(p, ai, j_a_mul(p, ak, at(s))))
                w = "left A at " + A->label_of(i) + "," + A->label_of(k) + " on " + tlabel(s);
            else if (j_b_mul(p, bi * bk, at(s)) != j_b_mul(p, bi, j_b_mul(p, bk, at(s))))
                w = "left B at " + B->label_of(i % nb) + "," + B->label_of(k % nb) + " on " +
                    tlabel(s);
            else if (mul_j_a(p, at(s), ai * ak) != mul_j_a(p, mul_j_a(p, at(s), ai), ak))
                w = "right A at " + A->label_of(i) + "," + A->label_of(k) + " on " + tlabel(s);
            else if (mul_j_b(p, at(s), bi * bk) != mul_j_b(p, mul_j_b(p, at(s), bi), bk))
                w = "right B at " + B->label_of(i % nb) + "," + B->label_of(k % nb) + " on " +
                    tlabel(s);
            else
                return;
            ok = false;
        };
        if (small) {
            for (std::int64_t i = 0; i < na && ok; ++i)
                for (std::int64_t k = 0; k < na && ok; ++k)
                    for (std::int64_t s = 0; s < nt && ok; ++s) check_one(i, k, s);
        } else {
            for (int n = 0; n < samples && ok; ++n)
                check_one(static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(na)),
                          static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(na)),
                          pick());
        }
        r.add("embedding_homomorphism", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        auto check_one = [&](std::int64_t i, std::int64_t j, std::int64_t s, std::int64_t t) {
            const Element a = A->basis_element(i);
            const Element b = B->basis_element(j);
            const TensorElement st = heis_mul(p, at(s), at(t));
            if (j_a_mul(p, a, st) != heis_mul(p, j_a_mul(p, a, at(s)), at(t)))
                w = "j_A pull-out at " + A->label_of(i);
            else if (heis_mul(p, mul_j_a(p, at(s), a), at(t)) !=
                     heis_mul(p, at(s), j_a_mul(p, a, at(t))))
                w = "j_A middle at " + A->label_of(i);
            else if (mul_j_b(p, st, b) != heis_mul(p, at(s), mul_j_b(p, at(t), b)))
                w = "j_B pull-out at " + B->label_of(j);
            else if (heis_mul(p, mul_j_b(p, at(s), b), at(t)) !=
                     heis_mul(p, at(s), j_b_mul(p, b, at(t))))
                w = "j_B middle at " + B->label_of(j);
            else
                return;
            ok = false;
            w += " on " + tlabel(s) + ", " + tlabel(t);
        };
        const int compat_samples = small ? samples : samples / 2;
        for (int n = 0; n < compat_samples && ok; ++n)
            check_one(static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(na)),
                      static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(nb)), pick(),
                      pick());
        r.add("embedding_multiplier_compat", ok, w);
    }

    {
        // commutation rule as operators on A: Lam_b L_a = sum <a_(2), b_(1)>
        // L_{a_(1)} Lam_{b_(2)}, with L left multiplication and Lam the
        // B-action
        const size_t sna = static_cast<size_t>(na);
        std::vector<Mat> lmul, act;
        for (std::int64_t i = 0; i < na; ++i) {
            const Element a = A->basis_element(i);
            lmul.push_back(basis_map_matrix(A, [&](std::int64_t x) {
                return a * A->basis_element(x);
            }));
        }
        for (std::int64_t j = 0; j < nb; ++j) {
            const Element b = B->basis_element(j);
            act.push_back(basis_map_matrix(A, [&](std::int64_t x) {
                return p.act_left_b(b, A->basis_element(x));
            }));
        }
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < na && ok; ++i) {
            const TensorElement da = p.a_side->coproduct(A->basis_element(i));
            for (std::int64_t j = 0; j < nb && ok; ++j) {
                const TensorElement db = p.b_side->coproduct(B->basis_element(j));
                const Mat lhs =
                    mat_mul(act[static_cast<size_t>(j)], lmul[static_cast<size_t>(i)]);
                Mat rhs = mat_zero(sna, sna, f);
                for (const auto& [akey, ac] : da.terms())
                    for (const auto& [bkey, bc] : db.terms()) {
                        const Scalar c = p.eval_basis(akey[1], bkey[0]) * ac * bc;
                        if (c.is_zero()) continue;
                        const Mat part = mat_mul(lmul[static_cast<size_t>(akey[0])],
                                                 act[static_cast<size_t>(bkey[1])]);
                        for (size_t row = 0; row < sna; ++row)
                            for (size_t col = 0; col < sna; ++col)
                                rhs[row][col] = rhs[row][col] + part[row][col] * c;
                    }
                if (!mat_eq(lhs, rhs)) {
                    ok = false;
                    w = "at " + A->label_of(i) + ", " + B->label_of(j);
                }
            }
        }
        r.add("commutation_rule", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::int64_t s = 0; s < nt && ok; ++s) {
            if (r_inv(p, r_map(p, at(s))) != at(s) || r_map(p, r_inv(p, at(s))) != at(s)) {
                ok = false;
                w = "at " + tlabel(s);
            }
        }
        r.add("r_round_trip", ok, w);
    }

    {
        // R(a(x)b) is the commutation product 1(x)b . a(x)1
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < na && ok; ++i)
            for (std::int64_t j = 0; j < nb && ok; ++j) {
                const TensorElement swapped = heis_mul(p, tensor(*A->unit, B->basis_element(j)),
                                                       tensor(A->basis_element(i), *B->unit));
                if (r_map(p, at(i * nb + j)) != swapped) {
                    ok = false;
                    w = "at " + tlabel(i * nb + j);
                }
            }
        r.add("r_matches_commutation", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::int64_t s = 0; s < nt && ok; ++s) {
            if (!mat_eq(heis_op_matrix(p, at(s)), rank_one_matrix(p, to_rank_one(d, at(s))))) {
                ok = false;
                w = "at " + tlabel(s);
            }
        }
        r.add("rank_one_matches_operator", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        auto check_pair = [&](std::int64_t s, std::int64_t t) {
            if (to_rank_one(d, heis_mul(p, at(s), at(t))) !=
                diamond_mul(p, to_rank_one(d, at(s)), to_rank_one(d, at(t)))) {
                ok = false;
                w = "at " + tlabel(s) + ", " + tlabel(t);
            }
        };
        if (small) {
            for (std::int64_t s = 0; s < nt && ok; ++s)
                for (std::int64_t t = 0; t < nt && ok; ++t) check_pair(s, t);
        } else {
            for (int n = 0; n < samples && ok; ++n) check_pair(pick(), pick());
        }
        r.add("rank_one_multiplicative", ok, w);
    }

    {
        Mat m = mat_zero(static_cast<size_t>(nt), static_cast<size_t>(nt), f);
        for (std::int64_t k = 0; k < nt; ++k) {
            const TensorElement img = to_rank_one(d, at(k));
            for (const auto& [key, c] : img.terms())
                m[static_cast<size_t>(key[0] * nb + key[1])][static_cast<size_t>(k)] = c;
        }
        const size_t rank = mat_rank(m);
        r.add("rank_one_bijective", rank == static_cast<size_t>(nt),
              rank == static_cast<size_t>(nt) ? "" : "rank " + std::to_string(rank));
    }

    {
        bool ok = true;
        std::string w;
        auto check_pair = [&](std::int64_t s, std::int64_t t) {
            const Mat lhs = rank_one_matrix(p, diamond_mul(p, at(s), at(t)));
            const Mat rhs = mat_mul(rank_one_matrix(p, at(s)), rank_one_matrix(p, at(t)));
            if (!mat_eq(lhs, rhs)) {
                ok = false;
                w = "at " + tlabel(s) + ", " + tlabel(t);
            }
        };
        if (small) {
            for (std::int64_t s = 0; s < nt && ok; ++s)
                for (std::int64_t t = 0; t < nt && ok; ++t) check_pair(s, t);
        } else {
            for (int n = 0; n < samples && ok; ++n) check_pair(pick(), pick());
        }
        r.add("diamond_composes", ok, w);
    }

    r.add("rank_one_unit_identity",
          mat_eq(rank_one_matrix(p, to_rank_one(d, one)), mat_identity(static_cast<size_t>(na), f)));

    r.sort_items();
    return r;
}

Report heisenberg_suite_windowed(const Pairing& p, const std::vector<std::int64_t>& window_a,
                                 const std::vector<std::int64_t>& window_b) {
    const AlgebraPtr& A = p.a_side->alg;
    const AlgebraPtr& B = p.b_side->alg;
    if (window_a.empty() || window_b.empty())
        throw precondition_error("heisenberg_suite_windowed: both windows must be nonempty");
    if (!p.b_side->has_closed_coproduct())
        throw precondition_error(
            "heisenberg_suite_windowed: the B side needs a closed coproduct");

    Report r;
    r.suite = "heisenberg";
    r.algebra = A->name + " ~ " + B->name;

    std::vector<TensorElement> ws;
    for (std::int64_t i : window_a)
        for (std::int64_t j : window_b) ws.push_back(tensor(A->basis_element(i), B->basis_element(j)));
    const std::int64_t nw = static_cast<std::int64_t>(ws.size());
    auto at = [&](std::int64_t k) -> const TensorElement& { return ws[static_cast<size_t>(k)]; };
    auto tlabel = [&](std::int64_t k) {
        const std::int64_t nb = static_cast<std::int64_t>(window_b.size());
        return A->label_of(window_a[static_cast<size_t>(k / nb)]) + "(x)" +
               B->label_of(window_b[static_cast<size_t>(k % nb)]);
    };

    std::mt19937 rng(12345u);
    auto pick = [&]() { return static_cast<std::int64_t>(rng() % static_cast<std::uint32_t>(nw)); };

    {
        bool ok = true;
        std::string w;
        if (nw * nw * nw <= 20000) {
            for (std::int64_t s = 0; s < nw && ok; ++s)
                for (std::int64_t t = 0; t < nw && ok; ++t)
                    for (std::int64_t u = 0; u < nw && ok; ++u)
                        if (heis_mul(p, heis_mul(p, at(s), at(t)), at(u)) !=
                            heis_mul(p, at(s), heis_mul(p, at(t), at(u)))) {
                            ok = false;
                            w = "at " + tlabel(s) + ", " + tlabel(t) + ", " + tlabel(u);
                        }
        } else {
            for (int n = 0; n < 200 && ok; ++n) {
                const std::int64_t s = pick(), t = pick(), u = pick();
                if (heis_mul(p, heis_mul(p, at(s), at(t)), at(u)) !=
                    heis_mul(p, at(s), heis_mul(p, at(t), at(u)))) {
                    ok = false;
                    w = "at " + tlabel(s) + ", " + tlabel(t) + ", " + tlabel(u);
                }
            }
        }
        r.add("product_associative_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::int64_t s = 0; s < nw && ok; ++s)
            for (std::int64_t t = 0; t < nw && ok; ++t)
                for (std::int64_t x : window_a) {
                    const Element ex = A->basis_element(x);
                    if (heis_act(p, heis_mul(p, at(s), at(t)), ex) !=
                        heis_act(p, at(s), heis_act(p, at(t), ex))) {
                        ok = false;
                        w = "at " + tlabel(s) + ", " + tlabel(t) + " on " + A->label_of(x);
                        break;
                    }
                }
        r.add("action_module_law_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::int64_t s = 0; s < nw && ok; ++s) {
            if (r_inv(p, r_map(p, at(s))) != at(s) || r_map(p, r_inv(p, at(s))) != at(s)) {
                ok = false;
                w = "at " + tlabel(s);
            }
        }
        r.add("r_round_trip_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (size_t ii = 0; ii < window_a.size() && ok; ++ii)
            for (size_t jj = 0; jj < window_b.size() && ok; ++jj)
                for (std::int64_t s = 0; s < nw && ok; ++s) {
                    const Element a = A->basis_element(window_a[ii]);
                    const Element b = B->basis_element(window_b[jj]);
                    if (j_a_mul(p, a, j_b_mul(p, b, at(s))) !=
                        heis_mul(p, tensor(a, b), at(s))) {
                        ok = false;
                        w = "at " + A->label_of(window_a[ii]) + "(x)" +
                            B->label_of(window_b[jj]) + " on " + tlabel(s);
                    }
                }
        r.add("embedding_factorization_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int n = 0; n < 200 && ok; ++n) {
            const std::int64_t ia = window_a[rng() % window_a.size()];
            const std::int64_t ka = window_a[rng() % window_a.size()];
            const std::int64_t jb = window_b[rng() % window_b.size()];
            const std::int64_t lb = window_b[rng() % window_b.size()];
            const std::int64_t s = pick();
            const Element ai = A->basis_element(ia), ak = A->basis_element(ka);
            const Element bj = B->basis_element(jb), bl = B->basis_element(lb);
            if (j_a_mul(p, ai * ak, at(s)) != j_a_mul(p, ai, j_a_mul(p, ak, at(s))))
                w = "left A at " + A->label_of(ia) + "," + A->label_of(ka);
            else if (j_b_mul(p, bj * bl, at(s)) != j_b_mul(p, bj, j_b_mul(p, bl, at(s))))
                w = "left B at " + B->label_of(jb) + "," + B->label_of(lb);
            else if (mul_j_a(p, at(s), ai * ak) != mul_j_a(p, mul_j_a(p, at(s), ai), ak))
                w = "right A at " + A->label_of(ia) + "," + A->label_of(ka);
            else if (mul_j_b(p, at(s), bj * bl) != mul_j_b(p, mul_j_b(p, at(s), bj), bl))
                w = "right B at " + B->label_of(jb) + "," + B->label_of(lb);
            else
                continue;
            ok = false;
            w += " on " + tlabel(s);
        }
        r.add("embedding_homomorphism_window", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (int n = 0; n < 200 && ok; ++n) {
            const std::int64_t ia = window_a[rng() % window_a.size()];
            const std::int64_t jb = window_b[rng() % window_b.size()];
            const std::int64_t s = pick(), t = pick();
            const Element a = A->basis_element(ia);
            const Element b = B->basis_element(jb);
            const TensorElement st = heis_mul(p, at(s), at(t));
            if (j_a_mul(p, a, st) != heis_mul(p, j_a_mul(p, a, at(s)), at(t)))
                w = "j_A pull-out at " + A->label_of(ia);
            else if (heis_mul(p, mul_j_a(p, at(s), a), at(t)) !=
                     heis_mul(p, at(s), j_a_mul(p, a, at(t))))
                w = "j_A middle at " + A->label_of(ia);
            else if (mul_j_b(p, st, b) != heis_mul(p, at(s), mul_j_b(p, at(t), b)))
                w = "j_B pull-out at " + B->label_of(jb);
            else if (heis_mul(p, mul_j_b(p, at(s), b), at(t)) !=
                     heis_mul(p, at(s), j_b_mul(p, b, at(t))))
                w = "j_B middle at " + B->label_of(jb);
            else
                continue;
            ok = false;
            w += " on " + tlabel(s) + ", " + tlabel(t);
        }
        r.add("embedding_multiplier_compat_window", ok, w);
    }

    {
        // element form of the commutation rule: b |> (a x) expands along the
        // B-side coproduct
        bool ok = true;
        std::string w;
        for (size_t jj = 0; jj < window_b.size() && ok; ++jj) {
            const Element b = B->basis_element(window_b[jj]);
            const TensorElement db = p.b_side->coproduct(b);
            for (size_t ii = 0; ii < window_a.size() && ok; ++ii)
                for (size_t xx = 0; xx < window_a.size() && ok; ++xx) {
                    const Element a = A->basis_element(window_a[ii]);
                    const Element ex = A->basis_element(window_a[xx]);
                    Element rhs = A->zero();
                    for (const auto& [key, c] : db.terms())
                        rhs += (p.act_left_b(B->basis_element(key[0]), a) *
                                p.act_left_b(B->basis_element(key[1]), ex))
                                   .scaled(c);
                    if (p.act_left_b(b, a * ex) != rhs) {
                        ok = false;
                        w = "at " + B->label_of(window_b[jj]) + " on " +
                            A->label_of(window_a[ii]) + ", " + A->label_of(window_a[xx]);
                    }
                }
        }
        r.add("commutation_rule_window", ok, w);
    }

    {
        // local units: a left unit for the A legs is a left unit for the
        // twisted product, and the B unit is two-sided on its leg
        bool ok = true;
        std::string w;
        for (std::int64_t s = 0; s < nw && ok; ++s) {
            std::vector<Element> legs;
            const TensorElement& t = at(s);
            for (const auto& [key, c] : t.terms()) {
                (void)c;
                legs.push_back(A->basis_element(key[0]));
            }
            const Element e = local_unit(A, legs);
            if (j_a_mul(p, e, t) != t) {
                ok = false;
                w = "A-side local unit at " + tlabel(s);
            } else if (B->unital &&
                       (j_b_mul(p, *B->unit, t) != t || mul_j_b(p, t, *B->unit) != t)) {
                ok = false;
                w = "B-side unit at " + tlabel(s);
            }
        }
        r.add("local_unit_neutral", ok, w);
    }

    r.sort_items();
    return r;
}

} // namespace aqg
