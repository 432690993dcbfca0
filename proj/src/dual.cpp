#include "aqg/dual.hpp"

#include "aqg/linalg.hpp"

#include <tuple>

namespace aqg {

DualResult build_dual(const HopfPtr& h) { return build_dual(h, derive_modular_data(h)); }

DualResult build_dual(const HopfPtr& h, const ModularData& md) {
    const AlgebraPtr& a = h->alg;
    if (!a->finite_dim)
        throw precondition_error("dual construction needs a finite-dimensional input");
    if (!a->unital) throw precondition_error("dual construction needs a unital input");
    if (!h->has_closed_coproduct())
        throw precondition_error("dual construction needs a closed coproduct");
    const std::int64_t n = a->dim;
    const ScalarField f = a->field;

    // product of the dual from the primal coproduct: the (i, j) coefficient
    // of Delta(e_k) is the e^k coefficient of e^i e^j
    std::vector<std::vector<Vec>> prod_coords(
        static_cast<size_t>(n),
        std::vector<Vec>(static_cast<size_t>(n), Vec(static_cast<size_t>(n), Scalar::zero(f))));
    for (std::int64_t k = 0; k < n; ++k) {
        TensorElement cp = h->coproduct(a->basis_element(k));
        for (const auto& [key, c] : cp.terms())
            prod_coords[static_cast<size_t>(key[0])][static_cast<size_t>(key[1])]
                       [static_cast<size_t>(k)] = c;
    }
    // coproduct of the dual from the primal product: the e_k coefficient of
    // e_i e_j is the (i, j) coefficient of Delta(e^k)
    std::vector<std::vector<std::tuple<std::int64_t, std::int64_t, Scalar>>> cop_terms(
        static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            Element pr = a->basis_element(i) * a->basis_element(j);
            for (const auto& [k, c] : pr.terms())
                cop_terms[static_cast<size_t>(k)].emplace_back(i, j, c);
        }

    auto balg = std::make_shared<Algebra>();
    balg->name = "dual(" + a->name + ")";
    balg->field = f;
    balg->finite_dim = true;
    balg->dim = n;
    balg->unital = true;
    std::weak_ptr<const Algebra> wb = balg;
    balg->mult_basis = [wb, prod_coords](std::int64_t i, std::int64_t j) {
        auto b = wb.lock();
        b->check_basis_id(i);
        b->check_basis_id(j);
        return b->from_coords(prod_coords[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    };
    AlgebraPtr primal_alg = a;
    balg->label = [primal_alg](std::int64_t i) { return primal_alg->label_of(i) + "^"; };
    {
        // the unit of the dual is the primal counit
        Vec uc;
        for (std::int64_t i = 0; i < n; ++i) uc.push_back(h->counit(a->basis_element(i)));
        balg->unit = balg->from_coords(uc);
    }

    auto bh = std::make_shared<HopfAlgebra>();
    bh->alg = balg;
    // the counit of the dual evaluates at the primal unit
    Vec one_coords = a->coords(*a->unit);
    bh->counit_basis = [one_coords](std::int64_t k) {
        return one_coords.at(static_cast<size_t>(k));
    };
    Mat sa = basis_map_matrix(a, [h](std::int64_t i) {
        return h->antipode(h->alg->basis_element(i));
    });
    Mat sa_inv = basis_map_matrix(a, [h](std::int64_t i) {
        return h->antipode_inv(h->alg->basis_element(i));
    });
    // transposed matrices; row j of the primal matrix is the coordinate
    // vector of the dual image of e^j
    bh->antipode_basis = [wb, sa](std::int64_t j) {
        return wb.lock()->from_coords(sa[static_cast<size_t>(j)]);
    };
    bh->antipode_inv_basis = [wb, sa_inv](std::int64_t j) {
        return wb.lock()->from_coords(sa_inv[static_cast<size_t>(j)]);
    };
    install_closed_coproduct(*bh, [wb, cop_terms](std::int64_t k) {
        auto b = wb.lock();
        b->check_basis_id(k);
        TensorElement t({b, b});
        for (const auto& [i, j, c] : cop_terms[static_cast<size_t>(k)]) t.add_term({i, j}, c);
        return t;
    });

    DualResult d;
    d.primal = h;
    d.dual = bh;
    d.pairing = dual_basis_pairing(h, bh);
    d.primal_data = md;

    d.gram_phi = mat_zero(static_cast<size_t>(n), static_cast<size_t>(n), f);
    d.gram_psi = mat_zero(static_cast<size_t>(n), static_cast<size_t>(n), f);
    d.gram_fourier = mat_zero(static_cast<size_t>(n), static_cast<size_t>(n), f);
    for (std::int64_t i = 0; i < n; ++i) {
        Element ei = a->basis_element(i);
        Element si = h->antipode(ei);
        for (std::int64_t j = 0; j < n; ++j) {
            Element ej = a->basis_element(j);
            d.gram_phi[static_cast<size_t>(i)][static_cast<size_t>(j)] = md.phi(ei * ej);
            d.gram_psi[static_cast<size_t>(i)][static_cast<size_t>(j)] = md.psi(ei * ej);
            d.gram_fourier[static_cast<size_t>(i)][static_cast<size_t>(j)] = md.psi(si * ej);
        }
    }
    auto gpi = mat_inverse(d.gram_phi, f);
    auto gsi = mat_inverse(d.gram_psi, f);
    auto gfi = mat_inverse(d.gram_fourier, f);
    if (!gpi || !gsi || !gfi)
        throw error("dual: the integral is not faithful, representation matrices are singular");
    d.gram_phi_inv = *gpi;
    d.gram_psi_inv = *gsi;
    d.gram_fourier_inv = *gfi;

    Vec eps;
    for (std::int64_t i = 0; i < n; ++i) eps.push_back(h->counit(a->basis_element(i)));
    auto psi_hat = solve_linear(mat_transpose(d.gram_phi), eps, f);
    auto phi_hat = solve_linear(mat_transpose(d.gram_fourier), eps, f);
    if (!psi_hat || !phi_hat) throw error("dual: canonical integrals do not exist");
    d.phi_hat = functional_from_coords(balg, *phi_hat);
    d.psi_hat = functional_from_coords(balg, *psi_hat);
    return d;
}

Element rep_phi_right(const DualResult& d, const Element& b) {
    return d.primal->alg->from_coords(mat_vec(d.gram_phi_inv, d.dual->alg->coords(b)));
}

Element rep_phi_left(const DualResult& d, const Element& b) {
    return d.primal->alg->from_coords(
        mat_vec(mat_transpose(d.gram_phi_inv), d.dual->alg->coords(b)));
}

Element rep_psi_right(const DualResult& d, const Element& b) {
    return d.primal->alg->from_coords(mat_vec(d.gram_psi_inv, d.dual->alg->coords(b)));
}

Element dual_element_phi_right(const DualResult& d, const Element& c) {
    return d.dual->alg->from_coords(mat_vec(d.gram_phi, d.primal->alg->coords(c)));
}

Element dual_element_phi_left(const DualResult& d, const Element& c) {
    return d.dual->alg->from_coords(
        mat_vec(mat_transpose(d.gram_phi), d.primal->alg->coords(c)));
}

Element dual_element_psi_right(const DualResult& d, const Element& c) {
    return d.dual->alg->from_coords(mat_vec(d.gram_psi, d.primal->alg->coords(c)));
}

Functional functional_of_dual_element(const DualResult& d, const Element& b) {
    return functional_from_coords(d.primal->alg, d.dual->alg->coords(b));
}

Element dual_element_of_functional(const DualResult& d, const Functional& f) {
    return d.dual->alg->from_coords(f.coords());
}

Report dual_suite(const HopfPtr& h) {
    if (!h->alg->finite_dim)
        throw precondition_error("dual suite needs a finite-dimensional input");
    ModularData md = derive_modular_data(h);
    DualResult d = build_dual(h, md);
    const AlgebraPtr& A = h->alg;
    const AlgebraPtr& B = d.dual->alg;
    const std::int64_t n = A->dim;

    Report r;
    r.suite = "dual";
    r.algebra = A->name;

    r.merge(check_hopf_axioms(d.dual), "dual_axioms");
    r.merge(integral_suite(d.dual), "dual_integrals");
    ModularData dd = derive_modular_data(d.dual, d.phi_hat);
    r.merge(identity_suite_one(d.dual, dd), "dual_identities");
    r.merge(check_pairing(d.pairing), "pairing");

    // the canonical integral spans the same line the solver finds
    {
        IntegralSolution sol = solve_left_integral(d.dual);
        Vec cs = sol.phi.coords();
        Vec cc = d.phi_hat.coords();
        bool nonzero = false;
        for (const Scalar& s : cc)
            if (!s.is_zero()) nonzero = true;
        Mat m;
        m.push_back(cs);
        m.push_back(cc);
        bool ok = sol.solution_dim == 1 && nonzero && mat_rank(m) == 1;
        r.add("canonical_integral_matches_solver", ok,
              ok ? "" : "canonical " + functional_str(B, d.phi_hat) + " vs solver " +
                            functional_str(B, sol.phi));
    }

    // defining values of the canonical integrals on represented functionals
    {
        bool ok = true;
        std::string w;
        for (std::int64_t k = 0; k < n && ok; ++k) {
            Element ek = A->basis_element(k);
            Scalar lhs = d.psi_hat(dual_element_phi_right(d, ek));
            Scalar rhs = h->counit(ek);
            if (lhs != rhs) {
                ok = false;
                w = "c=" + ek.str() + " got " + lhs.str() + " want " + rhs.str();
            }
        }
        r.add("canonical_right_integral_defining", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t k = 0; k < n && ok; ++k) {
            Element ek = A->basis_element(k);
            // psi(S(.) e_k) has coordinates in column k of the fourier gram
            Vec col;
            for (std::int64_t j = 0; j < n; ++j)
                col.push_back(d.gram_fourier[static_cast<size_t>(j)][static_cast<size_t>(k)]);
            Scalar lhs = d.phi_hat(B->from_coords(col));
            Scalar rhs = h->counit(ek);
            if (lhs != rhs) {
                ok = false;
                w = "c=" + ek.str() + " got " + lhs.str() + " want " + rhs.str();
            }
        }
        r.add("canonical_left_integral_defining", ok, w);
    }

    // direct invariance of the canonical integrals through both slices
    {
        bool ok = true;
        std::string w;
        for (std::int64_t y = 0; y < n && ok; ++y) {
            Element ey = B->basis_element(y);
            for (std::int64_t k = 0; k < n && ok; ++k) {
                Element ek = B->basis_element(k);
                Element want = ey.scaled(d.phi_hat(ek));
                TensorElement dl = d.dual->delta_left(ey, ek);
                TensorElement dr1 = d.dual->delta_right_leg1(ek, ey);
                Element got1 = contract_to_element(dl, 1, d.phi_hat.eval_basis);
                Element got2 = contract_to_element(dr1, 1, d.phi_hat.eval_basis);
                if (got1 != want || got2 != want) {
                    ok = false;
                    w = "y=" + ey.str() + " b=" + ek.str();
                }
            }
        }
        r.add("canonical_left_integral_invariant", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t y = 0; y < n && ok; ++y) {
            Element ey = B->basis_element(y);
            for (std::int64_t k = 0; k < n && ok; ++k) {
                Element ek = B->basis_element(k);
                Element want = ey.scaled(d.psi_hat(ek));
                TensorElement dr = d.dual->delta_right(ek, ey);
                TensorElement dl2 = d.dual->delta_left_leg2(ey, ek);
                Element got1 = contract_to_element(dr, 0, d.psi_hat.eval_basis);
                Element got2 = contract_to_element(dl2, 0, d.psi_hat.eval_basis);
                if (got1 != want || got2 != want) {
                    ok = false;
                    w = "y=" + ey.str() + " b=" + ek.str();
                }
            }
        }
        r.add("canonical_right_integral_invariant", ok, w);
    }

    // the canonical right integral is the canonical left one composed with
    // the antipode
    {
        bool ok = true;
        std::string w;
        for (std::int64_t k = 0; k < n && ok; ++k) {
            Element ek = B->basis_element(k);
            Scalar lhs = d.psi_hat(ek);
            Scalar rhs = d.phi_hat(d.dual->antipode(ek));
            if (lhs != rhs) {
                ok = false;
                w = "b=" + ek.str() + " psi_hat=" + lhs.str() + " phi_hat(S(b))=" + rhs.str();
            }
        }
        r.add("dual_integrals_antipode_related", ok, w);
    }

    // the dual modular element pairs to the counit twisted by the inverse
    // modular automorphisms
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ea = A->basis_element(i);
            Scalar lhs = d.pairing.eval(ea, dd.delta);
            Scalar r1 = h->counit(apply_matrix(md.sigma_inv, ea));
            Scalar r2 = h->counit(apply_matrix(md.sigma_prime_inv, ea));
            if (lhs != r1 || lhs != r2) {
                ok = false;
                w = "a=" + ea.str() + " <a,delta^>=" + lhs.str() + " eps(sigma_inv(a))=" +
                    r1.str() + " eps(sigma_prime_inv(a))=" + r2.str();
            }
        }
        r.add("cross_modular_element", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ea = A->basis_element(i);
            Scalar lhs = d.pairing.eval(ea, dd.delta_inv);
            Scalar r1 = h->counit(apply_matrix(md.sigma, ea));
            Scalar r2 = h->counit(apply_matrix(md.sigma_prime, ea));
            if (lhs != r1 || lhs != r2) {
                ok = false;
                w = "a=" + ea.str();
            }
        }
        r.add("cross_modular_element_inverse", ok, w);
    }

    // the dual modular automorphisms against the primal data
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ea = A->basis_element(i);
            Element s2d = h->antipode(h->antipode(ea)) * md.delta_inv;
            for (std::int64_t j = 0; j < n && ok; ++j) {
                Element eb = B->basis_element(j);
                Scalar lhs = d.pairing.eval(ea, apply_matrix(dd.sigma, eb));
                Scalar rhs = d.pairing.eval(s2d, eb);
                if (lhs != rhs) {
                    ok = false;
                    w = "a=" + ea.str() + " b=" + eb.str();
                }
            }
        }
        r.add("cross_sigma", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ea = A->basis_element(i);
            Element ds2 = md.delta_inv * h->antipode_inv(h->antipode_inv(ea));
            for (std::int64_t j = 0; j < n && ok; ++j) {
                Element eb = B->basis_element(j);
                Scalar lhs = d.pairing.eval(ea, apply_matrix(dd.sigma_prime, eb));
                Scalar rhs = d.pairing.eval(ds2, eb);
                if (lhs != rhs) {
                    ok = false;
                    w = "a=" + ea.str() + " b=" + eb.str();
                }
            }
        }
        r.add("cross_sigma_prime", ok, w);
    }

    // product values of the canonical right integral in two ways
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ci = A->basis_element(i);
            Element bi = dual_element_phi_right(d, ci);
            for (std::int64_t j = 0; j < n && ok; ++j) {
                Element cj = A->basis_element(j);
                Element bj = dual_element_phi_right(d, cj);
                Scalar lhs = d.psi_hat(bi * bj);
                Scalar rhs = md.phi(h->antipode_inv(cj) * ci);
                if (lhs != rhs) {
                    ok = false;
                    w = "c=" + ci.str() + " c'=" + cj.str() + " product path " + lhs.str() +
                        " direct path " + rhs.str();
                }
            }
        }
        r.add("product_formula_two_paths", ok, w);
    }

    // S^4 as conjugation by the modular elements of both sides
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ea = A->basis_element(i);
            Element s4 = h->antipode(h->antipode(h->antipode(h->antipode(ea))));
            Element inner = d.pairing.act_left_b(dd.delta, d.pairing.act_right_b(dd.delta_inv, ea));
            Element rhs = (md.delta_inv * inner) * md.delta;
            if (s4 != rhs) {
                ok = false;
                w = "a=" + ea.str() + " S^4=" + s4.str() + " conjugated=" + rhs.str();
            }
        }
        r.add("fourth_power_antipode_conjugation", ok, w);
    }

    // the dual of the dual has the primal structure constants on the nose
    {
        DualResult d2 = build_dual(d.dual, dd);
        const AlgebraPtr& C = d2.dual->alg;
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            for (std::int64_t j = 0; j < n && ok; ++j) {
                Vec pa = A->coords(A->basis_element(i) * A->basis_element(j));
                Vec pc = C->coords(C->basis_element(i) * C->basis_element(j));
                if (pa != pc) {
                    ok = false;
                    w = "product mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
            if (!ok) break;
            Element ei = A->basis_element(i);
            Element fi = C->basis_element(i);
            TensorElement ca = h->coproduct(ei);
            TensorElement cc = d2.dual->coproduct(fi);
            if (ca.terms() != cc.terms()) {
                ok = false;
                w = "coproduct mismatch at " + std::to_string(i);
            }
            if (h->counit(ei) != d2.dual->counit(fi)) {
                ok = false;
                w = "counit mismatch at " + std::to_string(i);
            }
            if (A->coords(h->antipode(ei)) != C->coords(d2.dual->antipode(fi))) {
                ok = false;
                w = "antipode mismatch at " + std::to_string(i);
            }
        }
        if (ok && A->coords(*A->unit) != C->coords(*C->unit)) {
            ok = false;
            w = "unit mismatch";
        }
        r.add("biduality_structure", ok, w);
    }

    r.add("dual_scaling_constant_matches", dd.tau == md.tau,
          dd.tau == md.tau ? "" : "dual " + dd.tau.str() + " primal " + md.tau.str());

    // closed forms of the four actions on represented functionals
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ea = A->basis_element(i);
            for (std::int64_t k = 0; k < n && ok; ++k) {
                Element ec = A->basis_element(k);
                Element b = dual_element_phi_right(d, ec);
                Element lhs = d.pairing.act_left_a(ea, b);
                Element rhs = dual_element_phi_right(d, ea * ec);
                if (lhs != rhs) {
                    ok = false;
                    w = "a=" + ea.str() + " c=" + ec.str();
                }
            }
        }
        r.add("action_formula_left_on_dual", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t i = 0; i < n && ok; ++i) {
            Element ea = A->basis_element(i);
            Element sig = apply_matrix(md.sigma, ea);
            for (std::int64_t k = 0; k < n && ok; ++k) {
                Element ec = A->basis_element(k);
                Element b = dual_element_phi_right(d, ec);
                Element lhs = d.pairing.act_right_a(ea, b);
                Element rhs = dual_element_phi_right(d, ec * sig);
                if (lhs != rhs) {
                    ok = false;
                    w = "a=" + ea.str() + " c=" + ec.str();
                }
            }
        }
        r.add("action_formula_right_on_dual", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t k = 0; k < n && ok; ++k) {
            Element ec = A->basis_element(k);
            Element b = dual_element_phi_left(d, ec);
            for (std::int64_t i = 0; i < n && ok; ++i) {
                Element ea = A->basis_element(i);
                Element lhs = d.pairing.act_left_b(b, ea);
                TensorElement dr = h->delta_right(ec, ea);
                Element rhs = h->antipode(contract_to_element(dr, 1, md.phi.eval_basis));
                if (lhs != rhs) {
                    ok = false;
                    w = "c=" + ec.str() + " a=" + ea.str();
                }
            }
        }
        r.add("action_formula_left_on_primal", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::int64_t k = 0; k < n && ok; ++k) {
            Element ec = A->basis_element(k);
            Element b = dual_element_psi_right(d, ec);
            for (std::int64_t i = 0; i < n && ok; ++i) {
                Element ea = A->basis_element(i);
                Element lhs = d.pairing.act_right_b(b, ea);
                TensorElement dl = h->delta_left(ea, ec);
                Element rhs = h->antipode(contract_to_element(dl, 0, md.psi.eval_basis));
                if (lhs != rhs) {
                    ok = false;
                    w = "c=" + ec.str() + " a=" + ea.str();
                }
            }
        }
        r.add("action_formula_right_on_primal", ok, w);
    }

    r.derived["dual_left_integral"] = functional_str(B, d.phi_hat);
    r.derived["dual_right_integral"] = functional_str(B, d.psi_hat);
    r.derived["dual_modular_element"] = dd.delta.str();
    r.derived["dual_scaling_constant"] = dd.tau.str();

    r.sort_items();
    return r;
}

} // namespace aqg
