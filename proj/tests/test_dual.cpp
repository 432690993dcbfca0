#include "doctest.h"

#include "aqg/dual.hpp"
#include "aqg/examples.hpp"

#include <map>

using namespace aqg;

namespace {

const CheckItem* find_item(const Report& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return &it;
    return nullptr;
}

Mat mat_from_rows(const ScalarField& F, const std::vector<std::vector<long>>& rows) {
    Mat m;
    for (const auto& row : rows) {
        Vec v;
        for (long e : row) v.push_back(Scalar::integer(e, F));
        m.push_back(v);
    }
    return m;
}

// compare every structure constant of two finite-dimensional structures that
// share a basis index set
void check_same_structure(const HopfPtr& lhs, const HopfPtr& rhs) {
    const AlgebraPtr& L = lhs->alg;
    const AlgebraPtr& R = rhs->alg;
    REQUIRE(L->dim == R->dim);
    for (std::int64_t i = 0; i < L->dim; ++i) {
        for (std::int64_t j = 0; j < L->dim; ++j) {
            CHECK(L->coords(L->basis_element(i) * L->basis_element(j)) ==
                  R->coords(R->basis_element(i) * R->basis_element(j)));
        }
        TensorElement cl = lhs->coproduct(L->basis_element(i));
        TensorElement cr = rhs->coproduct(R->basis_element(i));
        CHECK(cl.terms() == cr.terms());
        CHECK(lhs->counit(L->basis_element(i)) == rhs->counit(R->basis_element(i)));
        CHECK(L->coords(lhs->antipode(L->basis_element(i))) ==
              R->coords(rhs->antipode(R->basis_element(i))));
    }
    CHECK(L->coords(*L->unit) == R->coords(*R->unit));
}

} // namespace

TEST_SUITE("dual") {

TEST_CASE("four dimensional dual: structure constants against the hand table") {
    auto h = make_sweedler();
    DualResult d = build_dual(h);
    const AlgebraPtr& B = d.dual->alg;
    REQUIRE(B->dim == 4);
    ScalarField F = B->field;
    Scalar one = Scalar::one(F);

    // basis order of the primal side is 1, x, g, gx; e^i pairs to slot i.
    // all nonzero products of dual basis vectors, worked out by hand from
    // the primal coproducts
    std::map<std::pair<int, int>, int> nonzero = {{{0, 0}, 0}, {{0, 3}, 3}, {{1, 0}, 1},
                                                  {{2, 1}, 1}, {{2, 2}, 2}, {{3, 2}, 3}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Element pr = B->basis_element(i) * B->basis_element(j);
            auto it = nonzero.find({i, j});
            if (it != nonzero.end())
                CHECK(pr == B->basis_element(it->second));
            else
                CHECK(pr.is_zero());
        }

    CHECK(*B->unit == B->element({{0, one}, {2, one}}));

    CHECK(d.dual->counit(B->basis_element(0)) == one);
    for (int k = 1; k < 4; ++k) CHECK(d.dual->counit(B->basis_element(k)).is_zero());

    // coproducts from the primal product table
    TensorElement c0({B, B}), c1({B, B}), c2({B, B}), c3({B, B});
    c0.add_term({0, 0}, one);
    c0.add_term({2, 2}, one);
    c1.add_term({0, 1}, one);
    c1.add_term({1, 0}, one);
    c1.add_term({2, 3}, one);
    c1.add_term({3, 2}, -one);
    c2.add_term({0, 2}, one);
    c2.add_term({2, 0}, one);
    c3.add_term({0, 3}, one);
    c3.add_term({3, 0}, one);
    c3.add_term({2, 1}, one);
    c3.add_term({1, 2}, -one);
    CHECK(d.dual->coproduct(B->basis_element(0)) == c0);
    CHECK(d.dual->coproduct(B->basis_element(1)) == c1);
    CHECK(d.dual->coproduct(B->basis_element(2)) == c2);
    CHECK(d.dual->coproduct(B->basis_element(3)) == c3);

    CHECK(d.dual->antipode(B->basis_element(0)) == B->basis_element(0));
    CHECK(d.dual->antipode(B->basis_element(1)) == B->basis_element(3));
    CHECK(d.dual->antipode(B->basis_element(2)) == B->basis_element(2));
    CHECK(d.dual->antipode(B->basis_element(3)) == -B->basis_element(1));
    CHECK(d.dual->antipode_inv(B->basis_element(1)) == -B->basis_element(3));
    CHECK(d.dual->antipode_inv(B->basis_element(3)) == B->basis_element(1));
}

TEST_CASE("four dimensional dual: canonical integrals and modular data by hand") {
    auto h = make_sweedler();
    DualResult d = build_dual(h);
    const AlgebraPtr& A = h->alg;
    const AlgebraPtr& B = d.dual->alg;
    ScalarField F = B->field;
    Scalar one = Scalar::one(F);

    CHECK(d.phi_hat.coords() == Vec{Scalar::integer(0), Scalar::integer(-1), Scalar::integer(0),
                                    Scalar::integer(-1)});
    CHECK(d.psi_hat.coords() == Vec{Scalar::integer(0), Scalar::integer(-1), Scalar::integer(0),
                                    Scalar::integer(1)});

    ModularData dd = derive_modular_data(d.dual, d.phi_hat);
    CHECK(dd.delta == B->element({{0, one}, {2, -one}}));
    CHECK(dd.delta_inv == dd.delta);
    CHECK(dd.tau == Scalar::integer(-1));
    // the dual modular automorphism swaps e^0 with e^2 and e^1 with e^3
    CHECK(apply_matrix(dd.sigma, B->basis_element(0)) == B->basis_element(2));
    CHECK(apply_matrix(dd.sigma, B->basis_element(1)) == B->basis_element(3));
    CHECK(apply_matrix(dd.sigma, B->basis_element(2)) == B->basis_element(0));
    CHECK(apply_matrix(dd.sigma, B->basis_element(3)) == B->basis_element(1));

    // phi(. g) is -e^1 and the canonical right integral returns counit(g)
    Element g = A->basis_element(2);
    Element repr = dual_element_phi_right(d, g);
    CHECK(repr == -B->basis_element(1));
    CHECK(d.psi_hat(repr) == one);
}

TEST_CASE("four dimensional example is self dual") {
    auto h = make_sweedler();
    DualResult d = build_dual(h);
    const AlgebraPtr& A = h->alg;
    const AlgebraPtr& B = d.dual->alg;
    ScalarField F = A->field;

    // hand-built isomorphism onto the dual: 1 and g go to even combinations
    // of e^0, e^2, the skew-primitives to combinations of e^1, e^3
    Mat th = mat_from_rows(F, {{1, 0, 1, 0}, {0, 1, 0, -1}, {1, 0, -1, 0}, {0, -1, 0, -1}});
    auto theta = [&](const Element& e) {
        Element out = B->zero();
        for (const auto& [id, c] : e.terms())
            for (int r = 0; r < 4; ++r)
                out.add_term(r, c * th[static_cast<size_t>(r)][static_cast<size_t>(id)]);
        return out;
    };

    for (int i = 0; i < 4; ++i) {
        Element ei = A->basis_element(i);
        for (int j = 0; j < 4; ++j) {
            Element ej = A->basis_element(j);
            CHECK(theta(ei * ej) == theta(ei) * theta(ej));
        }
        TensorElement lhs = apply_leg(apply_leg(h->coproduct(ei), 0, theta), 1, theta);
        CHECK(lhs == d.dual->coproduct(theta(ei)));
        CHECK(h->counit(ei) == d.dual->counit(theta(ei)));
        CHECK(theta(h->antipode(ei)) == d.dual->antipode(theta(ei)));
    }
    CHECK(theta(*A->unit) == *B->unit);

    // the canonical integrals transport with a factor two
    ModularData md = derive_modular_data(h);
    Scalar two = Scalar::integer(2, F);
    for (int i = 0; i < 4; ++i) {
        Element ei = A->basis_element(i);
        CHECK(d.psi_hat(theta(ei)) == two * md.psi(ei));
        CHECK(d.phi_hat(theta(ei)) == two * md.phi(ei));
    }
    // and the modular element transports on the nose
    ModularData dd = derive_modular_data(d.dual, d.phi_hat);
    CHECK(theta(md.delta) == dd.delta);
}

TEST_CASE("duals of group and function structures swap into each other") {
    for (const char* grp : {"z2", "z3", "s3"}) {
        INFO(grp);
        HopfPtr g = builtin_hopf(std::string("group:") + grp);
        HopfPtr f = builtin_hopf(std::string("fn:") + grp);
        check_same_structure(build_dual(g).dual, f);
        check_same_structure(build_dual(f).dual, g);
    }
}

TEST_CASE("group dual total integral counts the group") {
    for (const auto& [name, order] :
         std::vector<std::pair<std::string, long>>{{"group:z2", 2}, {"group:s3", 6}}) {
        INFO(name);
        HopfPtr h = builtin_hopf(name);
        DualResult d = build_dual(h);
        const AlgebraPtr& B = d.dual->alg;
        for (std::int64_t k = 0; k < B->dim; ++k)
            CHECK(d.phi_hat.eval_basis(k) == Scalar::one(B->field));
        CHECK(d.phi_hat(*B->unit) == Scalar::integer(order, B->field));
    }
}

TEST_CASE("dual suite passes on every finite builtin") {
    for (const char* name :
         {"group:z2", "group:z3", "group:s3", "fn:z2", "fn:z3", "fn:s3", "h4", "taft:3"}) {
        HopfPtr h = builtin_hopf(name);
        Report r = dual_suite(h);
        INFO(name, "\n", r.text());
        CHECK(r.all_pass());
    }
}

TEST_CASE("dual suite contains the load-bearing named checks") {
    Report r = dual_suite(make_sweedler());
    for (const char* name :
         {"dual_scaling_constant_matches", "biduality_structure", "product_formula_two_paths",
          "fourth_power_antipode_conjugation", "cross_sigma", "cross_sigma_prime",
          "cross_modular_element", "cross_modular_element_inverse",
          "dual_integrals_antipode_related", "canonical_left_integral_invariant",
          "canonical_right_integral_invariant", "canonical_integral_matches_solver",
          "pairing.adjoint_sliced", "pairing.extension_left_well_defined"}) {
        const CheckItem* it = find_item(r, name);
        INFO(name);
        REQUIRE(it != nullptr);
        CHECK(it->pass);
    }
}

TEST_CASE("fourth antipode power is a double conjugation, exhaustively") {
    for (const char* name : {"h4", "taft:3"}) {
        INFO(name);
        HopfPtr h = builtin_hopf(name);
        ModularData md = derive_modular_data(h);
        DualResult d = build_dual(h, md);
        ModularData dd = derive_modular_data(d.dual, d.phi_hat);
        for (std::int64_t i = 0; i < h->alg->dim; ++i) {
            Element a = h->alg->basis_element(i);
            Element s4 = h->antipode(h->antipode(h->antipode(h->antipode(a))));
            Element inner = d.pairing.act_left_b(dd.delta, d.pairing.act_right_b(dd.delta_inv, a));
            CHECK(s4 == (md.delta_inv * inner) * md.delta);
        }
    }
}

TEST_CASE("taft dual modular element and scaling constant by hand") {
    // the modular automorphism scales group-likes by powers of the root, so
    // pairing the dual modular element against g^i gives zeta^(-i)
    auto h = make_taft(3);
    ScalarField F = h->alg->field;
    Scalar z = Scalar::root_of_unity(F);
    DualResult d = build_dual(h);
    ModularData dd = derive_modular_data(d.dual, d.phi_hat);
    const AlgebraPtr& B = d.dual->alg;
    // basis ids: g^i x^j at 3i + j, so 1, g, g^2 sit at 0, 3, 6
    Element expected = B->element({{0, Scalar::one(F)}, {3, z * z}, {6, z}});
    CHECK(dd.delta == expected);
    CHECK(dd.tau == z * z);
    CHECK(dd.tau == derive_modular_data(h).tau);
}

TEST_CASE("negative control: the wrong dual modular element breaks the cross check") {
    auto h = make_sweedler();
    DualResult d = build_dual(h);
    ModularData md = d.primal_data;
    const AlgebraPtr& A = h->alg;
    Element fake = *d.dual->alg->unit; // pretend the dual modular element is trivial
    bool mismatch = false;
    for (std::int64_t i = 0; i < A->dim; ++i) {
        Element a = A->basis_element(i);
        if (d.pairing.eval(a, fake) != h->counit(apply_matrix(md.sigma_inv, a))) mismatch = true;
    }
    CHECK(mismatch);
    // the witness: pairing g against the fake gives +1, the twisted counit -1
    Element g = A->basis_element(2);
    CHECK(d.pairing.eval(g, fake) == Scalar::one(A->field));
    CHECK(h->counit(apply_matrix(md.sigma_inv, g)) == Scalar::integer(-1, A->field));
}

TEST_CASE("modular element as a multiplier pairs consistently") {
    auto h = make_sweedler();
    DualResult d = build_dual(h);
    Multiplier m = multiplier_from_element(d.primal_data.delta);
    const AlgebraPtr& B = d.dual->alg;
    for (std::int64_t j = 0; j < B->dim; ++j) {
        Element b = B->basis_element(j);
        Scalar lhs = d.pairing.eval_multiplier_left(m, d.pairing.decompose_left(b));
        CHECK(lhs == d.pairing.eval(d.primal_data.delta, b));
    }
}

TEST_CASE("representation bridges round trip and interrelate") {
    auto h = make_taft(3);
    DualResult d = build_dual(h);
    ModularData md = d.primal_data;
    const AlgebraPtr& A = h->alg;
    for (std::int64_t k = 0; k < A->dim; ++k) {
        Element c = A->basis_element(k);
        CHECK(rep_phi_right(d, dual_element_phi_right(d, c)) == c);
        CHECK(rep_phi_left(d, dual_element_phi_left(d, c)) == c);
        CHECK(rep_psi_right(d, dual_element_psi_right(d, c)) == c);
        // phi(c .) = phi(. sigma(c)) and psi(. c) = phi(. c delta)
        CHECK(dual_element_phi_left(d, c) ==
              dual_element_phi_right(d, apply_matrix(md.sigma, c)));
        CHECK(dual_element_psi_right(d, c) == dual_element_phi_right(d, c * md.delta));
    }
}

TEST_CASE("integer pair pairing: windowed suite and closed forms") {
    InfinitePair ip = make_integer_pair();
    Pairing p = integer_pairing(ip);
    ScalarField F = ip.fun->field();
    Scalar one = Scalar::one(F);

    PairingCheckOptions opts;
    for (std::int64_t k = -5; k <= 5; ++k) {
        opts.window_a.push_back(k);
        opts.window_b.push_back(k);
    }
    Report r = check_pairing(p, opts);
    INFO(r.text());
    CHECK(r.all_pass());

    const AlgebraPtr& fun = ip.fun->alg;
    const AlgebraPtr& grp = ip.grp->alg;
    CHECK(p.eval(fun->basis_element(5), grp->basis_element(5)) == one);
    CHECK(p.eval(fun->basis_element(4), grp->basis_element(5)).is_zero());
    // translation action on point functions
    CHECK(p.act_left_b(grp->basis_element(3), fun->basis_element(1)) == fun->basis_element(-2));
    CHECK(p.act_right_b(grp->basis_element(3), fun->basis_element(1)) == fun->basis_element(-2));
    // evaluation action on group-likes
    CHECK(p.act_left_a(fun->basis_element(4), grp->basis_element(4)) == grp->basis_element(4));
    CHECK(p.act_left_a(fun->basis_element(3), grp->basis_element(4)).is_zero());

    // extension against the hand decomposition u^7 = d_7 |> u^7
    std::vector<std::pair<Element, Element>> dec = {
        {fun->basis_element(7), grp->basis_element(7)}};
    CHECK(p.eval_multiplier_left(multiplier_identity(fun), dec) == one);
    CHECK(p.eval_multiplier_left(multiplier_from_element(fun->basis_element(7)), dec) == one);
    CHECK(p.eval_multiplier_left(multiplier_from_element(fun->basis_element(6)), dec).is_zero());
}

TEST_CASE("dual construction preconditions") {
    InfinitePair ip = make_integer_pair();
    CHECK_THROWS_AS(build_dual(ip.fun), precondition_error);
    CHECK_THROWS_AS(build_dual(ip.grp), precondition_error);
    CHECK_THROWS_AS(dual_suite(ip.fun), precondition_error);
    Pairing p = integer_pairing(ip);
    CHECK_THROWS_AS(check_pairing(p), error); // infinite sides need windows
}

} // TEST_SUITE
