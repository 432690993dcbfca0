#include "doctest.h"

#include "aqg/duality_v.hpp"

#include <string>
#include <vector>

using namespace aqg;

namespace {

const CheckItem* find_item(const Report& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return &it;
    return nullptr;
}

} // namespace

TEST_SUITE("duality element") {

    TEST_CASE("the duality of a cyclic group pair is the sum of dual pairs") {
        const DualResult d = build_dual(builtin_hopf("group:z3"));
        const DualityV v = build_v(d);
        const Scalar one = Scalar::one(d.primal->alg->field);

        const TensorElement el = v_element(v);
        CHECK(el.terms().size() == 3);
        for (std::int64_t i = 0; i < 3; ++i) CHECK(el.coeff({i, i}) == one);

        // the inverse pairs each dual function with the inverse group element
        const TensorElement vi = v_inverse(v);
        CHECK(vi.terms().size() == 3);
        CHECK(vi.coeff({0, 0}) == one);
        CHECK(vi.coeff({1, 2}) == one);
        CHECK(vi.coeff({2, 1}) == one);
    }

    // e = id 0, g = id 1 on the group side; e^, g^ dual to them.  Both slice
    // forms are expanded by hand and compared against multiplying the closed
    // element directly.
    TEST_CASE("slices on the two-element group pair match the hand expansion") {
        const DualResult d = build_dual(builtin_hopf("group:z2"));
        const DualityV v = build_v(d);
        const AlgebraPtr& A = d.primal->alg;
        const AlgebraPtr& B = d.dual->alg;
        const Element e = A->basis_element(0), g = A->basis_element(1);
        const Element ef = B->basis_element(0), gf = B->basis_element(1);

        // V(e^ (x) g): e^ = phi(e .), Delta(e) = e (x) e, so the sum is
        // phi(e .) (x) S(e) g = e^ (x) g
        CHECK(v_mul_left(v, ef, g) == tensor(ef, g));

        // V(g^ (x) e): g^ = phi(g .), Delta(g) = g (x) g gives g^ (x) g
        CHECK(v_mul_left(v, gf, e) == tensor(gf, g));

        // V(g^ (x) g): the second leg becomes S(g) g = e
        CHECK(v_mul_left(v, gf, g) == tensor(gf, e));

        // (g^ (x) e) V = psi(. g) (x) S(g) = g^ (x) g
        CHECK(v_mul_right(v, gf, e) == tensor(gf, g));

        // (e^ (x) g) V = psi(. e) (x) g S(e) = e^ (x) g
        CHECK(v_mul_right(v, ef, g) == tensor(ef, g));

        // the same products through the element itself
        const TensorElement el = v_element(v);
        CHECK(el * tensor(ef, g) == tensor(ef, g));
        CHECK(el * tensor(gf, e) == tensor(gf, g));
        CHECK(tensor(gf, e) * el == tensor(gf, g));
    }

    TEST_CASE("canonical map on the two-element group by hand") {
        const HopfPtr h = builtin_hopf("group:z2");
        const AlgebraPtr& A = h->alg;
        const Element e = A->basis_element(0), g = A->basis_element(1);

        // T(g (x) g) = Delta(g)(1 (x) g) = g (x) e
        CHECK(t_map(h, tensor(g, g)) == tensor(g, e));
        CHECK(t_map(h, tensor(e, g)) == tensor(e, g));
        CHECK(t_inverse(h, tensor(g, e)) == tensor(g, g));
        CHECK(t_inverse(h, tensor(e, g)) == tensor(e, g));
    }

    TEST_CASE("duality suite passes on every finite builtin") {
        for (const std::string name :
             {"group:z2", "group:z3", "group:z6", "group:s3", "fn:z4", "fn:s3", "h4", "taft:3"}) {
            const Report r = duality_v_suite(builtin_hopf(name));
            INFO(name, "\n", r.text());
            CHECK(r.all_pass());
        }
    }

    TEST_CASE("load-bearing checks are present on the 4-dimensional algebra") {
        const Report r = duality_v_suite(builtin_hopf("h4"));
        for (const std::string name : {
                 "defining_evaluation",
                 "counit_first_leg",
                 "counit_second_leg",
                 "inverse_two_forms",
                 "inverse_product",
                 "coproduct_first_leg",
                 "coproduct_second_leg",
                 "slice_left_matches_element",
                 "slice_right_matches_element",
                 "slice_multiplier_compat",
                 "slice_left_evaluation",
                 "slice_right_evaluation",
                 "acts_as_canonical_map",
                 "canonical_map_round_trip",
                 "canonical_map_bijective",
                 "intertwines_coproduct_a",
                 "intertwines_coproduct_b",
                 "conjugation_gives_coproduct",
                 "pentagon_element",
                 "pentagon_operator",
             }) {
            INFO(name);
            const CheckItem* it = find_item(r, name);
            REQUIRE(it != nullptr);
            INFO(it->witness);
            CHECK(it->pass);
        }
        CHECK(r.derived.at("canonical_map_rank") == "16");
    }

    TEST_CASE("element pentagon holds in the realized picture") {
        for (const std::string name : {"group:z2", "group:s3", "h4"}) {
            const Report r = duality_v_suite(builtin_hopf(name));
            const CheckItem* it = find_item(r, "pentagon_element");
            INFO(name);
            REQUIRE(it != nullptr);
            CHECK(it->pass);
        }
    }

    TEST_CASE("integer pair: closed forms, windowed pentagon, no element form") {
        const InfinitePair ip = make_integer_pair();
        const AlgebraPtr& F = ip.fun->alg;
        const AlgebraPtr& G = ip.grp->alg;
        auto b = [&](std::int64_t k) { return F->basis_element(k); };
        auto u = [&](std::int64_t k) { return G->basis_element(k); };

        // T(d[2] (x) d[3]) = d[-1] (x) d[3] and back
        CHECK(t_map(ip.fun, tensor(b(2), b(3))) == tensor(b(-1), b(3)));
        CHECK(t_inverse(ip.fun, tensor(b(-1), b(3))) == tensor(b(2), b(3)));

        const DualityV v = build_v_integer(ip);
        CHECK(act_as_t(v, tensor(b(2), b(3))) == tensor(b(-1), b(3)));

        // V(1_B (x) d[3]): only Delta(d[0])'s leg at -3 survives S(.) d[3],
        // leaving phi(d[3] .) (x) d[3] = u^3 (x) d[3]
        CHECK(v_mul_left(v, u(0), b(3)) == tensor(u(3), b(3)));

        // (u^2 (x) d[5]) V = psi(. d[7]) (x) d[5] S(d[-5]) = u^7 (x) d[5]
        CHECK(v_mul_right(v, u(2), b(5)) == tensor(u(7), b(5)));

        CHECK_THROWS_AS(v_element(v), precondition_error);
        CHECK_THROWS_AS(pentagon_t_suite(ip.fun), precondition_error);

        std::vector<std::int64_t> window;
        for (std::int64_t k = -3; k <= 3; ++k) window.push_back(k);
        const Report r = pentagon_t_suite(ip.fun, window);
        INFO(r.text());
        CHECK(r.all_pass());
        REQUIRE(find_item(r, "pentagon_operator") != nullptr);
        REQUIRE(find_item(r, "canonical_map_round_trip") != nullptr);
    }

    TEST_CASE("pentagon suite runs on a finite algebra without a window") {
        const Report r = pentagon_t_suite(builtin_hopf("group:s3"));
        INFO(r.text());
        CHECK(r.all_pass());
    }
}
