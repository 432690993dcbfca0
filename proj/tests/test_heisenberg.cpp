#include "doctest.h"

#include "aqg/heisenberg.hpp"

#include <string>
#include <vector>

using namespace aqg;

namespace {

const CheckItem* find_item(const Report& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return &it;
    return nullptr;
}

TensorElement bt(const DualResult& d, std::int64_t i, std::int64_t j) {
    return tensor(d.primal->alg->basis_element(i), d.dual->alg->basis_element(j));
}

} // namespace

TEST_SUITE("heisenberg") {

    // Z2 pair, hand-expanded through Delta of the dual basis:
    // the twisted product, the twist R, and the four operators
    TEST_CASE("twisted product on the Z2 pair matches the hand table") {
        const DualResult d = build_dual(builtin_hopf("group:z2"));
        const Pairing& p = d.pairing;
        const AlgebraPtr& A = d.primal->alg; // e = id 0, g = id 1
        const AlgebraPtr& B = d.dual->alg;

        // (e (x) g^)(g (x) 1_B): Delta(g^) = e^ (x) g^ + g^ (x) e^, only the
        // g^-leg pairs with g, leaving g (x) e^
        TensorElement lhs = heis_mul(p, bt(d, 0, 1), tensor(A->basis_element(1), *B->unit));
        CHECK(lhs == bt(d, 1, 0));

        // (e (x) g^)(g (x) g^): the surviving term carries e^ g^ = 0
        CHECK(heis_mul(p, bt(d, 0, 1), bt(d, 1, 1)).is_zero());

        // (g (x) e^)(g (x) g^): the g^-leg pairs with g, g.g = e
        CHECK(heis_mul(p, bt(d, 1, 0), bt(d, 1, 1)) == bt(d, 0, 1));

        // twist by hand: only b_(1) = g^ moves g
        CHECK(r_map(p, bt(d, 1, 1)) == bt(d, 1, 0));
        CHECK(r_inv(p, bt(d, 1, 0)) == bt(d, 1, 1));

        // the four operators are the four matrix units
        const ScalarField f = A->field;
        const Scalar o = Scalar::one(f), z = Scalar::zero(f);
        CHECK(mat_eq(heis_op_matrix(p, bt(d, 0, 0)), Mat{{o, z}, {z, z}}));
        CHECK(mat_eq(heis_op_matrix(p, bt(d, 0, 1)), Mat{{z, z}, {z, o}}));
        CHECK(mat_eq(heis_op_matrix(p, bt(d, 1, 0)), Mat{{z, z}, {o, z}}));
        CHECK(mat_eq(heis_op_matrix(p, bt(d, 1, 1)), Mat{{z, o}, {z, z}}));
    }

    // basis order 1, x, g, gx; phi picks the gx coefficient
    TEST_CASE("rank-one forms on the 4-dimensional pair by hand") {
        const DualResult d = build_dual(builtin_hopf("h4"));
        const Pairing& p = d.pairing;
        const AlgebraPtr& A = d.primal->alg;
        const ScalarField f = A->field;
        const Scalar o = Scalar::one(f), z = Scalar::zero(f);

        // e^3 = phi(1 .), and Delta(1) = 1 (x) 1 leaves a (x) e^3 fixed
        for (std::int64_t i = 0; i < 4; ++i) CHECK(to_rank_one(d, bt(d, i, 3)) == bt(d, i, 3));

        // e^0 = phi(gx .): Delta(gx) = gx (x) g + 1 (x) gx and S(gx) = x give
        // 1 (x) e^0 -> x (x) e^1 + 1 (x) e^0
        CHECK(to_rank_one(d, bt(d, 0, 0)) == bt(d, 1, 1) + bt(d, 0, 0));

        // g (x) e^3 acts as x -> g . (gx-coefficient of x)
        CHECK(mat_eq(heis_op_matrix(p, bt(d, 2, 3)),
                     Mat{{z, z, z, z}, {z, z, z, z}, {z, z, z, o}, {z, z, z, z}}));

        // 1 (x) e^0 projects onto span(1, x), through both routes
        const Mat proj = Mat{{o, z, z, z}, {z, o, z, z}, {z, z, z, z}, {z, z, z, z}};
        CHECK(mat_eq(heis_op_matrix(p, bt(d, 0, 0)), proj));
        CHECK(mat_eq(rank_one_matrix(p, to_rank_one(d, bt(d, 0, 0))), proj));

        // diamond product pairs the inner legs
        CHECK(diamond_mul(p, bt(d, 2, 0), bt(d, 1, 1)).is_zero());
        CHECK(diamond_mul(p, bt(d, 2, 1), bt(d, 1, 3)) == bt(d, 2, 3));
    }

    TEST_CASE("suite passes on every finite builtin") {
        for (const char* name : {"group:z2", "group:z3", "group:s3", "fn:z2", "fn:z3", "fn:s3",
                                 "h4", "taft:3"}) {
            const Report r = heisenberg_suite(builtin_hopf(name));
            INFO(r.text());
            CHECK(r.all_pass());
        }
    }

    TEST_CASE("load-bearing checks are present and pass") {
        const Report r = heisenberg_suite(builtin_hopf("h4"));
        for (const char* name :
             {"product_associative_exhaustive", "product_associative_sampled",
              "product_two_routes", "action_module_law_exhaustive", "action_module_law_sampled",
              "action_faithful", "operator_span_dimension", "action_unit_identity",
              "unit_two_sided", "unit_factorization", "embedding_factorization",
              "embedding_homomorphism", "embedding_multiplier_compat", "commutation_rule",
              "r_round_trip", "r_matches_commutation", "rank_one_matches_operator",
              "rank_one_multiplicative", "rank_one_bijective", "diamond_composes",
              "rank_one_unit_identity"}) {
            const CheckItem* it = find_item(r, name);
            INFO(name);
            REQUIRE(it != nullptr);
            INFO(it->witness);
            CHECK(it->pass);
        }
        CHECK(r.derived.at("operator_algebra_dimension") == "16");
    }

    TEST_CASE("operator algebra has full matrix dimension") {
        CHECK(heisenberg_suite(builtin_hopf("group:z2")).derived.at("operator_algebra_dimension") ==
              "4");
        CHECK(heisenberg_suite(builtin_hopf("group:s3")).derived.at("operator_algebra_dimension") ==
              "36");
    }

    TEST_CASE("large algebras fall back to sampled triples") {
        const Report r = heisenberg_suite(builtin_hopf("taft:3"));
        CHECK(find_item(r, "product_associative_sampled") != nullptr);
        CHECK(find_item(r, "product_associative_exhaustive") == nullptr);
        INFO(r.text());
        CHECK(r.all_pass());
    }

    TEST_CASE("integer pair: windowed suite and closed forms") {
        const InfinitePair ip = make_integer_pair();
        const Pairing p = integer_pairing(ip);
        const AlgebraPtr& A = ip.fun->alg;
        const AlgebraPtr& B = ip.grp->alg;

        std::vector<std::int64_t> win;
        for (std::int64_t k = -2; k <= 2; ++k) win.push_back(k);
        const Report r = heisenberg_suite_windowed(p, win, win);
        INFO(r.text());
        CHECK(r.all_pass());

        auto dk = [&](std::int64_t k) { return A->basis_element(k); };
        auto un = [&](std::int64_t n) { return B->basis_element(n); };

        // (d[k] (x) u^j)(d[m] (x) u^n) = [k = m - j] d[k] (x) u^(j+n)
        CHECK(heis_mul(p, tensor(dk(0), un(1)), tensor(dk(1), un(2))) == tensor(dk(0), un(3)));
        CHECK(heis_mul(p, tensor(dk(0), un(1)), tensor(dk(2), un(2))).is_zero());

        // (d[k] (x) u^n) |> d[m] = [k = m - n] d[k]
        CHECK(heis_act(p, tensor(dk(0), un(2)), dk(2)) == dk(0));
        CHECK(heis_act(p, tensor(dk(0), un(2)), dk(1)).is_zero());

        // the twist translates the function leg by the Laurent degree
        CHECK(r_map(p, tensor(dk(3), un(2))) == tensor(dk(1), un(2)));
        CHECK(r_inv(p, tensor(dk(1), un(2))) == tensor(dk(3), un(2)));

        // a right unit for d[2] (x) u^3 must sit at the translated support
        CHECK(mul_j_a(p, tensor(dk(2), un(3)), dk(5)) == tensor(dk(2), un(3)));
        CHECK(mul_j_a(p, tensor(dk(2), un(3)), dk(4)).is_zero());

        // j_B twists past the function leg
        CHECK(j_b_mul(p, un(5), tensor(dk(2), un(1))) == tensor(dk(-3), un(6)));
    }

    TEST_CASE("preconditions") {
        const InfinitePair ip = make_integer_pair();
        CHECK_THROWS_AS((void)heisenberg_suite(ip.fun), precondition_error);

        // flipping the integer pairing puts the side without a closed
        // coproduct in the B slot
        Pairing flipped = integer_pairing(ip);
        std::swap(flipped.a_side, flipped.b_side);
        const std::vector<std::int64_t> win{-1, 0, 1};
        CHECK_THROWS_AS((void)heisenberg_suite_windowed(flipped, win, win), precondition_error);
        CHECK_THROWS_AS((void)heisenberg_suite_windowed(integer_pairing(ip), {}, win),
                        precondition_error);
    }
}
