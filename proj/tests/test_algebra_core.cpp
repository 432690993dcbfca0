#include "doctest.h"

#include "aqg/examples.hpp"
#include "aqg/linalg.hpp"
#include "aqg/multiplier.hpp"
#include "aqg/tensor.hpp"

using namespace aqg;

TEST_SUITE("algebra_core") {

TEST_CASE("group algebra basics") {
    auto h = make_group_algebra(cyclic_group(2));
    auto alg = h->alg;
    Element e = alg->basis_element(0), g = alg->basis_element(1);
    CHECK(g * g == e);
    CHECK(e * g == g);
    CHECK(*alg->unit == e);
    CHECK(check_associative(alg));
    CHECK(check_nondegenerate(alg).nondegenerate);
    CHECK(alg->label_of(1) == "g");
}

TEST_CASE("symmetric group composition") {
    auto t = symmetric_group_3();
    CHECK(t.table.size() == 6);
    CHECK(t.identity() == 0);
    auto h = make_group_algebra(t);
    CHECK(check_associative(h->alg));
    // a transposition squares to the identity
    size_t tr = 0;
    for (size_t i = 0; i < 6; ++i)
        if (t.labels[i] == "(12)") tr = i;
    CHECK(t.table[tr][tr] == t.identity());
    // the two 3-cycles are inverse to each other
    size_t c3 = 0, c3i = 0;
    for (size_t i = 0; i < 6; ++i) {
        if (t.labels[i] == "(123)") c3 = i;
        if (t.labels[i] == "(132)") c3i = i;
    }
    CHECK(t.inverse(c3) == c3i);
    CHECK(t.table[c3][c3] == c3i);
}

TEST_CASE("element arithmetic stays canonical") {
    auto alg = make_group_algebra(cyclic_group(3))->alg;
    Element a = alg->basis_element(1) + alg->basis_element(2);
    Element b = a - alg->basis_element(2);
    CHECK(b == alg->basis_element(1));
    CHECK(b.support_size() == 1);
    CHECK((a - a).is_zero());
    Element c = a.scaled(Scalar::integer(2));
    CHECK(c.coeff(1) == Scalar::integer(2));
    CHECK(c.coeff(0).is_zero());
}

TEST_CASE("tensor product arithmetic") {
    auto alg = make_group_algebra(cyclic_group(2))->alg;
    Element e = alg->basis_element(0), g = alg->basis_element(1);
    TensorElement t = tensor(e + g, g);
    CHECK(t.coeff({0, 1}) == Scalar::integer(1));
    CHECK(t.coeff({1, 1}) == Scalar::integer(1));
    CHECK(flip(t) == tensor(g, e + g));
    // componentwise product
    TensorElement u = t * tensor(g, g);
    CHECK(u == tensor(g + e, e));
    // leg multiplication
    CHECK(mult_leg_right(t, 1, g) == tensor(e + g, e));
    CHECK(mult_leg_left(g, 0, t) == tensor(g + e, g));
}

TEST_CASE("sweedler pairs rebuild the tensor") {
    auto alg = make_group_algebra(cyclic_group(3))->alg;
    Element a = alg->basis_element(1) + alg->basis_element(2).scaled(Scalar::integer(3));
    Element b = alg->basis_element(0) - alg->basis_element(1);
    TensorElement t = tensor(a, b) + tensor(b, a);
    TensorElement rebuilt({alg, alg});
    for (const auto& [p, q] : sweedler_pairs(t)) rebuilt += tensor(p, q);
    CHECK(rebuilt == t);
    // first legs of the decomposition are single basis elements
    for (const auto& [p, q] : sweedler_pairs(t)) CHECK(p.support_size() == 1);
}

TEST_CASE("three legs embed and contract") {
    auto alg = make_group_algebra(cyclic_group(2))->alg;
    Element e = alg->basis_element(0), g = alg->basis_element(1);
    TensorElement two = tensor(g, e + g);
    TensorElement three = leg_embed(two, 0, 2, 3, {alg, alg, alg});
    CHECK(three.coeff({1, 0, 0}) == Scalar::integer(1));
    CHECK(three.coeff({1, 0, 1}) == Scalar::integer(1));
    auto sum_all = [&](std::int64_t) { return Scalar::one(alg->field); };
    TensorElement down = contract_leg(three, 1, sum_all);
    CHECK(down == two);
}

TEST_CASE("multiplier from an element acts by multiplication") {
    auto alg = make_group_algebra(cyclic_group(3))->alg;
    Element g = alg->basis_element(1);
    Multiplier m = multiplier_from_element(g);
    Element a = alg->basis_element(2) + alg->basis_element(0);
    CHECK(m.left(a) == g * a);
    CHECK(m.right(a) == a * g);
    CHECK(multiplier_as_element(m) == g);
    Multiplier sq = multiplier_compose(m, m);
    CHECK(sq.left(a) == g * (g * a));
}

TEST_CASE("local units cover requested elements") {
    auto P = make_integer_pair();
    auto alg = P.fun->alg;
    Element a = alg->basis_element(-2) + alg->basis_element(5);
    Element u = local_unit(alg, {a});
    CHECK(u * a == a);
    CHECK(a * u == a);
}

TEST_CASE("matrix units multiply by row and column") {
    auto alg = matrix_algebra(2);
    Element e01 = alg->basis_element(1); // E(0,1)
    Element e10 = alg->basis_element(2); // E(1,0)
    Element e00 = alg->basis_element(0);
    Element e11 = alg->basis_element(3);
    CHECK(e01 * e10 == e00);
    CHECK(e10 * e01 == e11);
    CHECK((e01 * e01).is_zero());
    CHECK(*alg->unit == e00 + e11);
    CHECK(check_associative(alg));
    CHECK(check_nondegenerate(alg).nondegenerate);
}

TEST_CASE("linear solver on an exact system") {
    ScalarField F;
    auto S = [&](long v) { return Scalar::integer(v, F); };
    Mat m = {{S(2), S(1)}, {S(1), S(-1)}};
    Vec b = {S(4), S(-1)};
    auto x = solve_linear(m, b, F);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == S(1));
    CHECK((*x)[1] == S(2));
    auto inv = mat_inverse(m, F);
    REQUIRE(inv.has_value());
    CHECK(mat_eq(mat_mul(m, *inv), mat_identity(2, F)));
    Mat sing = {{S(1), S(2)}, {S(2), S(4)}};
    CHECK(!mat_inverse(sing, F).has_value());
    CHECK(mat_rank(sing) == 1);
    auto ker = kernel_basis(sing, F);
    REQUIRE(ker.size() == 1);
    // kernel vector is a multiple of (-2, 1)
    CHECK(ker[0][0] * S(1) == ker[0][1] * S(-2));
}

TEST_CASE("degenerate product is caught") {
    auto broken = broken_function_algebra_degenerate();
    auto nd = check_nondegenerate(broken->alg);
    CHECK(!nd.nondegenerate);
    CHECK(nd.right_witness.has_value());
}

}
