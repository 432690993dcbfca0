#include "doctest.h"

#include "aqg/examples.hpp"
#include "aqg/integrals.hpp"

using namespace aqg;

namespace {

Mat diag_matrix(const ScalarField& F, const std::vector<long>& entries) {
    size_t n = entries.size();
    Mat m = mat_zero(n, n, F);
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar::integer(entries[i], F);
    return m;
}

} // namespace

TEST_SUITE("integrals") {

TEST_CASE("four dimensional example: full modular data against the hand table") {
    auto h = make_sweedler();
    auto alg = h->alg;
    // basis order 1, x, g, gx
    ModularData md = derive_modular_data(h);
    CHECK(md.solution_dim == 1);
    // left integral picks the top coefficient
    CHECK(md.phi.coords() == Vec{Scalar::integer(0), Scalar::integer(0), Scalar::integer(0),
                                 Scalar::integer(1)});
    // psi = phi . S sees S(x) = -gx
    CHECK(md.psi.coords() == Vec{Scalar::integer(0), Scalar::integer(-1), Scalar::integer(0),
                                 Scalar::integer(0)});
    CHECK(md.delta == alg->basis_element(2));     // g
    CHECK(md.delta_inv == alg->basis_element(2)); // g is its own inverse
    CHECK(md.tau == Scalar::integer(-1));
    CHECK(mat_eq(md.sigma, diag_matrix(alg->field, {1, -1, -1, 1})));
    CHECK(mat_eq(md.sigma_prime, diag_matrix(alg->field, {1, 1, -1, -1})));
    CHECK(check_faithful(alg, md.phi).faithful);
    CHECK(check_faithful(alg, md.psi).faithful);
}

TEST_CASE("group algebra integral evaluates the identity coefficient") {
    for (const char* name : {"group:z2", "group:z3", "group:s3"}) {
        auto h = builtin_hopf(name);
        auto alg = h->alg;
        ModularData md = derive_modular_data(h);
        INFO(name);
        CHECK(md.solution_dim == 1);
        for (std::int64_t i = 0; i < alg->dim; ++i)
            CHECK(md.phi.eval_basis(i) ==
                  (i == 0 ? Scalar::one(alg->field) : Scalar::zero(alg->field)));
        CHECK(md.delta == *alg->unit);
        CHECK(md.tau == Scalar::one(alg->field));
        CHECK(mat_eq(md.sigma, mat_identity(static_cast<size_t>(alg->dim), alg->field)));
    }
}

TEST_CASE("function algebra integral is the total sum") {
    for (const char* name : {"fn:z2", "fn:z3", "fn:s3"}) {
        auto h = builtin_hopf(name);
        auto alg = h->alg;
        ModularData md = derive_modular_data(h);
        INFO(name);
        CHECK(md.solution_dim == 1);
        for (std::int64_t i = 0; i < alg->dim; ++i)
            CHECK(md.phi.eval_basis(i) == Scalar::one(alg->field));
        CHECK(md.psi.coords() == md.phi.coords());
        CHECK(md.delta == *alg->unit);
        CHECK(md.tau == Scalar::one(alg->field));
        CHECK(mat_eq(md.sigma, mat_identity(static_cast<size_t>(alg->dim), alg->field)));
        CHECK(mat_eq(md.sigma_prime, mat_identity(static_cast<size_t>(alg->dim), alg->field)));
    }
}

TEST_CASE("taft integral sits in top x-degree and scales by a root of unity") {
    auto h = make_taft(3);
    auto alg = h->alg;
    ScalarField F = alg->field;
    Scalar z = Scalar::root_of_unity(F);
    Element x = alg->basis_element(1);
    // S^2 stretches x by the root of unity: a pure product computation
    CHECK(h->antipode(h->antipode(x)) == x.scaled(z));
    ModularData md = derive_modular_data(h);
    CHECK(md.solution_dim == 1);
    // phi is supported on g x^2 alone (id 1*3+2 = 5)
    for (std::int64_t i = 0; i < alg->dim; ++i) {
        INFO("basis id ", i);
        CHECK(md.phi.eval_basis(i) == (i == 5 ? Scalar::one(F) : Scalar::zero(F)));
    }
    // so phi(S^2(a)) = tau phi(a) forces tau = z^2 on the support
    CHECK(md.tau == z * z);
    CHECK(md.delta == alg->basis_element(3)); // g
    CHECK(check_faithful(alg, md.phi).faithful);
}

TEST_CASE("integral suite passes on the finite builtins") {
    for (const char* name :
         {"group:z2", "group:z3", "group:s3", "fn:z2", "fn:z3", "fn:s3", "h4", "taft:3"}) {
        auto h = builtin_hopf(name);
        Report rep = integral_suite(h);
        INFO(name, "\n", rep.text());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("identity suite passes on the finite builtins") {
    for (const char* name :
         {"group:z2", "group:z3", "group:s3", "fn:z2", "fn:z3", "fn:s3", "h4", "taft:3"}) {
        auto h = builtin_hopf(name);
        Report rep = identity_suite_one(h);
        INFO(name, "\n", rep.text());
        CHECK(rep.all_pass());
        CHECK(rep.derived.count("scaling_constant") == 1);
    }
}

TEST_CASE("invariance and antipode exchange cut out the same functionals") {
    for (const char* name : {"group:z2", "group:s3", "fn:s3", "h4", "taft:3"}) {
        auto h = builtin_hopf(name);
        Report rep = invariance_equivalence(h);
        INFO(name, "\n", rep.text());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("forcing the modular automorphism to the identity is caught") {
    auto h = make_sweedler();
    ModularData md = derive_modular_data(h);
    ModularData broken = md;
    broken.sigma = mat_identity(4, h->alg->field);
    broken.sigma_inv = broken.sigma;
    Report rep = identity_suite_one(h, broken);
    CHECK(!rep.all_pass());
    bool defining_failed = false;
    for (const auto& item : rep.items)
        if (item.name == "sigma_defining" && !item.pass) {
            defining_failed = true;
            CHECK(!item.witness.empty());
        }
    CHECK(defining_failed);
}

TEST_CASE("forcing the modular element to one is caught") {
    auto h = make_sweedler();
    ModularData md = derive_modular_data(h);
    ModularData broken = md;
    broken.delta = *h->alg->unit;
    Report rep = identity_suite_one(h, broken);
    CHECK(!rep.all_pass());
    bool defining_failed = false;
    for (const auto& item : rep.items)
        if (item.name == "modular_element_defining" && !item.pass) {
            defining_failed = true;
            CHECK(!item.witness.empty());
        }
    CHECK(defining_failed);
}

TEST_CASE("infinite dimension is rejected up front") {
    auto P = make_integer_pair();
    CHECK_THROWS_AS(solve_left_integral(P.fun), const precondition_error&);
    CHECK_THROWS_AS(identity_suite_one(P.fun), const precondition_error&);
}

}
