#pragma once

#include "aqg/hopf.hpp"
#include "aqg/linalg.hpp"
#include "aqg/report.hpp"

#include <cstdint>
#include <functional>

namespace aqg {

// A linear functional on an algebra, given by its values on basis elements.
struct Functional {
    AlgebraPtr alg;
    std::function<Scalar(std::int64_t)> eval_basis;

    Scalar operator()(const Element& e) const;
    Vec coords() const; // finite-dimensional algebras only
};

Functional functional_from_coords(const AlgebraPtr& alg, const Vec& v);

// readable basis-value listing, e.g. "1:0, g:0, x:0, gx:1"
std::string functional_str(const AlgebraPtr& alg, const Functional& f);

struct IntegralSolution {
    Functional phi;
    std::size_t solution_dim = 0; // dimension of the space of invariant functionals
};

// Solves (id x phi)((b x 1) Delta(a)) = phi(a) b over all basis pairs (a, b).
// The solution is normalized so its first nonzero basis value is 1.
IntegralSolution solve_left_integral(const HopfPtr& h);

// psi = phi . S is a right integral whenever phi is a left one.
Functional right_from_left(const HopfPtr& h, const Functional& phi);

struct FaithfulReport {
    bool faithful = false;
    std::size_t rank = 0;
    Mat gram; // gram[i][j] = f(e_i e_j)
};

// A functional f is faithful iff its gram matrix has full rank; that single
// rank condition covers both f(aA) = 0 and f(Aa) = 0.
FaithfulReport check_faithful(const AlgebraPtr& alg, const Functional& f);

// The automorphism s with f(a b) = f(b s(a)), as a matrix whose column i
// holds the coordinates of s(e_i). Requires a faithful f.
Mat solve_modular_automorphism(const AlgebraPtr& alg, const Functional& f);

// Group-like element d with (phi x id) Delta(a) = phi(a) d, and its inverse
// from (id x psi) Delta(a) = psi(a) d_inv. Finite-dimensional algebras only.
Element modular_element(const HopfPtr& h, const Functional& phi);
Element modular_element_inverse(const HopfPtr& h, const Functional& psi);

// tau with phi(S^2(a)) = tau phi(a).
Scalar scaling_constant(const HopfPtr& h, const Functional& phi);

// Everything the integral determines, derived from scratch or from a given
// left integral.
struct ModularData {
    Functional phi, psi;
    Mat sigma, sigma_inv;             // phi(a b) = phi(b sigma(a))
    Mat sigma_prime, sigma_prime_inv; // psi(a b) = psi(b sigma_prime(a))
    Element delta, delta_inv;
    Scalar tau;
    std::size_t solution_dim = 1;
};

ModularData derive_modular_data(const HopfPtr& h);
ModularData derive_modular_data(const HopfPtr& h, const Functional& phi);

// Existence, uniqueness and faithfulness of the integral.
Report integral_suite(const HopfPtr& h);

// The identities tying S, sigma, sigma', delta and tau together, checked
// exactly on every basis pair. Finite-dimensional algebras only.
Report identity_suite_one(const HopfPtr& h);
Report identity_suite_one(const HopfPtr& h, const ModularData& md);

// Left invariance of a functional is equivalent to an antipode-exchange
// identity; this checks the two solution spaces agree in both directions.
Report invariance_equivalence(const HopfPtr& h);

} // namespace aqg
