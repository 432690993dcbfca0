#pragma once

#include "aqg/hopf.hpp"
#include "aqg/integrals.hpp"

#include <string>
#include <vector>

namespace aqg {

// Finite group presented by its multiplication table.
struct CayleyTable {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<size_t>> table; // table[i][j] = index of g_i g_j

    size_t identity() const;
    size_t inverse(size_t i) const;
};

CayleyTable cyclic_group(size_t n);
CayleyTable symmetric_group_3();

// group algebra: basis g, product from the table, Delta(g) = g (x) g
HopfPtr make_group_algebra(const CayleyTable& g, const ScalarField& f = {});
// functions on the group: pointwise product, coproduct dual to the table
HopfPtr make_function_algebra(const CayleyTable& g, const ScalarField& f = {});

// the 4-dimensional algebra generated by g, x with g^2 = 1, x^2 = 0,
// x g = -g x, Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x
HopfPtr make_sweedler();
// its n^2-dimensional relative over Q(zeta_n): g^n = 1, x^n = 0, x g = zeta g x
HopfPtr make_taft(size_t n);

// Functions of finite support on the integers paired with the Laurent
// polynomial algebra.  The first is non-unital with local units; basis ids
// are the integers themselves.
struct InfinitePair {
    HopfPtr fun; // d[k], pointwise product, sliced coproduct
    HopfPtr grp; // u^k, group-like generators
    Functional phi_fun, psi_fun; // total sum
    Functional phi_grp, psi_grp; // coefficient of u^0
};
InfinitePair make_integer_pair(const ScalarField& f = {});

// full matrix algebra, basis E(r,c) with id r*n + c; used to realize
// operator identities inside ordinary tensors
AlgebraPtr matrix_algebra(size_t n, const ScalarField& f = {});

// names accepted by the command line: group:zN, group:s3, fn:zN, fn:s3,
// h4, taft:N, kz
HopfPtr builtin_hopf(const std::string& name);
std::vector<std::string> builtin_names();

// deliberately broken variants used to prove the checks can fail
HopfPtr broken_sweedler_identity_antipode();
HopfPtr broken_function_algebra_degenerate();

} // namespace aqg
