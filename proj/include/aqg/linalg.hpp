#pragma once

#include <optional>
#include <vector>

#include "aqg/algebra.hpp"

namespace aqg {

// Dense matrices over Scalar, used for the exact linear solves (integral
// spaces, Gram matrices, rank checks).  Row-major: m[i][j].
using Mat = std::vector<std::vector<Scalar>>;
using Vec = std::vector<Scalar>;

Mat mat_zero(size_t rows, size_t cols, const ScalarField& f);
Mat mat_identity(size_t n, const ScalarField& f);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& v);
Mat mat_transpose(const Mat& a);
bool mat_eq(const Mat& a, const Mat& b);

// Gauss-Jordan to reduced row echelon form; returns pivot column indices.
// Deterministic: first nonzero pivot in column order.
std::vector<size_t> rref(Mat& m);

size_t mat_rank(Mat m);

// basis of the solution space of m x = 0, canonicalized from the rref
std::vector<Vec> kernel_basis(const Mat& m, const ScalarField& f);

// one solution of m x = b if consistent
std::optional<Vec> solve_linear(const Mat& m, const Vec& b, const ScalarField& f);

std::optional<Mat> mat_inverse(const Mat& m, const ScalarField& f);

// matrix of a basis map on a finite-dimensional algebra: column j holds the
// coordinates of f(e_j)
Mat basis_map_matrix(const AlgebraPtr& alg,
                     const std::function<Element(std::int64_t)>& f);
Element apply_matrix(const Mat& m, const Element& e);

} // namespace aqg
