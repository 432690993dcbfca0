#include "aqg/linalg.hpp"

namespace aqg {

Mat mat_zero(size_t rows, size_t cols, const ScalarField& f) {
    return Mat(rows, Vec(cols, Scalar::zero(f)));
}

Mat mat_identity(size_t n, const ScalarField& f) {
    Mat m = mat_zero(n, n, f);
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(f);
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), p = b[0].size();
    Mat r(n, Vec(p, Scalar::zero(a[0][0].field())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

Vec mat_vec(const Mat& a, const Vec& v) {
    Vec r(a.size(), v.empty() ? Scalar() : Scalar::zero(v[0].field()));
    for (size_t i = 0; i < a.size(); ++i) {
        Scalar acc = a[i].empty() ? Scalar() : Scalar::zero(a[i][0].field());
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) acc += a[i][j] * v[j];
        r[i] = acc;
    }
    return r;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), Vec(a.size(), Scalar::zero(a[0][0].field())));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_eq(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Scalar inv = m[r][c].inv();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t mat_rank(Mat m) { return rref(m).size(); }

std::vector<Vec> kernel_basis(const Mat& m_in, const ScalarField& f) {
    Mat m = m_in;
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Mat& m_in, const Vec& b, const ScalarField& f) {
    if (m_in.size() != b.size()) throw error("solve_linear: shape mismatch");
    Mat m = m_in;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(m);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Scalar::zero(f));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

std::optional<Mat> mat_inverse(const Mat& m_in, const ScalarField& f) {
    size_t n = m_in.size();
    Mat m = m_in;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Scalar::one(f) : Scalar::zero(f));
    std::vector<size_t> pivots = rref(m);
    if (pivots.size() != n) return std::nullopt;
    for (size_t c = 0; c < n; ++c)
        if (pivots[c] != c) return std::nullopt;
    Mat inv(n, Vec(n, Scalar::zero(f)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

Mat basis_map_matrix(const AlgebraPtr& alg, const std::function<Element(std::int64_t)>& fn) {
    if (!alg->finite_dim) throw error("basis_map_matrix needs a finite-dimensional algebra");
    size_t n = static_cast<size_t>(alg->dim);
    Mat m = mat_zero(n, n, alg->field);
    for (size_t j = 0; j < n; ++j) {
        Element img = fn(static_cast<std::int64_t>(j));
        for (const auto& [id, c] : img.terms()) m[static_cast<size_t>(id)][j] = c;
    }
    return m;
}

Element apply_matrix(const Mat& m, const Element& e) {
    const AlgebraPtr& alg = e.algebra();
    Vec v = alg->coords(e);
    Vec w = mat_vec(m, v);
    return alg->from_coords(w);
}

} // namespace aqg
