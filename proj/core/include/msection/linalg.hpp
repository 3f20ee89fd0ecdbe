#pragma once

// Exact linear algebra over a field (Q or Q(t)): reduced row echelon form,
// rank / kernel / image, determinants and linear solves. All arithmetic is
// exact; pivoting is deterministic (first nonzero entry).

#include "msection/matrix.hpp"
#include "msection/numbers.hpp"
#include "msection/ratfunc.hpp"

#include <optional>
#include <vector>

namespace msec {

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

template <class F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> res;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!(m(i, c) == F(0))) { piv = i; break; }
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        const F inv = F(1) / m(r, c);
        m.scale_row(r, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            if (!(m(i, c) == F(0))) m.addmul_row(i, r, -m(i, c));
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

template <class F>
struct KernelImage {
    std::size_t rank = 0;
    Matrix<F> kernel;  // columns form a basis of the null space
    Matrix<F> image;   // the pivot columns of the input
    std::vector<std::size_t> pivot_cols;
};

template <class F>
KernelImage<F> rank_kernel_image(const Matrix<F>& m) {
    KernelImage<F> res;
    auto rr = rref(m);
    res.rank = rr.rank;
    res.pivot_cols = rr.pivot_cols;
    res.image = m.cols_subset(rr.pivot_cols);

    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    res.kernel = Matrix<F>(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        res.kernel(fc, k) = F(1);
        for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p)
            res.kernel(rr.pivot_cols[p], k) = -rr.reduced(p, fc);
    }
    return res;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (!(m(i, c) == F(0))) { piv = i; break; }
        if (piv == n) return F(0);
        if (piv != c) { m.swap_rows(c, piv); det = -det; }
        det = det * m(c, c);
        const F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (!(m(i, c) == F(0))) m.addmul_row(i, c, -(m(i, c) * inv));
        }
    }
    return det;
}

// One solution of A x = b with free variables set to zero, or nullopt when
// the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve shape mismatch");
    Matrix<F> aug = a.hstacked(Matrix<F>::from_cols(b.size(), {b}));
    auto rr = rref(aug);
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t p = 0; p < rr.pivot_cols.size(); ++p) {
        if (rr.pivot_cols[p] == a.cols()) return std::nullopt;  // pivot in the b column
        x[rr.pivot_cols[p]] = rr.reduced(p, a.cols());
    }
    return x;
}

// Column-wise solve: X with A X = B, or nullopt.
template <class F>
std::optional<Matrix<F>> solve_linear_columns(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    Matrix<F> x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto col = solve_linear(a, b.col(j));
        if (!col) return std::nullopt;
        x.set_col(j, *col);
    }
    return x;
}

inline Matrix<BigRational> to_rational_matrix(const Matrix<BigInt>& m) {
    return m.map<BigRational>([](const BigInt& v) { return BigRational(v); });
}

inline Matrix<RationalFunction> to_ratfunc_matrix(const Matrix<LaurentQ>& m) {
    return m.map<RationalFunction>([](const LaurentQ& v) { return RationalFunction(v); });
}

inline Matrix<LaurentQ> to_laurent_q_matrix(const Matrix<LaurentZ>& m) {
    return m.map<LaurentQ>([](const LaurentZ& v) { return to_laurent_q(v); });
}

// t -> 1, entry-wise.
inline Matrix<BigRational> augment_matrix(const Matrix<LaurentQ>& m) {
    return m.map<BigRational>([](const LaurentQ& v) { return v.augment(); });
}

}  // namespace msec
