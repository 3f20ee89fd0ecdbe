#pragma once

// Smith normal form and module operations over the two Euclidean domains the
// library needs: Z (norm = |.|) and Q[t^+-1] (norm = exponent span). Every
// snf() call returns a full certificate U*M*V = D with unit determinants,
// and verifies it before returning.

#include "msection/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace msec {

template <class R>
struct EuclideanOps;

template <>
struct EuclideanOps<BigInt> {
    static bool is_zero(const BigInt& a) { return a == 0; }
    static bool norm_less(const BigInt& a, const BigInt& b) { return abs(a) < abs(b); }
    // rounded division: |r| <= |b|/2, which keeps elimination chains short
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        q = a / b;
        r = a - q * b;
        if (2 * abs(r) > abs(b)) {
            const BigInt step = (r > 0) == (b > 0) ? 1 : -1;
            q += step;
            r -= step * b;
        }
    }
    static bool divides(const BigInt& a, const BigInt& b) { return b % a == 0; }
    static BigInt normalize(const BigInt& a, BigInt& unit) {
        unit = a < 0 ? BigInt(-1) : BigInt(1);
        return abs(a);
    }
    static BigInt unit_inverse(const BigInt& u) { return u; }  // units are +-1
    static bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
};

template <>
struct EuclideanOps<LaurentQ> {
    static bool is_zero(const LaurentQ& a) { return a.is_zero(); }
    static bool norm_less(const LaurentQ& a, const LaurentQ& b) {
        if (a.span() != b.span()) return a.span() < b.span();
        return a.term_count() < b.term_count();
    }
    static void divmod(const LaurentQ& a, const LaurentQ& b, LaurentQ& q, LaurentQ& r) {
        laurent_q_divmod(a, b, q, r);
    }
    static bool divides(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ q, r;
        laurent_q_divmod(b, a, q, r);
        return r.is_zero();
    }
    static LaurentQ normalize(const LaurentQ& a, LaurentQ& unit) { return laurent_q_unit_normalize(a, &unit); }
    static LaurentQ unit_inverse(const LaurentQ& u) {
        return LaurentQ::monomial(BigRational(1) / u.leading_coeff(), -u.min_exp());
    }
    static bool is_unit(const LaurentQ& a) { return a.is_unit(); }
};

template <class R>
struct SnfResult {
    Matrix<R> u, d, v;
    std::size_t rank = 0;

    std::vector<R> invariant_factors() const {
        std::vector<R> f;
        for (std::size_t i = 0; i < rank; ++i) f.push_back(d(i, i));
        return f;
    }
};

namespace detail {

template <class R>
bool find_pivot(const Matrix<R>& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    using Ops = EuclideanOps<R>;
    bool found = false;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (Ops::is_zero(d(i, j))) continue;
            if (!found || Ops::norm_less(d(i, j), d(pi, pj))) {
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

// Brings d to Smith diagonal form from index `start`, mirroring the row ops
// in u and the column ops in v. Divisibility is enforced locally at each
// pivot (the classic merge-a-bad-row trick), which keeps coefficient growth
// under control together with the rounded division.
template <class R>
void diagonalize(Matrix<R>& d, Matrix<R>& u, Matrix<R>& v, std::size_t start) {
    using Ops = EuclideanOps<R>;
    const std::size_t bound = std::min(d.rows(), d.cols());
    for (std::size_t t = start; t < bound; ++t) {
        while (true) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(d, t, pi, pj)) return;
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            // clear the pivot column and row; a nonzero remainder becomes
            // the new (strictly smaller) pivot and we restart
            bool restart = false;
            for (std::size_t i = t + 1; i < d.rows() && !restart; ++i) {
                if (Ops::is_zero(d(i, t))) continue;
                R q, r;
                Ops::divmod(d(i, t), d(t, t), q, r);
                d.addmul_row(i, t, -q);
                u.addmul_row(i, t, -q);
                if (!Ops::is_zero(r)) restart = true;
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < d.cols() && !restart; ++j) {
                if (Ops::is_zero(d(t, j))) continue;
                R q, r;
                Ops::divmod(d(t, j), d(t, t), q, r);
                d.addmul_col(j, t, -q);
                v.addmul_col(j, t, -q);
                if (!Ops::is_zero(r)) restart = true;
            }
            if (restart) continue;
            // pivot row and column are clean; enforce that the pivot divides
            // the remaining submatrix before moving on
            bool divides_all = true;
            for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < d.cols() && divides_all; ++j) {
                    if (Ops::is_zero(d(i, j)) || Ops::divides(d(t, t), d(i, j))) continue;
                    d.addmul_row(t, i, R(1));
                    u.addmul_row(t, i, R(1));
                    divides_all = false;
                }
            if (divides_all) break;
        }
    }
}

// Fraction-free determinant (Bareiss); the divisions are exact in the ring.
template <class R>
R bareiss_determinant(Matrix<R> m) {
    using Ops = EuclideanOps<R>;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    R sign(1);
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Ops::is_zero(m(k, k))) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!Ops::is_zero(m(i, k))) { piv = i; break; }
            if (piv == n) return R(0);
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                R q, r;
                Ops::divmod(num, prev, q, r);
                if (!Ops::is_zero(r)) throw std::logic_error("Bareiss division not exact");
                m(i, j) = q;
            }
        for (std::size_t i = k + 1; i < n; ++i) m(i, k) = R(0);
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace detail

template <class R>
SnfResult<R> snf(const Matrix<R>& m, bool verify = true) {
    using Ops = EuclideanOps<R>;
    SnfResult<R> res;
    res.d = m;
    res.u = Matrix<R>::identity(m.rows());
    res.v = Matrix<R>::identity(m.cols());

    detail::diagonalize(res.d, res.u, res.v, 0);

    const std::size_t bound = std::min(m.rows(), m.cols());
    std::size_t rank = 0;
    while (rank < bound && !Ops::is_zero(res.d(rank, rank))) ++rank;

    // Unit-normalize the diagonal (scale rows of D and U together).
    for (std::size_t i = 0; i < rank; ++i) {
        R unit;
        Ops::normalize(res.d(i, i), unit);
        if (!(unit == R(1))) {
            const R inv = Ops::unit_inverse(unit);
            res.d.scale_row(i, inv);
            res.u.scale_row(i, inv);
        }
    }
    res.rank = rank;

    if (verify) {
        if (!(res.u * m * res.v == res.d)) throw std::logic_error("SNF certificate failed: U*M*V != D");
        for (std::size_t i = 0; i + 1 < rank; ++i)
            if (!Ops::divides(res.d(i, i), res.d(i + 1, i + 1)))
                throw std::logic_error("SNF divisibility chain failed");
        if (!Ops::is_unit(detail::bareiss_determinant(res.u)) ||
            !Ops::is_unit(detail::bareiss_determinant(res.v)))
            throw std::logic_error("SNF transforms are not unimodular");
    }
    return res;
}

// Basis of {x : M x = 0} over the PID; the columns of V beyond the rank.
// Over Z the resulting lattice is saturated because V is unimodular.
template <class R>
Matrix<R> kernel_basis(const Matrix<R>& m) {
    auto s = snf(m);
    std::vector<std::size_t> idx;
    for (std::size_t j = s.rank; j < m.cols(); ++j) idx.push_back(j);
    return s.v.cols_subset(idx);
}

// Solves M X = B over the ring; nullopt when no exact solution exists.
template <class R>
std::optional<Matrix<R>> solve_in_ring(const Matrix<R>& m, const Matrix<R>& b) {
    using Ops = EuclideanOps<R>;
    if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    auto s = snf(m);
    const Matrix<R> ub = s.u * b;
    Matrix<R> z(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i < s.rank) {
                R q, r;
                Ops::divmod(ub(i, j), s.d(i, i), q, r);
                if (!Ops::is_zero(r)) return std::nullopt;
                z(i, j) = q;
            } else if (!Ops::is_zero(ub(i, j))) {
                return std::nullopt;
            }
        }
    }
    return s.v * z;
}

// Column echelon basis of the column span of M over the PID (Hermite-style,
// column operations only), used to turn generating sets into bases.
template <class R>
Matrix<R> column_module_basis(Matrix<R> m) {
    using Ops = EuclideanOps<R>;
    std::size_t lead_col = 0;
    for (std::size_t row = 0; row < m.rows() && lead_col < m.cols(); ++row) {
        while (true) {
            std::size_t piv = m.cols();
            for (std::size_t j = lead_col; j < m.cols(); ++j) {
                if (Ops::is_zero(m(row, j))) continue;
                if (piv == m.cols() || Ops::norm_less(m(row, j), m(row, piv))) piv = j;
            }
            if (piv == m.cols()) break;  // row exhausted
            m.swap_cols(lead_col, piv);
            bool reduced = true;
            for (std::size_t j = lead_col + 1; j < m.cols(); ++j) {
                if (Ops::is_zero(m(row, j))) continue;
                R q, r;
                Ops::divmod(m(row, j), m(row, lead_col), q, r);
                m.addmul_col(j, lead_col, -q);
                if (!Ops::is_zero(r)) reduced = false;
            }
            if (reduced) {
                ++lead_col;
                break;
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = Ops::is_zero(m(i, j));
        if (!zero) keep.push_back(j);
    }
    return m.cols_subset(keep);
}

// Basis of span(A) intersect span(B) over the PID, via the kernel of [A | -B].
template <class R>
Matrix<R> span_intersection(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("intersection ambient mismatch");
    const Matrix<R> block = a.hstacked(-b);
    const Matrix<R> ker = kernel_basis(block);
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < a.cols(); ++i) top.push_back(i);
    const Matrix<R> gens = a * ker.rows_subset(top);
    return column_module_basis(gens);
}

// True when the lattice spanned by the columns is saturated (primitive) in
// the ambient module: all invariant factors are units.
template <class R>
bool is_saturated(const Matrix<R>& m) {
    using Ops = EuclideanOps<R>;
    auto s = snf(m);
    if (s.rank != m.cols()) return false;
    for (const auto& f : s.invariant_factors())
        if (!Ops::is_unit(f)) return false;
    return true;
}

// Inverse of a matrix that is invertible over the ring.
template <class R>
Matrix<R> ring_inverse(const Matrix<R>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    auto x = solve_in_ring(m, Matrix<R>::identity(m.rows()));
    if (!x) throw std::domain_error("matrix is not invertible over the ring");
    return *x;
}

// Extends the columns of E (which must form part of a basis) to a square
// unimodular matrix [E | C]. Fails when the columns are not completable.
template <class R>
std::optional<Matrix<R>> unimodular_completion(const Matrix<R>& e) {
    using Ops = EuclideanOps<R>;
    const std::size_t n = e.rows(), k = e.cols();
    if (k > n) return std::nullopt;
    auto s = snf(e);
    if (s.rank != k) return std::nullopt;
    for (const auto& f : s.invariant_factors())
        if (!Ops::is_unit(f)) return std::nullopt;
    const Matrix<R> uinv = ring_inverse(s.u);
    std::vector<std::size_t> rest;
    for (std::size_t j = k; j < n; ++j) rest.push_back(j);
    return e.hstacked(uinv.cols_subset(rest));
}

}  // namespace msec
