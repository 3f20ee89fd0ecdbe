#include "msection/linalg.hpp"
#include "msection/snf.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace msec;

namespace {

Matrix<BigInt> random_int_matrix(std::mt19937& rng, std::size_t max_dim, int max_abs) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> val(-max_abs, max_abs);
    Matrix<BigInt> m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    return m;
}

Matrix<LaurentQ> random_laurent_matrix(std::mt19937& rng, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> val(-3, 3), expd(-2, 2), terms(0, 2);
    Matrix<LaurentQ> m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            LaurentQ p;
            const int n = terms(rng);
            for (int k = 0; k < n; ++k) p.add_term(expd(rng), BigRational(val(rng)));
            m(i, j) = p;
        }
    return m;
}

// rank by enumerating square minors; independent oracle for small matrices
std::size_t minor_rank(const Matrix<BigRational>& m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = n; k >= 1; --k) {
        std::vector<std::size_t> ri(k), ci(k);
        // enumerate k-subsets of rows and columns
        std::vector<std::size_t> rsel(k), csel(k);
        std::function<bool(std::size_t, std::size_t)> rows_loop = [&](std::size_t pos,
                                                                      std::size_t start) {
            if (pos == k) {
                std::function<bool(std::size_t, std::size_t)> cols_loop = [&](std::size_t cpos,
                                                                              std::size_t cstart) {
                    if (cpos == k) {
                        Matrix<BigRational> sub(k, k);
                        for (std::size_t i = 0; i < k; ++i)
                            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rsel[i], csel[j]);
                        return !(determinant(sub) == BigRational(0));
                    }
                    for (std::size_t c = cstart; c < m.cols(); ++c) {
                        csel[cpos] = c;
                        if (cols_loop(cpos + 1, c + 1)) return true;
                    }
                    return false;
                };
                return cols_loop(0, 0);
            }
            for (std::size_t r = start; r < m.rows(); ++r) {
                rsel[pos] = r;
                if (rows_loop(pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (rows_loop(0, 0)) return k;
    }
    return 0;
}

}  // namespace

TEST_CASE("snf basics") {
    CHECK(snf(Matrix<BigInt>::identity(2)).d == Matrix<BigInt>::identity(2));
    const Matrix<BigInt> zero{{BigInt(0)}};
    CHECK(snf(zero).d == zero);

    // diag(2,4): d1 = gcd of entries = 2, d1*d2 = |det| = 8
    const Matrix<BigInt> m{{2, 4}, {6, 8}};
    auto s = snf(m);
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 1) == 4);
    CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("snf certificates on random matrices") {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        const auto m = random_int_matrix(rng, 6, 9);
        auto s = snf(m);  // snf() verifies U*M*V = D and unit determinants
        for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.d(i, i) > 0);
        // d_1 is the gcd of all entries
        BigInt g = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
        if (s.rank > 0) CHECK(s.d(0, 0) == g);
        // the product of the invariant factors is |det| for square full rank
        if (m.rows() == m.cols() && s.rank == m.rows()) {
            BigInt prod = 1;
            for (const auto& f : s.invariant_factors()) prod *= f;
            CHECK(prod == abs(to_integer(determinant(to_rational_matrix(m)))));
        }
    }
    for (int it = 0; it < 25; ++it) {
        const auto m = random_laurent_matrix(rng, 4);
        auto s = snf(m);
        for (const auto& f : s.invariant_factors()) {
            CHECK(f.min_exp() == 0);
            CHECK(f.leading_coeff() == 1);
        }
        // d_1 is the gcd of all entries up to a unit
        LaurentQ g;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) g = laurent_q_gcd(g, m(i, j));
        if (s.rank > 0) CHECK(s.d(0, 0) == g);
    }
}

TEST_CASE("rank, kernel and image over fields") {
    const Matrix<BigRational> zero(2, 2);
    auto kz = rank_kernel_image(zero);
    CHECK(kz.rank == 0);
    CHECK(kz.kernel == Matrix<BigRational>::identity(2));

    auto ki = rank_kernel_image(Matrix<BigRational>::identity(3));
    CHECK(ki.rank == 3);
    CHECK(ki.kernel.cols() == 0);

    Matrix<RationalFunction> m(1, 1);
    m(0, 0) = RationalFunction(LaurentQ::t(1) - LaurentQ(1));
    auto kt = rank_kernel_image(m);
    CHECK(kt.rank == 1);
    CHECK(kt.kernel.cols() == 0);
}

TEST_CASE("kernel columns are exact null vectors; rank matches the minor oracle") {
    std::mt19937 rng(31);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::uniform_int_distribution<int> val(-4, 4);
        Matrix<BigRational> m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = BigRational(val(rng));
        auto ki = rank_kernel_image(m);
        CHECK(ki.rank == minor_rank(m));
        CHECK(ki.rank + ki.kernel.cols() == m.cols());
        CHECK((m * ki.kernel).is_zero());
    }
}

TEST_CASE("determinants") {
    CHECK(determinant(Matrix<BigRational>::identity(4)) == 1);
    const Matrix<BigRational> m{{1, 1}, {1, 2}};
    CHECK(determinant(m) == 1);  // cofactor expansion: 1*2 - 1*1
    Matrix<RationalFunction> u(2, 2);
    u(0, 0) = RationalFunction::t(1);
    u(1, 1) = RationalFunction::t(-1);
    CHECK(determinant(u) == RationalFunction(1));
}

TEST_CASE("lattice intersections") {
    // span{e1} n span{e2} = 0 in Z^2
    const Matrix<BigInt> e1{{1}, {0}}, e2{{0}, {1}};
    CHECK(span_intersection(e1, e2).cols() == 0);
    // A = B
    const auto same = span_intersection(e1, e1);
    REQUIRE(same.cols() == 1);
    CHECK(abs(same(0, 0)) == 1);
    // span{(2,0)} n span{(1,0)} = span{(2,0)}
    const Matrix<BigInt> a{{2}, {0}}, b{{1}, {0}};
    const auto is = span_intersection(a, b);
    REQUIRE(is.cols() == 1);
    CHECK(abs(is(0, 0)) == 2);
    CHECK(is(1, 0) == 0);
}

TEST_CASE("lattice intersection is contained in both spans and saturated there") {
    std::mt19937 rng(41);
    for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<int> val(-3, 3);
        std::uniform_int_distribution<std::size_t> cd(1, 3);
        Matrix<BigInt> a(4, cd(rng)), b(4, cd(rng));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = val(rng);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = val(rng);
        }
        const auto l = span_intersection(a, b);
        CHECK(bool(solve_in_ring(a, l)));
        CHECK(bool(solve_in_ring(b, l)));
        // saturation inside span(A): any lattice point of both spans lies in span(L)
        for (int probe = 0; probe < 10; ++probe) {
            Matrix<BigInt> u(a.cols(), 1);
            for (std::size_t j = 0; j < a.cols(); ++j) u(j, 0) = val(rng);
            const Matrix<BigInt> v = a * u;
            if (solve_in_ring(b, v)) CHECK(bool(solve_in_ring(l, v)));
        }
    }
}

TEST_CASE("module intersection over the Laurent PID") {
    Matrix<LaurentQ> a(2, 1), b(2, 1);
    a(0, 0) = LaurentQ(1);
    b(1, 0) = LaurentQ(1);
    CHECK(span_intersection(a, b).cols() == 0);

    Matrix<LaurentQ> c(2, 1), d(2, 1);
    c(0, 0) = LaurentQ::t(1) - LaurentQ(1);  // span{(t-1, 0)}
    d(0, 0) = LaurentQ(1);                   // span{(1, 0)}
    const auto is = span_intersection(c, d);
    REQUIRE(is.cols() == 1);
    // the intersection is generated by (t-1, 0) up to a unit
    LaurentQ q, r;
    laurent_q_divmod(is(0, 0), c(0, 0), q, r);
    CHECK(r.is_zero());
    CHECK(q.is_unit());
    CHECK(is(1, 0).is_zero());
}

TEST_CASE("solve_in_ring certifies integral solvability") {
    const Matrix<BigInt> m{{2, 0}, {0, 3}};
    const Matrix<BigInt> good{{4}, {9}}, bad{{1}, {0}};
    auto x = solve_in_ring(m, good);
    REQUIRE(x);
    CHECK(m * *x == good);
    CHECK_FALSE(solve_in_ring(m, bad));
}

TEST_CASE("unimodular completion") {
    Matrix<BigInt> e(3, 1);
    e(0, 0) = 2;
    e(1, 0) = 3;
    e(2, 0) = 1;
    auto c = unimodular_completion(e);
    REQUIRE(c);
    CHECK(abs(to_integer(determinant(to_rational_matrix(*c)))) == 1);
    Matrix<BigInt> bad(3, 1);
    bad(0, 0) = 2;  // (2,0,0) is not primitive
    CHECK_FALSE(unimodular_completion(bad));
}
