#include "msection/laurent.hpp"
#include "msection/ratfunc.hpp"

#include <doctest.h>

#include <random>

using namespace msec;

namespace {

LaurentQ random_laurent(std::mt19937& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms), expd(-3, 3), coef(-5, 5);
    LaurentQ p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expd(rng), BigRational(coef(rng)));
    return p;
}

}  // namespace

TEST_CASE("rationals are reduced with positive denominator") {
    const BigRational q = make_rational(6, -4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(make_rational(0, 7) == BigRational(0));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("laurent polynomials store no zero coefficients") {
    LaurentZ p = LaurentZ::monomial(BigInt(2), 3);
    p.add_term(3, BigInt(-2));
    CHECK(p.is_zero());
    CHECK(p.coeffs().empty());

    const LaurentZ t = LaurentZ::t();
    const LaurentZ q = (t - LaurentZ(1)) * (t + LaurentZ(1));
    CHECK(q == LaurentZ::t(2) - LaurentZ(1));
    CHECK(q.coeff(1) == 0);
    CHECK(q.span() == 2);
}

TEST_CASE("conjugation and augmentation") {
    LaurentZ p;
    p.add_term(2, BigInt(3));
    p.add_term(-1, BigInt(-1));
    CHECK(p.conj() == LaurentZ::monomial(BigInt(3), -2) - LaurentZ::t(1));
    CHECK(p.augment() == 2);
    CHECK(p.conj().conj() == p);
}

TEST_CASE("units of the Laurent rings") {
    CHECK(LaurentZ::monomial(BigInt(-1), 5).is_unit());
    CHECK_FALSE(LaurentZ(2).is_unit());
    CHECK_FALSE((LaurentZ::t() + LaurentZ(1)).is_unit());
    CHECK(LaurentQ::monomial(BigRational(7, 3), -2).is_unit());
}

TEST_CASE("laurent division with remainder") {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        const LaurentQ a = random_laurent(rng);
        LaurentQ b = random_laurent(rng);
        if (b.is_zero()) b = LaurentQ(1);
        LaurentQ q, r;
        laurent_q_divmod(a, b, q, r);
        CHECK(a == q * b + r);
        if (!r.is_zero()) CHECK(r.span() < b.span());
    }
}

TEST_CASE("unit normalization is monic with nonzero constant term") {
    LaurentQ p;
    p.add_term(-2, BigRational(3));
    p.add_term(1, BigRational(-6));
    LaurentQ unit;
    const LaurentQ n = laurent_q_unit_normalize(p, &unit);
    CHECK(n.min_exp() == 0);
    CHECK(n.leading_coeff() == 1);
    CHECK(p == unit * n);
}

TEST_CASE("rational function canonical form") {
    // (t-1)/t^3 has a unit denominator: absorbed into the numerator
    const RationalFunction f(LaurentQ::t(1) - LaurentQ(1), LaurentQ::t(3));
    CHECK(f.is_polynomial());

    const RationalFunction g(LaurentQ(1), LaurentQ::t(1) - LaurentQ(1));
    CHECK(g.den() == LaurentQ::t(1) - LaurentQ(1));
    CHECK(g.num() == LaurentQ(1));

    // denominator normalized monic with nonzero constant term
    LaurentQ d;
    d.add_term(2, BigRational(2));
    d.add_term(1, BigRational(-2));
    const RationalFunction h(LaurentQ(1), d);  // 1 / (2t^2 - 2t)
    CHECK(h.den().leading_coeff() == 1);
    CHECK(h.den().min_exp() == 0);
    CHECK(h * RationalFunction(d) == RationalFunction(1));
}

TEST_CASE("canonicalization is idempotent and multiplicative") {
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
        LaurentQ na = random_laurent(rng), nb = random_laurent(rng);
        LaurentQ da = random_laurent(rng), db = random_laurent(rng);
        if (da.is_zero()) da = LaurentQ(1);
        if (db.is_zero()) db = LaurentQ(1);
        const RationalFunction a(na, da), b(nb, db);
        // idempotent: rebuilding from the canonical pieces changes nothing
        CHECK(RationalFunction(a.num(), a.den()) == a);
        // multiplicative: canon(a*b) = canon(a)*canon(b) as canonical forms
        CHECK(a * b == RationalFunction(na * nb, da * db));
    }
}

TEST_CASE("field inverse round trip") {
    const RationalFunction f(LaurentQ::t(2) - LaurentQ(3), LaurentQ::t(1) + LaurentQ(1));
    CHECK(f * f.inverse() == RationalFunction(1));
    CHECK_THROWS_AS(RationalFunction(0).inverse(), std::domain_error);
}
