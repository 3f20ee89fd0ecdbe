#include "msection/intersection_forms.hpp"

#include "msection/homology.hpp"
#include "msection/linalg.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace msec;
using namespace msec::testing;

namespace {

// The Example 1 generators: (alpha_2, beta_2 - 2 beta_1, -gamma_2) of H_2(X)
// and (alpha_1, -beta_1, beta_1 - alpha_1) of H_2(X, dX).
std::vector<std::vector<BigInt>> ex1_absolute_generator() {
    return {{BigInt(0), BigInt(1)}, {BigInt(-2), BigInt(1)}, {BigInt(0), BigInt(-1)}};
}

std::vector<std::vector<BigInt>> ex1_relative_generator() {
    return {{BigInt(0), BigInt(-1), BigInt(0), BigInt(0), BigInt(0)},
            {BigInt(0), BigInt(0), BigInt(0), BigInt(1), BigInt(0)},
            {BigInt(0), BigInt(1), BigInt(0), BigInt(-1), BigInt(0)}};
}

}  // namespace

TEST_CASE("Example 1 pairing of the printed generators") {
    const auto d = ex1_diagram();
    CHECK(pair_H2_untwisted(d, ex1_absolute_generator(), ex1_relative_generator()) == 1);

    // zero cycle pairs to zero; doubling one side doubles the value
    const std::vector<std::vector<BigInt>> zero = {{BigInt(0), BigInt(0)},
                                                   {BigInt(0), BigInt(0)},
                                                   {BigInt(0), BigInt(0)}};
    CHECK(pair_H2_untwisted(d, zero, ex1_relative_generator()) == 0);
    auto doubled = ex1_relative_generator();
    for (auto& v : doubled)
        for (auto& x : v) x *= 2;
    CHECK(pair_H2_untwisted(d, ex1_absolute_generator(), doubled) == 2);
}

TEST_CASE("non-cycles are rejected") {
    const auto d = ex1_diagram();
    // the uncorrected tuple (alpha_2, beta_2 - beta_1, -gamma_2) does not
    // close up under the sum map
    const std::vector<std::vector<BigInt>> not_cycle = {
        {BigInt(0), BigInt(1)}, {BigInt(-1), BigInt(1)}, {BigInt(0), BigInt(-1)}};
    CHECK_THROWS_AS(pair_H2_untwisted(d, not_cycle, ex1_relative_generator()), std::domain_error);
}

TEST_CASE("odd pairing on Example 2") {
    const auto d = ex2_diagram(false);
    // a = class of x; b = generator of the triple J intersection (e')
    std::vector<LaurentZ> a(4), b(4);
    a[2] = LaurentZ(1);
    b[2] = LaurentZ(1);
    const auto v = pair_H1_H3(d, a, b, OddPairing::h1_absolute);
    CHECK(abs(v.augment()) == 1);  // unimodular duality pair

    std::vector<LaurentZ> zero(4);
    CHECK(pair_H1_H3(d, zero, b, OddPairing::h1_absolute).is_zero());

    // b outside the triple intersection is rejected
    std::vector<LaurentZ> bad(4);
    bad[0] = LaurentZ(1);
    CHECK_THROWS_AS(pair_H1_H3(d, a, bad, OddPairing::h1_absolute), std::domain_error);
}

TEST_CASE("odd pairing is sesquilinear in the module structure") {
    const auto d = ex2_diagram();
    std::vector<LaurentZ> a(4), b(4);
    a[2] = LaurentZ(1);
    b[2] = LaurentZ(1);
    const auto base = pair_H1_H3(d, a, b, OddPairing::h1_absolute);
    // scaling b by the unit t scales the value by t
    std::vector<LaurentZ> bt(4);
    bt[2] = LaurentZ::t(1);
    CHECK(pair_H1_H3(d, a, bt, OddPairing::h1_absolute) == base * LaurentZ::t(1));
    // scaling a by t scales the value by the conjugate t^-1
    std::vector<LaurentZ> at(4);
    at[2] = LaurentZ::t(1);
    CHECK(pair_H1_H3(d, at, b, OddPairing::h1_absolute) == base * LaurentZ::t(-1));
}

TEST_CASE("odd pairing against the L side") {
    // bisection with L_1 = L_2 = <a1>: b = a1 lies in the intersection
    MultisectionDiagram bis;
    bis.rose = RoseSurface::standard_closed(1);
    bis.closed = true;
    bis.twist = TwistSpec::trivial(2);
    bis.collections.push_back({"c1", {bis.rose.parse_word("a1")}});
    bis.collections.push_back({"c2", {bis.rose.parse_word("a1")}});
    std::vector<LaurentZ> a(2), b(2);
    a[0] = LaurentZ(1);  // dual frame vector pairing 1 with a1
    b[0] = LaurentZ(1);  // the class a1
    const auto v = pair_H1_H3(bis, a, b, OddPairing::h1_relative);
    CHECK(abs(v.augment()) == 1);
}

TEST_CASE("closed intersection form of the cp2 fixture") {
    const auto d = cp2_diagram();
    const auto cycles = extract_closed_H2_cycles(d);
    REQUIRE(cycles.size() == 1);
    const auto info = closed_H2_form_untwisted(d, cycles);
    REQUIRE(info.gram.rows() == 1);
    CHECK(abs(info.gram(0, 0)) == 1);
    CHECK(abs(info.det) == 1);
    CHECK(std::abs(info.signature()) == 1);
}

TEST_CASE("diagram with no H2 gives an empty form") {
    const auto d = ex2_diagram(false);
    CHECK(extract_absolute_H2_cycles(d).empty());
}

TEST_CASE("connected sum gives a block diagonal form") {
    MultisectionDiagram d;
    d.rose = RoseSurface::standard_closed(2);
    d.closed = true;
    d.twist = TwistSpec::trivial(4);
    d.collections.push_back({"alpha", {d.rose.parse_word("a1"), d.rose.parse_word("a2")}});
    d.collections.push_back({"beta", {d.rose.parse_word("b1"), d.rose.parse_word("b2")}});
    d.collections.push_back({"gamma", {d.rose.parse_word("a1 b1"), d.rose.parse_word("a2 b2")}});
    REQUIRE(validate(d).ok);
    const auto cycles = extract_closed_H2_cycles(d);
    REQUIRE(cycles.size() == 2);
    const auto info = closed_H2_form_untwisted(d, cycles);
    CHECK(info.gram(0, 1) == 0);
    CHECK(info.gram(1, 0) == 0);
    CHECK(abs(info.gram(0, 0)) == 1);
    CHECK(abs(info.gram(1, 1)) == 1);
    CHECK(abs(info.det) == 1);
    CHECK(info.zero == 0);
}

TEST_CASE("duality nondegeneracy over Q on the bounded fixtures") {
    for (const auto& d : {ex1_diagram()}) {
        const auto xs = extract_absolute_H2_cycles(d);
        const auto ys = extract_relative_H2_cycles(d);
        REQUIRE(xs.size() == ys.size());
        REQUIRE(!xs.empty());
        Matrix<BigRational> m(xs.size(), ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j)
                m(i, j) = BigRational(pair_H2_untwisted(d, xs[i], ys[j]));
        CHECK(!(determinant(m) == BigRational(0)));
    }
}

TEST_CASE("twisted pairing: module structure and specialization") {
    // genus-2 one-boundary trisection a1 / b1 / a1 b1 with phi(a2) = t: the
    // twist misses every curve, and H_2 is free of rank one both ways
    MultisectionDiagram d;
    d.rose = RoseSurface::standard(2, 1);
    d.twist = TwistSpec::trivial(4);
    d.twist.set_image(2, {1, 1});
    d.collections.push_back({"alpha", {d.rose.parse_word("a1")}});
    d.collections.push_back({"beta", {d.rose.parse_word("b1")}});
    d.collections.push_back({"gamma", {d.rose.parse_word("a1 b1")}});
    REQUIRE(validate(d).ok);

    SectorTuples x = {{-LaurentZ(1)}, {-LaurentZ(1)}, {LaurentZ(1)}};
    SectorTuples y(3, std::vector<LaurentZ>(4));
    y[0][1] = -LaurentZ(1);  // in J_alpha
    y[1][0] = LaurentZ(1);   // in J_beta
    y[2][0] = -LaurentZ(1);  // closes up inside J_gamma
    y[2][1] = LaurentZ(1);
    const LaurentZ base = pair_H2(d, x, y);
    CHECK(base == -LaurentZ(1));

    // scaling the absolute cycle by the unit t acts by conj(t) = t^-1,
    // scaling the relative one by t acts linearly
    SectorTuples xt = x;
    for (auto& sector : xt)
        for (auto& c : sector) c *= LaurentZ::t(1);
    CHECK(pair_H2(d, xt, y) == base * LaurentZ::t(-1));
    SectorTuples yt = y;
    for (auto& sector : yt)
        for (auto& c : sector) c *= LaurentZ::t(1);
    CHECK(pair_H2(d, x, yt) == base * LaurentZ::t(1));

    // t -> 1 recovers the untwisted pairing of the specialized cycles
    MultisectionDiagram plain = d;
    plain.twist = TwistSpec::trivial(4);
    const std::vector<std::vector<BigInt>> x0 = {{BigInt(-1)}, {BigInt(-1)}, {BigInt(1)}};
    std::vector<std::vector<BigInt>> y0;
    for (const auto& sector : y) {
        std::vector<BigInt> v;
        for (const auto& c : sector) v.push_back(c.augment());
        y0.push_back(v);
    }
    CHECK(pair_H2(d, xt, y).augment() == pair_H2_untwisted(plain, x0, y0));
}
