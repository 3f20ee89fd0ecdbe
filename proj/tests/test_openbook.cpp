#include "msection/open_book.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace msec;
using namespace msec::testing;

TEST_CASE("Example 1 monodromy and boundary") {
    const auto d = ex1_diagram();
    const auto m = monodromy_action(d);
    CHECK(m.page.genus == 0);
    CHECK(m.page.boundary == 2);
    CHECK(m.page.components == 1);

    REQUIRE(m.r_steps.size() == 3);
    CHECK(m.r_steps[0] == Matrix<BigInt>{{0, 0}});
    CHECK(m.r_steps[1] == Matrix<BigInt>{{0, -1}});
    CHECK(m.r_steps[2] == Matrix<BigInt>{{-2, 1}});
    CHECK(m.action == Matrix<BigInt>{{1}});
    CHECK(m.action_det == 1);
    CHECK(m.xi == Matrix<BigInt>{{-2}});

    const auto& h = m.boundary_homology;
    CHECK(h.groups[0].free_rank == 1);
    CHECK(h.groups[1].free_rank == 0);
    REQUIRE(h.groups[1].torsion.size() == 1);
    CHECK(h.groups[1].torsion[0] == 2);
    CHECK(h.groups[2].is_zero());
    CHECK(h.groups[3].free_rank == 1);
}

TEST_CASE("Example 2 monodromy and boundary") {
    const auto d = ex2_diagram(false);
    const auto m = monodromy_action(d);
    CHECK(m.action == Matrix<BigInt>{{1, 0}, {-1, 1}});
    CHECK(m.action_det == 1);
    // xi(e) = -y, xi(e') = 0 in the completion basis (x, y)
    CHECK(m.xi == Matrix<BigInt>{{0, 0}, {-1, 0}});
    CHECK(m.boundary_homology.groups[1].free_rank == 1);
    CHECK(m.boundary_homology.groups[1].torsion.empty());
    CHECK(m.boundary_homology.groups[2].free_rank == 1);
}

TEST_CASE("trivial recursion gives the identity action") {
    // no gamma interaction: two-sector diagram with a single curve and an
    // arc that pairs trivially with both collections
    MultisectionDiagram d;
    d.rose = RoseSurface::standard(1, 2);  // generators a1, b1, d1
    d.twist = TwistSpec::trivial(3);
    d.collections.push_back({"c1", {d.rose.parse_word("a1")}});
    d.collections.push_back({"c2", {d.rose.parse_word("a1")}});
    d.arcs.push_back({"e", {BigInt(0), BigInt(0), BigInt(1)}});
    REQUIRE(validate(d).ok);
    const auto m = monodromy_action(d);
    CHECK(m.action == Matrix<BigInt>::identity(1));
    for (const auto& r : m.r_steps) CHECK(r.is_zero());
    CHECK(m.xi.is_zero());
    // S = 0 forces H_1(dX) free of rank J_1/L_1
    CHECK(m.boundary_homology.groups[1].free_rank == 1);
    CHECK(m.boundary_homology.groups[2].free_rank == 1);
}

TEST_CASE("open book homology from a bare xi matrix") {
    const auto h0 = open_book_homology(1, Matrix<BigInt>(3, 3));  // trivial monodromy
    CHECK(h0.groups[1].free_rank == 3);
    CHECK(h0.groups[2].free_rank == 3);

    const auto h1 = open_book_homology(1, Matrix<BigInt>{{-2}});
    REQUIRE(h1.groups[1].torsion.size() == 1);
    CHECK(h1.groups[1].torsion[0] == 2);
    CHECK(h1.groups[2].is_zero());

    const auto h2 = open_book_homology(1, Matrix<BigInt>{{1, 0}, {0, 3}});
    CHECK(h2.groups[1].free_rank == 0);
    REQUIRE(h2.groups[1].torsion.size() == 1);
    CHECK(h2.groups[1].torsion[0] == 3);
    CHECK(h2.groups[2].is_zero());

    const auto h3 = open_book_homology(2, Matrix<BigInt>(0, 0));
    CHECK(h3.groups[0].free_rank == 2);
    CHECK(h3.groups[3].free_rank == 2);
}

TEST_CASE("disk page needs no arcs") {
    // g = p = 1, b = 1: the page is a disk and the boundary is S^3
    MultisectionDiagram d;
    d.rose = RoseSurface::standard(1, 1);
    d.twist = TwistSpec::trivial(2);
    d.collections.push_back({"c1", {d.rose.parse_word("a1")}});
    d.collections.push_back({"c2", {d.rose.parse_word("a1")}});
    REQUIRE(validate(d).ok);
    const auto m = monodromy_action(d);
    CHECK(m.action.rows() == 0);
    CHECK(m.xi.rows() == 0);
    CHECK(m.boundary_homology.groups[0].free_rank == 1);
    CHECK(m.boundary_homology.groups[1].is_zero());
    CHECK(m.boundary_homology.groups[2].is_zero());
    CHECK(m.boundary_homology.groups[3].free_rank == 1);
}

TEST_CASE("guards") {
    auto no_arcs = ex1_diagram();
    no_arcs.arcs.clear();
    CHECK_THROWS_AS(monodromy_action(no_arcs), std::domain_error);

    auto bad_arc = ex1_diagram();
    bad_arc.arcs[0].dual = {BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(0)};  // hits a1
    CHECK_THROWS_AS(monodromy_action(bad_arc), std::domain_error);

    auto wrong_count = ex1_diagram();
    wrong_count.arcs.push_back({"f", {BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(2)}});
    CHECK_THROWS_AS(monodromy_action(wrong_count), std::domain_error);
}

TEST_CASE("unconstrained arc coordinates do not move the results") {
    std::mt19937 rng(131);
    std::uniform_int_distribution<int> coef(-5, 5);

    const auto base1 = monodromy_action(ex1_diagram());
    for (int it = 0; it < 10; ++it) {
        auto d = ex1_diagram();
        // free coordinates of e: the b1 and a2 entries (L_1 span directions)
        d.arcs[0].dual[1] = coef(rng);
        d.arcs[0].dual[2] = coef(rng);
        const auto m = monodromy_action(d);
        CHECK(m.action == base1.action);
        CHECK(m.xi == base1.xi);
        CHECK(abs(m.action_det) == 1);
    }

    const auto base2 = monodromy_action(ex2_diagram(false));
    for (int it = 0; it < 10; ++it) {
        auto d = ex2_diagram(false);
        d.arcs[0].dual[2] = coef(rng);  // the a2-dual coordinate of e
        const auto m = monodromy_action(d);
        CHECK(m.action == base2.action);
        CHECK(m.xi == base2.xi);
        CHECK(abs(m.action_det) == 1);
    }
}

TEST_CASE("identification lemma rank bookkeeping") {
    for (const auto& d : {ex1_diagram(), ex2_diagram(false)}) {
        const auto rep = validate(d);
        const auto m = monodromy_action(d);
        const long g = d.rose.genus(), b = d.rose.boundary_components();
        const long h = rep.page_genus, p = static_cast<long>(d.p());
        // rank J_1/L_1 = g + h + b - 1 - p = number of arcs = size of xi
        CHECK(static_cast<long>(m.xi.rows()) == g + h + b - 1 - p);
        CHECK(static_cast<long>(m.xi.cols()) == g + h + b - 1 - p);
        CHECK(static_cast<long>(m.action.rows()) == g + h + b - 1 - p);
    }
}
