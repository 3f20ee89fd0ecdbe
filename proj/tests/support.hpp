#pragma once

// Shared fixtures and randomized generators for the test suites.

#include "msection/diagram.hpp"
#include "msection/fox.hpp"
#include "msection/linalg.hpp"
#include "msection/snf.hpp"

#include <random>
#include <string>
#include <vector>

namespace msec::testing {

inline std::string fixture_path(const std::string& name) {
#ifdef MSECTION_FIXTURE_DIR
    return std::string(MSECTION_FIXTURE_DIR) + "/" + name;
#else
    return "tests/fixtures/" + name;
#endif
}

// The disk bundle over S^2 with Euler number -2 (built in code so the unit
// tests do not depend on the parser).
inline MultisectionDiagram ex1_diagram() {
    MultisectionDiagram d;
    d.rose = RoseSurface::standard(2, 2);
    d.collections.push_back({"alpha", {d.rose.parse_word("a1"), d.rose.parse_word("b2")}});
    d.collections.push_back({"beta", {d.rose.parse_word("a2"), d.rose.parse_word("b1")}});
    d.collections.push_back(
        {"gamma", {d.rose.parse_word("d1 a1 a2^-1"), d.rose.parse_word("b1 a2^-1 b2 a2^-1")}});
    d.arcs.push_back({"e", {BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(1)}});
    d.twist = TwistSpec::trivial(5);
    return d;
}

inline MultisectionDiagram ex2_diagram(bool twisted = true) {
    MultisectionDiagram d;
    d.rose = RoseSurface::standard(2, 1);
    d.collections.push_back({"alpha", {d.rose.parse_word("a1")}});
    d.collections.push_back({"beta", {d.rose.parse_word("b1")}});
    d.collections.push_back({"gamma", {d.rose.parse_word("a1^-1 a2 b2 a2^-1 a1 b1 a1^-1")}});
    d.arcs.push_back({"e", {BigInt(0), BigInt(0), BigInt(0), BigInt(1)}});
    d.arcs.push_back({"e'", {BigInt(0), BigInt(0), BigInt(1), BigInt(0)}});
    d.twist = TwistSpec::trivial(4);
    if (twisted) d.twist.set_image(2, {1, 1});  // phi(x) = t
    return d;
}

inline MultisectionDiagram cp2_diagram() {
    MultisectionDiagram d;
    d.rose = RoseSurface::standard_closed(1);
    d.closed = true;
    d.collections.push_back({"alpha", {d.rose.parse_word("a1")}});
    d.collections.push_back({"beta", {d.rose.parse_word("b1")}});
    d.collections.push_back({"gamma", {d.rose.parse_word("a1 b1")}});
    d.twist = TwistSpec::trivial(2);
    return d;
}

inline Word random_word(std::mt19937& rng, const RoseSurface& rose, int max_len, int min_len = 1) {
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(rose.gen_count()) - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<Letter> ls;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return Word(std::move(ls));
}

// A homologically valid bounded diagram: random curve words per collection,
// resampled until each collection's abelian classes have full rank p.
inline MultisectionDiagram random_valid_diagram(std::mt19937& rng, int max_g = 3, int max_b = 3,
                                                int max_n = 4) {
    std::uniform_int_distribution<int> gd(1, max_g), bd(1, max_b), nd(2, max_n);
    const int g = gd(rng), b = bd(rng), n = nd(rng);
    std::uniform_int_distribution<int> pd(0, g);
    const int p = pd(rng);
    MultisectionDiagram d;
    d.rose = RoseSurface::standard(g, b);
    d.twist = TwistSpec::trivial(d.rose.gen_count());
    for (int i = 0; i < n; ++i) {
        CurveCollection col;
        col.name = "c" + std::to_string(i + 1);
        for (int tries = 0; tries < 200; ++tries) {
            col.curves.clear();
            for (int j = 0; j < p; ++j) {
                Word w = random_word(rng, d.rose, 5).cyclically_reduced();
                while (w.empty()) w = random_word(rng, d.rose, 5).cyclically_reduced();
                col.curves.push_back(w);
            }
            Matrix<BigRational> m(d.rose.gen_count(), col.curves.size());
            for (std::size_t j = 0; j < col.curves.size(); ++j) {
                const auto v = abelian_class(d.rose, col.curves[j]);
                for (std::size_t k = 0; k < v.size(); ++k) m(k, j) = BigRational(v[k]);
            }
            if (rank_kernel_image(m).rank == col.curves.size()) break;
        }
        d.collections.push_back(std::move(col));
    }
    return d;
}

// A monomial twist phi with phi(curve) = 1 for every defining curve: an
// integer vector in the kernel of the stacked abelian classes.
inline TwistSpec random_valid_twist(std::mt19937& rng, const MultisectionDiagram& d) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& col : d.collections)
        for (const auto& w : col.curves) rows.push_back(abelian_class(d.rose, w));
    Matrix<BigInt> m(rows.size(), d.rose.gen_count());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    const Matrix<BigInt> ker = kernel_basis(m);
    TwistSpec phi = TwistSpec::trivial(d.rose.gen_count());
    if (ker.cols() == 0) return phi;
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<BigInt> exps(d.rose.gen_count(), BigInt(0));
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        const int x = coef(rng);
        if (x == 0) continue;
        for (std::size_t k = 0; k < exps.size(); ++k) exps[k] += x * ker(k, c);
    }
    for (std::size_t k = 0; k < exps.size(); ++k) {
        const long e = static_cast<long>(exps[k].convert_to<long long>());
        phi.set_image(k, {1, e});
    }
    return phi;
}

}  // namespace msec::testing
