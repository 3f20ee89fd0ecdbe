#include "msection/intersection_forms.hpp"

#include "msection/complexes.hpp"
#include "msection/crossing.hpp"
#include "msection/fox.hpp"
#include "msection/homology.hpp"
#include "msection/linalg.hpp"

#include <stdexcept>

namespace msec {
namespace {

LaurentZ conj_dot(const std::vector<LaurentZ>& loop, const std::vector<LaurentZ>& dual) {
    if (loop.size() != dual.size()) throw std::invalid_argument("frame length mismatch");
    LaurentZ s;
    for (std::size_t k = 0; k < loop.size(); ++k) s += loop[k].conj() * dual[k];
    return s;
}

// Loop-frame vector of a curve-coordinate tuple: sum of x_c * fox(curve_c).
std::vector<LaurentZ> expand_loop(const MultisectionDiagram& d, std::size_t sector,
                                  const std::vector<LaurentZ>& coords) {
    const auto& col = d.collections[sector];
    if (coords.size() != col.curves.size())
        throw std::invalid_argument("curve coordinate tuple has wrong length for collection '" +
                                    col.name + "'");
    std::vector<LaurentZ> v(d.rose.gen_count());
    for (std::size_t c = 0; c < col.curves.size(); ++c) {
        if (coords[c].is_zero()) continue;
        const auto f = fox_class(d.rose, col.curves[c], d.twist);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += coords[c] * f[k];
    }
    return v;
}

void check_absolute_cycle(const MultisectionDiagram& d, const SectorTuples& x,
                          std::vector<std::vector<LaurentZ>>& loops) {
    if (x.size() != d.n()) throw std::invalid_argument("cycle tuple has wrong sector count");
    std::vector<LaurentZ> total(d.rose.gen_count());
    for (std::size_t i = 0; i < x.size(); ++i) {
        loops.push_back(expand_loop(d, i, x[i]));
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += loops.back()[k];
    }
    for (const auto& v : total)
        if (!v.is_zero()) throw std::domain_error("non-cycle input: sector classes do not sum to zero");
}

void check_relative_cycle(const MultisectionDiagram& d, const SectorTuples& y) {
    if (y.size() != d.n()) throw std::invalid_argument("cycle tuple has wrong sector count");
    std::vector<LaurentZ> total(d.rose.gen_count());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i].size() != d.rose.gen_count())
            throw std::invalid_argument("dual coordinate tuple has wrong length");
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += y[i][k];
        // y_i must lie in J_i: orthogonal to every curve of collection i
        for (const Word& w : d.collections[i].curves) {
            const auto f = fox_class(d.rose, w, d.twist);
            if (!conj_dot(f, y[i]).is_zero())
                throw std::domain_error("non-cycle input: sector component not orthogonal to '" +
                                        d.collections[i].name + "'");
        }
    }
    for (const auto& v : total)
        if (!v.is_zero()) throw std::domain_error("non-cycle input: dual components do not sum to zero");
}

std::vector<LaurentZ> to_laurent_vec(const std::vector<BigInt>& v) {
    std::vector<LaurentZ> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = LaurentZ(v[i]);
    return out;
}

SectorTuples to_laurent_tuples(const std::vector<std::vector<BigInt>>& x) {
    SectorTuples out;
    for (const auto& v : x) out.push_back(to_laurent_vec(v));
    return out;
}

std::vector<std::vector<std::vector<BigInt>>> split_cycles(const MultisectionDiagram& d,
                                                           const Matrix<BigInt>& cycles,
                                                           const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<std::vector<BigInt>>> out;
    for (std::size_t j = 0; j < cycles.cols(); ++j) {
        std::vector<std::vector<BigInt>> tuple;
        std::size_t off = 0;
        for (std::size_t i = 0; i < d.n(); ++i) {
            std::vector<BigInt> part(sizes[i]);
            for (std::size_t r = 0; r < sizes[i]; ++r) part[r] = cycles(off + r, j);
            off += sizes[i];
            tuple.push_back(std::move(part));
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

}  // namespace

LaurentZ pair_H2(const MultisectionDiagram& d, const SectorTuples& x, const SectorTuples& y) {
    if (d.closed) throw std::domain_error("pair_H2 is the bounded-case pairing");
    std::vector<std::vector<LaurentZ>> loops;
    check_absolute_cycle(d, x, loops);
    check_relative_cycle(d, y);
    LaurentZ total;
    for (std::size_t i = 0; i < d.n(); ++i)
        for (std::size_t j = i + 1; j < d.n(); ++j) total += conj_dot(loops[i], y[j]);
    return total;
}

BigInt pair_H2_untwisted(const MultisectionDiagram& d, const std::vector<std::vector<BigInt>>& x,
                         const std::vector<std::vector<BigInt>>& y) {
    return pair_H2(d, to_laurent_tuples(x), to_laurent_tuples(y)).augment();
}

LaurentZ pair_H1_H3(const MultisectionDiagram& d, const std::vector<LaurentZ>& a,
                    const std::vector<LaurentZ>& b, OddPairing which) {
    const std::size_t N = d.rose.gen_count();
    if (a.size() != N || b.size() != N) throw std::invalid_argument("frame length mismatch");
    if (which == OddPairing::h1_absolute) {
        // b must be orthogonal to every defining curve (element of cap J_i)
        for (const auto& col : d.collections)
            for (const Word& w : col.curves) {
                const auto f = fox_class(d.rose, w, d.twist);
                if (!conj_dot(f, b).is_zero())
                    throw std::domain_error("b is not in the intersection of the J submodules");
            }
        return conj_dot(a, b);
    }
    // a dual frame, b loop frame in cap L_i: check b in every L-span over Q(t)
    Matrix<LaurentQ> bm(N, 1);
    for (std::size_t k = 0; k < N; ++k) bm(k, 0) = to_laurent_q(b[k]);
    for (std::size_t i = 0; i < d.n(); ++i) {
        const auto L = L_submodule_twisted(d, i);
        if (!solve_linear_columns(to_ratfunc_matrix(L.generators), to_ratfunc_matrix(bm)))
            throw std::domain_error("b is not in the intersection of the L submodules");
    }
    // <a(dual), b(loop)> = -conj(<b,a>)
    return -(conj_dot(b, a).conj());
}

Matrix<LaurentZ> closed_H2_form(const MultisectionDiagram& d,
                                const std::vector<SectorTuples>& cycles) {
    if (!d.closed) throw std::domain_error("closed_H2_form needs a closed diagram");
    const std::size_t n = d.n();
    // Pairings of the defining curve words; every curve is killed by the
    // twist, so these are honest class pairings and expand sesquilinearly.
    std::vector<std::vector<std::vector<std::vector<LaurentZ>>>> curve_pair(n);
    for (std::size_t i = 0; i < n; ++i) {
        curve_pair[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            curve_pair[i][j].resize(d.collections[i].curves.size());
            for (std::size_t ci = 0; ci < d.collections[i].curves.size(); ++ci) {
                curve_pair[i][j][ci].resize(d.collections[j].curves.size());
                for (std::size_t cj = 0; cj < d.collections[j].curves.size(); ++cj)
                    curve_pair[i][j][ci][cj] = equivariant_intersection(
                        d.rose, d.collections[i].curves[ci], d.collections[j].curves[cj], d.twist);
            }
        }
    }
    auto pair_sectors = [&](const std::vector<LaurentZ>& xi, std::size_t i,
                            const std::vector<LaurentZ>& yj, std::size_t j) {
        LaurentZ s;
        for (std::size_t ci = 0; ci < xi.size(); ++ci)
            for (std::size_t cj = 0; cj < yj.size(); ++cj)
                s += xi[ci].conj() * yj[cj] * curve_pair[i][j][ci][cj];
        return s;
    };
    Matrix<LaurentZ> gram(cycles.size(), cycles.size());
    for (std::size_t u = 0; u < cycles.size(); ++u)
        for (std::size_t v = 0; v < cycles.size(); ++v) {
            LaurentZ s;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    s += pair_sectors(cycles[u][i], i, cycles[v][j], j);
            gram(u, v) = s;
        }
    return gram;
}

SymmetricFormInfo closed_H2_form_untwisted(
    const MultisectionDiagram& d, const std::vector<std::vector<std::vector<BigInt>>>& cycles) {
    std::vector<SectorTuples> lifted;
    for (const auto& cy : cycles) lifted.push_back(to_laurent_tuples(cy));
    const Matrix<LaurentZ> gram = closed_H2_form(d, lifted);
    SymmetricFormInfo info;
    info.gram = gram.map<BigInt>([](const LaurentZ& v) { return v.augment(); });
    if (info.gram != info.gram.transposed())
        throw std::logic_error("untwisted closed intersection form is not symmetric");
    if (info.gram.rows() > 0) info.det = to_integer(determinant(to_rational_matrix(info.gram)));

    // Exact signature by symmetric (Lagrange) reduction over Q.
    Matrix<BigRational> m = to_rational_matrix(info.gram);
    const std::size_t nn = m.rows();
    std::vector<bool> done(nn, false);
    for (std::size_t step = 0; step < nn; ++step) {
        std::size_t piv = nn;
        for (std::size_t i = 0; i < nn; ++i)
            if (!done[i] && m(i, i) != 0) { piv = i; break; }
        if (piv == nn) {
            // no nonzero diagonal left; look for an off-diagonal entry
            std::size_t a = nn, b = nn;
            for (std::size_t i = 0; i < nn && a == nn; ++i)
                for (std::size_t j = i + 1; j < nn && a == nn; ++j)
                    if (!done[i] && !done[j] && m(i, j) != 0) { a = i; b = j; }
            if (a == nn) break;  // remaining block is zero
            m.addmul_row(a, b, BigRational(1));
            m.addmul_col(a, b, BigRational(1));
            piv = a;
        }
        const BigRational pivot = m(piv, piv);
        info.positive += pivot > 0 ? 1 : 0;
        info.negative += pivot < 0 ? 1 : 0;
        for (std::size_t k = 0; k < nn; ++k) {
            if (k == piv || m(piv, k) == 0) continue;
            const BigRational c = m(piv, k) / pivot;
            m.addmul_row(k, piv, -c);
            m.addmul_col(k, piv, -c);
        }
        done[piv] = true;
    }
    info.zero = static_cast<int>(nn) - info.positive - info.negative;
    return info;
}

std::vector<std::vector<std::vector<BigInt>>> extract_absolute_H2_cycles(
    const MultisectionDiagram& d) {
    const auto detail = homology_over_Z_detailed(build_absolute_z(d));
    std::vector<std::size_t> sizes(d.n(), d.p());
    return split_cycles(d, detail.free_cycles[2], sizes);
}

std::vector<std::vector<std::vector<BigInt>>> extract_relative_H2_cycles(
    const MultisectionDiagram& d) {
    const auto c = build_relative_z(d);
    const auto detail = homology_over_Z_detailed(c);
    std::vector<std::size_t> sizes(d.n());
    // block sizes of (+) J_i from the complex labels
    for (std::size_t i = 0; i < d.n(); ++i) sizes[i] = J_orthogonal(d, i).generators.cols();
    // convert J-basis coordinates back to dual coordinates per sector
    const auto raw = split_cycles(d, detail.free_cycles[2], sizes);
    std::vector<std::vector<std::vector<BigInt>>> out;
    for (const auto& tuple : raw) {
        std::vector<std::vector<BigInt>> dual_tuple;
        for (std::size_t i = 0; i < d.n(); ++i) {
            const auto J = J_orthogonal(d, i).generators;
            std::vector<BigInt> v(d.rose.gen_count(), BigInt(0));
            for (std::size_t c2 = 0; c2 < J.cols(); ++c2)
                for (std::size_t k = 0; k < v.size(); ++k) v[k] += J(k, c2) * tuple[i][c2];
            dual_tuple.push_back(std::move(v));
        }
        out.push_back(std::move(dual_tuple));
    }
    return out;
}

std::vector<std::vector<std::vector<BigInt>>> extract_closed_H2_cycles(
    const MultisectionDiagram& d) {
    const auto detail = homology_over_Z_detailed(build_closed_z(d));
    std::vector<std::size_t> sizes(d.n(), d.p());
    return split_cycles(d, detail.free_cycles[2], sizes);
}

}  // namespace msec
