#include "msection/open_book.hpp"

#include "msection/fox.hpp"
#include "msection/linalg.hpp"
#include "msection/snf.hpp"

#include <stdexcept>

namespace msec {
namespace {

Matrix<BigInt> class_matrix(const MultisectionDiagram& d, std::size_t i) {
    const auto& col = d.collections[i];
    Matrix<BigInt> m(d.rose.gen_count(), col.curves.size());
    for (std::size_t j = 0; j < col.curves.size(); ++j) {
        const auto v = abelian_class(d.rose, col.curves[j]);
        for (std::size_t k = 0; k < v.size(); ++k) m(k, j) = v[k];
    }
    return m;
}

Matrix<BigInt> arcs_matrix(const MultisectionDiagram& d) {
    Matrix<BigInt> e(d.rose.gen_count(), d.arcs.size());
    for (std::size_t j = 0; j < d.arcs.size(); ++j) {
        if (d.arcs[j].dual.size() != d.rose.gen_count())
            throw std::invalid_argument("arc '" + d.arcs[j].name + "' has a wrong-length dual vector");
        for (std::size_t k = 0; k < d.rose.gen_count(); ++k) e(k, j) = d.arcs[j].dual[k];
    }
    return e;
}

// Pairing matrix (a_i . a_{i+1}) of curve families: rows are the relative
// classes of family u, columns the absolute classes of family v.
Matrix<BigInt> family_pairing(const Matrix<BigInt>& omega, const Matrix<BigInt>& u,
                              const Matrix<BigInt>& v) {
    return u.transposed() * omega * v;
}

Matrix<BigInt> integral_solve_transposed(const Matrix<BigInt>& p, const Matrix<BigInt>& rhs,
                                         const std::string& what) {
    // solves X * p = rhs for X over Q, then checks integrality
    auto xt = solve_linear_columns(to_rational_matrix(p.transposed()),
                                   to_rational_matrix(rhs.transposed()));
    if (!xt) throw std::domain_error(what + ": pairing system inconsistent");
    Matrix<BigInt> out(xt->cols(), xt->rows());
    for (std::size_t i = 0; i < xt->rows(); ++i)
        for (std::size_t j = 0; j < xt->cols(); ++j) {
            if (!is_integer((*xt)(i, j)))
                throw std::domain_error(what + ": inverse pairing action is not integral");
            out(j, i) = to_integer((*xt)(i, j));
        }
    return out;
}

std::vector<std::vector<std::size_t>> select_a_subsets(const MultisectionDiagram& d,
                                                       const Matrix<BigInt>& omega,
                                                       const std::vector<Matrix<BigInt>>& cls) {
    const std::size_t n = d.n();
    std::vector<std::vector<std::size_t>> idx(n);
    // fast path: the full collections, when every consecutive pairing is
    // invertible (standard position)
    bool full_ok = true;
    for (std::size_t i = 0; i < n && full_ok; ++i) {
        const Matrix<BigInt> p = family_pairing(omega, cls[i], cls[(i + 1) % n]);
        if (p.rows() != p.cols() ||
            determinant(to_rational_matrix(p)) == BigRational(0))
            full_ok = false;
    }
    if (full_ok) {
        for (std::size_t i = 0; i < n; ++i) {
            idx[i].resize(d.p());
            for (std::size_t j = 0; j < d.p(); ++j) idx[i][j] = j;
        }
        return idx;
    }
    // subset selection: common size = minimal rank of the consecutive
    // pairings, then pivot columns chained around the cycle
    std::size_t q = d.p();
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix<BigInt> p = family_pairing(omega, cls[i], cls[(i + 1) % n]);
        q = std::min(q, rank_kernel_image(to_rational_matrix(p)).rank);
    }
    idx[0].resize(d.p());
    for (std::size_t j = 0; j < d.p(); ++j) idx[0][j] = j;
    {
        // trim a_1 to q rows by pivoting on the transposed first pairing
        const Matrix<BigInt> p = family_pairing(omega, cls[0], cls[1 % n]);
        auto ki = rank_kernel_image(to_rational_matrix(p.transposed()));
        idx[0].assign(ki.pivot_cols.begin(), ki.pivot_cols.begin() + std::min<std::size_t>(q, ki.pivot_cols.size()));
    }
    for (std::size_t i = 1; i < n; ++i) {
        const Matrix<BigInt> p =
            family_pairing(omega, cls[i - 1].cols_subset(idx[i - 1]), cls[i]);
        auto ki = rank_kernel_image(to_rational_matrix(p));
        if (ki.pivot_cols.size() < q)
            throw std::domain_error("standard-position pairing singular between collections '" +
                                    d.collections[i - 1].name + "' and '" + d.collections[i].name +
                                    "'");
        idx[i].assign(ki.pivot_cols.begin(), ki.pivot_cols.begin() + q);
    }
    const Matrix<BigInt> closing = family_pairing(omega, cls[n - 1].cols_subset(idx[n - 1]),
                                                  cls[0].cols_subset(idx[0]));
    if (idx[0].size() != q || closing.rows() != closing.cols() ||
        determinant(to_rational_matrix(closing)) == BigRational(0))
        throw std::domain_error("standard-position pairing singular between collections '" +
                                d.collections[n - 1].name + "' and '" + d.collections[0].name + "'");
    return idx;
}

}  // namespace

HomologyReport open_book_homology(std::size_t s, const Matrix<BigInt>& xi) {
    HomologyReport rep;
    rep.ring = CoeffRing::Z;
    rep.groups.resize(4);
    rep.groups[0].free_rank = s;
    rep.groups[3].free_rank = s;
    auto sf = snf(xi);
    rep.groups[2].free_rank = xi.cols() - sf.rank;  // ker xi
    rep.groups[1].free_rank = xi.rows() - sf.rank;  // coker xi, free part
    for (const auto& f : sf.invariant_factors())
        if (!(f == BigInt(1))) rep.groups[1].torsion.push_back(f);
    return rep;
}

MonodromyResult monodromy_action(const MultisectionDiagram& d, const MonodromyOptions& opt) {
    if (d.closed) throw std::domain_error("the open book lives on a bounded diagram's boundary");
    const auto vrep = validate(d);
    if (!vrep.ok) throw std::domain_error("diagram invalid: " + vrep.summary());

    const std::size_t n = d.n();
    const std::size_t N = d.rose.gen_count();
    const Matrix<BigInt>& omega = d.rose.pairing_matrix();

    std::vector<Matrix<BigInt>> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = class_matrix(d, i);

    MonodromyResult res;
    res.page.genus = vrep.page_genus;
    res.page.boundary = d.rose.boundary_components();
    res.page.components = vrep.page_components;

    const Matrix<BigInt> arcs = arcs_matrix(d);
    const std::size_t k = arcs.cols();

    // arcs must be homologically disjoint from c_1
    if (!(cls[0].transposed() * arcs).is_zero())
        throw std::domain_error("arcs are not orthogonal to collection '" + d.collections[0].name +
                                "'");
    {
        const long expect = static_cast<long>(d.rose.genus()) + vrep.page_genus +
                            d.rose.boundary_components() - 1 - static_cast<long>(d.p());
        if (static_cast<long>(k) != expect)
            throw std::domain_error("cut system has " + std::to_string(k) + " arcs; the page needs " +
                                    std::to_string(expect));
        // a disk page needs no arcs: R and xi are empty
    }

    res.a_indices = opt.a_subsets.empty() ? select_a_subsets(d, omega, cls) : opt.a_subsets;
    if (res.a_indices.size() != n) throw std::invalid_argument("a-subset selection has wrong size");
    std::vector<Matrix<BigInt>> a_cls(n), a_dual(n);
    for (std::size_t i = 0; i < n; ++i) {
        a_cls[i] = cls[i].cols_subset(res.a_indices[i]);
        a_dual[i] = omega * a_cls[i];
    }

    // the recursion
    Matrix<BigInt> e = arcs;                // dual coordinates, N x k
    Matrix<BigInt> eps(N, k);               // loop coordinates, starts at 0
    res.e_steps.push_back(e);
    res.eps_steps.push_back(eps);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix<BigInt>& a_next = a_cls[(i + 1) % n];
        // (e_i . a_{i+1})(j,l) = <e_j, a_l> = -ab(a_l) . e_j
        const Matrix<BigInt> ea = -(e.transposed() * a_next);
        const Matrix<BigInt> aa = family_pairing(omega, a_cls[i], a_next);
        const Matrix<BigInt> r = integral_solve_transposed(aa, -ea, "monodromy step " + std::to_string(i + 1));
        e = e + a_dual[i] * r.transposed();
        eps = eps + a_cls[i] * r.transposed();
        if (!(e.transposed() * a_next).is_zero())
            throw std::logic_error("monodromy invariant failed: e_{i+1} not orthogonal to a_{i+1}");
        res.r_steps.push_back(r);
        res.e_steps.push_back(e);
        res.eps_steps.push_back(eps);
    }

    // J_1 (dual frame): everything orthogonal to the classes of c_1
    const Matrix<BigInt> jj = kernel_basis(cls[0].transposed());
    if (!(cls[0].transposed() * e).is_zero())
        throw std::domain_error("monodromy image is not orthogonal to collection '" +
                                d.collections[0].name + "'; diagram not in standard position");
    auto arcs_in_j = solve_in_ring(jj, arcs);
    if (!arcs_in_j) throw std::domain_error("arcs do not lie in the J_1 lattice");
    // Complete the arcs by a basis of the dual classes of c_1: the completed
    // vectors vanish in J_1/L_1, so the arc block of the coordinates is the
    // action on the page homology (and does not depend on the completion).
    const Matrix<BigInt> l1_dual = column_module_basis(omega * cls[0]);
    auto l1_in_j = solve_in_ring(jj, l1_dual);
    if (!l1_in_j) throw std::logic_error("dual classes of c_1 left the J_1 lattice");
    const Matrix<BigInt> completion = arcs_in_j->hstacked(*l1_in_j);
    if (completion.rows() != completion.cols() ||
        abs(to_integer(determinant(to_rational_matrix(completion)))) != 1)
        throw std::domain_error(
            "completion failure: arcs do not complete the c_1 classes to a basis of J_1");
    const Matrix<BigInt> full_basis = jj * completion;
    auto coords = solve_in_ring(full_basis, e);
    if (!coords) throw std::logic_error("e_{n+1} not expressible in the completed J_1 basis");
    res.action = Matrix<BigInt>(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) res.action(i, j) = (*coords)(i, j);
    res.action_det = k == 0 ? BigInt(1) : to_integer(determinant(to_rational_matrix(res.action)));

    // J_1 in the loop frame: orthogonal of L_1 under the absolute pairing
    const Matrix<BigInt> j1 = kernel_basis((cls[0].transposed() * omega));
    if (!(cls[0].transposed() * omega * cls[0]).is_zero())
        throw std::domain_error("collection '" + d.collections[0].name +
                                "' is not homologically pairwise disjoint");
    auto bl = solve_in_ring(j1, cls[0]);
    if (!bl) throw std::domain_error("L_1 classes do not lie in the J_1 lattice");
    auto bcomp = unimodular_completion(*bl);
    if (!bcomp)
        throw std::domain_error("completion failure: L_1 is not a primitive subfamily of J_1");
    if (!(cls[0].transposed() * omega * eps).is_zero())
        throw std::logic_error("eps_{n+1} left the loop-frame J_1 lattice");
    auto z = solve_in_ring(j1 * *bcomp, eps);
    if (!z) throw std::logic_error("eps_{n+1} not expressible in the completed J_1 basis");
    const std::size_t p = d.p();
    res.xi = Matrix<BigInt>(z->rows() - p, k);
    for (std::size_t i = p; i < z->rows(); ++i)
        for (std::size_t j = 0; j < k; ++j) res.xi(i - p, j) = (*z)(i, j);

    res.boundary_homology = open_book_homology(res.page.components, res.xi);
    return res;
}

}  // namespace msec
