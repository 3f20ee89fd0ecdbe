#include "msection/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace msec {
namespace {

// An independent column subset of m of maximal size, greedily in the given
// column order.
std::vector<std::size_t> pivot_columns(const Matrix<RationalFunction>& m,
                                       const std::vector<std::size_t>& order) {
    std::vector<std::size_t> chosen;
    Matrix<RationalFunction> acc(m.rows(), 0);
    std::size_t rank = 0;
    for (std::size_t j : order) {
        Matrix<RationalFunction> cand = acc.hstacked(m.cols_subset({j}));
        const std::size_t r = rank_kernel_image(cand).rank;
        if (r > rank) {
            rank = r;
            acc = std::move(cand);
            chosen.push_back(j);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

std::string TorsionValue::str() const {
    std::string s = canonical.str();
    s += ambiguity == TorsionAmbiguity::unit_monomial ? "  (up to +-t^k)" : "  (up to q*t^k)";
    if (!acyclic) s += "  [homology basis: " + basis_note + "]";
    return s;
}

RationalFunction torsion_scalar(const ChainComplex<RationalFunction>& c, const TorsionOptions& opt) {
    c.verify();
    const std::size_t m = c.top_degree();
    std::mt19937 rng(opt.pivot_seed);

    // Pivot column sets of every boundary map.
    std::vector<std::vector<std::size_t>> pivots(m + 2);
    for (std::size_t k = 1; k <= m; ++k) {
        std::vector<std::size_t> order(c.bnd[k].cols());
        std::iota(order.begin(), order.end(), 0);
        if (opt.pivot_seed != 0) std::shuffle(order.begin(), order.end(), rng);
        pivots[k] = pivot_columns(c.bnd[k], order);
    }

    RationalFunction tau(1);
    for (std::size_t k = 0; k <= m; ++k) {
        const std::size_t dim = c.ranks[k];
        const std::size_t n_in = k + 1 <= m ? pivots[k + 1].size() : 0;   // rank d_{k+1}
        const std::size_t n_out = pivots[k].size();                       // rank d_k
        const std::size_t n_h =
            k < opt.homology_basis.size() ? opt.homology_basis[k].cols() : 0;
        if (n_in + n_out + n_h != dim) {
            if (n_h == 0)
                throw std::domain_error("complex is not acyclic in degree " + std::to_string(k) +
                                        "; homology basis required");
            throw std::domain_error("homology basis has wrong rank in degree " + std::to_string(k));
        }

        Matrix<RationalFunction> basis(dim, dim);
        std::size_t col = 0;
        if (n_in > 0) {
            const Matrix<RationalFunction> b = c.bnd[k + 1].cols_subset(pivots[k + 1]);
            for (std::size_t j = 0; j < n_in; ++j, ++col)
                for (std::size_t i = 0; i < dim; ++i) basis(i, col) = b(i, j);
        }
        if (n_h > 0) {
            const Matrix<RationalFunction>& h = opt.homology_basis[k];
            if (h.rows() != dim) throw std::domain_error("homology basis shape mismatch");
            for (std::size_t j = 0; j < n_h; ++j) {
                const auto img = c.bnd[k] * h.cols_subset({j});
                if (!img.is_zero())
                    throw std::domain_error("homology basis vector is not a cycle in degree " +
                                            std::to_string(k));
                for (std::size_t i = 0; i < dim; ++i) basis(i, col) = h(i, j);
                ++col;
            }
        }
        for (std::size_t j = 0; j < n_out; ++j, ++col) basis(pivots[k][j], col) = RationalFunction(1);

        RationalFunction det = determinant(basis);
        if (k < opt.basis.size() && opt.basis[k].rows() == dim) {
            const RationalFunction cb = determinant(opt.basis[k]);
            if (cb.is_zero()) throw std::domain_error("singular complex basis in degree " + std::to_string(k));
            det = det / cb;
        }
        if (det.is_zero())
            throw std::domain_error("degenerate torsion basis in degree " + std::to_string(k) +
                                    " (homology basis not independent)");
        tau = (k % 2 == 1) ? tau * det : tau / det;  // exponent (-1)^{k+1}
    }
    return tau;
}

TorsionValue torsion(const ChainComplex<RationalFunction>& c, TorsionAmbiguity ambiguity,
                     const TorsionOptions& opt) {
    const RationalFunction raw = torsion_scalar(c, opt);
    if (raw.is_zero()) throw std::logic_error("torsion vanished; complex data inconsistent");
    TorsionValue v;
    v.ambiguity = ambiguity;
    v.acyclic = opt.homology_basis.empty();
    v.canonical = RationalFunction(laurent_q_unit_normalize(raw.num()),
                                   laurent_q_unit_normalize(raw.den()));
    if (!v.acyclic) v.basis_note = "user-supplied";
    return v;
}

TorsionValue torsion_of_diagram(const MultisectionDiagram& d, Variant v, const TorsionOptions& opt) {
    if (!d.twisted()) {
        if (opt.homology_basis.empty())
            throw std::domain_error(
                "trivially twisted diagram: torsion over Q needs an explicit homology basis");
        const auto zc = build_complex_z(d, v);
        ChainComplex<RationalFunction> fc;
        fc.ranks = zc.ranks;
        fc.labels = zc.labels;
        for (const auto& b : zc.bnd)
            fc.bnd.push_back(b.map<RationalFunction>(
                [](const BigInt& x) { return RationalFunction(BigRational(x)); }));
        return torsion(fc, TorsionAmbiguity::rational_monomial, opt);
    }
    const auto tc = build_complex_twisted(d, v);
    const auto fc = to_ratfunc_complex(tc);
    const TorsionAmbiguity amb =
        tc.ring_exact ? TorsionAmbiguity::unit_monomial : TorsionAmbiguity::rational_monomial;
    return torsion(fc, amb, opt);
}

}  // namespace msec
