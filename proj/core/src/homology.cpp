#include "msection/homology.hpp"

#include "msection/snf.hpp"

#include <sstream>

namespace msec {
namespace {

// Boundary out of degree k, or an empty matrix at the top.
template <class T>
Matrix<T> boundary_or_zero(const ChainComplex<T>& c, std::size_t k) {
    if (k + 1 < c.ranks.size()) return c.bnd[k + 1];
    return Matrix<T>(c.ranks[k], 0);
}

template <class T, class F>
std::size_t field_rank(const Matrix<T>& m, F&& to_field) {
    return rank_kernel_image(to_field(m)).rank;
}

}  // namespace

std::string coeff_ring_name(CoeffRing r) {
    switch (r) {
        case CoeffRing::Z: return "Z";
        case CoeffRing::Q: return "Q";
        case CoeffRing::ZLaurent: return "Z[t^+-1]";
        case CoeffRing::QLaurent: return "Q[t^+-1]";
        case CoeffRing::QRatFunc: return "Q(t)";
    }
    return "?";
}

std::string HomologyGroup::str(CoeffRing ring) const {
    const std::string base = coeff_ring_name(ring);
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank > 0) {
        sep();
        os << base;
        if (free_rank > 1) os << "^" << free_rank;
    }
    for (const auto& d : torsion) {
        sep();
        os << "Z/" << d.str();
    }
    for (const auto& f : invariant_factors) {
        sep();
        os << base << "/(" << f.str() << ")";
    }
    if (first) os << "0";
    return os.str();
}

std::string HomologyReport::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < groups.size(); ++k) {
        if (k) os << "  ";
        os << "H" << k << "=" << groups[k].str(ring);
    }
    return os.str();
}

ZHomologyDetail homology_over_Z_detailed(const ChainComplex<BigInt>& c) {
    c.verify();
    ZHomologyDetail out;
    out.report.ring = CoeffRing::Z;
    const std::size_t m = c.top_degree();
    for (std::size_t k = 0; k <= m; ++k) {
        const Matrix<BigInt> kernel = kernel_basis(c.bnd[k]);
        const Matrix<BigInt> image = boundary_or_zero(c, k);
        auto rel = solve_in_ring(kernel, image);
        if (!rel) throw std::logic_error("boundary image does not lie in the cycle lattice");
        auto s = snf(*rel);
        HomologyGroup g;
        g.free_rank = kernel.cols() - s.rank;
        for (const auto& d : s.invariant_factors())
            if (!(d == BigInt(1))) g.torsion.push_back(d);
        out.report.groups.push_back(std::move(g));

        const Matrix<BigInt> uinv = ring_inverse(s.u);
        std::vector<std::size_t> free_idx;
        for (std::size_t j = s.rank; j < kernel.cols(); ++j) free_idx.push_back(j);
        out.free_cycles.push_back(kernel * uinv.cols_subset(free_idx));
    }
    return out;
}

HomologyReport homology_over_Z(const ChainComplex<BigInt>& c) {
    return homology_over_Z_detailed(c).report;
}

namespace {

template <class F>
HomologyReport field_homology(const ChainComplex<F>& c, CoeffRing ring) {
    c.verify();
    HomologyReport rep;
    rep.ring = ring;
    const std::size_t m = c.top_degree();
    for (std::size_t k = 0; k <= m; ++k) {
        const std::size_t rank_out = rank_kernel_image(c.bnd[k]).rank;
        const std::size_t rank_in = rank_kernel_image(boundary_or_zero(c, k)).rank;
        HomologyGroup g;
        g.free_rank = c.ranks[k] - rank_out - rank_in;
        rep.groups.push_back(std::move(g));
    }
    return rep;
}

}  // namespace

HomologyReport homology_over_Q(const ChainComplex<BigRational>& c) {
    return field_homology(c, CoeffRing::Q);
}

HomologyReport homology_over_Qt(const ChainComplex<RationalFunction>& c) {
    return field_homology(c, CoeffRing::QRatFunc);
}

HomologyReport homology_over_laurent(const ChainComplex<LaurentQ>& c, bool input_integral) {
    c.verify();
    HomologyReport rep;
    rep.ring = input_integral ? CoeffRing::ZLaurent : CoeffRing::QLaurent;
    const std::size_t m = c.top_degree();
    for (std::size_t k = 0; k <= m; ++k) {
        const Matrix<LaurentQ> kernel = kernel_basis(c.bnd[k]);
        const Matrix<LaurentQ> image = boundary_or_zero(c, k);
        auto rel = solve_in_ring(kernel, image);
        if (!rel) throw std::logic_error("boundary image does not lie in the cycle module");
        auto s = snf(*rel);
        HomologyGroup g;
        g.free_rank = kernel.cols() - s.rank;
        for (const auto& f : s.invariant_factors())
            if (!f.is_one()) g.invariant_factors.push_back(f);
        g.presentation = *rel;
        g.presentation_integral = input_integral;
        if (input_integral) {
            for (std::size_t i = 0; i < rel->rows() && g.presentation_integral; ++i)
                for (std::size_t j = 0; j < rel->cols() && g.presentation_integral; ++j)
                    if (!laurent_q_is_integral((*rel)(i, j))) g.presentation_integral = false;
        }
        rep.groups.push_back(std::move(g));
    }
    return rep;
}

ChainComplex<BigRational> to_rational_complex(const ChainComplex<BigInt>& c) {
    ChainComplex<BigRational> r;
    r.ranks = c.ranks;
    r.labels = c.labels;
    for (const auto& b : c.bnd) r.bnd.push_back(to_rational_matrix(b));
    return r;
}

ChainComplex<RationalFunction> to_ratfunc_complex(const ChainComplex<LaurentQ>& c) {
    ChainComplex<RationalFunction> r;
    r.ranks = c.ranks;
    r.labels = c.labels;
    r.ring_exact = c.ring_exact;
    for (const auto& b : c.bnd) r.bnd.push_back(to_ratfunc_matrix(b));
    return r;
}

ChainComplex<BigRational> augment_complex(const ChainComplex<LaurentQ>& c) {
    ChainComplex<BigRational> r;
    r.ranks = c.ranks;
    r.labels = c.labels;
    for (const auto& b : c.bnd) r.bnd.push_back(augment_matrix(b));
    return r;
}

}  // namespace msec
