#include "msection/complexes.hpp"

#include "msection/fox.hpp"
#include "msection/linalg.hpp"
#include "msection/snf.hpp"

#include <sstream>
#include <stdexcept>

namespace msec {
namespace {

Matrix<BigInt> curve_matrix_z(const MultisectionDiagram& d, std::size_t i) {
    const auto& col = d.collections[i];
    Matrix<BigInt> m(d.rose.gen_count(), col.curves.size());
    for (std::size_t j = 0; j < col.curves.size(); ++j) {
        const auto v = abelian_class(d.rose, col.curves[j]);
        for (std::size_t k = 0; k < v.size(); ++k) m(k, j) = v[k];
    }
    return m;
}

Matrix<LaurentQ> curve_matrix_twisted(const MultisectionDiagram& d, std::size_t i) {
    const auto& col = d.collections[i];
    Matrix<LaurentQ> m(d.rose.gen_count(), col.curves.size());
    for (std::size_t j = 0; j < col.curves.size(); ++j) {
        const auto v = fox_class(d.rose, col.curves[j], d.twist);
        for (std::size_t k = 0; k < v.size(); ++k) m(k, j) = to_laurent_q(v[k]);
    }
    return m;
}

// Constraint rows for the orthogonal complement: one conjugated curve class
// per row (the pairing is conjugate-linear in the loop-frame argument).
Matrix<BigInt> j_constraints_z(const Matrix<BigInt>& curves) { return curves.transposed(); }

Matrix<LaurentQ> j_constraints_twisted(const Matrix<LaurentQ>& curves) {
    return curves.transposed().map<LaurentQ>([](const LaurentQ& v) { return v.conj(); });
}

// Conjugates a twisted basis by a constant rational matrix so that its t->1
// specialization is exactly the given integral basis. Possible precisely
// when specialization does not drop rank or move the span; the change of
// basis is a unit of the Q[t^+-1] matrix ring, so the module is unchanged.
bool align_with_untwisted(Matrix<LaurentQ>& basis, const Matrix<BigInt>& target) {
    if (basis.cols() != target.cols() || basis.rows() != target.rows()) return false;
    if (basis.cols() == 0) return true;
    const Matrix<BigRational> spec = augment_matrix(basis);
    auto a = solve_linear_columns(spec, to_rational_matrix(target));
    if (!a) return false;
    if (determinant(*a) == BigRational(0)) return false;  // rank dropped at t=1
    const Matrix<LaurentQ> al = a->map<LaurentQ>([](const BigRational& c) { return LaurentQ(c); });
    const Matrix<LaurentQ> aligned = basis * al;
    if (!(augment_matrix(aligned) == to_rational_matrix(target))) return false;
    basis = aligned;
    return true;
}

bool matrix_is_integral(const Matrix<LaurentQ>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!laurent_q_is_integral(m(i, j))) return false;
    return true;
}

[[noreturn]] void sector_pair_error(const MultisectionDiagram& d, std::size_t i,
                                    const std::string& what) {
    const std::size_t n = d.n();
    const std::string prev = d.collections[(i + n - 1) % n].name;
    const std::string cur = d.collections[i].name;
    throw std::domain_error(what + " for sector pair (" + prev + ", " + cur + ")");
}

// Shared assembly of the complexes over one coefficient ring. `Ops` supplies
// the ring-specific pieces; see ZOps / TwistedOps below.
template <class Ops>
ChainComplex<typename Ops::Sc> assemble(const MultisectionDiagram& d, Variant variant, Ops ops) {
    using Sc = typename Ops::Sc;
    const std::size_t n = d.n();
    const std::size_t N = d.rose.gen_count();
    if (n < 2) throw std::domain_error("complex construction needs n >= 2 collections");
    if (variant == Variant::closed && !d.closed)
        throw std::domain_error("closed complex requested for a bounded diagram");
    if (variant != Variant::closed && d.closed)
        throw std::domain_error("bounded complex requested for a closed diagram");

    const bool relative = variant == Variant::relative;

    // Degree-2 blocks: curve classes (absolute/closed) or J-bases (relative).
    std::vector<Matrix<Sc>> blocks(n);
    for (std::size_t i = 0; i < n; ++i) blocks[i] = relative ? ops.j_basis(i) : ops.curves(i);

    // Degree-3 slots: block_{i-1} n block_i with both re-expressions.
    std::vector<Matrix<Sc>> isect(n), in_prev(n), in_cur(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        isect[i] = ops.intersect(blocks[prev], blocks[i], i);
        auto left = solve_in_ring(blocks[prev], isect[i]);
        auto right = solve_in_ring(blocks[i], isect[i]);
        if (!left || !right)
            sector_pair_error(d, i, "intersection coordinate expression failed");
        in_prev[i] = *left;
        in_cur[i] = *right;
    }

    ChainComplex<Sc> c;
    std::vector<std::size_t> block_offsets(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) block_offsets[i + 1] = block_offsets[i] + blocks[i].cols();
    const std::size_t rank2 = block_offsets[n];
    std::size_t rank3 = 0;
    for (std::size_t i = 0; i < n; ++i) rank3 += isect[i].cols();

    // ranks by homological degree
    if (variant == Variant::absolute)
        c.ranks = {1, N, rank2, rank3};
    else if (variant == Variant::relative)
        c.ranks = {0, N, rank2, rank3, 1};
    else
        c.ranks = {1, N, rank2, rank3, 1};

    c.bnd.resize(c.ranks.size());
    c.bnd[0] = Matrix<Sc>(0, c.ranks[0]);

    // d1: H_1 -> H_0. Absolute/closed: generator a |-> (phi(a)-1) * basepoint.
    Matrix<Sc> d1(c.ranks[0], N);
    if (!relative)
        for (std::size_t k = 0; k < N; ++k) d1(0, k) = ops.boundary0(k);
    c.bnd[1] = d1;

    // d2: inclusion of the blocks.
    Matrix<Sc> d2(N, rank2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < blocks[i].cols(); ++j)
            for (std::size_t k = 0; k < N; ++k) d2(k, block_offsets[i] + j) = blocks[i](k, j);
    c.bnd[2] = d2;

    // d3: x at slot i |-> (x in block_i coords at i) - (x in block_{i-1} coords at i-1).
    Matrix<Sc> d3(rank2, rank3);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        for (std::size_t j = 0; j < isect[i].cols(); ++j, ++col) {
            for (std::size_t r = 0; r < in_cur[i].rows(); ++r)
                d3(block_offsets[i] + r, col) += in_cur[i](r, j);
            for (std::size_t r = 0; r < in_prev[i].rows(); ++r)
                d3(block_offsets[prev] + r, col) -= in_prev[i](r, j);
        }
    }
    c.bnd[3] = d3;

    // d4: the top class, distributed diagonally into every slot.
    if (c.ranks.size() == 5) {
        const std::vector<Sc> top = relative ? ops.puncture_class() : ops.relator();
        Matrix<Sc> topm(N, 1);
        for (std::size_t k = 0; k < N; ++k) topm(k, 0) = top[k];
        Matrix<Sc> d4(rank3, 1);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto coords = solve_in_ring(isect[i], topm);
            if (!coords)
                sector_pair_error(d, i, relative ? "puncture boundary class not expressible"
                                                 : "relator class not expressible");
            for (std::size_t r = 0; r < coords->rows(); ++r) d4(row + r, 0) = (*coords)(r, 0);
            row += isect[i].cols();
        }
        c.bnd[4] = d4;
    }

    // labels: basis provenance per degree
    c.labels.resize(c.ranks.size());
    if (!relative) c.labels[0] = {"*"};
    c.labels[1] = d.rose.generator_names();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < blocks[i].cols(); ++j)
            c.labels[2].push_back(d.collections[i].name + ":" + std::to_string(j + 1));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        for (std::size_t j = 0; j < isect[i].cols(); ++j)
            c.labels[3].push_back(d.collections[prev].name + "^" + d.collections[i].name + ":" +
                                  std::to_string(j + 1));
    }
    if (c.ranks.size() == 5) c.labels[4] = {"[Sigma]"};

    c.ring_exact = ops.ring_exact(c);
    c.verify();
    return c;
}

struct ZOps {
    using Sc = BigInt;
    const MultisectionDiagram& d;

    Matrix<BigInt> curves(std::size_t i) const { return curve_matrix_z(d, i); }
    Matrix<BigInt> j_basis(std::size_t i) const {
        return kernel_basis(j_constraints_z(curve_matrix_z(d, i)));
    }
    Matrix<BigInt> intersect(const Matrix<BigInt>& a, const Matrix<BigInt>& b, std::size_t) const {
        return span_intersection(a, b);
    }
    BigInt boundary0(std::size_t) const { return BigInt(0); }
    std::vector<BigInt> puncture_class() const {
        return std::vector<BigInt>(d.rose.gen_count(), BigInt(0));
    }
    std::vector<BigInt> relator() const {
        return abelian_class(d.rose, d.rose.polygon_word());  // zero: commutators
    }
    bool ring_exact(const ChainComplex<BigInt>&) const { return true; }
};

// Twisted coefficients. Z[t^+-1] is not a PID, so kernels and intersections
// are computed over Q[t^+-1]; whenever specialization t->1 keeps their rank,
// the bases are conjugated by constant matrices to make the t->1
// specialization reproduce the untwisted integral bases exactly.
struct TwistedOps {
    using Sc = LaurentQ;
    const MultisectionDiagram& d;
    Variant variant;
    ZOps z;

    Matrix<LaurentQ> curves(std::size_t i) const { return curve_matrix_twisted(d, i); }
    Matrix<LaurentQ> j_basis(std::size_t i) const {
        Matrix<LaurentQ> k = kernel_basis(j_constraints_twisted(curve_matrix_twisted(d, i)));
        align_with_untwisted(k, z.j_basis(i));
        return k;
    }
    Matrix<LaurentQ> intersect(const Matrix<LaurentQ>& a, const Matrix<LaurentQ>& b,
                               std::size_t slot) const {
        Matrix<LaurentQ> k = span_intersection(a, b);
        const std::size_t n = d.n();
        const std::size_t prev = (slot + n - 1) % n;
        const Matrix<BigInt> a0 =
            variant == Variant::relative ? z.j_basis(prev) : curve_matrix_z(d, prev);
        const Matrix<BigInt> b0 =
            variant == Variant::relative ? z.j_basis(slot) : curve_matrix_z(d, slot);
        align_with_untwisted(k, span_intersection(a0, b0));
        return k;
    }
    LaurentQ boundary0(std::size_t gen) const {
        return to_laurent_q(d.twist.image(gen).laurent() - LaurentZ(1));
    }
    std::vector<LaurentQ> puncture_class() const {
        // [d(Sigma \ Sigma')] in dual coordinates: a generator loop crosses
        // the puncture circle at its two endpoints, with deck elements 1 and
        // phi(a)^-1 under the conjugate-linear-first pairing convention.
        std::vector<LaurentQ> v(d.rose.gen_count());
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = to_laurent_q(d.twist.image(k).inverse().laurent() - LaurentZ(1));
        return v;
    }
    std::vector<LaurentQ> relator() const {
        const auto fox = relator_class(d.rose, d.twist);
        std::vector<LaurentQ> v(fox.size());
        for (std::size_t k = 0; k < fox.size(); ++k) v[k] = to_laurent_q(fox[k]);
        return v;
    }
    bool ring_exact(const ChainComplex<LaurentQ>& c) const {
        for (const auto& m : c.bnd)
            if (!matrix_is_integral(m)) return false;
        return true;
    }
};

}  // namespace

Submodule<BigInt> L_submodule(const MultisectionDiagram& d, std::size_t i) {
    if (i >= d.n()) throw std::out_of_range("collection index out of range");
    Submodule<BigInt> s;
    s.ambient_rank = d.rose.gen_count();
    s.generators = curve_matrix_z(d, i);
    s.frame = Frame::loop;
    s.basis = rank_kernel_image(to_rational_matrix(s.generators)).rank == s.generators.cols();
    return s;
}

Submodule<LaurentQ> L_submodule_twisted(const MultisectionDiagram& d, std::size_t i) {
    if (i >= d.n()) throw std::out_of_range("collection index out of range");
    Submodule<LaurentQ> s;
    s.ambient_rank = d.rose.gen_count();
    s.generators = curve_matrix_twisted(d, i);
    s.frame = Frame::loop;
    s.basis = rank_kernel_image(to_ratfunc_matrix(s.generators)).rank == s.generators.cols();
    return s;
}

Submodule<BigInt> J_orthogonal(const MultisectionDiagram& d, std::size_t i) {
    if (i >= d.n()) throw std::out_of_range("collection index out of range");
    if (d.closed) throw std::domain_error("J is defined for bounded diagrams; use the closed routines");
    Submodule<BigInt> s;
    s.ambient_rank = d.rose.gen_count();
    s.generators = kernel_basis(j_constraints_z(curve_matrix_z(d, i)));
    s.frame = Frame::dual;
    s.basis = true;
    return s;
}

Submodule<LaurentQ> J_orthogonal_twisted(const MultisectionDiagram& d, std::size_t i) {
    if (i >= d.n()) throw std::out_of_range("collection index out of range");
    if (d.closed) throw std::domain_error("J is defined for bounded diagrams; use the closed routines");
    Submodule<LaurentQ> s;
    s.ambient_rank = d.rose.gen_count();
    Matrix<LaurentQ> k = kernel_basis(j_constraints_twisted(curve_matrix_twisted(d, i)));
    align_with_untwisted(k, kernel_basis(j_constraints_z(curve_matrix_z(d, i))));
    s.generators = k;
    s.frame = Frame::dual;
    s.basis = true;
    return s;
}

ChainComplex<BigInt> build_complex_z(const MultisectionDiagram& d, Variant v) {
    return assemble(d, v, ZOps{d});
}

ChainComplex<BigInt> build_absolute_z(const MultisectionDiagram& d) {
    return build_complex_z(d, Variant::absolute);
}
ChainComplex<BigInt> build_relative_z(const MultisectionDiagram& d) {
    return build_complex_z(d, Variant::relative);
}
ChainComplex<BigInt> build_closed_z(const MultisectionDiagram& d) {
    return build_complex_z(d, Variant::closed);
}

ChainComplex<LaurentQ> build_complex_twisted(const MultisectionDiagram& d, Variant v) {
    return assemble(d, v, TwistedOps{d, v, ZOps{d}});
}

ChainComplex<LaurentQ> build_absolute_twisted(const MultisectionDiagram& d) {
    return build_complex_twisted(d, Variant::absolute);
}
ChainComplex<LaurentQ> build_relative_twisted(const MultisectionDiagram& d) {
    return build_complex_twisted(d, Variant::relative);
}
ChainComplex<LaurentQ> build_closed_twisted(const MultisectionDiagram& d) {
    return build_complex_twisted(d, Variant::closed);
}

}  // namespace msec
