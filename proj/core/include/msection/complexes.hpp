#pragma once

// The chain complexes computed from a multisection diagram:
//
//   absolute   0 -> (+) L_{i-1}^phi n L_i^phi -> (+) L_i^phi -> H_1(Sigma,*) -> H_0(*)
//   relative   H_2(Sigma,Sigma') -> (+) J_{i-1}^phi n J_i^phi -> (+) J_i^phi -> H_1(Sigma',dSigma) -> 0
//   closed     H_2(Sigma,Sigma') -> (+) L n L -> (+) L -> H_1(Sigma',*) -> H_0(*)
//
// Degree-2 blocks map by inclusion, degree-3 blocks by the alternating
// difference x_i |-> (x_i at slot i) - (x_i at slot i-1), each intersection
// basis vector re-expressed in the curve (resp. J-basis) coordinates of the
// two neighboring sectors. d o d = 0 is verified at build time.

#include "msection/diagram.hpp"
#include "msection/laurent.hpp"
#include "msection/matrix.hpp"

#include <string>
#include <vector>

namespace msec {

enum class Frame { loop, dual };

template <class R>
struct Submodule {
    std::size_t ambient_rank = 0;
    Matrix<R> generators;  // columns
    Frame frame = Frame::loop;
    bool basis = false;  // columns independent over the fraction field
};

template <class T>
struct ChainComplex {
    std::vector<std::size_t> ranks;            // ranks[k] for k = 0..m
    std::vector<Matrix<T>> bnd;                // bnd[k]: C_k -> C_{k-1}; bnd[0] unused
    std::vector<std::vector<std::string>> labels;  // basis provenance per degree
    bool ring_exact = true;  // twisted case: all data stayed in Z[t^+-1]

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    const Matrix<T>& boundary(std::size_t k) const { return bnd[k]; }

    void verify() const {
        for (std::size_t k = 1; k < bnd.size(); ++k) {
            if (bnd[k].rows() != ranks[k - 1] || bnd[k].cols() != ranks[k])
                throw std::logic_error("chain complex shape mismatch at degree " + std::to_string(k));
            if (k >= 2 && !(bnd[k - 1] * bnd[k]).is_zero())
                throw std::logic_error("chain complex integrity failed: d(" + std::to_string(k - 1) +
                                       ") o d(" + std::to_string(k) + ") != 0");
        }
    }
};

// --- submodules of the surface homology --------------------------------

// L_i: spanned by the (twisted) classes of the curves in collection i.
Submodule<BigInt> L_submodule(const MultisectionDiagram& d, std::size_t i);
Submodule<LaurentQ> L_submodule_twisted(const MultisectionDiagram& d, std::size_t i);

// J_i: orthogonal complement of L_i in dual coordinates, i.e. the null space
// of the conjugated generator matrix of L_i.
Submodule<BigInt> J_orthogonal(const MultisectionDiagram& d, std::size_t i);
Submodule<LaurentQ> J_orthogonal_twisted(const MultisectionDiagram& d, std::size_t i);

// --- complex builders ---------------------------------------------------

// Untwisted complexes over Z. Degrees are homological degrees of X (resp.
// (X, dX)); the relative complex has an empty degree 0.
ChainComplex<BigInt> build_absolute_z(const MultisectionDiagram& d);
ChainComplex<BigInt> build_relative_z(const MultisectionDiagram& d);
ChainComplex<BigInt> build_closed_z(const MultisectionDiagram& d);

// Twisted complexes; entries live in Z[t^+-1] whenever the degree-3 bases
// stay integral (ring_exact), in Q[t^+-1] otherwise.
ChainComplex<LaurentQ> build_absolute_twisted(const MultisectionDiagram& d);
ChainComplex<LaurentQ> build_relative_twisted(const MultisectionDiagram& d);
ChainComplex<LaurentQ> build_closed_twisted(const MultisectionDiagram& d);

enum class Variant { absolute, relative, closed };

ChainComplex<BigInt> build_complex_z(const MultisectionDiagram& d, Variant v);
ChainComplex<LaurentQ> build_complex_twisted(const MultisectionDiagram& d, Variant v);

}  // namespace msec
