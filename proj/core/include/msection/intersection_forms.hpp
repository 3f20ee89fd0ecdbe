#pragma once

// Equivariant intersection pairings computed on the central surface:
//   H_2(X) x H_2(X,dX):   <h1,h2> = sum_{i<j} <x_i, y_j>_Sigma
//   H_1 x H_3:            <h1,h2> = <a,b>_Sigma
// Absolute degree-2 cycles are tuples over (+) L_i in curve coordinates,
// relative ones are tuples over (+) J_i in dual coordinates.

#include "msection/diagram.hpp"
#include "msection/laurent.hpp"
#include "msection/matrix.hpp"

#include <vector>

namespace msec {

// Per-sector coordinate tuples; outer index = sector.
using SectorTuples = std::vector<std::vector<LaurentZ>>;

// x: curve coordinates (length p per sector), a cycle of the absolute
// complex; y: dual coordinates (length = generator count), a cycle of the
// relative complex with y_i orthogonal to collection i. Throws on non-cycles.
LaurentZ pair_H2(const MultisectionDiagram& d, const SectorTuples& x, const SectorTuples& y);

BigInt pair_H2_untwisted(const MultisectionDiagram& d,
                         const std::vector<std::vector<BigInt>>& x,
                         const std::vector<std::vector<BigInt>>& y);

enum class OddPairing {
    h1_absolute,  // a in H_1(X) loop frame, b in the triple intersection of the J's
    h1_relative,  // a in H_1(X,dX) dual frame, b in the triple intersection of the L's
};

LaurentZ pair_H1_H3(const MultisectionDiagram& d, const std::vector<LaurentZ>& a,
                    const std::vector<LaurentZ>& b, OddPairing which);

// Gram matrix of the closed-case intersection form on degree-2 cycles
// (tuples over (+) L_i in curve coordinates). Entries expand sesquilinearly
// over the defining curve words, which the twist kills, so the word-level
// pairing is the honest class pairing.
Matrix<LaurentZ> closed_H2_form(const MultisectionDiagram& d, const std::vector<SectorTuples>& cycles);

struct SymmetricFormInfo {
    Matrix<BigInt> gram;
    int positive = 0, negative = 0, zero = 0;
    int signature() const { return positive - negative; }
    BigInt det;
};

// Untwisted closed form: integer symmetric Gram matrix with exact signature.
SymmetricFormInfo closed_H2_form_untwisted(const MultisectionDiagram& d,
                                           const std::vector<std::vector<std::vector<BigInt>>>& cycles);

// Representative cycles extracted from the homology engine, as per-sector
// tuples suitable for the pairings above.
std::vector<std::vector<std::vector<BigInt>>> extract_absolute_H2_cycles(const MultisectionDiagram& d);
std::vector<std::vector<std::vector<BigInt>>> extract_relative_H2_cycles(const MultisectionDiagram& d);
std::vector<std::vector<std::vector<BigInt>>> extract_closed_H2_cycles(const MultisectionDiagram& d);

}  // namespace msec
