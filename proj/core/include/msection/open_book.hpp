#pragma once

// The open book induced on the boundary 3-manifold: action of the monodromy
// on the page homology via the recursion
//
//   R_0 = 0,  e_1 = e,  R_i = -(e_i . a_{i+1}) (a_i . a_{i+1})^-1,
//   e_{i+1} = e_i + R_i a_i,
//
// then R = the e-block of e_{n+1} in a basis of J_1 extending the arcs, and
// the boundary homology from the 4-term open book complex with middle map
// given by S = the completion-block of eps_{n+1} in (b_L, b). Everything in
// this module is over Z.

#include "msection/diagram.hpp"
#include "msection/homology.hpp"
#include "msection/matrix.hpp"

#include <vector>

namespace msec {

struct PageData {
    int genus = 0;       // h
    int boundary = 0;    // b, shared with Sigma
    int components = 1;  // s
};

struct MonodromyOptions {
    // Per-sector curve index subsets a_i; empty means automatic selection
    // (full collections, then a pivot-based subset when the full pairing
    // matrices are singular).
    std::vector<std::vector<std::size_t>> a_subsets;
};

struct MonodromyResult {
    PageData page;
    std::vector<std::vector<std::size_t>> a_indices;  // chosen a_i per sector
    std::vector<Matrix<BigInt>> r_steps;    // R_1..R_n, each (#arcs x q)
    std::vector<Matrix<BigInt>> e_steps;    // e_1..e_{n+1} as dual vectors (N x #arcs)
    std::vector<Matrix<BigInt>> eps_steps;  // eps_1..eps_{n+1} as loop vectors (N x #arcs)
    Matrix<BigInt> action;                  // R: (#arcs x #arcs)
    Matrix<BigInt> xi;                      // S: matrix of the open book middle map
    BigInt action_det;
    HomologyReport boundary_homology;       // H_*(dX), degrees 0..3
};

MonodromyResult monodromy_action(const MultisectionDiagram& d, const MonodromyOptions& opt = {});

// H_* of the open book complex 0 -> Z^s -> H_1(S,dS) --xi--> H_1(S) -> Z^s -> 0.
HomologyReport open_book_homology(std::size_t s, const Matrix<BigInt>& xi);

}  // namespace msec
