#pragma once

// Signed intersection numbers of curves realized as taut edge-paths on the
// rose. All crossings happen inside the vertex disk: each pass of a curve
// through the vertex is a chord between two edge-end slots, parallel strands
// inside an edge are fanned out into lanes ordered by their onward
// itineraries, and two passes cross exactly when their refined endpoints
// interleave in the cyclic boundary order. The sign convention is calibrated
// so that <a_i, b_i> = +1 on the standard rose.
//
// For a twist phi the crossing between pass p of x and pass q of y
// contributes phi(prefix of x before p)^-1 * phi(prefix of y before q).

#include "msection/laurent.hpp"
#include "msection/rose.hpp"
#include "msection/twist.hpp"
#include "msection/word.hpp"

namespace msec {

BigInt algebraic_intersection(const RoseSurface& rose, const Word& x, const Word& y);

LaurentZ equivariant_intersection(const RoseSurface& rose, const Word& x, const Word& y,
                                  const TwistSpec& phi);

// Gram matrix of the generator loops under the untwisted pairing; the
// block-symplectic matrix for standard roses.
Matrix<BigInt> generator_pairing_matrix(const RoseSurface& rose);

}  // namespace msec
