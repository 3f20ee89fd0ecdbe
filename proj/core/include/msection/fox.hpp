#pragma once

// Fox free differential calculus: the twisted homology class of a based loop
// is the vector of Fox derivative evaluations, with the rules
//   d(uv) = du + phi(u) dv,   d(g) = e_g,   d(g^-1) = -phi(g)^-1 e_g.
// The augmentation t -> 1 of fox_class is the exponent-sum vector.

#include "msection/laurent.hpp"
#include "msection/rose.hpp"
#include "msection/twist.hpp"

#include <vector>

namespace msec {

std::vector<BigInt> abelian_class(const RoseSurface& rose, const Word& w);

std::vector<LaurentZ> fox_class(const RoseSurface& rose, const Word& w, const TwistSpec& phi);

// Twisted class of the polygon word of the closed model; its augmentation is
// zero since the polygon is a product of commutators.
std::vector<LaurentZ> relator_class(const RoseSurface& rose, const TwistSpec& phi);

}  // namespace msec
