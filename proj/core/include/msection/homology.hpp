#pragma once

// Homology of a chain complex: over Z by compatible-basis Smith normal form
// (saturated kernel lattice, then SNF of the boundary image expressed in that
// basis), over the fields Q and Q(t) by rank counting, and over Q[t^+-1] by
// invariant factors. Z[t^+-1] coefficients are reported as a presentation
// plus the Q[t^+-1] invariant factors; the ring is not a PID and modules are
// reported, not classified.

#include "msection/complexes.hpp"
#include "msection/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msec {

enum class CoeffRing { Z, Q, ZLaurent, QLaurent, QRatFunc };

std::string coeff_ring_name(CoeffRing r);

struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;               // Z case: invariant factors > 1
    std::vector<LaurentQ> invariant_factors;   // Laurent case: non-unit monic factors
    std::optional<Matrix<LaurentQ>> presentation;  // relations in kernel-basis coordinates
    bool presentation_integral = true;

    bool is_zero() const { return free_rank == 0 && torsion.empty() && invariant_factors.empty(); }
    std::string str(CoeffRing ring) const;
};

struct HomologyReport {
    CoeffRing ring = CoeffRing::Z;
    std::vector<HomologyGroup> groups;  // by homological degree

    bool acyclic() const {
        for (const auto& g : groups)
            if (!g.is_zero()) return false;
        return true;
    }
    std::string str() const;
};

struct ZHomologyDetail {
    HomologyReport report;
    // Per degree, columns are cycle representatives of the free generators.
    std::vector<Matrix<BigInt>> free_cycles;
};

HomologyReport homology_over_Z(const ChainComplex<BigInt>& c);
ZHomologyDetail homology_over_Z_detailed(const ChainComplex<BigInt>& c);

HomologyReport homology_over_Q(const ChainComplex<BigRational>& c);
HomologyReport homology_over_Qt(const ChainComplex<RationalFunction>& c);

// input_integral: the complex entries all lie in Z[t^+-1], so the reported
// presentations are honest Z[t^+-1] presentations.
HomologyReport homology_over_laurent(const ChainComplex<LaurentQ>& c, bool input_integral);

ChainComplex<BigRational> to_rational_complex(const ChainComplex<BigInt>& c);
ChainComplex<RationalFunction> to_ratfunc_complex(const ChainComplex<LaurentQ>& c);
ChainComplex<BigRational> augment_complex(const ChainComplex<LaurentQ>& c);  // t -> 1

}  // namespace msec
