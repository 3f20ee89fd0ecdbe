#pragma once

// Reidemeister torsion of a based chain complex over Q(t):
//
//   tau = prod_k [ (b_k h_k) b~_{k-1} / c_k ]^{(-1)^{k+1}}
//
// with b_k a basis of im d_{k+1} (images of a pivot column set, the choice
// provably immaterial), h_k a homology basis when the complex is not
// acyclic, and b~ the standard-basis lifts of the pivot columns. The result
// is canonicalized modulo the declared unit ambiguity.

#include "msection/complexes.hpp"
#include "msection/homology.hpp"
#include "msection/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msec {

enum class TorsionAmbiguity {
    unit_monomial,      // +-t^Z: degree-3 bases stayed in Z[t^+-1]
    rational_monomial,  // Q^* t^Z: fraction-field fallback
};

struct TorsionValue {
    RationalFunction canonical;  // monic numerator / monic denominator, both with
                                 // nonzero constant term, coprime
    TorsionAmbiguity ambiguity = TorsionAmbiguity::unit_monomial;
    bool acyclic = true;
    std::string basis_note;

    friend bool operator==(const TorsionValue& a, const TorsionValue& b) {
        return a.canonical == b.canonical && a.ambiguity == b.ambiguity;
    }
    std::string str() const;
};

struct TorsionOptions {
    // 0: deterministic pivot choice; otherwise seeds a randomized choice of
    // the pivot column sets b_k.
    unsigned pivot_seed = 0;
    // Optional complex-basis change per degree (columns = basis vectors in
    // the standard coordinates); identity when absent.
    std::vector<Matrix<RationalFunction>> basis;
    // Homology bases per degree (columns = cycles) for non-acyclic complexes.
    std::vector<Matrix<RationalFunction>> homology_basis;
};

// Raw alternating product, before canonicalization.
RationalFunction torsion_scalar(const ChainComplex<RationalFunction>& c,
                                const TorsionOptions& opt = {});

TorsionValue torsion(const ChainComplex<RationalFunction>& c, TorsionAmbiguity ambiguity,
                     const TorsionOptions& opt = {});

// Builds the requested twisted complex with the construction bases (curves,
// generators, computed intersection bases, basepoint) and evaluates its
// torsion over Q(t). A trivially twisted diagram needs a homology basis and
// is evaluated over Q embedded in Q(t).
TorsionValue torsion_of_diagram(const MultisectionDiagram& d, Variant v,
                                const TorsionOptions& opt = {});

}  // namespace msec
