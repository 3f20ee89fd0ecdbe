#pragma once

// The multisection diagram data model: central surface as a rose, n cyclic
// collections of defining curves (each of common size p), optional arcs
// given by their dual-coordinate pairing vectors, optional monomial twist.

#include "msection/numbers.hpp"
#include "msection/rose.hpp"
#include "msection/twist.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msec {

struct CurveCollection {
    std::string name;
    std::vector<Word> curves;
};

struct Arc {
    std::string name;
    std::vector<BigInt> dual;  // pairing with each generator class
};

struct MultisectionDiagram {
    RoseSurface rose;
    std::vector<CurveCollection> collections;
    std::vector<Arc> arcs;
    TwistSpec twist{std::vector<Monomial>{}};
    bool closed = false;
    std::string default_variant;  // optional file-level "options { variant = ... }"

    std::size_t n() const { return collections.size(); }
    std::size_t p() const { return collections.empty() ? 0 : collections[0].curves.size(); }
    bool twisted() const { return !twist.is_trivial(); }
};

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    int page_genus = 0;       // h from chi(Sigma) + 2p = 2 - 2h - b
    int page_components = 1;  // s; validation enforces the connected-page equation
    std::vector<ValidationIssue> issues;

    std::string summary() const;
};

// Checks, without throwing: structural shape (n >= 2, common p, words in
// range), Q-independence of each collection's abelian classes, the page
// Euler-characteristic equation, the twist killing every defining curve, and
// closed-model consistency.
ValidationReport validate(const MultisectionDiagram& d);

}  // namespace msec
