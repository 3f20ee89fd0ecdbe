#pragma once

// Command pipelines shared by the CLI: each run_* executes the module chain
// for one command and renders both a human-readable report and a structured
// JSON document (matrices, ranks, invariant factors, audit traces).

#include "msection/complexes.hpp"
#include "msection/diagram.hpp"

#include <string>

namespace msec {

struct RunOutput {
    std::string text;
    std::string json;
};

RunOutput run_validate(const MultisectionDiagram& d);
RunOutput run_homology(const MultisectionDiagram& d, Variant v);
RunOutput run_rel_homology(const MultisectionDiagram& d);
RunOutput run_twisted_homology(const MultisectionDiagram& d, Variant v);
RunOutput run_torsion(const MultisectionDiagram& d, Variant v);
RunOutput run_intersection_form(const MultisectionDiagram& d);
RunOutput run_monodromy(const MultisectionDiagram& d, bool trace);
RunOutput run_boundary(const MultisectionDiagram& d, bool trace);

}  // namespace msec
