// msection: homology, torsion, intersection forms and boundary open-book
// data of a 4-manifold multisection diagram.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 validation error,
// 4 computation error.

#include "msection/diagram_io.hpp"
#include "msection/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_parse = 2, exit_validation = 3, exit_compute = 4 };

msec::Variant parse_variant(const std::string& s) {
    if (s == "absolute") return msec::Variant::absolute;
    if (s == "relative") return msec::Variant::relative;
    if (s == "closed") return msec::Variant::closed;
    throw CLI::ValidationError("--variant must be absolute, relative or closed");
}

void apply_twist_override(msec::MultisectionDiagram& d, const std::string& spec) {
    d.twist = msec::TwistSpec::trivial(d.rose.gen_count());
    if (spec == "trivial") return;
    std::istringstream is(spec);
    std::string entry;
    while (std::getline(is, entry, ',')) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("twist override entry '" + entry + "' is not name=monomial");
        const std::string name = entry.substr(0, eq);
        const auto idx = d.rose.index_of(name);
        if (!idx) throw std::invalid_argument("twist override names unknown generator '" + name + "'");
        d.twist.set_image(static_cast<std::size_t>(*idx), msec::parse_monomial(entry.substr(eq + 1)));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic topology of 4-manifold multisection diagrams"};
    app.require_subcommand(1);

    std::string path;
    std::string variant_name = "absolute";
    std::string twist_override;
    bool machine = false;
    bool trace = false;

    auto add_common = [&](CLI::App* cmd, bool with_variant) {
        cmd->add_option("diagram", path, "diagram file (.msd)")->required();
        cmd->add_flag("--machine-output", machine, "emit the structured JSON document");
        cmd->add_option("--twist-override", twist_override,
                        "replace the file twist, e.g. 'a2=t,b1=-t^2' or 'trivial'");
        if (with_variant)
            cmd->add_option("--variant", variant_name, "absolute, relative or closed");
        return cmd;
    };

    auto* c_validate = add_common(app.add_subcommand("validate", "check homological validity"), false);
    auto* c_hom = add_common(app.add_subcommand("homology", "untwisted homology over Z"), true);
    auto* c_rel = add_common(app.add_subcommand("rel-homology", "homology of (X, dX) over Z"), false);
    auto* c_tw = add_common(
        app.add_subcommand("twisted-homology", "twisted homology over Z[t^+-1] and Q(t)"), true);
    auto* c_tor = add_common(app.add_subcommand("torsion", "Reidemeister torsion over Q(t)"), true);
    auto* c_form =
        add_common(app.add_subcommand("intersection-form", "equivariant intersection pairings"), false);
    auto* c_mon = add_common(app.add_subcommand("monodromy", "open book monodromy action"), false);
    c_mon->add_flag("--trace", trace, "print the R_i / e_i recursion steps");
    auto* c_bdry = add_common(app.add_subcommand("boundary", "homology of the boundary 3-manifold"), false);
    c_bdry->add_flag("--trace", trace, "print the eps_i recursion steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    msec::MultisectionDiagram diagram;
    try {
        diagram = msec::parse_diagram_file(path);
        if (!twist_override.empty()) apply_twist_override(diagram, twist_override);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }

    try {
        const auto rep = msec::validate(diagram);
        if (!rep.ok && !c_validate->parsed()) {
            std::cerr << "error: diagram " << rep.summary() << "\n";
            return exit_validation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }

    // a file-level "options { variant = ... }" applies when no flag was given
    for (CLI::App* cmd : {c_hom, c_tw, c_tor})
        if (cmd->parsed() && cmd->count("--variant") == 0 && !diagram.default_variant.empty())
            variant_name = diagram.default_variant;

    try {
        msec::RunOutput out;
        if (c_validate->parsed()) {
            try {
                out = msec::run_validate(diagram);
            } catch (const std::domain_error& e) {
                std::cerr << e.what();
                return exit_validation;
            }
        } else if (c_hom->parsed()) {
            out = msec::run_homology(diagram, parse_variant(variant_name));
        } else if (c_rel->parsed()) {
            out = msec::run_rel_homology(diagram);
        } else if (c_tw->parsed()) {
            out = msec::run_twisted_homology(diagram, parse_variant(variant_name));
        } else if (c_tor->parsed()) {
            out = msec::run_torsion(diagram, parse_variant(variant_name));
        } else if (c_form->parsed()) {
            out = msec::run_intersection_form(diagram);
        } else if (c_mon->parsed()) {
            out = msec::run_monodromy(diagram, trace);
        } else if (c_bdry->parsed()) {
            out = msec::run_boundary(diagram, trace);
        }
        std::cout << (machine ? out.json : out.text);
        if (machine) std::cout << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_compute;
    }
    return exit_ok;
}
