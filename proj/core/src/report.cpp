#include "msection/report.hpp"

#include "msection/homology.hpp"
#include "msection/intersection_forms.hpp"
#include "msection/open_book.hpp"
#include "msection/torsion.hpp"

#include <json.hpp>

#include <sstream>

namespace msec {
namespace {

using nlohmann::json;

Variant effective_variant(const MultisectionDiagram& d, Variant v) {
    if (d.closed && v == Variant::absolute) return Variant::closed;
    return v;
}

std::string to_string_entry(const BigInt& v) { return v.str(); }
std::string to_string_entry(const BigRational& v) { return v.str(); }
std::string to_string_entry(const LaurentZ& v) { return v.str(); }
std::string to_string_entry(const LaurentQ& v) { return v.str(); }
std::string to_string_entry(const RationalFunction& v) { return v.str(); }

template <class T>
json matrix_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string_entry(m(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

// Row-major table with labeled rows and columns, so audit traces line up
// with hand computations.
template <class T>
std::string matrix_table(const Matrix<T>& m, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels, const std::string& indent) {
    std::vector<std::vector<std::string>> cells(m.rows() + 1);
    cells[0].push_back("");
    for (std::size_t j = 0; j < m.cols(); ++j)
        cells[0].push_back(j < col_labels.size() ? col_labels[j] : "c" + std::to_string(j + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cells[i + 1].push_back(i < row_labels.size() ? row_labels[i] : "r" + std::to_string(i + 1));
        for (std::size_t j = 0; j < m.cols(); ++j) cells[i + 1].push_back(to_string_entry(m(i, j)));
    }
    std::vector<std::size_t> width(m.cols() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        os << indent;
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << row[j] << std::string(width[j] - row[j].size() + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

json homology_json(const HomologyReport& h) {
    json groups = json::array();
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        const auto& g = h.groups[k];
        json jg{{"degree", k}, {"free_rank", g.free_rank}, {"pretty", g.str(h.ring)}};
        json tor = json::array();
        for (const auto& d : g.torsion) tor.push_back(d.str());
        jg["torsion"] = tor;
        json inv = json::array();
        for (const auto& f : g.invariant_factors) inv.push_back(f.str());
        jg["invariant_factors"] = inv;
        if (g.presentation) {
            jg["presentation"] = matrix_json(*g.presentation);
            jg["presentation_integral"] = g.presentation_integral;
        }
        groups.push_back(jg);
    }
    return json{{"ring", coeff_ring_name(h.ring)}, {"groups", groups}};
}

json complex_json(const ChainComplex<LaurentQ>& c) {
    json bnd = json::array();
    for (std::size_t k = 1; k < c.bnd.size(); ++k) bnd.push_back(matrix_json(c.bnd[k]));
    return json{{"ranks", c.ranks}, {"boundaries", bnd}, {"ring_exact", c.ring_exact}};
}

json complex_json(const ChainComplex<BigInt>& c) {
    json bnd = json::array();
    for (std::size_t k = 1; k < c.bnd.size(); ++k) bnd.push_back(matrix_json(c.bnd[k]));
    return json{{"ranks", c.ranks}, {"boundaries", bnd}};
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::absolute: return "absolute";
        case Variant::relative: return "relative";
        case Variant::closed: return "closed";
    }
    return "?";
}

}  // namespace

RunOutput run_validate(const MultisectionDiagram& d) {
    const auto rep = validate(d);
    std::ostringstream os;
    os << "diagram: n=" << d.n() << " p=" << d.p() << " genus=" << d.rose.genus();
    if (d.closed)
        os << " closed";
    else
        os << " boundary=" << d.rose.boundary_components();
    if (d.twisted()) os << " twisted";
    os << "\n" << rep.summary() << "\n";
    json j{{"ok", rep.ok},
           {"page_genus", rep.page_genus},
           {"page_components", rep.page_components},
           {"n", d.n()},
           {"p", d.p()}};
    json issues = json::array();
    for (const auto& i : rep.issues) issues.push_back(json{{"code", i.code}, {"detail", i.detail}});
    j["issues"] = issues;
    if (!rep.ok) throw std::domain_error(os.str());
    return {os.str(), j.dump(2)};
}

RunOutput run_homology(const MultisectionDiagram& d, Variant v) {
    v = effective_variant(d, v);
    const auto c = build_complex_z(d, v);
    const auto h = homology_over_Z(c);
    std::ostringstream os;
    os << variant_name(v) << " homology over Z\n" << h.str() << "\n";
    json j{{"variant", variant_name(v)},
           {"homology", homology_json(h)},
           {"complex", complex_json(c)}};
    return {os.str(), j.dump(2)};
}

RunOutput run_rel_homology(const MultisectionDiagram& d) {
    return run_homology(d, Variant::relative);
}

RunOutput run_twisted_homology(const MultisectionDiagram& d, Variant v) {
    v = effective_variant(d, v);
    const auto c = build_complex_twisted(d, v);
    const auto h = homology_over_laurent(c, c.ring_exact);
    const auto hf = homology_over_Qt(to_ratfunc_complex(c));
    std::ostringstream os;
    os << variant_name(v) << " twisted homology over " << coeff_ring_name(h.ring) << "\n"
       << h.str() << "\n";
    os << "over Q(t): " << hf.str() << (hf.acyclic() ? "  (acyclic)" : "") << "\n";
    json j{{"variant", variant_name(v)},
           {"homology", homology_json(h)},
           {"over_Qt", homology_json(hf)},
           {"complex", complex_json(c)}};
    return {os.str(), j.dump(2)};
}

RunOutput run_torsion(const MultisectionDiagram& d, Variant v) {
    v = effective_variant(d, v);
    const auto tv = torsion_of_diagram(d, v);
    std::ostringstream os;
    os << variant_name(v) << " Reidemeister torsion\ntau = " << tv.str() << "\n";
    json j{{"variant", variant_name(v)},
           {"torsion", tv.canonical.str()},
           {"numerator", tv.canonical.num().str()},
           {"denominator", tv.canonical.den().str()},
           {"ambiguity", tv.ambiguity == TorsionAmbiguity::unit_monomial ? "+-t^k" : "q*t^k"},
           {"acyclic", tv.acyclic}};
    return {os.str(), j.dump(2)};
}

RunOutput run_intersection_form(const MultisectionDiagram& d) {
    std::ostringstream os;
    json j;
    if (d.closed) {
        const auto cycles = extract_closed_H2_cycles(d);
        const auto info = closed_H2_form_untwisted(d, cycles);
        os << "intersection form on H_2(X)/torsion (rank " << info.gram.rows() << ")\n";
        os << info.gram.str() << "\n";
        os << "signature " << info.signature() << "  (" << info.positive << "+, " << info.negative
           << "-, " << info.zero << " zero)";
        if (info.gram.rows() > 0) os << "  det " << info.det.str();
        os << "\n";
        j = json{{"case", "closed"},
                 {"gram", matrix_json(info.gram)},
                 {"signature", info.signature()},
                 {"positive", info.positive},
                 {"negative", info.negative},
                 {"zero", info.zero},
                 {"det", info.det.str()}};
    } else {
        const auto xs = extract_absolute_H2_cycles(d);
        const auto ys = extract_relative_H2_cycles(d);
        Matrix<BigInt> m(xs.size(), ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t k = 0; k < ys.size(); ++k) m(i, k) = pair_H2_untwisted(d, xs[i], ys[k]);
        os << "pairing H_2(X)/tors x H_2(X,dX)/tors  (" << xs.size() << " x " << ys.size() << ")\n";
        os << m.str() << "\n";
        j = json{{"case", "bounded"}, {"pairing", matrix_json(m)}};
        if (m.rows() == m.cols() && m.rows() > 0) {
            const BigInt det = to_integer(determinant(to_rational_matrix(m)));
            os << "det " << det.str() << "\n";
            j["det"] = det.str();
        }
    }
    return {os.str(), j.dump(2)};
}

namespace {

json monodromy_json(const MonodromyResult& m, bool trace) {
    json j{{"page", json{{"genus", m.page.genus},
                         {"boundary", m.page.boundary},
                         {"components", m.page.components}}},
           {"R", matrix_json(m.action)},
           {"det_R", m.action_det.str()},
           {"S", matrix_json(m.xi)},
           {"boundary_homology", homology_json(m.boundary_homology)}};
    json sel = json::array();
    for (const auto& idx : m.a_indices) sel.push_back(idx);
    j["a_subsets"] = sel;
    if (trace) {
        json steps = json::array();
        for (std::size_t i = 0; i < m.r_steps.size(); ++i) {
            steps.push_back(json{{"R_i", matrix_json(m.r_steps[i])},
                                 {"e_i", matrix_json(m.e_steps[i + 1])},
                                 {"eps_i", matrix_json(m.eps_steps[i + 1])}});
        }
        j["trace"] = steps;
    }
    return j;
}

std::string arc_names(const MultisectionDiagram& d) {
    std::string s;
    for (const auto& a : d.arcs) s += (s.empty() ? "" : ", ") + a.name;
    return s;
}

}  // namespace

RunOutput run_monodromy(const MultisectionDiagram& d, bool trace) {
    const auto m = monodromy_action(d);
    std::ostringstream os;
    os << "open book page: genus " << m.page.genus << ", " << m.page.boundary
       << " boundary components\n";
    os << "monodromy action on H_1(page, boundary) in basis (" << arc_names(d) << "):\n";
    std::vector<std::string> arcs;
    for (const auto& a : d.arcs) arcs.push_back(a.name);
    os << matrix_table(m.action, arcs, arcs, "  ");
    os << "det R = " << m.action_det.str() << "\n";
    if (trace) {
        for (std::size_t i = 0; i < m.r_steps.size(); ++i) {
            std::vector<std::string> a_labels;
            for (std::size_t idx : m.a_indices[i])
                a_labels.push_back(d.collections[i].name + ":" + std::to_string(idx + 1));
            os << "R_" << i + 1 << " =\n" << matrix_table(m.r_steps[i], arcs, a_labels, "  ");
            os << "e_" << i + 2 << " (dual coords) =\n"
               << matrix_table(m.e_steps[i + 1], d.rose.generator_names(), arcs, "  ");
        }
    }
    return {os.str(), monodromy_json(m, trace).dump(2)};
}

RunOutput run_boundary(const MultisectionDiagram& d, bool trace) {
    const auto m = monodromy_action(d);
    std::ostringstream os;
    std::vector<std::string> arcs;
    for (const auto& a : d.arcs) arcs.push_back(a.name);
    os << "open book complex for dX:  0 -> Z^" << m.page.components
       << " -> H_1(S,dS) --xi--> H_1(S) -> Z^" << m.page.components << " -> 0\n";
    os << "xi in the arc basis (" << arc_names(d) << "):\n";
    os << matrix_table(m.xi, {}, arcs, "  ");
    os << "homology of dX: " << m.boundary_homology.str() << "\n";
    if (trace) {
        for (std::size_t i = 0; i < m.eps_steps.size(); ++i)
            os << "eps_" << i + 1 << " (loop coords) =\n"
               << matrix_table(m.eps_steps[i], d.rose.generator_names(), arcs, "  ");
    }
    return {os.str(), monodromy_json(m, trace).dump(2)};
}

}  // namespace msec
