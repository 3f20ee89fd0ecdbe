#include "msection/diagram.hpp"

#include "msection/fox.hpp"
#include "msection/linalg.hpp"

#include <sstream>

namespace msec {

std::string ValidationReport::summary() const {
    std::ostringstream os;
    if (ok) {
        os << "valid (page genus " << page_genus << ", " << page_components << " page component"
           << (page_components == 1 ? "" : "s") << ")";
    } else {
        os << "invalid:";
        for (const auto& issue : issues) os << " [" << issue.code << "] " << issue.detail << ";";
    }
    return os.str();
}

ValidationReport validate(const MultisectionDiagram& d) {
    ValidationReport rep;
    auto issue = [&](const std::string& code, const std::string& detail) {
        rep.issues.push_back({code, detail});
    };

    if (d.n() < 2) issue("too-few-sectors", "a multisection needs n >= 2 collections");
    const std::size_t p = d.p();
    for (const auto& col : d.collections)
        if (col.curves.size() != p)
            issue("collection-size", "collection '" + col.name + "' has " +
                                         std::to_string(col.curves.size()) + " curves, expected " +
                                         std::to_string(p));

    if (d.closed != d.rose.closed_model())
        issue("closed-flag", "closed flag does not match the surface model");

    if (d.twist.gen_count() != d.rose.gen_count())
        issue("twist-shape", "twist does not cover the generator set");

    for (const auto& arc : d.arcs)
        if (arc.dual.size() != d.rose.gen_count())
            issue("arc-shape", "arc '" + arc.name + "' dual vector has wrong length");

    // (i) each collection's abelian classes must be independent over Q
    for (const auto& col : d.collections) {
        Matrix<BigRational> m(d.rose.gen_count(), col.curves.size());
        for (std::size_t j = 0; j < col.curves.size(); ++j) {
            const auto v = abelian_class(d.rose, col.curves[j]);
            for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = BigRational(v[i]);
        }
        if (rank_kernel_image(m).rank != col.curves.size())
            issue("collection-dependent",
                  "abelian classes of collection '" + col.name + "' have rank < p");
    }

    // (ii) page Euler characteristic (bounded case): chi(Sigma) + 2p = 2 - 2h - b
    if (!d.closed) {
        const long chi = d.rose.euler_characteristic();
        const long b = d.rose.boundary_components();
        const long twice_h = 2 - b - chi - 2 * static_cast<long>(p);
        if (twice_h % 2 != 0 || twice_h < 0) {
            issue("page-genus", "no integer page genus h >= 0 satisfies chi + 2p = 2 - 2h - b");
        } else {
            rep.page_genus = static_cast<int>(twice_h / 2);
        }
    } else {
        // closed model: each collection must define a genus-g handlebody
        if (p != static_cast<std::size_t>(d.rose.genus()))
            issue("closed-rank", "closed diagrams need p = g curves per collection");
    }

    // (iii) the twist must factor through pi_1(X): it kills every defining curve
    if (d.twist.gen_count() == d.rose.gen_count()) {
        for (const auto& col : d.collections)
            for (std::size_t j = 0; j < col.curves.size(); ++j) {
                const Monomial m = d.twist.eval(col.curves[j]);
                if (!m.is_one())
                    issue("twist-does-not-kill-curve",
                          "twist does not kill curve " + std::to_string(j + 1) + " of collection '" +
                              col.name + "' (image " + m.str() + ")");
            }
    }

    rep.page_components = 1;
    rep.ok = rep.issues.empty();
    return rep;
}

}  // namespace msec
