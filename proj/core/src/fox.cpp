#include "msection/fox.hpp"

#include <stdexcept>

namespace msec {

std::vector<BigInt> abelian_class(const RoseSurface& rose, const Word& w) {
    std::vector<BigInt> v(rose.gen_count(), BigInt(0));
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= v.size())
            throw std::invalid_argument("word letter outside the rose generator set");
        v[l.gen] += l.sign;
    }
    return v;
}

std::vector<LaurentZ> fox_class(const RoseSurface& rose, const Word& w, const TwistSpec& phi) {
    if (phi.gen_count() != rose.gen_count())
        throw std::invalid_argument("twist does not match the rose generator set");
    std::vector<LaurentZ> v(rose.gen_count());
    Monomial prefix;
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= v.size())
            throw std::invalid_argument("word letter outside the rose generator set");
        if (l.sign > 0) {
            v[l.gen] += prefix.laurent();
            prefix = prefix * phi.image(l.gen);
        } else {
            prefix = prefix * phi.image(l.gen).inverse();
            v[l.gen] -= prefix.laurent();
        }
    }
    return v;
}

std::vector<LaurentZ> relator_class(const RoseSurface& rose, const TwistSpec& phi) {
    if (!rose.closed_model())
        throw std::domain_error("relator class is only defined for the closed (punctured) model");
    return fox_class(rose, rose.polygon_word(), phi);
}

}  // namespace msec
