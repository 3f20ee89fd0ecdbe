#include "msection/twist.hpp"

#include <stdexcept>

namespace msec {

std::string Monomial::str() const {
    std::string s = sign < 0 ? "-" : "";
    if (exp == 0) return s + "1";
    s += "t";
    if (exp != 1) s += "^" + std::to_string(exp);
    return s;
}

Monomial parse_monomial(const std::string& text) {
    std::string s = text;
    Monomial m;
    if (!s.empty() && s[0] == '-') {
        m.sign = -1;
        s = s.substr(1);
    } else if (!s.empty() && s[0] == '+') {
        s = s.substr(1);
    }
    if (s == "1") return m;
    if (s.empty() || s[0] != 't') throw std::invalid_argument("bad monomial '" + text + "'");
    s = s.substr(1);
    if (s.empty()) {
        m.exp = 1;
        return m;
    }
    if (s[0] != '^') throw std::invalid_argument("bad monomial '" + text + "'");
    s = s.substr(1);
    try {
        std::size_t used = 0;
        m.exp = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("bad monomial exponent in '" + text + "'");
    }
    return m;
}

}  // namespace msec
