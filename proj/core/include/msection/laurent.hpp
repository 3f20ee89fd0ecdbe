#pragma once

// Laurent polynomials c_k t^k with exact coefficients, stored sparsely by
// exponent. No zero coefficient is ever stored; the zero polynomial has an
// empty map. Over Z the units are exactly +-t^k, over Q they are q*t^k.

#include "msection/numbers.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace msec {

template <class C>
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int constant) : LaurentPoly(C(constant)) {}  // NOLINT: ring-literal conversions
    explicit LaurentPoly(const C& constant) {
        if (!(constant == C(0))) coeffs_[0] = constant;
    }
    static LaurentPoly monomial(const C& c, long exp) {
        LaurentPoly p;
        if (!(c == C(0))) p.coeffs_[exp] = c;
        return p;
    }
    static LaurentPoly t(long exp = 1) { return monomial(C(1), exp); }

    const std::map<long, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    C coeff(long exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? C(0) : it->second;
    }

    long min_exp() const { require_nonzero(); return coeffs_.begin()->first; }
    long max_exp() const { require_nonzero(); return coeffs_.rbegin()->first; }
    long span() const { return max_exp() - min_exp(); }
    const C& leading_coeff() const { require_nonzero(); return coeffs_.rbegin()->second; }
    std::size_t term_count() const { return coeffs_.size(); }

    // A single-term polynomial whose coefficient is a unit of C.
    bool is_unit() const {
        if (coeffs_.size() != 1) return false;
        return coeff_is_unit(coeffs_.begin()->second);
    }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == C(1); }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(long by) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + by] = c;
        return r;
    }

    // t -> 1/t
    LaurentPoly conj() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    // t -> 1
    C augment() const {
        C s(0);
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    template <class D, class Fn>
    LaurentPoly<D> map_coeffs(Fn&& fn) const {
        LaurentPoly<D> r;
        for (const auto& [e, c] : coeffs_) r.add_term(e, fn(c));
        return r;
    }

    void add_term(long exp, const C& c) {
        if (c == C(0)) return;
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            coeffs_[exp] = c;
        } else {
            it->second += c;
            if (it->second == C(0)) coeffs_.erase(it);
        }
    }

    std::string str(const std::string& var = "t") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            bool unit_coeff = (cs == "1");
            if (e == 0) {
                os << cs;
            } else {
                if (!unit_coeff) os << cs << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    static bool coeff_is_unit(const BigInt& c) { return c == 1 || c == -1; }
    static bool coeff_is_unit(const BigRational& c) { return c != 0; }
    void require_nonzero() const {
        if (coeffs_.empty()) throw std::domain_error("zero Laurent polynomial has no degree data");
    }

    std::map<long, C> coeffs_;
};

using LaurentZ = LaurentPoly<BigInt>;
using LaurentQ = LaurentPoly<BigRational>;

inline LaurentQ to_laurent_q(const LaurentZ& p) {
    return p.template map_coeffs<BigRational>([](const BigInt& c) { return BigRational(c); });
}

// Fails if any coefficient is non-integral.
inline LaurentZ to_laurent_z(const LaurentQ& p) {
    return p.template map_coeffs<BigInt>([](const BigRational& c) { return to_integer(c); });
}

inline bool laurent_q_is_integral(const LaurentQ& p) {
    for (const auto& [e, c] : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

// Division with remainder in Q[t^+-1]: a = q*b + r with r = 0 or span(r) < span(b).
// Realized by shifting both arguments into Q[t] and dividing there.
inline void laurent_q_divmod(const LaurentQ& a, const LaurentQ& b, LaurentQ& q, LaurentQ& r) {
    if (b.is_zero()) throw std::domain_error("laurent division by zero");
    if (a.is_zero()) { q = LaurentQ(); r = LaurentQ(); return; }
    const long sa = a.min_exp(), sb = b.min_exp();
    LaurentQ A = a.shifted(-sa);  // polynomial, constant term != 0
    const LaurentQ B = b.shifted(-sb);
    LaurentQ Q;
    const long degB = B.max_exp();
    while (!A.is_zero() && A.max_exp() >= degB) {
        const long d = A.max_exp() - degB;
        const LaurentQ m = LaurentQ::monomial(A.leading_coeff() / B.leading_coeff(), d);
        Q += m;
        A -= m * B;
    }
    q = Q.shifted(sa - sb);
    r = A.shifted(sa);
}

// Writes a = unit * normal with normal monic in t and nonzero constant term.
inline LaurentQ laurent_q_unit_normalize(const LaurentQ& a, LaurentQ* unit = nullptr) {
    if (a.is_zero()) {
        if (unit) *unit = LaurentQ(BigRational(1));
        return a;
    }
    const long s = a.min_exp();
    const BigRational lead = a.leading_coeff();
    if (unit) *unit = LaurentQ::monomial(lead, s);
    LaurentQ n = a.shifted(-s);
    return n.map_coeffs<BigRational>([&](const BigRational& c) { return c / lead; });
}

// Same normal form for integer Laurent polynomials, units +-t^k only:
// positive leading coefficient and nonzero constant term.
inline LaurentZ laurent_z_unit_normalize(const LaurentZ& a, LaurentZ* unit = nullptr) {
    if (a.is_zero()) {
        if (unit) *unit = LaurentZ(BigInt(1));
        return a;
    }
    const long s = a.min_exp();
    const bool neg = a.leading_coeff() < 0;
    if (unit) *unit = LaurentZ::monomial(BigInt(neg ? -1 : 1), s);
    LaurentZ n = a.shifted(-s);
    return neg ? -n : n;
}

inline LaurentQ laurent_q_gcd(LaurentQ a, LaurentQ b) {
    a = laurent_q_unit_normalize(a);
    b = laurent_q_unit_normalize(b);
    while (!b.is_zero()) {
        LaurentQ q, r;
        laurent_q_divmod(a, b, q, r);
        a = b;
        b = laurent_q_unit_normalize(r);
    }
    return a;
}

}  // namespace msec
