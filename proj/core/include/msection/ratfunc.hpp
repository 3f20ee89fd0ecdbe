#pragma once

// The field Q(t), represented as num/den of Laurent polynomials over Q in
// canonical form: den monic in t with nonzero constant term, gcd(num,den)=1.
// The canonical form is unique per equivalence class, so operator== is
// structural equality.

#include "msection/laurent.hpp"

namespace msec {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentQ(BigRational(1))) {}
    RationalFunction(int c) : RationalFunction(BigRational(c)) {}  // NOLINT: ring-literal conversions
    explicit RationalFunction(const BigRational& c) : num_(LaurentQ(c)), den_(LaurentQ(BigRational(1))) {}
    explicit RationalFunction(const LaurentQ& p) : num_(p), den_(LaurentQ(BigRational(1))) {}
    RationalFunction(const LaurentQ& num, const LaurentQ& den) { assign(num, den); }

    static RationalFunction t(long exp = 1) { return RationalFunction(LaurentQ::t(exp)); }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const { return raw(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in Q(t)");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q(t)");
        return RationalFunction(den_, num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction conj() const { return RationalFunction(num_.conj(), den_.conj()); }

    // t -> 1; fails when the denominator vanishes there.
    BigRational augment() const {
        BigRational d = den_.augment();
        if (d == 0) throw std::domain_error("pole at t=1 under augmentation");
        return num_.augment() / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
        return n + " / (" + den_.str() + ")";
    }

private:
    RationalFunction(const LaurentQ& n, const LaurentQ& d, int) : num_(n), den_(d) {}
    static RationalFunction raw(const LaurentQ& n, const LaurentQ& d) { return RationalFunction(n, d, 0); }

    void assign(const LaurentQ& num, const LaurentQ& den) {
        if (den.is_zero()) throw std::domain_error("zero denominator in Q(t)");
        if (num.is_zero()) { num_ = LaurentQ(); den_ = LaurentQ(BigRational(1)); return; }
        LaurentQ n = num, d = den;
        const LaurentQ g = laurent_q_gcd(n, d);
        if (!g.is_one()) {
            LaurentQ q, r;
            laurent_q_divmod(n, g, q, r);
            n = q;
            laurent_q_divmod(d, g, q, r);
            d = q;
        }
        LaurentQ unit;
        d = laurent_q_unit_normalize(d, &unit);
        // divide num by the denominator's stripped unit q*t^k
        const BigRational c = unit.leading_coeff();
        const long e = unit.min_exp();
        n = n.shifted(-e);
        num_ = n.map_coeffs<BigRational>([&](const BigRational& x) { return x / c; });
        den_ = d;
    }

    LaurentQ num_;
    LaurentQ den_;
};

}  // namespace msec
