#pragma once

// Monomial twists phi: generators -> units of Z[t^+-1], i.e. phi(g) = +-t^k.
// The trivial twist sends every generator to +t^0 and tags the coefficient
// ring as Z instead of Z[t^+-1].

#include "msection/laurent.hpp"
#include "msection/rose.hpp"

#include <string>
#include <vector>

namespace msec {

struct Monomial {
    int sign = 1;
    long exp = 0;

    bool is_one() const { return sign == 1 && exp == 0; }
    Monomial inverse() const { return {sign, -exp}; }
    Monomial conj() const { return {sign, -exp}; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) { return {a.sign * b.sign, a.exp + b.exp}; }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    LaurentZ laurent() const { return LaurentZ::monomial(BigInt(sign), exp); }
    std::string str() const;
};

class TwistSpec {
public:
    static TwistSpec trivial(std::size_t gen_count) { return TwistSpec(std::vector<Monomial>(gen_count)); }
    explicit TwistSpec(std::vector<Monomial> images) : images_(std::move(images)) {}

    std::size_t gen_count() const { return images_.size(); }
    const Monomial& image(std::size_t gen) const { return images_[gen]; }
    void set_image(std::size_t gen, Monomial m) { images_[gen] = m; }

    bool is_trivial() const {
        for (const auto& m : images_)
            if (!m.is_one()) return false;
        return true;
    }

    Monomial eval_letter(const Letter& l) const {
        return l.sign > 0 ? images_[l.gen] : images_[l.gen].inverse();
    }
    Monomial eval(const Word& w) const {
        Monomial m;
        for (const Letter& l : w.letters()) m = m * eval_letter(l);
        return m;
    }

    // Largest exponent spread over the generators; drives the cover window
    // of the brute-force intersection oracle.
    long degree_span() const {
        long lo = 0, hi = 0;
        for (const auto& m : images_) {
            lo = std::min(lo, m.exp);
            hi = std::max(hi, m.exp);
        }
        return hi - lo;
    }

    friend bool operator==(const TwistSpec& a, const TwistSpec& b) { return a.images_ == b.images_; }

private:
    std::vector<Monomial> images_;
};

// Parses "1", "-1", "t", "-t", "t^3", "-t^-2".
Monomial parse_monomial(const std::string& text);

}  // namespace msec
