#include "msection/rose.hpp"

#include "msection/crossing.hpp"

#include <sstream>
#include <stdexcept>

namespace msec {

RoseSurface RoseSurface::standard(int genus, int boundary) {
    if (genus < 0 || boundary < 1)
        throw std::invalid_argument("bounded rose needs g >= 0 and b >= 1");
    if (genus == 0 && boundary == 0)
        throw std::invalid_argument("(g,b) = (0,0) has no bounded model");
    RoseSurface r;
    r.build_standard(genus, boundary, false);
    return r;
}

RoseSurface RoseSurface::standard_closed(int genus) {
    if (genus < 1) throw std::invalid_argument("closed model needs g >= 1");
    RoseSurface r;
    r.build_standard(genus, 0, true);
    return r;
}

void RoseSurface::build_standard(int genus, int boundary, bool closed_model) {
    genus_ = genus;
    boundary_ = boundary;
    closed_model_ = closed_model;

    for (int i = 1; i <= genus; ++i) {
        names_.push_back("a" + std::to_string(i));
        names_.push_back("b" + std::to_string(i));
    }
    const int extra = closed_model ? 0 : boundary - 1;
    for (int j = 1; j <= extra; ++j) names_.push_back("d" + std::to_string(j));

    slot_index_.assign(2 * names_.size(), 0);
    auto push_end = [&](int gen, int side) {
        slot_index_[2 * gen + (side > 0 ? 0 : 1)] = ribbon_.size();
        ribbon_.push_back({gen, side});
    };
    for (int i = 0; i < genus; ++i) {
        const int a = 2 * i, b = 2 * i + 1;
        push_end(a, +1);
        push_end(b, +1);
        push_end(a, -1);
        push_end(b, -1);
    }
    for (int j = 0; j < extra; ++j) {
        const int d = 2 * genus + j;
        push_end(d, +1);
        push_end(d, -1);
    }

    // W = [a1,b1]...[ag,bg] d1...d_{b-1}
    std::vector<Letter> w;
    for (int i = 0; i < genus; ++i) {
        const int a = 2 * i, b = 2 * i + 1;
        w.push_back({a, +1});
        w.push_back({b, +1});
        w.push_back({a, -1});
        w.push_back({b, -1});
    }
    for (int j = 0; j < extra; ++j) w.push_back({2 * genus + j, +1});
    polygon_ = Word(std::move(w));

    const std::size_t want = closed_model ? 1 : static_cast<std::size_t>(boundary);
    if (gen_count() > 0 && face_count() != want)
        throw std::logic_error("standard rose face trace does not match boundary count");

    pairing_ = generator_pairing_matrix(*this);
}

std::optional<int> RoseSurface::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::size_t RoseSurface::slot_of(int gen, int side) const {
    return slot_index_[2 * gen + (side > 0 ? 0 : 1)];
}

std::size_t RoseSurface::face_count() const {
    // Boundary cycles of the ribbon graph: cycles of (ccw-next o end-flip).
    const std::size_t n = ribbon_.size();
    if (n == 0) return 1;
    std::vector<std::size_t> next(n);
    for (std::size_t p = 0; p < n; ++p) {
        const EndSlot& e = ribbon_[p];
        const std::size_t other = slot_of(e.gen, -e.side);
        next[p] = (other + 1) % n;
    }
    std::vector<bool> seen(n, false);
    std::size_t faces = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (seen[p]) continue;
        ++faces;
        std::size_t q = p;
        while (!seen[q]) {
            seen[q] = true;
            q = next[q];
        }
    }
    return faces;
}

const Matrix<BigInt>& RoseSurface::pairing_matrix() const { return pairing_; }

Word RoseSurface::parse_word(const std::string& text) const {
    std::istringstream is(text);
    std::string tok;
    std::vector<Letter> letters;
    while (is >> tok) {
        int sign = 1;
        std::string name = tok;
        const auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            const std::string exp = tok.substr(caret + 1);
            if (exp != "-1")
                throw std::invalid_argument("word token '" + tok +
                                            "': only ^-1 is allowed; unroll other exponents");
            sign = -1;
        }
        const auto idx = index_of(name);
        if (!idx) throw std::invalid_argument("unknown generator '" + name + "' in word");
        letters.push_back({*idx, sign});
    }
    return Word(std::move(letters));
}

std::string RoseSurface::word_str(const Word& w) const {
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) os << " ";
        first = false;
        os << names_[l.gen];
        if (l.sign < 0) os << "^-1";
    }
    return os.str();
}

}  // namespace msec
