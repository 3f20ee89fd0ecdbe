#pragma once

// One-vertex ribbon graph (rose) model of the central surface. The bounded
// surface of genus g with b boundary components retracts onto a rose with
// 2g+b-1 loops; the closed surface is handled through its once-punctured
// model, a rose with 2g loops plus the polygon relator.
//
// Ribbon data is the counterclockwise cyclic order of the 2N edge-ends
// around the vertex: per handle (a+, b+, a-, b-), then (d+, d-) per extra
// boundary component. Face tracing on this order recovers the number of
// boundary circles, which validates the construction.

#include "msection/matrix.hpp"
#include "msection/numbers.hpp"
#include "msection/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msec {

struct EndSlot {
    int gen = 0;
    int side = 1;  // +1: outgoing end of the loop, -1: incoming end
    friend bool operator==(const EndSlot& a, const EndSlot& b) = default;
};

class RoseSurface {
public:
    RoseSurface() = default;  // empty placeholder; use the factories

    // Bounded model: b >= 1 (g,b) != (0,0); generators a1,b1,...,ag,bg,d1..d(b-1).
    static RoseSurface standard(int genus, int boundary);
    // Punctured model of the closed genus-g surface: 2g generators, relator
    // [a1,b1]...[ag,bg].
    static RoseSurface standard_closed(int genus);

    int genus() const { return genus_; }
    int boundary_components() const { return boundary_; }
    bool closed_model() const { return closed_model_; }

    std::size_t gen_count() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    const std::string& name(std::size_t g) const { return names_[g]; }
    std::optional<int> index_of(const std::string& name) const;

    const std::vector<EndSlot>& ribbon() const { return ribbon_; }
    std::size_t slot_of(int gen, int side) const;

    const Word& polygon_word() const { return polygon_; }

    // Euler characteristic of the bounded surface (or punctured model).
    long euler_characteristic() const { return 1 - static_cast<long>(gen_count()); }

    // Number of boundary circles of the thickened rose (ribbon-graph faces).
    std::size_t face_count() const;

    // Gram matrix of the absolute intersection pairing on the generator
    // classes, computed from the ribbon structure by the crossing engine.
    const Matrix<BigInt>& pairing_matrix() const;

    Word parse_word(const std::string& text) const;  // whitespace tokens, "g" or "g^-1"
    std::string word_str(const Word& w) const;

private:
    void build_standard(int genus, int boundary, bool closed_model);

    int genus_ = 0;
    int boundary_ = 0;
    bool closed_model_ = false;
    std::vector<std::string> names_;
    std::vector<EndSlot> ribbon_;
    std::vector<std::size_t> slot_index_;  // [gen*2 + (side>0?0:1)] -> ribbon position
    Word polygon_;
    Matrix<BigInt> pairing_;  // computed at construction; values stay immutable
};

}  // namespace msec
