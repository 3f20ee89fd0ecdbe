#include "msection/crossing.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace msec {
namespace {

// in(l): the slot through which the strand arrives after traversing l.
// out(l): the slot through which it departs to traverse l.
std::size_t in_slot(const RoseSurface& rose, const Letter& l) {
    return rose.slot_of(l.gen, l.sign > 0 ? -1 : +1);
}
std::size_t out_slot(const RoseSurface& rose, const Letter& l) {
    return rose.slot_of(l.gen, l.sign > 0 ? +1 : -1);
}

struct Trav {
    int curve;
    std::size_t idx;
};

// Walks a curve's itinerary away from one attach of an edge, yielding the
// far endpoint slot of the successive vertex chords.
struct Walker {
    const Word* w;
    std::size_t chord;
    int dir;

    std::size_t target(const RoseSurface& rose) const {
        const auto& ls = w->letters();
        const std::size_t m = ls.size();
        if (dir > 0) return out_slot(rose, ls[(chord + 1) % m]);
        return in_slot(rose, ls[chord]);
    }
    void advance() {
        const std::size_t m = w->letters().size();
        chord = (chord + m + static_cast<std::size_t>(dir > 0 ? 1 : m - 1)) % m;
    }
};

Walker ray_minus(const RoseSurface&, const std::vector<Word>& curves, const Trav& t) {
    const Word& w = curves[t.curve];
    const Letter& l = w.letters()[t.idx];
    const std::size_t m = w.letters().size();
    if (l.sign > 0) return {&w, t.idx, +1};
    return {&w, (t.idx + m - 1) % m, -1};
}

struct LaneTable {
    // rank[curve][idx]: position of the traversal within its edge's lane
    // stack, read counterclockwise at the incoming (g,-1) slot.
    std::vector<std::vector<std::size_t>> rank;
    std::vector<std::vector<std::size_t>> lane_size;  // stack size per traversal's edge
};

// Lane order inside one edge: strands sorted by the itineraries seen from
// the edge's incoming attach. At the first divergence the strand whose next
// turn is counterclockwise-farther from the shared arrival slot sits earlier
// in counterclockwise sub-order; parallel-forever strands take a fixed
// deterministic order (they cannot cross either way).
bool lane_before(const RoseSurface& rose, const std::vector<Word>& curves, const Trav& a,
                 const Trav& b) {
    const std::size_t n_slots = rose.ribbon().size();
    const int gen = curves[a.curve].letters()[a.idx].gen;
    Walker wa = ray_minus(rose, curves, a);
    Walker wb = ray_minus(rose, curves, b);
    std::size_t arrival = rose.slot_of(gen, -1);
    const std::size_t bound = 2 * (curves[0].size() + curves[1].size()) + 8;
    for (std::size_t step = 0; step < bound; ++step) {
        const std::size_t ta = wa.target(rose);
        const std::size_t tb = wb.target(rose);
        if (ta != tb) {
            const std::size_t da = (ta + n_slots - arrival) % n_slots;
            const std::size_t db = (tb + n_slots - arrival) % n_slots;
            return da > db;
        }
        const EndSlot& e = rose.ribbon()[ta];
        arrival = rose.slot_of(e.gen, -e.side);
        wa.advance();
        wb.advance();
    }
    if (a.curve != b.curve) return a.curve < b.curve;
    return a.idx < b.idx;
}

struct Pos {
    std::size_t slot;
    std::size_t sub;
    friend bool operator<(const Pos& p, const Pos& q) {
        return p.slot != q.slot ? p.slot < q.slot : p.sub < q.sub;
    }
    friend bool operator==(const Pos& p, const Pos& q) = default;
};

bool cyclic_between(const Pos& x, const Pos& lo, const Pos& hi) {
    if (lo < hi) return lo < x && x < hi;
    return lo < x || x < hi;
}

LaneTable build_lanes(const RoseSurface& rose, const std::vector<Word>& curves) {
    LaneTable table;
    table.rank.resize(curves.size());
    table.lane_size.resize(curves.size());
    for (std::size_t c = 0; c < curves.size(); ++c) {
        table.rank[c].assign(curves[c].size(), 0);
        table.lane_size[c].assign(curves[c].size(), 0);
    }
    std::vector<std::vector<Trav>> per_edge(rose.gen_count());
    for (std::size_t c = 0; c < curves.size(); ++c)
        for (std::size_t j = 0; j < curves[c].size(); ++j)
            per_edge[curves[c].letters()[j].gen].push_back({static_cast<int>(c), j});
    for (auto& stack : per_edge) {
        std::sort(stack.begin(), stack.end(), [&](const Trav& a, const Trav& b) {
            return lane_before(rose, curves, a, b);
        });
        for (std::size_t r = 0; r < stack.size(); ++r) {
            table.rank[stack[r].curve][stack[r].idx] = r;
            table.lane_size[stack[r].curve][stack[r].idx] = stack.size();
        }
    }
    return table;
}

// Refined position of a traversal's end at one side of its edge. Reading the
// vertex boundary counterclockwise, the incoming slot lists the stack in
// order and the outgoing slot reverses it (the ribbon is orientable).
Pos end_position(const RoseSurface& rose, const LaneTable& lanes, const std::vector<Word>& curves,
                 const Trav& t, int side) {
    const Letter& l = curves[t.curve].letters()[t.idx];
    const std::size_t r = lanes.rank[t.curve][t.idx];
    const std::size_t n = lanes.lane_size[t.curve][t.idx];
    if (side < 0) return {rose.slot_of(l.gen, -1), r};
    return {rose.slot_of(l.gen, +1), n - 1 - r};
}

struct Chord {
    Pos in, out;
    Monomial prefix;  // phi of the word up to and including the letter before the pass
};

std::vector<Chord> curve_chords(const RoseSurface& rose, const LaneTable& lanes,
                                const std::vector<Word>& curves, int c, const TwistSpec& phi) {
    const Word& w = curves[c];
    const std::size_t m = w.size();
    std::vector<Chord> chords(m);
    Monomial prefix;
    for (std::size_t j = 0; j < m; ++j) {
        prefix = prefix * phi.eval_letter(w.letters()[j]);
        const Letter& lj = w.letters()[j];
        const Letter& lnext = w.letters()[(j + 1) % m];
        // arrival end of traversal j, departure end of traversal j+1
        chords[j].in = end_position(rose, lanes, curves, {c, j}, lj.sign > 0 ? -1 : +1);
        chords[j].out =
            end_position(rose, lanes, curves, {c, (j + 1) % m}, lnext.sign > 0 ? +1 : -1);
        chords[j].prefix = prefix;
    }
    return chords;
}

}  // namespace

LaurentZ equivariant_intersection(const RoseSurface& rose, const Word& x, const Word& y,
                                  const TwistSpec& phi) {
    if (phi.gen_count() != rose.gen_count())
        throw std::invalid_argument("twist does not match the rose generator set");
    const Word xr = x.cyclically_reduced();
    const Word yr = y.cyclically_reduced();
    LaurentZ total;
    if (xr.empty() || yr.empty()) return total;

    const std::vector<Word> curves{xr, yr};
    const LaneTable lanes = build_lanes(rose, curves);
    const auto xc = curve_chords(rose, lanes, curves, 0, phi);
    const auto yc = curve_chords(rose, lanes, curves, 1, phi);

    for (const Chord& p : xc)
        for (const Chord& q : yc) {
            const bool b1_in = cyclic_between(q.in, p.in, p.out);
            const bool b2_in = cyclic_between(q.out, p.in, p.out);
            if (b1_in == b2_in) continue;  // no transverse crossing
            const int sign = b1_in ? +1 : -1;
            const Monomial deck = p.prefix.conj() * q.prefix;
            total.add_term(deck.exp, BigInt(sign * deck.sign));
        }
    return total;
}

BigInt algebraic_intersection(const RoseSurface& rose, const Word& x, const Word& y) {
    return equivariant_intersection(rose, x, y, TwistSpec::trivial(rose.gen_count())).augment();
}

Matrix<BigInt> generator_pairing_matrix(const RoseSurface& rose) {
    const std::size_t n = rose.gen_count();
    Matrix<BigInt> gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Word wi({{static_cast<int>(i), 1}});
            const Word wj({{static_cast<int>(j), 1}});
            gram(i, j) = algebraic_intersection(rose, wi, wj);
        }
    return gram;
}

}  // namespace msec
