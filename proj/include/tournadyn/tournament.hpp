#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tournadyn/errors.hpp"

namespace tournadyn {

// Tournament on n vertices indexed 0..n-1. One orientation bit per ordered
// pair, rows contiguous so adjacency-row scans are cache-linear, plus the
// in-degree array.
struct Tournament {
    int n = 0;
    int words = 0;                   // 64-bit words per row
    std::vector<std::uint64_t> bits; // row u, bit v: arc u -> v
    std::vector<int> indeg;

    Tournament() = default;
    explicit Tournament(int n);

    // Acyclic tournament with arc u -> v iff u < v.
    static Tournament transitive(int n);

    bool arc(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63)) & 1u;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw ArgumentError("vertex index out of range");
    }
    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ArgumentError("vertices must be distinct");
    }

    // Flips the pair's orientation and adjusts both in-degrees.
    void reverse_pair(int u, int v);

    // Raw word access for bit scans (row of u).
    const std::uint64_t* row(int u) const {
        return bits.data() + static_cast<std::size_t>(u) * words;
    }

    bool operator==(const Tournament& o) const {
        return n == o.n && bits == o.bits;
    }

private:
    void set_arc(int u, int v, bool present);
    friend Tournament read_tournament(std::istream&);
    friend struct TournamentBuilder;
};

// Assembles a tournament pair by pair; validates completeness on demand.
struct TournamentBuilder {
    explicit TournamentBuilder(int n) : t(n) {}
    void orient(int u, int v) { t.set_arc(u, v, true); t.set_arc(v, u, false); }
    Tournament take();  // validates + computes indeg
    Tournament t;
};

// Text format: line 1 = n; then n rows of n characters '0'/'1',
// row u column v = '1' iff arc(u,v). Rejects non-tournament matrices.
Tournament read_tournament(std::istream& in);
Tournament read_tournament_file(const std::string& path);
void write_tournament(std::ostream& out, const Tournament& t);
void write_tournament_file(const std::string& path, const Tournament& t);

// True iff the current arc is u -> v with indeg(u) >= indeg(v); ties are
// back arcs. The arc u -> v must exist.
inline bool is_back_arc(const Tournament& t, int u, int v) {
    t.check_pair(u, v);
    if (!t.arc(u, v)) throw ArgumentError("is_back_arc: arc(u,v) absent");
    return t.indeg[u] >= t.indeg[v];
}

// Directed triangle (a,b,c): arcs a->b, b->c, c->a.
using Triangle = std::array<int, 3>;

// Rotates so the smallest vertex index comes first.
inline Triangle canonical_triangle(int a, int b, int c) {
    if (b < a && b < c) return {b, c, a};
    if (c < a && c < b) return {c, a, b};
    return {a, b, c};
}

inline bool triangle_valid(const Tournament& t, const Triangle& tr) {
    return t.arc(tr[0], tr[1]) && t.arc(tr[1], tr[2]) && t.arc(tr[2], tr[0]);
}

}  // namespace tournadyn
