#pragma once

#include <iosfwd>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tournadyn/array_set.hpp"
#include "tournadyn/bucketed_index.hpp"
#include "tournadyn/counters.hpp"
#include "tournadyn/tournament.hpp"

namespace tournadyn {

// One k-long-graph edge gained or lost by an update; a < b.
struct LongArcDelta {
    int a, b;
    bool added;
    bool operator==(const LongArcDelta&) const = default;
};

// Vertex-removal structure: the full tournament T, the removed set F
// (|F| <= k) and an implicit tokenized view of T-F. Invariants:
//   INV1  d_{T-F}(v) = rdeg[v] - ctok(rdeg[v])         for v not in F
//   INV2  vtok is a bijection F -> tok, positions pairwise distinct
//   INV3  |vtok[v] - d_T(v)| <= 6k-3                    for v in F
// plus: long_arcs encodes exactly the k-long graph of T.
struct DremState {
    Tournament t;
    BucketedIndex idx;  // degree view of full T; removals do not touch it
    int k = 0;

    ArraySet removed;                          // F
    std::vector<int> rdeg;                     // reduced degrees, v not in F
    VertexBuckets rbuckets;                    // keyed by reduced degree
    ArraySet rempty;                           // empty reduced buckets
    ArraySet tok;                              // token positions, over [5n]
    std::vector<int> vtok;                     // v in F -> token position
    std::vector<std::unordered_set<int>> long_arcs;  // k-long graph adjacency

    ArraySet empty_scratch;  // reusable staging set for the empty set of T-F
    mutable Counters ctr;
    int token_drift_hwm = 0;  // observed max |vtok[v] - d_T(v)|; INV3 caps it at 6k-3

    DremState(Tournament t0, int k, const std::vector<int>& f);

    // |{p in tok : p <= d}|, by iterating the token list.
    int ctok(int d) const;

    // The non-empty interval {i : i - ctok(i) = d}, inside [d, d+|tok|].
    std::pair<int, int> tokenized_interval(int d) const;

    // Reduced degree for w not in F: the minimal r with
    // d_{T-F}(w) = r - ctok(r). O(|F|).
    int fix_rdeg(int w) const;

    // Arc reversal in T; returns the k-long-graph delta (<= 12 maxdb + 1).
    std::vector<LongArcDelta> reverse(int u, int v);

    void remove(int v);
    void restore(int v);

    int removed_count() const { return removed.size(); }

    // Text dump: per vertex "index indeg removed rdeg vtok", then the token
    // list; consumed by the harness's verify mode.
    void debug_dump(std::ostream& os) const;

private:
    void note_drift(int v);
    int reduced_degree_actual(int w) const;  // d_{T-F}(w) via row + removed
    void refix(int w);
    void sweep(long long lo, long long hi);
    void rbucket_insert(int v, int d);
    void rbucket_remove(int v, int d);
    bool long_back_status(int da, int db, bool arc_ab) const;
    void apply_edge(int a, int b, bool present, std::vector<LongArcDelta>& delta);
};

}  // namespace tournadyn
