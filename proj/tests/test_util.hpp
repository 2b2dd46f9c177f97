#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tournadyn/bucketed_index.hpp"
#include "tournadyn/oracles.hpp"
#include "tournadyn/tournament.hpp"

namespace tournadyn::testing {

using Rng = std::mt19937_64;

inline Tournament random_tournament(int n, Rng& rng) {
    TournamentBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1) b.orient(u, v);
            else b.orient(v, u);
        }
    return b.take();
}

// Transitive tournament with at most r pairs flipped; FAST <= r by
// construction. Returns the flipped pair set through `flipped`.
inline Tournament transitive_plus(int n, int r, Rng& rng,
                                  std::set<std::pair<int, int>>* flipped = nullptr) {
    Tournament t = Tournament::transitive(n);
    std::set<std::pair<int, int>> fl;
    if (n >= 2) {
        for (int i = 0; i < r; ++i) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            if (u == v) continue;
            auto key = std::minmax(u, v);
            t.reverse_pair(u, v);
            if (!fl.erase(key)) fl.insert(key);
        }
    }
    if (flipped) *flipped = fl;
    return t;
}

// Transitive tournament with every pair incident to a random s-subset
// re-oriented by a coin flip; FVST <= s by construction.
inline Tournament planted_fvs(int n, int s, Rng& rng, std::vector<int>* plant = nullptr) {
    Tournament t = Tournament::transitive(n);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(verts[i], verts[rng() % (i + 1)]);
    std::vector<int> p(verts.begin(), verts.begin() + std::min(s, n));
    std::vector<char> in_p(n, 0);
    for (int v : p) in_p[v] = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((in_p[u] || in_p[v]) && (rng() & 1)) t.reverse_pair(u, v);
    if (plant) *plant = p;
    return t;
}

// True iff every view of the index matches a from-scratch recomputation.
inline bool index_consistent(const BucketedIndex& idx, const Tournament& t) {
    std::vector<int> sz(t.n, 0);
    for (int v = 0; v < t.n; ++v) ++sz[t.indeg[v]];
    int maxb = 0;
    std::vector<int> hist(t.n + 1, 0);
    for (int d = 0; d < t.n; ++d) {
        ++hist[sz[d]];
        if (sz[d] > maxb) maxb = sz[d];
        if ((sz[d] == 0) != idx.empty.contains(d)) return false;
        int cnt = 0;
        bool ok = true;
        idx.buckets.for_each_in(d, [&](int v) {
            ++cnt;
            if (t.indeg[v] != d) ok = false;
        });
        if (!ok || cnt != sz[d]) return false;
    }
    if (idx.max_bucket != maxb) return false;
    if (idx.empty.size() != hist[0]) return false;
    for (int s = 0; s <= t.n; ++s)
        if (idx.size_hist[s] != hist[s]) return false;
    return true;
}

inline std::set<std::pair<int, int>> naive_back_set(const Tournament& t) {
    return naive_views(t).back;
}

// The three fixture tournaments used across the suites.
inline Tournament t3_trans() { return Tournament::transitive(3); }

inline Tournament t3_cyc() {
    TournamentBuilder b(3);
    b.orient(0, 1);
    b.orient(1, 2);
    b.orient(2, 0);
    return b.take();
}

// Transitive on 5 vertices with the pair {0,4} reversed: indeg [1,1,2,3,3].
inline Tournament t5() {
    Tournament t = Tournament::transitive(5);
    t.reverse_pair(0, 4);
    return t;
}

}  // namespace tournadyn::testing
