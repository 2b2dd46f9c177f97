#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tournadyn/bucketed_index.hpp"
#include "tournadyn/counters.hpp"
#include "tournadyn/tournament.hpp"

namespace tournadyn {

// Current back arcs as a list with O(1) membership and removal. The list is
// vector-backed (swap-remove); iteration order is deterministic for a fixed
// operation sequence.
struct BackArcSet {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::unordered_map<std::uint64_t, int> slot;  // packed (u,v) -> index

    BackArcSet() = default;
    explicit BackArcSet(int n_) : n(n_) {}

    std::uint64_t key(int u, int v) const {
        return static_cast<std::uint64_t>(u) * n + static_cast<std::uint64_t>(v);
    }
    int size() const { return static_cast<int>(arcs.size()); }
    bool contains(int u, int v) const { return slot.count(key(u, v)) > 0; }

    void insert(int u, int v) {
        auto [it, fresh] = slot.try_emplace(key(u, v), size());
        if (fresh) arcs.emplace_back(u, v);
    }
    void erase(int u, int v) {
        auto it = slot.find(key(u, v));
        if (it == slot.end()) return;
        int i = it->second;
        slot.erase(it);
        if (i != size() - 1) {
            arcs[i] = arcs.back();
            slot[key(arcs[i].first, arcs[i].second)] = i;
        }
        arcs.pop_back();
    }
};

enum class TriangleStatus { Found, None, TooMany };

struct TriangleQuery {
    TriangleStatus status = TriangleStatus::None;
    Triangle tri{-1, -1, -1};
};

// Promise-model triangle structure: the bucketed degree index plus the
// explicit back-arc set, repaired per update by re-testing only the arcs
// that join {u,v} to the six affected buckets.
struct DspTriangle {
    Tournament t;
    BucketedIndex idx;
    BackArcSet back;
    mutable Counters ctr;

    explicit DspTriangle(Tournament t0);

    void reverse(int u, int v);

    // false (and no mutation) when maxdb > 8(sqrt(d+1)+1), i.e. ADT >= d+1.
    bool reverse_bounded(int u, int v, long long d);

    // min(l, d_{T'}(v)) distinct in-neighbours of v in T'. v must lie in T'.
    std::vector<int> incoming(int v, int l) const;

    std::optional<Triangle> find_triangle() const;

    // Pre-checks |Back| and |Empty| against their ADT bounds for parameter d.
    TriangleQuery find_triangle_bounded(long long d) const;
};

}  // namespace tournadyn
