#pragma once

#include <optional>
#include <utility>

#include "tournadyn/array_set.hpp"
#include "tournadyn/tournament.hpp"
#include "tournadyn/vertex_buckets.hpp"

namespace tournadyn {

// Degree-bucket view of a tournament: per-degree vertex buckets with O(1)
// moves, the set of empty bucket degrees, a histogram of bucket sizes and the
// maximum bucket size. Built in O(n^2), updated in O(1) per arc reversal.
struct BucketedIndex {
    VertexBuckets buckets;       // indexed by in-degree
    ArraySet empty;              // degrees whose bucket is empty
    std::vector<int> size_hist;  // size_hist[s] = number of buckets of size s
    int max_bucket = 0;

    BucketedIndex() = default;
    explicit BucketedIndex(const Tournament& t);

    // Reverses the pair's arc in t and repairs every view in O(1).
    void reverse_arc(Tournament& t, int u, int v);

    // Minimum-degree vertex of T' = T minus its prefix, with its degree in
    // T'. Absent iff T' is empty (T acyclic or n = 0). Cost O(|empty|).
    std::optional<std::pair<int, int>> first_after_prefix(const Tournament& t) const;

    // Prefix length |P|: min(empty), or n when empty is empty. O(|empty|).
    int prefix_length(const Tournament& t) const {
        return empty.empty() ? t.n : empty.min();
    }

    // Single bucket move with histogram/empty/max upkeep.
    void move_vertex(int v, int from, int to);

private:
    void take_out(int v, int d);
    void put_in(int v, int d);
};

}  // namespace tournadyn
