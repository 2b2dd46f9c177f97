#include "tournadyn/bucketed_index.hpp"

#include <cassert>

namespace tournadyn {

BucketedIndex::BucketedIndex(const Tournament& t)
    : buckets(t.n), empty(t.n), size_hist(t.n + 1, 0) {
    // Descending insertion keeps the smallest vertex at every list head.
    for (int v = t.n - 1; v >= 0; --v) buckets.insert(v, t.indeg[v]);
    for (int d = 0; d < t.n; ++d) {
        ++size_hist[buckets.size_of(d)];
        if (buckets.size_of(d) == 0) empty.insert(d);
        if (buckets.size_of(d) > max_bucket) max_bucket = buckets.size_of(d);
    }
}

void BucketedIndex::take_out(int v, int d) {
    int s = buckets.size_of(d);
    buckets.erase(v, d);
    --size_hist[s];
    ++size_hist[s - 1];
    if (s == 1) empty.insert(d);
    while (max_bucket > 0 && size_hist[max_bucket] == 0) --max_bucket;
}

void BucketedIndex::put_in(int v, int d) {
    int s = buckets.size_of(d);
    buckets.insert(v, d);
    --size_hist[s];
    ++size_hist[s + 1];
    if (s == 0) empty.erase(d);
    if (s + 1 > max_bucket) max_bucket = s + 1;
}

void BucketedIndex::move_vertex(int v, int from, int to) {
    if (from == to) return;
    take_out(v, from);
    put_in(v, to);
}

void BucketedIndex::reverse_arc(Tournament& t, int u, int v) {
    t.check_pair(u, v);
    int x = t.arc(u, v) ? u : v;  // arc x -> y flips to y -> x
    int y = x == u ? v : u;
    int dx = t.indeg[x], dy = t.indeg[y];
    t.reverse_pair(x, y);
    move_vertex(y, dy, dy - 1);
    move_vertex(x, dx, dx + 1);
}

std::optional<std::pair<int, int>> BucketedIndex::first_after_prefix(const Tournament& t) const {
    if (t.n == 0 || empty.empty()) return std::nullopt;
    int p = empty.min();
    int d = p + 1;
    while (d < t.n && empty.contains(d)) ++d;
    assert(d < t.n);  // guaranteed: T has a cycle, so a non-empty bucket follows
    return std::make_pair(buckets.head[d], d - p);
}

}  // namespace tournadyn
