#include "tournadyn/triangle_promise.hpp"

#include <algorithm>
#include <cassert>

#include "tournadyn/bounds.hpp"

namespace tournadyn {

DspTriangle::DspTriangle(Tournament t0) : t(std::move(t0)), idx(t), back(t.n) {
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v)
            if (u != v && t.arc(u, v) && t.indeg[u] >= t.indeg[v]) back.insert(u, v);
}

void DspTriangle::reverse(int u, int v) {
    t.check_pair(u, v);

    // Candidates: vertices in the six buckets around the endpoints'
    // degrees, snapshotted before the degree change.
    int degs[6] = {t.indeg[u] - 1, t.indeg[u], t.indeg[u] + 1,
                   t.indeg[v] - 1, t.indeg[v], t.indeg[v] + 1};
    std::sort(std::begin(degs), std::end(degs));
    std::vector<int> cand;
    for (int i = 0; i < 6; ++i) {
        int d = degs[i];
        if (d < 0 || d >= t.n || (i > 0 && d == degs[i - 1])) continue;
        idx.buckets.for_each_in(d, [&](int w) {
            ++ctr.bucket_scans;
            if (w != u && w != v) cand.push_back(w);
        });
    }

    idx.reverse_arc(t, u, v);

    auto retest = [&](int a, int b) {
        int x = t.arc(a, b) ? a : b;  // current arc x -> y
        int y = x == a ? b : a;
        back.erase(y, x);
        if (t.indeg[x] >= t.indeg[y]) back.insert(x, y);
        else back.erase(x, y);
    };
    retest(u, v);
    for (int w : cand) {
        retest(u, w);
        retest(v, w);
    }
}

bool DspTriangle::reverse_bounded(int u, int v, long long d) {
    t.check_pair(u, v);
    if (d < 0) throw ArgumentError("reverse_bounded: d must be non-negative");
    if (!maxdb_within(idx.max_bucket, d)) return false;
    reverse(u, v);
    return true;
}

std::vector<int> DspTriangle::incoming(int v, int l) const {
    t.check_vertex(v);
    if (l < 0) throw ArgumentError("incoming: l must be non-negative");
    int p = idx.prefix_length(t);
    if (t.indeg[v] < p) throw PreconditionError("incoming: vertex lies in the prefix");

    std::vector<int> found;
    if (l == 0) return found;

    // Group 1: in-neighbours with degree >= indeg[v]; exactly the back arcs
    // into v, so one pass over the whole back list.
    for (auto& [x, y] : back.arcs) {
        ++ctr.back_scans;
        if (y == v) found.push_back(x);
    }
    if (static_cast<int>(found.size()) >= l) {
        found.resize(l);
        return found;
    }

    // Group 2: buckets p .. indeg[v]-1, membership tested against the row.
    for (int i = p; i < t.indeg[v]; ++i) {
        for (int w = idx.buckets.head[i]; w >= 0; w = idx.buckets.nxt[w]) {
            ++ctr.bucket_scans;
            if (t.arc(w, v)) {
                found.push_back(w);
                if (static_cast<int>(found.size()) == l) return found;
            }
        }
    }
    return found;
}

std::optional<Triangle> DspTriangle::find_triangle() const {
    auto first = idx.first_after_prefix(t);
    if (!first) return std::nullopt;
    auto [v, dv] = *first;
    std::vector<int> one = incoming(v, 1);
    assert(!one.empty());
    int u = one[0];
    std::vector<int> candidates = incoming(u, dv);
    for (int w : candidates)
        if (t.arc(v, w)) return canonical_triangle(v, w, u);
    assert(false && "a triangle is guaranteed once T' is non-empty");
    return std::nullopt;
}

TriangleQuery DspTriangle::find_triangle_bounded(long long d) const {
    if (d < 0) throw ArgumentError("find_triangle_bounded: d must be non-negative");
    if (!back_within(back.size(), d) || !empty_within(idx.empty.size(), d))
        return {TriangleStatus::TooMany, {-1, -1, -1}};
    auto tri = find_triangle();
    if (!tri) return {TriangleStatus::None, {-1, -1, -1}};
    return {TriangleStatus::Found, *tri};
}

}  // namespace tournadyn
