#include "tournadyn/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>

namespace tournadyn {

namespace {

std::vector<std::uint32_t> out_masks(const Tournament& t) {
    std::vector<std::uint32_t> om(t.n, 0);
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v)
            if (u != v && t.arc(u, v)) om[u] |= std::uint32_t(1) << v;
    return om;
}

std::vector<std::uint32_t> in_masks(const Tournament& t) {
    std::vector<std::uint32_t> im(t.n, 0);
    for (int v = 0; v < t.n; ++v)
        for (int u = 0; u < t.n; ++u)
            if (u != v && t.arc(u, v)) im[v] |= std::uint32_t(1) << u;
    return im;
}

// Acyclic iff in-degrees within the subset are pairwise distinct.
bool subset_acyclic(const std::vector<std::uint32_t>& im, std::uint32_t s) {
    std::uint32_t seen = 0;
    for (std::uint32_t m = s; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = std::popcount(im[v] & s);
        std::uint32_t bit = std::uint32_t(1) << d;
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

}  // namespace

int brute_fast(const Tournament& t) {
    if (t.n > 20) throw CapabilityError("brute_fast supports n <= 20");
    if (t.n <= 2) return 0;
    auto om = out_masks(t);
    std::uint32_t full = (std::uint32_t(1) << t.n) - 1;
    std::vector<int> dp(full + 1, 1 << 29);
    dp[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t m = s; m; m &= m - 1) {
            int v = std::countr_zero(m);            // v placed last within s
            std::uint32_t rest = s & ~(std::uint32_t(1) << v);
            int cost = dp[rest] + std::popcount(om[v] & rest);
            if (cost < dp[s]) dp[s] = cost;
        }
    }
    return dp[full];
}

int brute_fvst(const Tournament& t) {
    if (t.n > 20) throw CapabilityError("brute_fvst supports n <= 20");
    if (t.n <= 2) return 0;
    auto im = in_masks(t);
    std::uint32_t full = (std::uint32_t(1) << t.n) - 1;
    if (subset_acyclic(im, full)) return 0;
    for (int s = 1; s < t.n; ++s) {
        // Gosper's hack over removal sets of size s.
        std::uint32_t r = (std::uint32_t(1) << s) - 1;
        while (r <= full) {
            if (subset_acyclic(im, full & ~r)) return s;
            std::uint32_t c = r & -r, rr = r + c;
            r = (((rr ^ r) >> 2) / c) | rr;
        }
    }
    return t.n;  // unreachable: any <= 2 vertices are acyclic
}

int brute_adt(const Tournament& t) {
    if (t.n > 8) throw CapabilityError("brute_adt supports n <= 8");
    // Pack each directed triangle as a mask over unordered pair ids (< 28).
    auto pair_bit = [&](int x, int y) {
        if (x > y) std::swap(x, y);
        return std::uint64_t(1) << (x * (2 * t.n - x - 1) / 2 + (y - x - 1));
    };
    std::vector<std::uint64_t> tri;
    for (int a = 0; a < t.n; ++a)
        for (int b = a + 1; b < t.n; ++b)
            for (int c = b + 1; c < t.n; ++c) {
                bool cyc = (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) ||
                           (t.arc(b, a) && t.arc(a, c) && t.arc(c, b));
                if (cyc) tri.push_back(pair_bit(a, b) | pair_bit(b, c) | pair_bit(a, c));
            }
    struct Search {
        const std::vector<std::uint64_t>& tri;
        int best = 0;
        void dfs(std::size_t i, std::uint64_t used, int cur) {
            if (cur > best) best = cur;
            int avail = 0;  // triangles still placeable; an upper bound
            for (std::size_t j = i; j < tri.size(); ++j)
                if (!(tri[j] & used)) ++avail;
            if (cur + avail <= best) return;
            for (std::size_t j = i; j < tri.size(); ++j) {
                if (tri[j] & used) continue;
                dfs(j + 1, used | tri[j], cur + 1);
            }
        }
    } search{tri};
    search.dfs(0, 0, 0);
    return search.best;
}

bool naive_acyclic(const Tournament& t) {
    // Topological peeling: repeatedly remove a vertex with in-degree 0.
    std::vector<char> alive(t.n, 1);
    for (int round = 0; round < t.n; ++round) {
        int pick = -1;
        for (int v = 0; v < t.n && pick < 0; ++v) {
            if (!alive[v]) continue;
            int d = 0;
            for (int u = 0; u < t.n; ++u)
                if (u != v && alive[u] && t.arc(u, v)) ++d;
            if (d == 0) pick = v;
        }
        if (pick < 0) return false;
        alive[pick] = 0;
    }
    return true;
}

NaiveViews naive_views(const Tournament& t, int k) {
    NaiveViews out;
    for (int u = 0; u < t.n; ++u)
        for (int v = 0; v < t.n; ++v) {
            if (u == v || !t.arc(u, v)) continue;
            if (t.indeg[u] >= t.indeg[v]) out.back.insert({u, v});
            if (std::abs(t.indeg[u] - t.indeg[v]) >= k && t.indeg[u] >= t.indeg[v])
                out.k_long_edges.insert({std::min(u, v), std::max(u, v)});
        }
    std::vector<int> bucket_sz(t.n, 0);
    for (int v = 0; v < t.n; ++v) ++bucket_sz[t.indeg[v]];
    for (int d = 0; d < t.n; ++d) {
        if (bucket_sz[d] == 0) out.empty.insert(d);
        out.max_bucket = std::max(out.max_bucket, bucket_sz[d]);
    }
    int p = t.n;
    for (int d = 0; d < t.n; ++d)
        if (bucket_sz[d] != 1) { p = d; break; }
    out.prefix_len = p;
    for (int v = 0; v < t.n; ++v)
        if (t.indeg[v] < p) out.prefix.push_back(v);
    std::sort(out.prefix.begin(), out.prefix.end());
    std::vector<int> long_deg(t.n, 0);
    for (auto& e : out.k_long_edges) { ++long_deg[e.first]; ++long_deg[e.second]; }
    for (int v = 0; v < t.n; ++v)
        if (long_deg[v] > k) out.heavy.push_back(v);
    return out;
}

Tournament induced_without(const Tournament& t, const std::vector<int>& f,
                           std::vector<int>* out_index) {
    std::vector<char> gone(t.n, 0);
    for (int v : f) gone[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < t.n; ++v)
        if (!gone[v]) keep.push_back(v);
    TournamentBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (t.arc(keep[i], keep[j])) b.orient(static_cast<int>(i), static_cast<int>(j));
            else b.orient(static_cast<int>(j), static_cast<int>(i));
        }
    if (out_index) *out_index = keep;
    return b.take();
}

OracleReport oracle_report(const Tournament& t, int k) {
    OracleReport r;
    r.acyclic = naive_acyclic(t);
    r.views = naive_views(t, k);
    if (t.n <= 20) {
        r.fast = brute_fast(t);
        r.fvst = brute_fvst(t);
    }
    if (t.n <= 8) r.adt = brute_adt(t);
    return r;
}

}  // namespace tournadyn
