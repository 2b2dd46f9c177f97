#include "tournadyn/fvst.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace tournadyn {

const ArraySet& empty_no_f(DremState& s) {
    ArraySet& out = s.empty_scratch;
    out.clear();
    int live = s.t.n - s.removed.size();
    auto grab = [&](int i) {
        int d = i - s.ctok(i);
        if (d < 0 || d >= live) return;
        auto [lo, hi] = s.tokenized_interval(d);
        if (i != lo) return;  // handle each interval at its left end only
        for (int j = lo; j <= hi; ++j)
            if (!s.rempty.contains(j)) return;
        out.insert(d);
    };
    s.rempty.for_each(grab);
    return out;
}

std::optional<std::pair<int, int>> first_after_prefix_no_f(const DremState& s,
                                                           const ArraySet& empty_nf) {
    int live = s.t.n - s.removed.size();
    if (live == 0 || empty_nf.empty()) return std::nullopt;
    int p = empty_nf.min();
    int d = p + 1;
    while (d < live && empty_nf.contains(d)) ++d;
    assert(d < live);
    auto [lo, hi] = s.tokenized_interval(d);
    for (int i = lo; i <= std::min(hi, s.t.n - 1); ++i)
        if (s.rbuckets.size_of(i) > 0)
            return std::make_pair(s.rbuckets.head[i], d - p);
    assert(false && "a vertex of degree d must exist in some reduced bucket");
    return std::nullopt;
}

std::vector<int> incoming_fvst(DremState& s, int v, int l) {
    s.t.check_vertex(v);
    if (l < 0) throw ArgumentError("incoming_fvst: l must be non-negative");
    if (s.removed.contains(v)) throw PreconditionError("incoming_fvst: vertex is removed");

    const ArraySet& empty_nf = empty_no_f(s);
    int live = s.t.n - s.removed.size();
    int p = empty_nf.empty() ? live : empty_nf.min();
    if (p >= live) throw PreconditionError("incoming_fvst: (T-F)' is empty");
    int q = s.tokenized_interval(p).first;
    if (s.rdeg[v] < q) throw PreconditionError("incoming_fvst: vertex lies in the prefix of T-F");

    std::vector<int> found;
    if (l == 0) return found;
    int nf = s.removed.size();
    long long lv = static_cast<long long>(s.rdeg[v]) - 2 * nf - s.k - 1;
    long long rv = static_cast<long long>(s.rdeg[v]) + 2 * nf + s.k + 1;

    // Phase 1: k-long in-neighbours above the window.
    for (int u : s.long_arcs[v]) {
        ++s.ctr.back_scans;
        if (s.removed.contains(u) || !s.t.arc(u, v)) continue;
        if (s.rdeg[u] > rv) {
            found.push_back(u);
            if (static_cast<int>(found.size()) == l) return found;
        }
    }
    // Phase 2: reduced buckets inside [lv, rv].
    for (long long i = std::max<long long>(lv, 0); i <= std::min<long long>(rv, s.t.n - 1); ++i) {
        for (int u = s.rbuckets.head[static_cast<int>(i)]; u >= 0; u = s.rbuckets.nxt[u]) {
            ++s.ctr.bucket_scans;
            if (s.t.arc(u, v) && s.rdeg[u] >= q) {
                found.push_back(u);
                if (static_cast<int>(found.size()) == l) return found;
            }
        }
    }
    // Phase 3: the remaining buckets below the window, down to the prefix.
    for (long long i = q; i < std::min<long long>(lv, s.t.n); ++i) {
        for (int u = s.rbuckets.head[static_cast<int>(i)]; u >= 0; u = s.rbuckets.nxt[u]) {
            ++s.ctr.bucket_scans;
            if (s.t.arc(u, v)) {
                found.push_back(u);
                if (static_cast<int>(found.size()) == l) return found;
            }
        }
    }
    return found;
}

std::optional<Triangle> find_triangle_fvst(DremState& s) {
    auto first = first_after_prefix_no_f(s, empty_no_f(s));
    if (!first) return std::nullopt;
    auto [v, dv] = *first;
    std::vector<int> one = incoming_fvst(s, v, 1);
    assert(!one.empty());
    int u = one[0];
    std::vector<int> candidates = incoming_fvst(s, u, dv);
    for (int w : candidates)
        if (s.t.arc(v, w)) return canonical_triangle(v, w, u);
    assert(false && "a triangle is guaranteed once (T-F)' is non-empty");
    return std::nullopt;
}

std::vector<int> Dremp::naive_heavy(const Tournament& t, int k) {
    std::vector<int> long_deg(t.n, 0);
    for (int a = 0; a < t.n; ++a)
        for (int b = a + 1; b < t.n; ++b) {
            if (std::abs(t.indeg[a] - t.indeg[b]) < k) continue;
            bool ab = t.arc(a, b);
            bool back = ab ? t.indeg[a] >= t.indeg[b] : t.indeg[b] >= t.indeg[a];
            if (back) {
                ++long_deg[a];
                ++long_deg[b];
            }
        }
    std::vector<int> heavy;
    for (int v = 0; v < t.n; ++v)
        if (long_deg[v] > k) heavy.push_back(v);
    return heavy;
}

namespace {

DremState make_inner(Tournament t, int k) {
    auto heavy = Dremp::naive_heavy(t, k);
    if (static_cast<int>(heavy.size()) > k)
        throw PromiseViolation("dremp: heavy set exceeds k, so FVST(T) > k");
    return DremState(std::move(t), k, heavy);
}

}  // namespace

Dremp::Dremp(Tournament t, int k) : inner(make_inner(std::move(t), k)) {}

void Dremp::reverse(int u, int v) {
    auto delta = inner.reverse(u, v);
    std::vector<int> ends;
    for (auto& e : delta) {
        ends.push_back(e.a);
        ends.push_back(e.b);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    std::vector<int> to_restore, to_remove;
    for (int w : ends) {
        bool heavy = static_cast<int>(inner.long_arcs[w].size()) > inner.k;
        bool rem = inner.removed.contains(w);
        if (rem && !heavy) to_restore.push_back(w);
        else if (!rem && heavy) to_remove.push_back(w);
    }
    // Restorations first so |F| never exceeds the capacity in between.
    for (int w : to_restore) inner.restore(w);
    for (int w : to_remove) {
        try {
            inner.remove(w);
        } catch (const CapacityError&) {
            throw PromiseViolation("dremp: heavy set exceeds k after update, so FVST(T) > k");
        }
    }
}

namespace {

Dremp make_wrapper(Tournament t, long long K, long long gK) {
    if (K < 0 || gK < K) throw ParameterError("fvst: need 0 <= K <= gK");
    int cap = static_cast<int>(std::min<long long>(gK, t.n));
    return Dremp(std::move(t), cap);
}

}  // namespace

FvstPromise::FvstPromise(Tournament t, long long K_, long long gK_)
    : wrapper(make_wrapper(std::move(t), K_, gK_)), K(K_), gK(gK_) {}

bool FvstPromise::find_fvst(long long k) {
    if (k < 0 || k > gK) throw ParameterError("find_fvst: k must be in [0, gK]");
    int n = wrapper.inner.t.n;
    // FVST <= n-2 always (any two vertices are acyclic), so large budgets
    // are trivially satisfiable; this also keeps k within the removal
    // capacity for the recursion below.
    if (k >= static_cast<long long>(n) - 2) return true;
    if (wrapper.inner.idx.max_bucket > 2 * k + 1) return false;
    return recurse(k);
}

bool FvstPromise::recurse(long long k) {
    DremState& s = wrapper.inner;
    long long f = s.removed.size();
    if (k - f < 0) return false;
    long long cap = static_cast<long long>(s.k);  // the structure's long-graph parameter
    long long bound = (k - f) * (2 * (cap + f) + k * cap + 2 * (k - f) + 5) + 4 * f;
    if (s.rempty.size() > bound) return false;
    const ArraySet& empty_nf = empty_no_f(s);
    if (empty_nf.empty()) return true;  // T-F acyclic
    if (k - f == 0) return false;
    auto tri = find_triangle_fvst(s);
    assert(tri.has_value());
    ++s.ctr.recursion_calls;  // counts branching nodes: at most 3^k per query
    // Branch order (v, u, w) over the canonical triple read as (u, v, w).
    int order[3] = {(*tri)[1], (*tri)[0], (*tri)[2]};
    for (int x : order) {
        s.remove(x);
        bool sub = recurse(k);
        s.restore(x);
        if (sub) return true;
    }
    return false;
}

}  // namespace tournadyn
