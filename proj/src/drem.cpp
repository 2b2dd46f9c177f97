#include "tournadyn/drem.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <ostream>

namespace tournadyn {

DremState::DremState(Tournament t0, int k_, const std::vector<int>& f)
    : t(std::move(t0)),
      idx(t),
      k(k_),
      removed(t.n),
      rdeg(t.n, 0),
      rbuckets(t.n),
      rempty(t.n),
      tok(5 * t.n),
      vtok(t.n, -1),
      long_arcs(t.n),
      empty_scratch(t.n) {
    if (k < 0 || k > t.n) throw ArgumentError("drem: capacity k must be in [0, n]");
    if (static_cast<int>(f.size()) > k) throw CapacityError("drem: |F| exceeds capacity k");

    std::vector<int> fs(f);
    std::sort(fs.begin(), fs.end());
    for (std::size_t i = 0; i + 1 < fs.size(); ++i)
        if (fs[i] == fs[i + 1]) throw ArgumentError("drem: duplicate vertex in F");
    for (int v : fs) {
        t.check_vertex(v);
        removed.insert(v);
    }

    // One token per removed vertex: the smallest free position >= d_T(v)
    // (never farther than |F| away, so the fallback below d_T(v) is unused).
    for (int v : fs) {
        int p = t.indeg[v];
        while (tok.contains(p)) ++p;
        tok.insert(p);
        vtok[v] = p;
        assert(std::abs(p - t.indeg[v]) <= static_cast<int>(fs.size()));
        note_drift(v);
    }

    for (int d = 0; d < t.n; ++d) rempty.insert(d);
    for (int v = t.n - 1; v >= 0; --v) {
        if (removed.contains(v)) continue;
        rdeg[v] = fix_rdeg(v);
        rbucket_insert(v, rdeg[v]);
    }

    for (int a = 0; a < t.n; ++a)
        for (int b = a + 1; b < t.n; ++b) {
            bool ab = t.arc(a, b);
            if (long_back_status(t.indeg[a], t.indeg[b], ab)) {
                long_arcs[a].insert(b);
                long_arcs[b].insert(a);
            }
        }
}

int DremState::ctok(int d) const {
    int c = 0;
    tok.for_each([&](int p) { c += p <= d; });
    return c;
}

std::pair<int, int> DremState::tokenized_interval(int d) const {
    int m = tok.size();
    // Token counts over positions d..d+m via a small offset histogram.
    int base = 0;
    int marks[64];  // |tok| <= k <= n; spilled to heap when larger
    std::vector<int> big;
    int* mk = marks;
    if (m + 1 > 64) {
        big.assign(m + 1, 0);
        mk = big.data();
    } else {
        std::fill(mk, mk + m + 1, 0);
    }
    tok.for_each([&](int p) {
        if (p < d) ++base;
        else if (p <= d + m) ++mk[p - d];
    });
    int run = base, lo = d - 1;
    for (int j = 0; j <= m; ++j) {
        run += mk[j];
        if ((d + j) - run == d) { lo = d + j; break; }
    }
    if (lo < d) throw std::logic_error("tokenized interval: no solution in [d, d+|tok|]");
    int hi = lo;
    while (tok.contains(hi + 1)) ++hi;
    return {lo, hi};
}

int DremState::reduced_degree_actual(int w) const {
    int d = t.indeg[w];
    removed.for_each([&](int f) { d -= t.arc(f, w) ? 1 : 0; });
    return d;
}

int DremState::fix_rdeg(int w) const {
    if (removed.contains(w)) throw PreconditionError("fix_rdeg: vertex is removed");
    int d = reduced_degree_actual(w);
    return tokenized_interval(d).first;  // minimal valid reduced degree
}

void DremState::note_drift(int v) {
    token_drift_hwm = std::max(token_drift_hwm, std::abs(vtok[v] - t.indeg[v]));
}

void DremState::rbucket_insert(int v, int d) {
    if (rbuckets.size_of(d) == 0) rempty.erase(d);
    rbuckets.insert(v, d);
}

void DremState::rbucket_remove(int v, int d) {
    rbuckets.erase(v, d);
    if (rbuckets.size_of(d) == 0) rempty.insert(d);
}

void DremState::refix(int w) {
    int nr = fix_rdeg(w);
    if (nr == rdeg[w]) return;
    rbucket_remove(w, rdeg[w]);
    rbucket_insert(w, nr);
    rdeg[w] = nr;
}

void DremState::sweep(long long lo, long long hi) {
    long long a = std::max<long long>(lo, 0);
    long long b = std::min<long long>(hi, t.n - 1);
    for (long long i = a; i <= b; ++i) {
        auto members = rbuckets.members(static_cast<int>(i));
        for (int w : members) {
            ++ctr.bucket_scans;
            refix(w);
        }
    }
}

bool DremState::long_back_status(int da, int db, bool arc_ab) const {
    if (std::abs(da - db) < k) return false;
    // arc x -> y is back iff d(x) >= d(y)
    return arc_ab ? da >= db : db >= da;
}

void DremState::apply_edge(int a, int b, bool present, std::vector<LongArcDelta>& delta) {
    bool had = long_arcs[a].count(b) > 0;
    if (had == present) return;
    if (present) {
        long_arcs[a].insert(b);
        long_arcs[b].insert(a);
    } else {
        long_arcs[a].erase(b);
        long_arcs[b].erase(a);
    }
    delta.push_back({std::min(a, b), std::max(a, b), present});
}

std::vector<LongArcDelta> DremState::reverse(int u, int v) {
    t.check_pair(u, v);
    int du_old = t.indeg[u], dv_old = t.indeg[v];

    idx.reverse_arc(t, u, v);

    // INV3 repair: endpoints in F whose token drifted too far get a fresh
    // token at the smallest free position >= d_T(w); every reduced bucket in
    // the swept interval is then re-fixed.
    for (int w : {u, v}) {
        if (!removed.contains(w)) continue;
        if (std::abs(vtok[w] - t.indeg[w]) > 6 * k - 3) {
            int oldp = vtok[w];
            tok.erase(oldp);
            int np = t.indeg[w];
            while (tok.contains(np)) ++np;
            tok.insert(np);
            vtok[w] = np;
            sweep(std::min(oldp, np), std::max(oldp, np));
        }
        note_drift(w);  // measured between operations, where INV3 is claimed
    }
    for (int w : {u, v})
        if (!removed.contains(w)) refix(w);

    // k-long graph delta. Candidate far endpoints sit in the buckets within
    // distance one of d+-k for both the old and the new degree of u and v.
    std::vector<LongArcDelta> delta;
    auto old_deg = [&](int x) { return x == u ? du_old : x == v ? dv_old : t.indeg[x]; };
    auto old_arc = [&](int a, int b) {
        bool same_pair = (a == u && b == v) || (a == v && b == u);
        bool now = t.arc(a, b);
        return same_pair ? !now : now;
    };
    auto retest_pair = [&](int a, int b) {
        bool before = long_back_status(old_deg(a), old_deg(b), old_arc(a, b));
        bool after = long_back_status(t.indeg[a], t.indeg[b], t.arc(a, b));
        if (before != after) apply_edge(a, b, after, delta);
    };
    retest_pair(u, v);
    for (int w : {u, v}) {
        int degs[12];
        int cnt = 0;
        for (int base : {old_deg(w), t.indeg[w]}) {
            for (int off = -1; off <= 1; ++off) {
                degs[cnt++] = base - k + off;
                degs[cnt++] = base + k + off;
            }
        }
        std::sort(degs, degs + cnt);
        for (int i = 0; i < cnt; ++i) {
            int d = degs[i];
            if (d < 0 || d >= t.n || (i > 0 && d == degs[i - 1])) continue;
            idx.buckets.for_each_in(d, [&](int z) {
                ++ctr.bucket_scans;
                if (z != u && z != v) retest_pair(w, z);
            });
        }
    }
    return delta;
}

void DremState::remove(int v) {
    t.check_vertex(v);
    if (removed.contains(v)) throw PreconditionError("remove: vertex already removed");
    if (removed.size() == k) throw CapacityError("remove: |F| would exceed capacity k");

    int f_old = removed.size();
    long long lo = static_cast<long long>(rdeg[v]) - k - 2 * f_old - 1;
    long long hi = static_cast<long long>(rdeg[v]) + k + 2 * f_old + 1;
    int rt = static_cast<int>(hi);
    while (tok.contains(rt + 1)) ++rt;
    assert(rt + 1 <= 5 * t.n - 2);
    tok.insert(rt + 1);
    vtok[v] = rt + 1;
    note_drift(v);
    removed.insert(v);
    rbucket_remove(v, rdeg[v]);

    sweep(lo, rt);
    std::vector<int> nbrs(long_arcs[v].begin(), long_arcs[v].end());
    for (int w : nbrs)
        if (!removed.contains(w)) refix(w);
}

void DremState::restore(int v) {
    t.check_vertex(v);
    if (!removed.contains(v)) throw PreconditionError("restore: vertex is not removed");

    int tpos = vtok[v];
    tok.erase(tpos);
    vtok[v] = -1;
    removed.erase(v);
    rdeg[v] = fix_rdeg(v);
    rbucket_insert(v, rdeg[v]);

    int f_new = removed.size();
    long long lo = std::min<long long>(static_cast<long long>(rdeg[v]) - k - 2 * f_new - 1, tpos);
    long long hi = std::max<long long>(static_cast<long long>(rdeg[v]) + k + 2 * f_new + 1, tpos);
    sweep(lo, hi);
    std::vector<int> nbrs(long_arcs[v].begin(), long_arcs[v].end());
    for (int w : nbrs)
        if (!removed.contains(w)) refix(w);
}

void DremState::debug_dump(std::ostream& os) const {
    for (int v = 0; v < t.n; ++v) {
        os << v << ' ' << t.indeg[v] << ' ' << (removed.contains(v) ? 1 : 0) << ' ';
        if (removed.contains(v)) os << "- " << vtok[v];
        else os << rdeg[v] << " -";
        os << '\n';
    }
    auto ps = tok.to_vector();
    std::sort(ps.begin(), ps.end());
    os << "TOK:";
    for (int p : ps) os << ' ' << p;
    os << '\n';
}

}  // namespace tournadyn
