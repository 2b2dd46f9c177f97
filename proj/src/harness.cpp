#include "tournadyn/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "tournadyn/oracles.hpp"

namespace tournadyn {

namespace {

struct Fnv {
    std::uint64_t h = 1469598103934665603ull;
    void mix(std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    }
    void mix_tournament(const Tournament& t) {
        mix(static_cast<std::uint64_t>(t.n));
        for (auto w : t.bits) mix(w);
        for (int d : t.indeg) mix(static_cast<std::uint64_t>(d));
    }
};

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

}  // namespace

std::optional<std::string> audit_index(const BucketedIndex& idx, const Tournament& t) {
    long long degsum = 0;
    for (int v = 0; v < t.n; ++v) {
        int d = 0;
        for (int u = 0; u < t.n; ++u) {
            if (u == v) continue;
            if (t.arc(u, v) == t.arc(v, u)) return "orientation not antisymmetric";
            if (t.arc(u, v)) ++d;
        }
        if (t.arc(v, v)) return "loop present";
        if (d != t.indeg[v]) return "indeg[" + std::to_string(v) + "] stale";
        degsum += d;
    }
    if (degsum != static_cast<long long>(t.n) * (t.n - 1) / 2) return "degree sum off";

    std::vector<int> sz(t.n, 0);
    for (int v = 0; v < t.n; ++v) ++sz[t.indeg[v]];
    std::vector<int> hist(t.n + 1, 0);
    int maxb = 0;
    for (int d = 0; d < t.n; ++d) {
        ++hist[sz[d]];
        maxb = std::max(maxb, sz[d]);
        if (idx.empty.contains(d) != (sz[d] == 0)) return "empty set wrong at degree " + std::to_string(d);
        int cnt = 0;
        bool member_ok = true;
        idx.buckets.for_each_in(d, [&](int v) {
            ++cnt;
            if (t.indeg[v] != d) member_ok = false;
        });
        if (!member_ok) return "bucket " + std::to_string(d) + " holds a foreign vertex";
        if (cnt != sz[d]) return "bucket " + std::to_string(d) + " has wrong size";
    }
    if (idx.max_bucket != maxb) return "maxBucket stale";
    for (int s = 0; s <= t.n; ++s)
        if (idx.size_hist[s] != hist[s]) return "sizeHist stale at " + std::to_string(s);
    return std::nullopt;
}

std::optional<std::string> audit_promise(const DspTriangle& s) {
    if (auto e = audit_index(s.idx, s.t)) return e;
    auto naive = naive_views(s.t).back;
    std::set<std::pair<int, int>> got(s.back.arcs.begin(), s.back.arcs.end());
    if (got.size() != s.back.arcs.size()) return "back list has duplicates";
    if (got != naive) return "back set diverges from recomputation";
    for (auto& [u, v] : got)
        if (!s.back.contains(u, v)) return "back handle map out of sync";
    return std::nullopt;
}

std::optional<std::string> audit_full(const DsTriangle& s) {
    if (auto e = audit_index(s.idx, s.t)) return e;
    for (int p = 0; p < s.skel.node_count(); ++p) {
        auto& nd = s.skel.nodes[p];
        for (int d : {0, s.t.n / 2, s.t.n - 1}) {
            int truth = 0;
            for (int x = nd.lo; x < nd.hi; ++x)
                if (s.t.indeg[x] <= d) ++truth;
            if (s.degrees_rect(p, d) != truth)
                return "degrees node " + std::to_string(p) + " stale";
        }
    }
    for (int v = 0; v < s.t.n; ++v) {
        for (int x = 0; x < s.t.n; ++x)
            if (s.adj.leaf_bit(v, x) != (x != v && s.t.arc(x, v)))
                return "adjacency leaf stale at (" + std::to_string(x) + "," + std::to_string(v) + ")";
        for (int p = 0; p < s.skel.node_count(); ++p) {
            auto& nd = s.skel.nodes[p];
            int truth = 0;
            for (int x = nd.lo; x < nd.hi; ++x)
                if (s.adj.leaf_bit(v, x)) ++truth;
            if (s.adj.node_sum(v, p) != truth)
                return "adjacency sums stale for vertex " + std::to_string(v);
        }
    }
    return std::nullopt;
}

std::optional<std::string> audit_drem(const DremState& s) {
    if (auto e = audit_index(s.idx, s.t)) return e;

    auto f = s.removed.to_vector();
    std::set<int> positions;
    for (int v : f) {
        if (s.vtok[v] < 0) return "removed vertex without token";
        if (!positions.insert(s.vtok[v]).second) return "token positions collide";
        if (!s.tok.contains(s.vtok[v])) return "vtok points outside TOK";
        if (std::abs(s.vtok[v] - s.t.indeg[v]) > 6 * s.k - 3) return "INV3 violated";
    }
    if (static_cast<int>(positions.size()) != s.tok.size()) return "TOK has unassigned tokens";

    std::vector<char> gone(s.t.n, 0);
    for (int v : f) gone[v] = 1;
    for (int v = 0; v < s.t.n; ++v) {
        if (gone[v]) continue;
        int dred = s.t.indeg[v];
        for (int u : f) dred -= s.t.arc(u, v) ? 1 : 0;
        if (s.rdeg[v] < 0 || s.rdeg[v] >= s.t.n) return "rdeg out of range";
        if (dred != s.rdeg[v] - s.ctok(s.rdeg[v])) return "INV1 violated";
    }
    for (int d = 0; d < s.t.n; ++d) {
        int cnt = 0;
        bool ok = true;
        s.rbuckets.for_each_in(d, [&](int v) {
            ++cnt;
            if (s.rdeg[v] != d || gone[v]) ok = false;
        });
        if (!ok) return "reduced bucket holds a foreign vertex";
        if (s.rempty.contains(d) != (cnt == 0)) return "REmpty stale";
    }

    auto views = naive_views(s.t, s.k);
    std::set<std::pair<int, int>> got;
    for (int v = 0; v < s.t.n; ++v)
        for (int u : s.long_arcs[v]) got.insert({std::min(u, v), std::max(u, v)});
    if (got != views.k_long_edges) return "long-arc graph diverges";

    Tournament rest = induced_without(s.t, f);
    int enf = static_cast<int>(naive_views(rest).empty.size());
    if (s.rempty.size() < enf || s.rempty.size() > enf + 4 * static_cast<int>(f.size()))
        return "REmpty size sandwich violated";
    return std::nullopt;
}

std::optional<std::string> audit_heavy(const Dremp& d) {
    if (auto e = audit_drem(d.inner)) return e;
    auto naive = Dremp::naive_heavy(d.inner.t, d.inner.k);
    auto f = d.inner.removed.to_vector();
    std::sort(f.begin(), f.end());
    if (f != naive) return "removed set is not the heavy set";
    return std::nullopt;
}

std::uint64_t state_hash(const FastPromise& s) {
    Fnv f;
    f.mix_tournament(s.ds.t);
    auto arcs = s.ds.back.arcs;
    std::sort(arcs.begin(), arcs.end());
    for (auto& [u, v] : arcs) {
        f.mix(static_cast<std::uint64_t>(u));
        f.mix(static_cast<std::uint64_t>(v));
    }
    auto e = s.ds.idx.empty.to_vector();
    std::sort(e.begin(), e.end());
    for (int d : e) f.mix(static_cast<std::uint64_t>(d));
    f.mix(static_cast<std::uint64_t>(s.ds.idx.max_bucket));
    return f.h;
}

std::uint64_t state_hash(const FastFull& s) {
    Fnv f;
    f.mix_tournament(s.ds.t);
    f.mix(static_cast<std::uint64_t>(s.ds.idx.max_bucket));
    return f.h;
}

std::uint64_t state_hash(const FvstPromise& s) {
    Fnv f;
    f.mix_tournament(s.wrapper.inner.t);
    auto r = s.wrapper.inner.removed.to_vector();
    std::sort(r.begin(), r.end());
    for (int v : r) f.mix(static_cast<std::uint64_t>(v));
    return f.h;
}

namespace {

using AnyStructure = std::variant<FastPromise, FastFull, FvstPromise>;

AnyStructure build_structure(const Tournament& t, const UpdateStream& s) {
    switch (s.structure) {
        case StructKind::FastPromise: return FastPromise(t, s.promise());
        case StructKind::FastFull: return FastFull(t);
        case StructKind::Fvst: {
            long long g = s.promise();
            return FvstPromise(t, std::min(s.K, g), g);
        }
    }
    throw ArgumentError("unknown structure kind");
}

const Counters& counters_of(const AnyStructure& a) {
    return std::visit([](const auto& s) -> const Counters& { return s.counters(); }, a);
}

std::optional<std::string> audit_any(const AnyStructure& a) {
    if (auto* p = std::get_if<FastPromise>(&a)) return audit_promise(p->ds);
    if (auto* f = std::get_if<FastFull>(&a)) return audit_full(f->ds);
    return audit_heavy(std::get<FvstPromise>(a).wrapper);
}

}  // namespace

RunResult run_stream(const Tournament& t, const UpdateStream& s, bool audit, bool timing) {
    if (t.n != s.n) throw ArgumentError("run: tournament size differs from stream header");
    if (const char* env = std::getenv("TOURNDYN_AUDIT"); env && std::string(env) == "1")
        audit = true;
    AnyStructure a = build_structure(t, s);
    RunResult out;
    out.records.reserve(s.ops.size());
    int idx = 0;
    for (const Op& op : s.ops) {
        RunRecord rec;
        rec.idx = idx;
        rec.kind = op.kind;
        auto t0 = std::chrono::steady_clock::now();
        if (op.kind == 'R') {
            std::visit([&](auto& st) { st.update(op.u, op.v); }, a);
        } else if (op.kind == 'Q') {
            bool ans = false;
            if (auto* p = std::get_if<FastPromise>(&a)) ans = p->find_fast(op.k);
            else if (auto* f = std::get_if<FastFull>(&a)) ans = f->find_fast(op.k);
            else ans = std::get<FvstPromise>(a).find_fvst(op.k);
            out.answers.push_back(ans);
            rec.ans = ans ? "1" : "0";
        } else {
            std::uint64_t h = std::visit([](const auto& st) { return state_hash(st); }, a);
            rec.ans = hex64(h);
        }
        if (timing) {
            auto t1 = std::chrono::steady_clock::now();
            rec.ns = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        if (audit) {
            if (auto err = audit_any(a))
                throw std::runtime_error("audit failed after op " + std::to_string(idx) + ": " + *err);
        }
        rec.ctr = counters_of(a);
        out.records.push_back(std::move(rec));
        ++idx;
    }
    return out;
}

namespace {

std::vector<std::string> reproduction_prefix(const UpdateStream& s, int upto) {
    UpdateStream head = s;
    head.ops.assign(s.ops.begin(), s.ops.begin() + std::min<std::size_t>(upto + 1, s.ops.size()));
    std::ostringstream os;
    write_stream(os, head);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream is(os.str());
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

}  // namespace

VerifyReport verify_stream(const Tournament& t, const UpdateStream& s) {
    VerifyReport rep;
    if (t.n != s.n) {
        rep.ok = false;
        rep.message = "tournament size differs from stream header";
        return rep;
    }
    if (t.n > 20) {
        rep.ok = false;
        rep.message = "verify needs n <= 20 for the exact oracles";
        return rep;
    }
    AnyStructure a = build_structure(t, s);
    Tournament shadow = t;  // replayed independently of the structure

    auto fail = [&](int idx, const std::string& msg) {
        rep.ok = false;
        rep.failed_op = idx;
        rep.message = msg;
        rep.reproduction = reproduction_prefix(s, idx);
    };

    if (auto err = audit_any(a)) {
        fail(-1, "initial state: " + *err);
        return rep;
    }
    for (int idx = 0; idx < static_cast<int>(s.ops.size()); ++idx) {
        const Op& op = s.ops[idx];
        if (op.kind == 'R') {
            std::visit([&](auto& st) { st.update(op.u, op.v); }, a);
            shadow.reverse_pair(op.u, op.v);
        } else if (op.kind == 'Q') {
            bool ans;
            bool expect;
            if (auto* p = std::get_if<FastPromise>(&a)) {
                ans = p->find_fast(op.k);
                expect = brute_fast(shadow) <= op.k;
            } else if (auto* f = std::get_if<FastFull>(&a)) {
                ans = f->find_fast(op.k);
                expect = brute_fast(shadow) <= op.k;
            } else {
                ans = std::get<FvstPromise>(a).find_fvst(op.k);
                expect = brute_fvst(shadow) <= op.k;
            }
            if (ans != expect) {
                fail(idx, "query answer " + std::to_string(ans) + " but oracle says " +
                              std::to_string(expect) + " (k=" + std::to_string(op.k) + ")");
                return rep;
            }
        }
        const Tournament& inner_t = std::visit(
            [](const auto& st) -> const Tournament& {
                if constexpr (std::is_same_v<std::decay_t<decltype(st)>, FvstPromise>)
                    return st.wrapper.inner.t;
                else
                    return st.ds.t;
            },
            a);
        if (!(inner_t == shadow)) {
            fail(idx, "structure tournament diverged from the replayed shadow");
            return rep;
        }
        if (auto err = audit_any(a)) {
            std::string msg = *err;
            if (auto* fv = std::get_if<FvstPromise>(&a)) {
                std::ostringstream dump;
                fv->wrapper.inner.debug_dump(dump);
                msg += "\nstate dump:\n" + dump.str();
            }
            fail(idx, msg);
            return rep;
        }
    }
    return rep;
}

RunResult bench_stream(const Tournament& t, const UpdateStream& s, int repeat) {
    if (repeat < 1) throw ArgumentError("bench: repeat must be positive");
    RunResult base = run_stream(t, s, false, true);
    std::vector<std::vector<std::uint64_t>> times(s.ops.size());
    for (std::size_t i = 0; i < s.ops.size(); ++i) times[i].push_back(base.records[i].ns);
    for (int rep = 1; rep < repeat; ++rep) {
        RunResult r = run_stream(t, s, false, true);
        for (std::size_t i = 0; i < s.ops.size(); ++i) times[i].push_back(r.records[i].ns);
    }
    for (std::size_t i = 0; i < s.ops.size(); ++i) {
        auto& v = times[i];
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        base.records[i].ns = v[v.size() / 2];
    }
    return base;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << "idx,kind,ns,ans,c_bucket,c_back,c_tree,c_rec\n";
    for (const RunRecord& r : records) {
        out << r.idx << ',' << r.kind << ',' << r.ns << ',' << r.ans << ','
            << r.ctr.bucket_scans << ',' << r.ctr.back_scans << ','
            << r.ctr.tree_visits << ',' << r.ctr.recursion_calls << '\n';
    }
}

void write_json(std::ostream& out, const UpdateStream& s,
                const std::vector<RunRecord>& records) {
    nlohmann::json j;
    j["struct"] = to_string(s.structure);
    j["n"] = s.n;
    j["K"] = s.K;
    if (s.G >= 0) j["G"] = s.G;
    j["seed"] = s.seed;
    auto& arr = j["records"] = nlohmann::json::array();
    for (const RunRecord& r : records) {
        arr.push_back({{"idx", r.idx},
                       {"kind", std::string(1, r.kind)},
                       {"ns", r.ns},
                       {"ans", r.ans},
                       {"c_bucket", r.ctr.bucket_scans},
                       {"c_back", r.ctr.back_scans},
                       {"c_tree", r.ctr.tree_visits},
                       {"c_rec", r.ctr.recursion_calls}});
    }
    out << j.dump(2) << '\n';
}

}  // namespace tournadyn
