#include "tournadyn/fast.hpp"

#include <stdexcept>

namespace tournadyn {

namespace {

// Branch arcs of triangle (t0,t1,t2) in the order (uv, wu, vw) where the
// triple is read as u=t0, v=t1, w=t2.
struct BranchArcs {
    int x[3], y[3];
    explicit BranchArcs(const Triangle& t)
        : x{t[0], t[2], t[1]}, y{t[1], t[0], t[2]} {}
};

}  // namespace

bool FastPromise::find_fast(long long k) {
    if (k < 0) throw ArgumentError("find_fast: k must be non-negative");
    return recurse(k);
}

bool FastPromise::recurse(long long k) {
    if (ds.idx.empty.empty()) return true;  // acyclic
    if (k == 0) return false;
    auto q = ds.find_triangle_bounded(k);
    if (q.status == TriangleStatus::TooMany) return false;  // ADT > k => FAST > k
    ++ds.ctr.recursion_calls;  // counts branching nodes: at most 3^k per query
    BranchArcs br(q.tri);
    for (int i = 0; i < 3; ++i) {
        if (!ds.reverse_bounded(br.x[i], br.y[i], k)) return false;
        bool sub = recurse(k - 1);
        if (!ds.reverse_bounded(br.y[i], br.x[i], 4 * k + 4))
            throw std::logic_error("undo reversal with bound 4k+4 cannot fail");
        if (sub) return true;
    }
    return false;
}

bool FastFull::find_fast(long long k) {
    if (k < 0) throw ArgumentError("find_fast: k must be non-negative");
    return recurse(k);
}

bool FastFull::recurse(long long k) {
    if (ds.idx.empty.empty()) return true;
    if (k == 0) return false;
    auto q = ds.find_triangle_bounded(k);
    if (q.status == TriangleStatus::TooMany) return false;
    ++ds.ctr.recursion_calls;  // counts branching nodes: at most 3^k per query
    BranchArcs br(q.tri);
    for (int i = 0; i < 3; ++i) {
        ds.reverse(br.x[i], br.y[i]);
        bool sub = recurse(k - 1);
        ds.reverse(br.y[i], br.x[i]);
        if (sub) return true;
    }
    return false;
}

}  // namespace tournadyn
