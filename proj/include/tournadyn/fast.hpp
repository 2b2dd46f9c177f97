#pragma once

#include "tournadyn/triangle_full.hpp"
#include "tournadyn/triangle_promise.hpp"

namespace tournadyn {

// Dynamic FAST in the promise model: O(sqrt(g(K))) updates, 3^k branching
// queries over the bounded triangle operations. A query temporarily reverses
// arcs and restores every one of them before returning.
struct FastPromise {
    DspTriangle ds;
    long long promise_bound;  // g(K); informs expected costs only

    FastPromise(Tournament t, long long g) : ds(std::move(t)), promise_bound(g) {
        if (g < 0) throw ArgumentError("promise bound must be non-negative");
    }

    void update(int u, int v) { ds.reverse(u, v); }

    // True iff FAST(T) <= k. Promise violations surface as a false return.
    bool find_fast(long long k);

    const Counters& counters() const { return ds.ctr; }

private:
    bool recurse(long long k);
};

// Dynamic FAST in the full model: O(log^2 n) updates, reversals inside the
// query always succeed.
struct FastFull {
    DsTriangle ds;

    explicit FastFull(Tournament t) : ds(std::move(t)) {}

    void update(int u, int v) { ds.reverse(u, v); }

    bool find_fast(long long k);

    const Counters& counters() const { return ds.ctr; }

private:
    bool recurse(long long k);
};

}  // namespace tournadyn
