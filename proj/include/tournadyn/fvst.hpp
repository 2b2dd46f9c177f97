#pragma once

#include <optional>
#include <vector>

#include "tournadyn/drem.hpp"
#include "tournadyn/tournament.hpp"

namespace tournadyn {

// T-F subprocedures over a DremState. Each recomputes its own tokenized
// bookkeeping per call instead of caching it across calls.

// Empty set of T-F, staged into s.empty_scratch (cleared first);
// returns a reference to it. O((|rempty|+1)(|F|+1)).
const ArraySet& empty_no_f(DremState& s);

// Minimum-degree vertex of (T-F)' with its degree there; emptyNoF must be
// freshly computed (use empty_no_f).
std::optional<std::pair<int, int>> first_after_prefix_no_f(const DremState& s,
                                                           const ArraySet& empty_nf);

// min(l, d_{(T-F)'}(v)) distinct in-neighbours of v in (T-F)'.
std::vector<int> incoming_fvst(DremState& s, int v, int l);

// Triangle of T-F, canonicalized, or absent iff T-F is acyclic.
std::optional<Triangle> find_triangle_fvst(DremState& s);

// Heavy-set wrapper: between public operations the removed set of the inner
// structure equals the k-heavy set of T.
struct Dremp {
    DremState inner;

    Dremp(Tournament t, int k);

    // Throws PromiseViolation when the heavy set outgrows k; the structure
    // is not usable afterwards.
    void reverse(int u, int v);

    static std::vector<int> naive_heavy(const Tournament& t, int k);
};

// Dynamic FVST in the promise model. Queries run the branching over
// remove/restore and leave the structure in an equivalent state. The
// recursion keeps the same budget k at every level and charges removals via
// |Removed|, which is equivalent to decrementing an explicit budget.
struct FvstPromise {
    Dremp wrapper;
    long long K;   // problem parameter
    long long gK;  // promise bound; queries admit k <= gK

    FvstPromise(Tournament t, long long K, long long gK);

    void update(int u, int v) { wrapper.reverse(u, v); }

    // True iff FVST(T) <= k, for 0 <= k <= gK.
    bool find_fvst(long long k);

    const Counters& counters() const { return wrapper.inner.ctr; }

private:
    bool recurse(long long k);
};

}  // namespace tournadyn
