#pragma once

#include <cstdint>

namespace tournadyn {

// Read-only instrumentation exposed by every structure. Counters only grow
// while the owning structure is alive; the harness snapshots deltas per op.
struct Counters {
    std::uint64_t bucket_scans = 0;     // vertices touched in degree-bucket scans
    std::uint64_t back_scans = 0;       // back-arc list entries touched
    std::uint64_t tree_visits = 0;      // segment/treap nodes touched (full model)
    std::uint64_t recursion_calls = 0;  // branching-query recursion nodes

    void reset() { *this = Counters{}; }
};

}  // namespace tournadyn
