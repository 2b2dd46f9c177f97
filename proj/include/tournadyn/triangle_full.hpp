#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tournadyn/bucketed_index.hpp"
#include "tournadyn/counters.hpp"
#include "tournadyn/tournament.hpp"
#include "tournadyn/triangle_promise.hpp"  // TriangleQuery / TriangleStatus

namespace tournadyn {

// Static interval skeleton over [0, n), shared by the degrees structure and
// every adjacency tree so parallel descents stay in lockstep.
struct SegSkeleton {
    struct Node {
        int lo, hi;        // covers [lo, hi)
        int left, right;   // -1 for leaves
        int slot;          // internal: sum-slot id; leaf: the covered index
    };
    std::vector<Node> nodes;  // node 0 is the root (when n > 0)
    int internal_count = 0;

    SegSkeleton() = default;
    explicit SegSkeleton(int n);

    bool leaf(int p) const { return nodes[p].left < 0; }
    int node_count() const { return static_cast<int>(nodes.size()); }
};

// Multiset of ints with "count of values <= d" rank queries: an
// order-statistic treap over a shared node pool.
class TreapPool {
public:
    explicit TreapPool(std::uint64_t seed) : rng_(seed | 1) {}

    void insert(int& root, int value, Counters& ctr);
    void erase(int& root, int value, Counters& ctr);  // one occurrence
    int count_leq(int root, int value, Counters& ctr) const;
    int size(int root) const { return root < 0 ? 0 : nodes_[root].cnt; }

    // Test support: the multiset contents in sorted order.
    void collect(int root, std::vector<int>& out) const;

private:
    struct Node {
        int value;
        std::uint32_t prio;
        int left = -1, right = -1;
        int cnt = 1;
    };
    std::vector<Node> nodes_;
    std::vector<int> free_;
    std::uint64_t rng_;

    std::uint32_t next_prio();
    int make(int value);
    void pull(int p);
    int merge(int a, int b, Counters& ctr);
    void split_leq(int p, int value, int& a, int& b, Counters& ctr);
};

// Per-skeleton-node multisets of in-degrees: "how many vertices with index
// in this node's interval have in-degree <= d", in O(log n) per node. The
// conceptual 0/1 matrix of (degree, vertex) incidences behind this query is
// never materialized; the node multisets carry all of it.
struct DegreesStructure {
    const SegSkeleton* skel = nullptr;
    TreapPool pool;
    std::vector<int> roots;  // per skeleton node

    DegreesStructure() : pool(0x9e3779b97f4a7c15ull) {}
    void build(const SegSkeleton& s, const std::vector<int>& indeg, Counters& ctr);

    int root() const { return 0; }
    int left(int p) const;
    int right(int p) const;

    // |{x in [lo,hi) of node p : indeg[x] <= d}|.
    int rect(int p, int d, Counters& ctr) const;

    // Move vertex x's stored degree from old_d to new_d along its root path.
    void change_degree(int x, int old_d, int new_d, Counters& ctr);
};

// One summing tree per vertex, all over the shared skeleton. Leaf x of tree v
// holds arc(x, v); internal nodes cache subtree sums. Sums are uint16, which
// caps n at 65535.
struct AdjacencyForest {
    const SegSkeleton* skel = nullptr;
    int n = 0;
    std::vector<std::uint16_t> sums;     // v * internal_count + slot
    std::vector<std::uint64_t> leaves;   // per-vertex bit rows

    void build(const SegSkeleton& s, const Tournament& t);

    bool leaf_bit(int v, int x) const {
        return (leaves[static_cast<std::size_t>(v) * words_ + (x >> 6)] >> (x & 63)) & 1u;
    }
    int node_sum(int v, int p) const;

    // Sets leaf x of tree v to bit, updating sums on the root path.
    void set_leaf(int v, int x, bool bit, Counters& ctr);

    int words() const { return words_; }

private:
    int words_ = 0;
};

// Full-model triangle structure: polylog updates via the degrees structure
// and per-vertex adjacency trees.
struct DsTriangle {
    Tournament t;
    BucketedIndex idx;
    SegSkeleton skel;
    DegreesStructure degrees;
    AdjacencyForest adj;
    mutable Counters ctr;

    explicit DsTriangle(Tournament t0);

    // degrees/adj point back into this->skel, so moves must re-aim them.
    DsTriangle(DsTriangle&& o) noexcept;
    DsTriangle& operator=(DsTriangle&& o) noexcept;
    DsTriangle(const DsTriangle&) = delete;
    DsTriangle& operator=(const DsTriangle&) = delete;

    void reverse(int u, int v);

    // Exposed for tests and the verify mode; p is a skeleton node handle.
    int degrees_rect(int p, int d) const;

    // Smallest-index in-neighbour of v in T', or absent; p = prefix length.
    std::optional<int> single_neighbour(int v, int p);

    // min(l, d_{T'}(v)) in-neighbours, leftmost first; adj[v] is restored
    // before returning.
    std::vector<int> incoming(int v, int l);

    std::optional<Triangle> find_triangle();
    TriangleQuery find_triangle_bounded(long long d);
};

}  // namespace tournadyn
