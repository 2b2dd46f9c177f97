#include "tournadyn/triangle_full.hpp"

#include <cassert>
#include <stdexcept>

#include "tournadyn/bounds.hpp"

namespace tournadyn {

SegSkeleton::SegSkeleton(int n) {
    if (n <= 0) return;
    nodes.reserve(2 * n - 1);
    // Iterative construction with an explicit stack; children are appended
    // after their parent, so node 0 is the root.
    nodes.push_back({0, n, -1, -1, -1});
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        int lo = nodes[p].lo, hi = nodes[p].hi;
        if (hi - lo == 1) {
            nodes[p].slot = lo;
            continue;
        }
        nodes[p].slot = internal_count++;
        int mid = lo + (hi - lo) / 2;
        int l = node_count();
        nodes.push_back({lo, mid, -1, -1, -1});
        int r = node_count();
        nodes.push_back({mid, hi, -1, -1, -1});
        nodes[p].left = l;
        nodes[p].right = r;
        stack.push_back(r);
        stack.push_back(l);
    }
}

std::uint32_t TreapPool::next_prio() {
    rng_ ^= rng_ << 13;
    rng_ ^= rng_ >> 7;
    rng_ ^= rng_ << 17;
    return static_cast<std::uint32_t>(rng_ >> 32);
}

int TreapPool::make(int value) {
    if (!free_.empty()) {
        int p = free_.back();
        free_.pop_back();
        nodes_[p] = Node{value, next_prio(), -1, -1, 1};
        return p;
    }
    nodes_.push_back(Node{value, next_prio(), -1, -1, 1});
    return static_cast<int>(nodes_.size()) - 1;
}

void TreapPool::pull(int p) {
    nodes_[p].cnt = 1 + size(nodes_[p].left) + size(nodes_[p].right);
}

void TreapPool::split_leq(int p, int value, int& a, int& b, Counters& ctr) {
    if (p < 0) { a = b = -1; return; }
    ++ctr.tree_visits;
    if (nodes_[p].value <= value) {
        split_leq(nodes_[p].right, value, nodes_[p].right, b, ctr);
        a = p;
    } else {
        split_leq(nodes_[p].left, value, a, nodes_[p].left, ctr);
        b = p;
    }
    pull(p);
}

int TreapPool::merge(int a, int b, Counters& ctr) {
    if (a < 0) return b;
    if (b < 0) return a;
    ++ctr.tree_visits;
    if (nodes_[a].prio >= nodes_[b].prio) {
        nodes_[a].right = merge(nodes_[a].right, b, ctr);
        pull(a);
        return a;
    }
    nodes_[b].left = merge(a, nodes_[b].left, ctr);
    pull(b);
    return b;
}

void TreapPool::insert(int& root, int value, Counters& ctr) {
    int a, b;
    split_leq(root, value, a, b, ctr);
    root = merge(merge(a, make(value), ctr), b, ctr);
}

void TreapPool::erase(int& root, int value, Counters& ctr) {
    int a, b, mid;
    split_leq(root, value - 1, a, mid, ctr);
    split_leq(mid, value, mid, b, ctr);
    if (mid < 0) throw std::logic_error("treap erase: value is not stored");
    // Drop one occurrence: detach the root of the middle treap.
    int rest = merge(nodes_[mid].left, nodes_[mid].right, ctr);
    free_.push_back(mid);
    root = merge(merge(a, rest, ctr), b, ctr);
}

int TreapPool::count_leq(int root, int value, Counters& ctr) const {
    int p = root, acc = 0;
    while (p >= 0) {
        ++ctr.tree_visits;
        if (nodes_[p].value <= value) {
            acc += 1 + size(nodes_[p].left);
            p = nodes_[p].right;
        } else {
            p = nodes_[p].left;
        }
    }
    return acc;
}

void TreapPool::collect(int root, std::vector<int>& out) const {
    if (root < 0) return;
    collect(nodes_[root].left, out);
    out.push_back(nodes_[root].value);
    collect(nodes_[root].right, out);
}

void DegreesStructure::build(const SegSkeleton& s, const std::vector<int>& indeg, Counters& ctr) {
    skel = &s;
    roots.assign(s.node_count(), -1);
    for (int x = 0; x < static_cast<int>(indeg.size()); ++x) {
        int p = 0;
        while (true) {
            pool.insert(roots[p], indeg[x], ctr);
            if (s.leaf(p)) break;
            p = x < s.nodes[s.nodes[p].left].hi ? s.nodes[p].left : s.nodes[p].right;
        }
    }
}

int DegreesStructure::left(int p) const {
    if (p < 0 || p >= skel->node_count()) throw ArgumentError("degrees: bad node handle");
    return skel->nodes[p].left;
}

int DegreesStructure::right(int p) const {
    if (p < 0 || p >= skel->node_count()) throw ArgumentError("degrees: bad node handle");
    return skel->nodes[p].right;
}

int DegreesStructure::rect(int p, int d, Counters& ctr) const {
    if (p < 0 || p >= skel->node_count()) throw ArgumentError("degrees: bad node handle");
    if (d < 0) return 0;
    return pool.count_leq(roots[p], d, ctr);
}

void DegreesStructure::change_degree(int x, int old_d, int new_d, Counters& ctr) {
    int p = 0;
    while (true) {
        ++ctr.tree_visits;
        pool.erase(roots[p], old_d, ctr);
        pool.insert(roots[p], new_d, ctr);
        if (skel->leaf(p)) break;
        p = x < skel->nodes[skel->nodes[p].left].hi ? skel->nodes[p].left : skel->nodes[p].right;
    }
}

void AdjacencyForest::build(const SegSkeleton& s, const Tournament& t) {
    skel = &s;
    n = t.n;
    if (n > 65535) throw CapabilityError("full-model structure supports n <= 65535");
    words_ = (n + 63) / 64;
    leaves.assign(static_cast<std::size_t>(n) * words_, 0);
    sums.assign(static_cast<std::size_t>(n) * s.internal_count, 0);
    for (int v = 0; v < n; ++v)
        for (int x = 0; x < n; ++x)
            if (x != v && t.arc(x, v))
                leaves[static_cast<std::size_t>(v) * words_ + (x >> 6)] |= std::uint64_t(1) << (x & 63);
    // Fill internal sums bottom-up: nodes are stored parent-before-children,
    // so a reverse sweep sees children first.
    for (int v = 0; v < n; ++v) {
        std::uint16_t* row = sums.data() + static_cast<std::size_t>(v) * s.internal_count;
        for (int p = s.node_count() - 1; p >= 0; --p) {
            if (s.leaf(p)) continue;
            auto value = [&](int c) -> int {
                return s.leaf(c) ? (leaf_bit(v, s.nodes[c].slot) ? 1 : 0) : row[s.nodes[c].slot];
            };
            row[s.nodes[p].slot] = static_cast<std::uint16_t>(value(s.nodes[p].left) + value(s.nodes[p].right));
        }
    }
}

int AdjacencyForest::node_sum(int v, int p) const {
    const auto& nd = skel->nodes[p];
    if (skel->leaf(p)) return leaf_bit(v, nd.slot) ? 1 : 0;
    return sums[static_cast<std::size_t>(v) * skel->internal_count + nd.slot];
}

void AdjacencyForest::set_leaf(int v, int x, bool bit, Counters& ctr) {
    if (leaf_bit(v, x) == bit) return;
    auto& word = leaves[static_cast<std::size_t>(v) * words_ + (x >> 6)];
    word ^= std::uint64_t(1) << (x & 63);
    int delta = bit ? 1 : -1;
    std::uint16_t* row = sums.data() + static_cast<std::size_t>(v) * skel->internal_count;
    int p = 0;
    while (!skel->leaf(p)) {
        ++ctr.tree_visits;
        row[skel->nodes[p].slot] = static_cast<std::uint16_t>(row[skel->nodes[p].slot] + delta);
        p = x < skel->nodes[skel->nodes[p].left].hi ? skel->nodes[p].left : skel->nodes[p].right;
    }
}

DsTriangle::DsTriangle(Tournament t0) : t(std::move(t0)), idx(t), skel(t.n) {
    degrees.build(skel, t.indeg, ctr);
    adj.build(skel, t);
}

DsTriangle::DsTriangle(DsTriangle&& o) noexcept
    : t(std::move(o.t)),
      idx(std::move(o.idx)),
      skel(std::move(o.skel)),
      degrees(std::move(o.degrees)),
      adj(std::move(o.adj)),
      ctr(o.ctr) {
    degrees.skel = &skel;
    adj.skel = &skel;
}

DsTriangle& DsTriangle::operator=(DsTriangle&& o) noexcept {
    t = std::move(o.t);
    idx = std::move(o.idx);
    skel = std::move(o.skel);
    degrees = std::move(o.degrees);
    adj = std::move(o.adj);
    ctr = o.ctr;
    degrees.skel = &skel;
    adj.skel = &skel;
    return *this;
}

void DsTriangle::reverse(int u, int v) {
    t.check_pair(u, v);
    int du = t.indeg[u], dv = t.indeg[v];
    idx.reverse_arc(t, u, v);
    degrees.change_degree(u, du, t.indeg[u], ctr);
    degrees.change_degree(v, dv, t.indeg[v], ctr);
    adj.set_leaf(v, u, t.arc(u, v), ctr);
    adj.set_leaf(u, v, t.arc(v, u), ctr);
}

int DsTriangle::degrees_rect(int p, int d) const {
    return degrees.rect(p, d, ctr);
}

std::optional<int> DsTriangle::single_neighbour(int v, int p) {
    if (t.n == 0) return std::nullopt;
    // t_[a,b] = in-neighbours of v within [a,b] that lie outside the prefix;
    // every prefix vertex is an in-neighbour of every T' vertex, so a plain
    // subtraction of the prefix count works.
    auto count = [&](int node) -> int {
        ++ctr.tree_visits;
        return adj.node_sum(v, node) - degrees.rect(node, p - 1, ctr);
    };
    int node = 0;
    while (!skel.leaf(node)) {
        int l = skel.nodes[node].left, r = skel.nodes[node].right;
        if (count(l) > 0) node = l;
        else if (count(r) > 0) node = r;
        else return std::nullopt;
    }
    if (count(node) > 0) return skel.nodes[node].slot;
    return std::nullopt;
}

std::vector<int> DsTriangle::incoming(int v, int l) {
    t.check_vertex(v);
    if (l < 0) throw ArgumentError("incoming: l must be non-negative");
    int p = idx.prefix_length(t);
    if (t.indeg[v] < p) throw PreconditionError("incoming: vertex lies in the prefix");
    std::vector<int> found;
    for (int i = 0; i < l; ++i) {
        auto x = single_neighbour(v, p);
        if (!x) break;
        found.push_back(*x);
        adj.set_leaf(v, *x, false, ctr);
    }
    for (int x : found) adj.set_leaf(v, x, true, ctr);
    return found;
}

std::optional<Triangle> DsTriangle::find_triangle() {
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

TriangleQuery DsTriangle::find_triangle_bounded(long long d) {
    if (d < 0) throw ArgumentError("find_triangle_bounded: d must be non-negative");
    if (!empty_within(idx.empty.size(), d)) return {TriangleStatus::TooMany, {-1, -1, -1}};
    auto tri = find_triangle();
    if (!tri) return {TriangleStatus::None, {-1, -1, -1}};
    return {TriangleStatus::Found, *tri};
}

}  // namespace tournadyn
