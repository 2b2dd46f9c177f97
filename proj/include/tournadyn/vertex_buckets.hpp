#pragma once

#include <cassert>
#include <vector>

namespace tournadyn {

// Partition of [n] into n buckets, each an intrusive doubly linked list with
// per-vertex node handles so moves are O(1). Insertion at list head; the
// degree index seeds buckets so the head is the smallest vertex index.
struct VertexBuckets {
    std::vector<int> head;   // per bucket, first vertex or -1
    std::vector<int> nxt;    // per vertex
    std::vector<int> prv;    // per vertex
    std::vector<int> bsize;  // per bucket

    VertexBuckets() = default;
    explicit VertexBuckets(int n) : head(n, -1), nxt(n, -1), prv(n, -1), bsize(n, 0) {}

    int size_of(int b) const { return bsize[b]; }

    void insert(int v, int b) {
        nxt[v] = head[b];
        prv[v] = -1;
        if (head[b] >= 0) prv[head[b]] = v;
        head[b] = v;
        ++bsize[b];
    }

    void erase(int v, int b) {
        assert(bsize[b] > 0);
        if (prv[v] >= 0) nxt[prv[v]] = nxt[v]; else head[b] = nxt[v];
        if (nxt[v] >= 0) prv[nxt[v]] = prv[v];
        nxt[v] = prv[v] = -1;
        --bsize[b];
    }

    template <class F>
    void for_each_in(int b, F&& f) const {
        for (int v = head[b]; v >= 0; v = nxt[v]) f(v);
    }

    std::vector<int> members(int b) const {
        std::vector<int> out;
        out.reserve(bsize[b]);
        for_each_in(b, [&](int v) { out.push_back(v); });
        return out;
    }
};

}  // namespace tournadyn
