#pragma once

#include <cassert>
#include <vector>

#include "tournadyn/errors.hpp"

namespace tournadyn {

// Set over [m]: doubly linked list of members threaded through per-element
// slots. insert/erase/contains are O(1), iteration and clear are O(size),
// min() is an O(size) list scan. New elements are linked at the head.
class ArraySet {
public:
    ArraySet() = default;

    explicit ArraySet(int m) : next_(m, -2), prev_(m, -2) {}

    int capacity() const { return static_cast<int>(next_.size()); }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(int e) const {
        return e >= 0 && e < capacity() && next_[e] != -2;
    }

    // Returns false if e was already present.
    bool insert(int e) {
        check(e);
        if (next_[e] != -2) return false;
        next_[e] = head_;
        prev_[e] = -1;
        if (head_ >= 0) prev_[head_] = e;
        head_ = e;
        ++size_;
        return true;
    }

    // Returns false if e was absent.
    bool erase(int e) {
        check(e);
        if (next_[e] == -2) return false;
        int nx = next_[e], pv = prev_[e];
        if (pv >= 0) next_[pv] = nx; else head_ = nx;
        if (nx >= 0) prev_[nx] = pv;
        next_[e] = -2;
        prev_[e] = -2;
        --size_;
        return true;
    }

    // First list element (most recently inserted), or -1.
    int front() const { return head_; }

    // Successor on the member list, or -1.
    int next(int e) const {
        assert(contains(e));
        return next_[e];
    }

    // Minimum element; the set must be non-empty.
    int min() const {
        assert(!empty());
        int best = head_;
        for (int e = next_[head_]; e >= 0; e = next_[e])
            if (e < best) best = e;
        return best;
    }

    void clear() {
        while (head_ >= 0) erase(head_);
    }

    template <class F>
    void for_each(F&& f) const {
        for (int e = head_; e >= 0; e = next_[e]) f(e);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_);
        for_each([&](int e) { out.push_back(e); });
        return out;
    }

private:
    void check(int e) const {
        if (e < 0 || e >= capacity())
            throw ArgumentError("ArraySet: element out of range");
    }

    std::vector<int> next_;  // -2 = not a member
    std::vector<int> prev_;
    int head_ = -1;
    int size_ = 0;
};

}  // namespace tournadyn
