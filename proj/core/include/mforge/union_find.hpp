#pragma once

#include <numeric>
#include <vector>

namespace mforge {

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    /// Returns false if x and y were already in the same class.
    bool merge(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        return true;
    }

    bool same(int x, int y) { return find(x) == find(y); }

    int component_count() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace mforge
