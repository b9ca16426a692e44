#pragma once

#include <numeric>
#include <vector>

namespace pact {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        // keep the smaller root, for deterministic class representatives
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        return true;
    }

    // representative (least member) per element
    std::vector<int> labels() {
        std::vector<int> out(parent_.size());
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i) out[static_cast<std::size_t>(i)] = find(i);
        return out;
    }

private:
    std::vector<int> parent_;
};

} // namespace pact
