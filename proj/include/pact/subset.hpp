#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace pact {

// Subsets of a small indexed carrier, stored as a characteristic vector.
using Subset = std::vector<char>;

inline Subset empty_subset(std::size_t n) { return Subset(n, 0); }

inline Subset full_subset(std::size_t n) { return Subset(n, 1); }

inline std::size_t subset_size(const Subset& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1));
}

inline bool subset_empty(const Subset& s) {
    return std::none_of(s.begin(), s.end(), [](char c) { return c != 0; });
}

inline Subset subset_union(const Subset& a, const Subset& b) {
    Subset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] || b[i];
    return r;
}

inline Subset subset_intersection(const Subset& a, const Subset& b) {
    Subset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
    return r;
}

inline Subset subset_complement(const Subset& a) {
    Subset r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = !a[i];
    return r;
}

inline bool subset_leq(const Subset& a, const Subset& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

inline bool subsets_disjoint(const Subset& a, const Subset& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

inline std::vector<int> subset_members(const Subset& s) {
    std::vector<int> r;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) r.push_back(static_cast<int>(i));
    return r;
}

inline Subset subset_of(std::size_t n, const std::vector<int>& members) {
    Subset s(n, 0);
    for (int i : members) s[static_cast<std::size_t>(i)] = 1;
    return s;
}

// "{a,b,c}" with members listed in carrier order.
inline std::string subset_label(const Subset& s, const std::vector<std::string>& ids) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i]) continue;
        if (!first) out += ",";
        out += ids[i];
        first = false;
    }
    out += "}";
    return out;
}

} // namespace pact
