#include "pact/space.hpp"

#include <map>
#include <set>

namespace pact {

int FiniteSpace::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (points[static_cast<std::size_t>(i)] == id) return i;
    throw Error(errc::unknown_point, "no point named '" + id + "'");
}

bool FiniteSpace::is_open(const Subset& s) const {
    const int n = size();
    for (int x = 0; x < n; ++x) {
        if (!s[static_cast<std::size_t>(x)]) continue;
        for (int y = 0; y < n; ++y)
            if (below(x, y) && !s[static_cast<std::size_t>(y)]) return false;
    }
    return true;
}

bool FiniteSpace::is_closed(const Subset& s) const {
    return is_open(subset_complement(s));
}

Subset FiniteSpace::closure(const Subset& s) const {
    const int n = size();
    Subset r = empty_subset(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s[static_cast<std::size_t>(y)] && below(x, y)) r[static_cast<std::size_t>(x)] = 1;
    return r;
}

Subset FiniteSpace::interior(const Subset& s) const {
    const int n = size();
    Subset r = s;
    for (int x = 0; x < n; ++x) {
        if (!r[static_cast<std::size_t>(x)]) continue;
        for (int y = 0; y < n; ++y)
            if (below(x, y) && !s[static_cast<std::size_t>(y)]) r[static_cast<std::size_t>(x)] = 0;
    }
    return r;
}

Subset FiniteSpace::up_set(int x) const {
    const int n = size();
    Subset r = empty_subset(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y)
        if (below(x, y)) r[static_cast<std::size_t>(y)] = 1;
    return r;
}

Subset FiniteSpace::down_set(int x) const {
    const int n = size();
    Subset r = empty_subset(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y)
        if (below(y, x)) r[static_cast<std::size_t>(y)] = 1;
    return r;
}

bool FiniteSpace::discrete() const {
    const int n = size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (below(x, y) != (x == y)) return false;
    return true;
}

std::vector<Subset> FiniteSpace::all_opens() const {
    const int n = size();
    if (n > 20) throw Error(errc::not_total, "open-set enumeration limited to 20 points");
    std::vector<Subset> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Subset s(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s[static_cast<std::size_t>(i)] = 1;
        if (is_open(s)) result.push_back(std::move(s));
    }
    return result;
}

bool ContinuousMap::is_monotone() const {
    const int n = dom.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (dom.below(x, y) && !cod.below(apply(x), apply(y))) return false;
    return true;
}

Subset ContinuousMap::image(const Subset& s) const {
    Subset r = empty_subset(static_cast<std::size_t>(cod.size()));
    for (int x = 0; x < dom.size(); ++x)
        if (s[static_cast<std::size_t>(x)]) r[static_cast<std::size_t>(apply(x))] = 1;
    return r;
}

Subset ContinuousMap::preimage(const Subset& s) const {
    Subset r = empty_subset(static_cast<std::size_t>(dom.size()));
    for (int x = 0; x < dom.size(); ++x)
        if (s[static_cast<std::size_t>(apply(x))]) r[static_cast<std::size_t>(x)] = 1;
    return r;
}

namespace {

Subset resolve_subset(const std::vector<std::string>& points,
                      const std::vector<std::string>& ids) {
    Subset s(points.size(), 0);
    for (const auto& id : ids) {
        bool found = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] == id) {
                s[i] = 1;
                found = true;
                break;
            }
        }
        if (!found) throw Error(errc::unknown_point, "no point named '" + id + "'");
    }
    return s;
}

} // namespace

FiniteSpace space_from_opens(const std::vector<std::string>& points,
                             const std::vector<std::vector<std::string>>& opens) {
    const std::size_t n = points.size();
    std::set<Subset> family;
    for (const auto& u : opens) family.insert(resolve_subset(points, u));

    if (!family.count(empty_subset(n)) || !family.count(full_subset(n)))
        throw Error(errc::missing_empty_or_full, "the empty set and the full set must be open");
    for (const auto& u : family) {
        for (const auto& v : family) {
            if (!family.count(subset_union(u, v)))
                throw Error(errc::not_closed_under_union,
                            subset_label(u, points) + " ∪ " + subset_label(v, points));
            if (!family.count(subset_intersection(u, v)))
                throw Error(errc::not_closed_under_intersection,
                            subset_label(u, points) + " ∩ " + subset_label(v, points));
        }
    }

    FiniteSpace sp;
    sp.points = points;
    sp.leq.assign(n, Subset(n, 0));
    // x ⊑ y iff every open containing x contains y
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            bool rel = true;
            for (const auto& u : family)
                if (u[x] && !u[y]) { rel = false; break; }
            sp.leq[x][y] = rel;
        }
    }

    // Round trip: the up-sets of ⊑ are exactly the input family.
    if (n <= 20) {
        auto derived = sp.all_opens();
        std::set<Subset> derived_set(derived.begin(), derived.end());
        if (derived_set != family)
            throw Error(errc::not_closed_under_union, "open family does not round-trip");
    }
    return sp;
}

FiniteSpace space_from_preorder(const std::vector<std::string>& points,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
    const std::size_t n = points.size();
    FiniteSpace sp;
    sp.points = points;
    sp.leq.assign(n, Subset(n, 0));
    for (std::size_t i = 0; i < n; ++i) sp.leq[i][i] = 1;
    for (const auto& [a, b] : pairs) {
        Subset sa = resolve_subset(points, {a});
        Subset sb = resolve_subset(points, {b});
        sp.leq[static_cast<std::size_t>(subset_members(sa)[0])]
              [static_cast<std::size_t>(subset_members(sb)[0])] = 1;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (sp.leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (sp.leq[k][j]) sp.leq[i][j] = 1;
    return sp;
}

FiniteSpace discrete_space(const std::vector<std::string>& points) {
    return space_from_preorder(points, {});
}

SetOperators set_operators(const FiniteSpace& a, const Subset& s) {
    if (s.size() != static_cast<std::size_t>(a.size()))
        throw Error(errc::unknown_point, "subset size does not match the carrier");
    SetOperators r;
    r.closure = a.closure(s);
    r.interior = a.interior(s);
    r.is_open = a.is_open(s);
    r.is_closed = a.is_closed(s);
    r.is_clopen = r.is_open && r.is_closed;
    return r;
}

FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b) {
    const int na = a.size(), nb = b.size();
    FiniteSpace p;
    p.points.reserve(static_cast<std::size_t>(na * nb));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            p.points.push_back("(" + a.points[static_cast<std::size_t>(i)] + "," +
                               b.points[static_cast<std::size_t>(j)] + ")");
    const std::size_t n = p.points.size();
    p.leq.assign(n, Subset(n, 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    if (a.below(i, k) && b.below(j, l))
                        p.leq[static_cast<std::size_t>(product_index(b, i, j))]
                             [static_cast<std::size_t>(product_index(b, k, l))] = 1;
    return p;
}

FiniteSpace subspace(const FiniteSpace& a, const Subset& s) {
    if (s.size() != static_cast<std::size_t>(a.size()))
        throw Error(errc::unknown_point, "subset size does not match the carrier");
    auto members = subset_members(s);
    FiniteSpace sub;
    for (int m : members) sub.points.push_back(a.points[static_cast<std::size_t>(m)]);
    const std::size_t n = members.size();
    sub.leq.assign(n, Subset(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sub.leq[i][j] = a.below(members[i], members[j]);
    return sub;
}

std::vector<int> subspace_index_map(const Subset& s) {
    std::vector<int> idx(s.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) idx[i] = next++;
    return idx;
}

QuotientSpace quotient(const FiniteSpace& a, const std::vector<std::vector<int>>& partition) {
    const int n = a.size();
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < partition.size(); ++c) {
        for (int x : partition[c]) {
            if (x < 0 || x >= n || class_of[static_cast<std::size_t>(x)] != -1)
                throw Error(errc::not_a_partition, "classes must cover each point exactly once");
            class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
        }
    }
    for (int x = 0; x < n; ++x)
        if (class_of[static_cast<std::size_t>(x)] == -1)
            throw Error(errc::not_a_partition,
                        "point '" + a.points[static_cast<std::size_t>(x)] + "' is not covered");
    return quotient_by_class_of(a, class_of);
}

QuotientSpace quotient_by_class_of(const FiniteSpace& a, const std::vector<int>& class_of_raw) {
    const int n = a.size();
    // Renumber classes by least member, for deterministic labels.
    std::map<int, int> renumber;
    std::vector<int> class_of(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        int c = class_of_raw[static_cast<std::size_t>(x)];
        auto it = renumber.find(c);
        if (it == renumber.end())
            it = renumber.emplace(c, static_cast<int>(renumber.size())).first;
        class_of[static_cast<std::size_t>(x)] = it->second;
    }
    const std::size_t k = renumber.size();
    std::vector<Subset> classes(k, Subset(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])]
               [static_cast<std::size_t>(x)] = 1;

    QuotientSpace q;
    q.class_of = class_of;
    q.classes = classes;
    q.space.points.reserve(k);
    for (const auto& c : classes) q.space.points.push_back(subset_label(c, a.points));

    // Transitive closure of the projected preorder.
    q.space.leq.assign(k, Subset(k, 0));
    for (std::size_t c = 0; c < k; ++c) q.space.leq[c][c] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.below(x, y))
                q.space.leq[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])]
                           [static_cast<std::size_t>(class_of[static_cast<std::size_t>(y)])] = 1;
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t i = 0; i < k; ++i)
            if (q.space.leq[i][m])
                for (std::size_t j = 0; j < k; ++j)
                    if (q.space.leq[m][j]) q.space.leq[i][j] = 1;

    q.pi = ContinuousMap{a, q.space, class_of};
    return q;
}

MapProperties map_properties(const ContinuousMap& f) {
    const int n = f.dom.size();
    if (f.mapping.size() != static_cast<std::size_t>(n))
        throw Error(errc::not_total, "mapping must cover every point of the domain");
    MapProperties p;
    p.continuous = f.is_monotone();

    p.open_map = true;
    for (int x = 0; x < n && p.open_map; ++x)
        if (!f.cod.is_open(f.image(f.dom.up_set(x)))) p.open_map = false;
    p.closed_map = true;
    for (int x = 0; x < n && p.closed_map; ++x)
        if (!f.cod.is_closed(f.image(f.dom.down_set(x)))) p.closed_map = false;

    Subset img = f.image(full_subset(static_cast<std::size_t>(n)));
    p.surjective = subset_size(img) == static_cast<std::size_t>(f.cod.size());
    p.injective = subset_size(img) == static_cast<std::size_t>(n);
    // fibers are finite, hence compact
    p.perfect = p.continuous && p.closed_map && p.surjective;

    p.homeomorphism = false;
    if (p.continuous && p.injective && p.surjective) {
        std::vector<int> inv(static_cast<std::size_t>(f.cod.size()), -1);
        for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(f.apply(x))] = x;
        ContinuousMap g{f.cod, f.dom, inv};
        p.homeomorphism = g.is_monotone();
    }
    return p;
}

Separation separation(const FiniteSpace& a) {
    const int n = a.size();
    Separation s;
    s.t1 = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.below(x, y) != (x == y)) s.t1 = false;
    s.hausdorff = true;
    for (int x = 0; x < n && s.hausdorff; ++x)
        for (int y = 0; y < n && s.hausdorff; ++y)
            if (x != y && !subsets_disjoint(a.up_set(x), a.up_set(y))) s.hausdorff = false;
    // point x vs the closed set ↓c not containing x; minimal neighborhoods decide
    s.regular = true;
    for (int x = 0; x < n && s.regular; ++x)
        for (int c = 0; c < n && s.regular; ++c)
            if (!a.below(x, c) && !subsets_disjoint(a.up_set(x), a.up_set(c))) s.regular = false;
    s.second_countable = true;
    s.metrizable = a.discrete();
    return s;
}

bool same_space(const FiniteSpace& a, const FiniteSpace& b) {
    return a.points == b.points && a.leq == b.leq;
}

} // namespace pact
