#include "pact/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace pact {

int FiniteGroup::index_of(const std::string& id) const {
    for (int i = 0; i < order(); ++i)
        if (elements[static_cast<std::size_t>(i)] == id) return i;
    throw Error(errc::unknown_point, "no group element named '" + id + "'");
}

FiniteGroup validate_group(const std::vector<std::string>& elements,
                           const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(elements.size());
    if (table.size() != static_cast<std::size_t>(n))
        throw Error(errc::not_total, "product table must have one row per element");
    for (const auto& row : table) {
        if (row.size() != static_cast<std::size_t>(n))
            throw Error(errc::not_total, "product table row has wrong length");
        for (int v : row)
            if (v < 0 || v >= n) throw Error(errc::not_total, "product table entry out of range");
    }

    auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw Error(errc::not_associative,
                                "(" + elements[static_cast<std::size_t>(g)] + "·" +
                                    elements[static_cast<std::size_t>(h)] + ")·" +
                                    elements[static_cast<std::size_t>(k)] + " differs");

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool neutral = true;
        for (int g = 0; g < n; ++g)
            if (mul(e, g) != g || mul(g, e) != g) { neutral = false; break; }
        if (neutral) { identity = e; break; }
    }
    if (identity < 0) throw Error(errc::no_identity, "no two-sided neutral element");

    std::vector<int> inverse(static_cast<std::size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mul(g, h) == identity && mul(h, g) == identity) { inverse[static_cast<std::size_t>(g)] = h; break; }
        if (inverse[static_cast<std::size_t>(g)] < 0)
            throw Error(errc::no_inverse, "element '" + elements[static_cast<std::size_t>(g)] + "' has no inverse");
    }

    FiniteGroup grp;
    grp.elements = elements;
    grp.product = table;
    grp.identity = identity;
    grp.inverse = std::move(inverse);
    return grp;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    std::set<int> s(members.begin(), members.end());
    if (!s.count(g.identity)) return false;
    for (int a : s)
        for (int b : s)
            if (!s.count(g.mul(a, b))) return false;
    for (int a : s)
        if (!s.count(g.inv(a))) return false;
    return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    if (!is_subgroup(g, members)) return false;
    std::set<int> s(members.begin(), members.end());
    for (int x = 0; x < g.order(); ++x)
        for (int h : s)
            if (!s.count(g.mul(g.mul(x, h), g.inv(x)))) return false;
    return true;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & (std::uint64_t{1} << g.identity))) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) members.push_back(i);
        if (is_subgroup(g, members)) out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::vector<int>> all_normal_subgroups(const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    for (auto& h : all_subgroups(g))
        if (is_normal_subgroup(g, h)) out.push_back(std::move(h));
    return out;
}

SubgroupResult subgroup_and_normality(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> members{g.identity};
    for (int x : gens) members.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<int> next = members;
        for (int a : members) {
            if (next.insert(g.inv(a)).second) grew = true;
            for (int b : members)
                if (next.insert(g.mul(a, b)).second) grew = true;
        }
        members = std::move(next);
    }
    SubgroupResult r;
    r.members.assign(members.begin(), members.end());
    r.is_normal = is_normal_subgroup(g, r.members);
    return r;
}

GroupHom make_hom(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<int>& mapping) {
    if (mapping.size() != static_cast<std::size_t>(dom.order()))
        throw Error(errc::not_total, "homomorphism must cover every element");
    for (int g = 0; g < dom.order(); ++g)
        for (int h = 0; h < dom.order(); ++h)
            if (mapping[static_cast<std::size_t>(dom.mul(g, h))] !=
                cod.mul(mapping[static_cast<std::size_t>(g)], mapping[static_cast<std::size_t>(h)]))
                throw Error(errc::not_homomorphism,
                            "fails at (" + dom.elements[static_cast<std::size_t>(g)] + "," +
                                dom.elements[static_cast<std::size_t>(h)] + ")");
    return GroupHom{dom, cod, mapping};
}

QuotientGroupResult quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
    if (!is_normal_subgroup(g, normal_subgroup)) {
        std::set<int> s(normal_subgroup.begin(), normal_subgroup.end());
        std::string witness = "not a normal subgroup";
        for (int x = 0; x < g.order() && is_subgroup(g, normal_subgroup); ++x)
            for (int h : s)
                if (!s.count(g.mul(g.mul(x, h), g.inv(x)))) {
                    witness = g.elements[static_cast<std::size_t>(x)] + "·" +
                              g.elements[static_cast<std::size_t>(h)] + "·" +
                              g.elements[static_cast<std::size_t>(g.inv(x))] + " leaves H";
                    x = g.order();
                    break;
                }
        throw Error(errc::not_normal, witness);
    }
    const int n = g.order();
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < n; ++x) {
        if (coset_of[static_cast<std::size_t>(x)] != -1) continue;
        std::vector<int> coset;
        for (int h : normal_subgroup) coset.push_back(g.mul(x, h));
        std::sort(coset.begin(), coset.end());
        coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
        int idx = static_cast<int>(cosets.size());
        for (int y : coset) coset_of[static_cast<std::size_t>(y)] = idx;
        cosets.push_back(std::move(coset));
    }

    QuotientGroupResult r;
    r.cosets = cosets;
    for (const auto& c : cosets)
        r.group.elements.push_back(subset_label(subset_of(static_cast<std::size_t>(n), c), g.elements));
    const std::size_t k = cosets.size();
    r.group.product.assign(k, std::vector<int>(k, -1));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            r.group.product[a][b] =
                coset_of[static_cast<std::size_t>(g.mul(cosets[a][0], cosets[b][0]))];
    // revalidate to derive identity and inverses (and to keep the contract honest)
    r.group = validate_group(r.group.elements, r.group.product);
    r.projection = make_hom(g, r.group, coset_of);
    return r;
}

std::vector<int> kernel(const GroupHom& f) {
    std::vector<int> k;
    for (int g = 0; g < f.dom.order(); ++g)
        if (f.apply(g) == f.cod.identity) k.push_back(g);
    return k;
}

TopologicalFiniteGroup make_topological_group(const FiniteGroup& g, const FiniteSpace& topology) {
    if (topology.size() != g.order() || topology.points != g.elements)
        throw Error(errc::carrier_mismatch, "topology carrier must equal the group carrier");
    // multiplication G×G -> G
    FiniteSpace gg = product(topology, topology);
    std::vector<int> mul_map(static_cast<std::size_t>(gg.size()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            mul_map[static_cast<std::size_t>(product_index(topology, a, b))] = g.mul(a, b);
    if (!ContinuousMap{gg, topology, mul_map}.is_monotone())
        throw Error(errc::not_continuous_group, "multiplication is not continuous");
    if (!ContinuousMap{topology, topology, g.inverse}.is_monotone())
        throw Error(errc::not_continuous_group, "inversion is not continuous");
    return TopologicalFiniteGroup{g, topology};
}

TopologicalFiniteGroup discrete_group(const FiniteGroup& g) {
    return TopologicalFiniteGroup{g, discrete_space(g.elements)};
}

FiniteGroup cyclic_group(int n) {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) elements.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return validate_group(elements, table);
}

TopologicalQuotientGroup quotient_topological_group(const TopologicalFiniteGroup& g,
                                                    const std::vector<int>& normal_subgroup) {
    auto q = quotient_group(g.group, normal_subgroup);
    auto qs = quotient_by_class_of(g.topology, q.projection.mapping);
    // class renumbering in the quotient space follows least members, which is
    // exactly the coset order produced by quotient_group
    FiniteSpace topo = qs.space;
    topo.points = q.group.elements;
    TopologicalQuotientGroup r;
    r.group = make_topological_group(q.group, topo);
    r.projection = q.projection;
    r.coset_of = q.projection.mapping;
    return r;
}

} // namespace pact
