#pragma once

#include <string>
#include <vector>

#include "pact/space.hpp"

namespace pact {

struct FiniteGroup {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> product; // product[g][h] = index of g·h
    int identity = 0;
    std::vector<int> inverse;

    int order() const { return static_cast<int>(elements.size()); }
    int mul(int g, int h) const { return product[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
    int inv(int g) const { return inverse[static_cast<std::size_t>(g)]; }
    int index_of(const std::string& id) const;
};

// Checks associativity, finds the identity and inverses.
FiniteGroup validate_group(const std::vector<std::string>& elements,
                           const std::vector<std::vector<int>>& table);

struct SubgroupResult {
    std::vector<int> members; // sorted element indices
    bool is_normal = false;
};

// Subgroup generated by a nonempty set, with a normality check.
SubgroupResult subgroup_and_normality(const FiniteGroup& g, const std::vector<int>& gens);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& members);

// Every subgroup, by subset enumeration; only for small orders.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);
std::vector<std::vector<int>> all_normal_subgroups(const FiniteGroup& g);

struct GroupHom {
    FiniteGroup dom;
    FiniteGroup cod;
    std::vector<int> mapping;

    int apply(int g) const { return mapping[static_cast<std::size_t>(g)]; }
};

// Verifies mapping(gh) = mapping(g)·mapping(h).
GroupHom make_hom(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<int>& mapping);

struct QuotientGroupResult {
    FiniteGroup group;            // elements are cosets, labeled "{...}"
    GroupHom projection;          // p_H : G -> G/H
    std::vector<std::vector<int>> cosets; // coset index -> members
};

QuotientGroupResult quotient_group(const FiniteGroup& g, const std::vector<int>& normal_subgroup);

std::vector<int> kernel(const GroupHom& f);

struct TopologicalFiniteGroup {
    FiniteGroup group;
    FiniteSpace topology; // on the same carrier, element order preserved
};

// Validates continuity of multiplication and inversion.
TopologicalFiniteGroup make_topological_group(const FiniteGroup& g, const FiniteSpace& topology);
TopologicalFiniteGroup discrete_group(const FiniteGroup& g);

// Cyclic group Z_n with elements "0".."n-1".
FiniteGroup cyclic_group(int n);

// G/H as a topological group: the quotient topology of the carrier.
struct TopologicalQuotientGroup {
    TopologicalFiniteGroup group;
    GroupHom projection;
    std::vector<int> coset_of; // element of G -> coset index
};

TopologicalQuotientGroup quotient_topological_group(const TopologicalFiniteGroup& g,
                                                    const std::vector<int>& normal_subgroup);

} // namespace pact
