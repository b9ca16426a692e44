#pragma once

#include <string>
#include <vector>

#include "pact/errors.hpp"
#include "pact/subset.hpp"

namespace pact {

// A finite topological space stored as its specialization preorder:
// leq[x][y] holds iff x lies in the closure of {y}. Open sets are exactly
// the up-sets of this relation, closed sets the down-sets.
struct FiniteSpace {
    std::vector<std::string> points;
    std::vector<Subset> leq;

    int size() const { return static_cast<int>(points.size()); }
    bool below(int x, int y) const { return leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0; }
    int index_of(const std::string& id) const;

    bool is_open(const Subset& s) const;
    bool is_closed(const Subset& s) const;
    Subset closure(const Subset& s) const;
    Subset interior(const Subset& s) const;
    // minimal open neighborhood of x
    Subset up_set(int x) const;
    // closure of {x}
    Subset down_set(int x) const;

    bool discrete() const;

    // All open sets, by bitmask enumeration. Only for small carriers.
    std::vector<Subset> all_opens() const;
};

struct ContinuousMap {
    FiniteSpace dom;
    FiniteSpace cod;
    std::vector<int> mapping;

    int apply(int x) const { return mapping[static_cast<std::size_t>(x)]; }
    bool is_monotone() const;
    Subset image(const Subset& s) const;
    Subset preimage(const Subset& s) const;
};

struct SetOperators {
    Subset closure;
    Subset interior;
    bool is_open = false;
    bool is_closed = false;
    bool is_clopen = false;
};

struct MapProperties {
    bool continuous = false;
    bool open_map = false;
    bool closed_map = false;
    bool perfect = false;
    bool injective = false;
    bool surjective = false;
    bool homeomorphism = false;
};

struct Separation {
    bool t1 = false;
    bool hausdorff = false;
    bool regular = false;
    bool second_countable = true;
    bool metrizable = false;
};

struct QuotientSpace {
    FiniteSpace space;
    ContinuousMap pi;
    std::vector<int> class_of;     // point of the source -> class index
    std::vector<Subset> classes;   // class index -> members, ordered by least member
};

// Builds the space from an open-set family, checking it is a topology and
// that the up-sets of the derived preorder reproduce the family exactly.
FiniteSpace space_from_opens(const std::vector<std::string>& points,
                             const std::vector<std::vector<std::string>>& opens);

// Reflexive-transitive closure of the given pairs.
FiniteSpace space_from_preorder(const std::vector<std::string>& points,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

FiniteSpace discrete_space(const std::vector<std::string>& points);

SetOperators set_operators(const FiniteSpace& a, const Subset& s);

// Carrier A x B with the componentwise preorder; point (i,j) has index
// i * |B| + j and id "(a,b)".
FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b);
inline int product_index(const FiniteSpace& b, int i, int j) { return i * b.size() + j; }

FiniteSpace subspace(const FiniteSpace& a, const Subset& s);
// point index in `a` -> index in subspace(a, s), or -1 outside s
std::vector<int> subspace_index_map(const Subset& s);

QuotientSpace quotient(const FiniteSpace& a, const std::vector<std::vector<int>>& partition);
QuotientSpace quotient_by_class_of(const FiniteSpace& a, const std::vector<int>& class_of);

MapProperties map_properties(const ContinuousMap& f);

Separation separation(const FiniteSpace& a);

bool same_space(const FiniteSpace& a, const FiniteSpace& b);

} // namespace pact
