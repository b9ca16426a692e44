#pragma once

#include <array>
#include <string>
#include <vector>

#include "pact/group.hpp"
#include "pact/space.hpp"

namespace pact {

// A continuous partial action: per-element open domains X_g together with
// homeomorphisms eta_g : X_{g^-1} -> X_g. The pair (g,x) is in the graph
// G*X exactly when x lies in X_{g^-1}.
struct PartialAction {
    TopologicalFiniteGroup group;
    FiniteSpace space;
    std::vector<Subset> domain;        // domain[g] = X_g
    std::vector<std::vector<int>> eta; // eta[g][x] = eta_g(x) if x in X_{g^-1}, else -1

    bool defined(int g, int x) const {
        return domain[static_cast<std::size_t>(group.group.inv(g))][static_cast<std::size_t>(x)] != 0;
    }
    int act(int g, int x) const { return eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
    bool is_global() const;

    // G*X as a subset of product(group.topology, space)
    Subset graph() const;
};

// Exhaustive validation of all axioms; with `set_theoretic` the purely
// topological requirements (open domains, homeomorphisms, continuity of the
// evaluation map) are skipped.
PartialAction validate_partial_action(const TopologicalFiniteGroup& group,
                                      const FiniteSpace& space,
                                      const std::vector<Subset>& domain,
                                      const std::vector<std::vector<int>>& eta,
                                      bool set_theoretic = false);

// The evaluation map G*X -> X on the subspace topology of the product.
ContinuousMap evaluation_map(const PartialAction& a);

struct DomainReport {
    bool is_open = false;
    bool is_closed = false;
    bool is_clopen = false;
};

DomainReport domain_report(const PartialAction& a);

struct StabilizerDomain {
    Subset gx;       // over the group carrier
    bool is_closed = false;
};

StabilizerDomain stabilizer_domain(const PartialAction& a, int x);

PartialAction induce_from_global(const PartialAction& global, const Subset& open_subset);

PartialAction pullback(const PartialAction& a, const TopologicalFiniteGroup& g, const GroupHom& phi);

PartialAction restrict_to_subgroup(const PartialAction& a, const std::vector<int>& subgroup);

struct OrbitSpace {
    QuotientSpace quotient;
};

// Orbits generated by union-find over {x ~ eta_g(x)}; the relation is
// verified to already be an equivalence, and the quotient map to be open.
OrbitSpace orbit_space(const PartialAction& a);

struct ClosednessReport {
    bool eta_closed_map = false;
    bool pi_perfect = false;
    bool group_compact = true; // finite
    bool domain_closed = false;
};

ClosednessReport closedness_report(const PartialAction& a);

struct GraphOfAction {
    std::vector<std::array<int, 3>> triples; // (g, x, y) with eta_g... y = g·x
    bool is_closed = false;
};

GraphOfAction graph_of_action(const PartialAction& a);

struct GMapReport {
    bool is_g_map = false;
    bool is_g_equivalence = false;
};

// f : X -> Y between carriers of two partial actions of the same group.
GMapReport is_g_map(const ContinuousMap& f, const PartialAction& ax, const PartialAction& ay);

struct PropertyFlags {
    bool hausdorff = false;
    bool regular = false;
    bool metrizable = false;
    bool second_countable = true;
};

PropertyFlags property_flags(const FiniteSpace& s);

struct PropertyTransferReport {
    PropertyFlags source;
    PropertyFlags target;
    bool hypotheses_met = false; // finite group (always compact) and G*X closed
};

// Transfer from X to the orbit space X/~_G; asserts the implication when the
// hypotheses hold.
PropertyTransferReport property_transfer_orbit(const PartialAction& a);

} // namespace pact
