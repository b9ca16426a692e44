#pragma once

#include "pact/partial_action.hpp"

namespace pact {

// The minimal global G-space built as the quotient of G x X by the relation
// (g,x) ~ (h,y) iff x in X_{g^-1 h} and eta_{h^-1 g}(x) = y.
struct EnvelopingSpace {
    PartialAction source;
    FiniteSpace product_gx;                 // product(G, X); (g,x) has index g*|X|+x
    QuotientSpace classes;                  // carrier and class table over product_gx
    std::vector<std::vector<int>> mu;       // mu[g][class] -> class
    ContinuousMap iota;                     // X -> carrier, x -> [1,x]
    ContinuousMap q;                        // G x X -> carrier

    const FiniteSpace& carrier() const { return classes.space; }
    int class_of(int g, int x) const {
        return classes.class_of[static_cast<std::size_t>(product_index(source.space, g, x))];
    }
    // mu as a global partial action of G on the carrier
    PartialAction as_global_action() const;
};

// Builds the enveloping space and verifies every contractual property:
// R an equivalence, mu a continuous global action, iota an open embedding,
// q open, minimality, and G-equivalence of the induced action with eta.
EnvelopingSpace globalize(const PartialAction& a);

struct T1Report {
    bool domain_closed = false;
    bool all_gx_closed = false;
    bool xg_t1 = false;
    bool x_hausdorff = false;
};

// Evaluates the T1 chain and asserts its one-way implications.
T1Report t1_report(const EnvelopingSpace& env);

struct HatActionResult {
    PartialAction eta_hat;      // action of G on G x X
    bool orbit_space_matches;   // orbit space of eta_hat is homeomorphic to X_G
};

HatActionResult hat_action(const PartialAction& a);

struct GlobalComparison {
    EnvelopingSpace env;
    ContinuousMap alpha;        // X_G -> Y, [g,x] -> u(g,x)
    bool verified = false;
};

// For a global action u on Y and an open X with G·X = Y: the globalization of
// the induced action is G-equivalent to Y via the canonical map.
GlobalComparison compare_with_global(const PartialAction& u, const Subset& open_subset);

struct EnvTransferReport {
    PropertyFlags source;      // product G x X
    PropertyFlags target;      // X_G
    bool hypotheses_met = false;
};

EnvTransferReport property_transfer_env(const PartialAction& a);

struct HausdorffDomainCheck {
    bool hypotheses_met = false; // X compact Hausdorff (finite discrete)
    bool xg_hausdorff = false;
    bool domain_closed = false;
};

HausdorffDomainCheck hausdorff_implies_closed_domain_check(const PartialAction& a);

} // namespace pact
