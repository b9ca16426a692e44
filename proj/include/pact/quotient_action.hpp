#pragma once

#include "pact/globalization.hpp"

namespace pact {

// The partial action of G/H on X/~_H, built by two independent routes:
//   Route A transports the global action mu_{G/H} on X_G/~_H through the
//   embedding phi and induces on Im(phi);
//   Route B uses the explicit coset/witness formulas directly on X.
// The two must agree exactly; eta_mod holds Route B's value.
struct QuotientActionBundle {
    PartialAction base;                    // eta of G on X
    std::vector<int> subgroup;             // H, sorted element indices
    TopologicalQuotientGroup quotient_grp; // G/H with p_H
    OrbitSpace z;                          // X/~_H with pi_H
    PartialAction eta_mod;                 // G/H acting on Z
    PartialAction eta_pullback;            // G acting on Z via p_H

    EnvelopingSpace env;                   // globalization of eta
    QuotientSpace xg_mod_h;                // X_G/~_H
    std::vector<std::vector<int>> mu_gh;   // global G/H action on X_G/~_H
    ContinuousMap phi;                     // Z -> X_G/~_H, H^x·x -> H[1,x]
};

QuotientActionBundle build_quotient_action(const PartialAction& eta, const std::vector<int>& subgroup);

struct PsiVerification {
    ContinuousMap psi;   // (X/~_H)/~_{G/H} -> X/~_G
    bool verified = false;
};

PsiVerification psi_homeomorphism(const QuotientActionBundle& b);

struct QuotientGlobalizationVerification {
    ContinuousMap alpha; // globalization of eta_mod -> X_G/~_H
    bool verified = false;
};

QuotientGlobalizationVerification globalization_of_quotient(const QuotientActionBundle& b);

struct BondingMapResult {
    ContinuousMap map;   // X/~_{H1} -> X/~_{H2}
    bool g_map_verified = false;
};

BondingMapResult bonding_map(const PartialAction& eta,
                             const std::vector<int>& h1,
                             const std::vector<int>& h2);

struct ClosedDomainCorollary {
    bool hypotheses_met = false;
    bool domain_closed = false;
};

ClosedDomainCorollary closed_domain_corollary_check(const QuotientActionBundle& b);

} // namespace pact
