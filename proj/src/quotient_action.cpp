#include "pact/quotient_action.hpp"

#include <algorithm>

namespace pact {

namespace {

std::string coset_id(const QuotientActionBundle& b, int a) {
    return b.quotient_grp.group.group.elements[static_cast<std::size_t>(a)];
}

} // namespace

QuotientActionBundle build_quotient_action(const PartialAction& eta, const std::vector<int>& subgroup) {
    QuotientActionBundle b;
    b.base = eta;
    b.subgroup = subgroup;
    std::sort(b.subgroup.begin(), b.subgroup.end());
    const FiniteGroup& G = eta.group.group;

    b.quotient_grp = quotient_topological_group(eta.group, b.subgroup); // throws NotNormal
    b.z = orbit_space(restrict_to_subgroup(eta, b.subgroup));
    b.env = globalize(eta);

    // ---- Route A: through the enveloping space ----
    PartialAction mu = b.env.as_global_action();
    b.xg_mod_h = orbit_space(restrict_to_subgroup(mu, b.subgroup)).quotient;
    const int nc = b.quotient_grp.group.group.order(); // number of cosets
    const int nk = b.xg_mod_h.space.size();

    // mu_{gH}: H[t,x] -> H[gt,x], independent of all representatives
    b.mu_gh.assign(static_cast<std::size_t>(nc), std::vector<int>(static_cast<std::size_t>(nk), -1));
    for (int g = 0; g < G.order(); ++g) {
        int a = b.quotient_grp.coset_of[static_cast<std::size_t>(g)];
        for (int c = 0; c < b.env.carrier().size(); ++c) {
            int src = b.xg_mod_h.class_of[static_cast<std::size_t>(c)];
            int dst = b.xg_mod_h.class_of[static_cast<std::size_t>(
                mu.eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)])];
            int& slot = b.mu_gh[static_cast<std::size_t>(a)][static_cast<std::size_t>(src)];
            if (slot == -1)
                slot = dst;
            else if (slot != dst)
                throw TheoremViolation("mu_{G/H} is not well defined");
        }
    }

    // phi: H^x·x -> H[1,x]
    const int nz = b.z.quotient.space.size();
    std::vector<int> phi_map(static_cast<std::size_t>(nz), -1);
    for (int x = 0; x < eta.space.size(); ++x) {
        int zc = b.z.quotient.class_of[static_cast<std::size_t>(x)];
        int target = b.xg_mod_h.class_of[static_cast<std::size_t>(b.env.iota.apply(x))];
        if (phi_map[static_cast<std::size_t>(zc)] == -1)
            phi_map[static_cast<std::size_t>(zc)] = target;
        else if (phi_map[static_cast<std::size_t>(zc)] != target)
            throw TheoremViolation("phi is not well defined");
    }
    b.phi = ContinuousMap{b.z.quotient.space, b.xg_mod_h.space, phi_map};
    Subset phi_image = b.phi.image(full_subset(static_cast<std::size_t>(nz)));
    if (subset_size(phi_image) != static_cast<std::size_t>(nz))
        throw TheoremViolation("phi is not injective");
    if (!b.phi.is_monotone()) throw TheoremViolation("phi is not continuous");
    {
        FiniteSpace img_space = subspace(b.xg_mod_h.space, phi_image);
        std::vector<int> idx = subspace_index_map(phi_image);
        for (int zc = 0; zc < nz; ++zc) {
            Subset im(static_cast<std::size_t>(img_space.size()), 0);
            for (int w : subset_members(b.phi.image(b.z.quotient.space.up_set(zc))))
                im[static_cast<std::size_t>(idx[static_cast<std::size_t>(w)])] = 1;
            if (!img_space.is_open(im))
                throw TheoremViolation("phi is not open onto its image");
        }
    }

    // X_{gH} = mu_{gH}(Im phi) ∩ Im phi, pulled back through phi
    std::vector<Subset> dom_a(static_cast<std::size_t>(nc));
    std::vector<std::vector<int>> eta_a(static_cast<std::size_t>(nc),
                                        std::vector<int>(static_cast<std::size_t>(nz), -1));
    std::vector<int> phi_inv(static_cast<std::size_t>(nk), -1);
    for (int zc = 0; zc < nz; ++zc) phi_inv[static_cast<std::size_t>(phi_map[static_cast<std::size_t>(zc)])] = zc;
    for (int a = 0; a < nc; ++a) {
        Subset moved(static_cast<std::size_t>(nk), 0);
        for (int w = 0; w < nk; ++w)
            if (phi_image[static_cast<std::size_t>(w)])
                moved[static_cast<std::size_t>(b.mu_gh[static_cast<std::size_t>(a)][static_cast<std::size_t>(w)])] = 1;
        Subset xgh = subset_intersection(moved, phi_image);
        dom_a[static_cast<std::size_t>(a)] = b.phi.preimage(xgh);
    }
    for (int a = 0; a < nc; ++a) {
        int ai = b.quotient_grp.group.group.inv(a);
        for (int zc : subset_members(dom_a[static_cast<std::size_t>(ai)])) {
            int w = b.mu_gh[static_cast<std::size_t>(a)][static_cast<std::size_t>(phi_map[static_cast<std::size_t>(zc)])];
            if (phi_inv[static_cast<std::size_t>(w)] == -1)
                throw TheoremViolation("mu_{gH} leaves Im(phi) on the transported domain");
            eta_a[static_cast<std::size_t>(a)][static_cast<std::size_t>(zc)] = phi_inv[static_cast<std::size_t>(w)];
        }
    }

    // ---- Route B: explicit coset/witness formulas ----
    std::vector<Subset> dom_b(static_cast<std::size_t>(nc));
    std::vector<std::vector<int>> eta_b(static_cast<std::size_t>(nc),
                                        std::vector<int>(static_cast<std::size_t>(nz), -1));
    // (X/~_H)_{gH} = { pi_H(x) : exists h in H with (h g^-1, x) in G*X },
    // independent of the representative g
    for (int a = 0; a < nc; ++a) {
        bool first = true;
        for (int g = 0; g < G.order(); ++g) {
            if (b.quotient_grp.coset_of[static_cast<std::size_t>(g)] != a) continue;
            Subset s(static_cast<std::size_t>(nz), 0);
            for (int x = 0; x < eta.space.size(); ++x)
                for (int h : b.subgroup)
                    if (eta.defined(G.mul(h, G.inv(g)), x)) {
                        s[static_cast<std::size_t>(b.z.quotient.class_of[static_cast<std::size_t>(x)])] = 1;
                        break;
                    }
            if (first) {
                dom_b[static_cast<std::size_t>(a)] = s;
                first = false;
            } else if (dom_b[static_cast<std::size_t>(a)] != s) {
                throw TheoremViolation("domain formula depends on the coset representative at " + coset_id(b, a));
            }
        }
    }
    // the (h g, x) membership form must be the domain formula at g^-1
    for (int a = 0; a < nc; ++a) {
        Subset s(static_cast<std::size_t>(nz), 0);
        for (int g = 0; g < G.order(); ++g) {
            if (b.quotient_grp.coset_of[static_cast<std::size_t>(g)] != a) continue;
            for (int x = 0; x < eta.space.size(); ++x)
                for (int h : b.subgroup)
                    if (eta.defined(G.mul(h, g), x)) {
                        s[static_cast<std::size_t>(b.z.quotient.class_of[static_cast<std::size_t>(x)])] = 1;
                        break;
                    }
        }
        if (s != dom_b[static_cast<std::size_t>(b.quotient_grp.group.group.inv(a))])
            throw TheoremViolation("the two domain membership forms disagree at " + coset_id(b, a));
    }
    // eta_{gH}(pi_H(x)) = pi_H((hg)·x); independent of g, x and the witness h
    for (int a = 0; a < nc; ++a) {
        int ai = b.quotient_grp.group.group.inv(a);
        for (int zc : subset_members(dom_b[static_cast<std::size_t>(ai)])) {
            int result = -1;
            for (int g = 0; g < G.order(); ++g) {
                if (b.quotient_grp.coset_of[static_cast<std::size_t>(g)] != a) continue;
                for (int x = 0; x < eta.space.size(); ++x) {
                    if (b.z.quotient.class_of[static_cast<std::size_t>(x)] != zc) continue;
                    for (int h : b.subgroup) {
                        int hg = G.mul(h, g);
                        if (!eta.defined(hg, x)) continue;
                        int value = b.z.quotient.class_of[static_cast<std::size_t>(eta.act(hg, x))];
                        if (result == -1)
                            result = value;
                        else if (result != value)
                            throw TheoremViolation("the action value depends on a representative at " + coset_id(b, a));
                    }
                }
            }
            if (result == -1)
                throw TheoremViolation("no witness exists on the stated domain at " + coset_id(b, a));
            eta_b[static_cast<std::size_t>(a)][static_cast<std::size_t>(zc)] = result;
        }
    }

    // The two routes must agree exactly.
    for (int a = 0; a < nc; ++a) {
        if (dom_a[static_cast<std::size_t>(a)] != dom_b[static_cast<std::size_t>(a)])
            throw TheoremViolation("route mismatch on the domain of coset " + coset_id(b, a));
        if (eta_a[static_cast<std::size_t>(a)] != eta_b[static_cast<std::size_t>(a)])
            throw TheoremViolation("route mismatch on the action of coset " + coset_id(b, a));
    }

    b.eta_mod = validate_partial_action(b.quotient_grp.group, b.z.quotient.space, dom_b, eta_b);
    b.eta_pullback = pullback(b.eta_mod, eta.group, b.quotient_grp.projection);
    return b;
}

PsiVerification psi_homeomorphism(const QuotientActionBundle& b) {
    OrbitSpace lhs = orbit_space(b.eta_mod);       // (X/~_H)/~_{G/H}
    OrbitSpace rhs = orbit_space(b.base);          // X/~_G

    std::vector<int> psi_map(static_cast<std::size_t>(lhs.quotient.space.size()), -1);
    for (int x = 0; x < b.base.space.size(); ++x) {
        int zc = b.z.quotient.class_of[static_cast<std::size_t>(x)];
        int lc = lhs.quotient.class_of[static_cast<std::size_t>(zc)];
        int rc = rhs.quotient.class_of[static_cast<std::size_t>(x)];
        if (psi_map[static_cast<std::size_t>(lc)] == -1)
            psi_map[static_cast<std::size_t>(lc)] = rc;
        else if (psi_map[static_cast<std::size_t>(lc)] != rc)
            throw TheoremViolation("psi is not well defined");
    }
    PsiVerification v;
    v.psi = ContinuousMap{lhs.quotient.space, rhs.quotient.space, psi_map};
    if (!map_properties(v.psi).homeomorphism)
        throw TheoremViolation("psi is not a homeomorphism");
    v.verified = true;
    return v;
}

QuotientGlobalizationVerification globalization_of_quotient(const QuotientActionBundle& b) {
    const FiniteGroup& Q = b.quotient_grp.group.group;
    const int nk = b.xg_mod_h.space.size();

    // mu_{G/H}·Im(phi) covers X_G/~_H
    Subset phi_image = b.phi.image(full_subset(static_cast<std::size_t>(b.z.quotient.space.size())));
    Subset covered(static_cast<std::size_t>(nk), 0);
    for (int a = 0; a < Q.order(); ++a)
        for (int w = 0; w < nk; ++w)
            if (phi_image[static_cast<std::size_t>(w)])
                covered[static_cast<std::size_t>(b.mu_gh[static_cast<std::size_t>(a)][static_cast<std::size_t>(w)])] = 1;
    if (subset_size(covered) != static_cast<std::size_t>(nk))
        throw TheoremViolation("mu_{G/H}·Im(phi) does not cover X_G/~_H");

    // the target as a global action of G/H
    std::vector<Subset> full(static_cast<std::size_t>(Q.order()), full_subset(static_cast<std::size_t>(nk)));
    PartialAction target = validate_partial_action(b.quotient_grp.group, b.xg_mod_h.space, full, b.mu_gh);

    EnvelopingSpace envz = globalize(b.eta_mod);
    std::vector<int> alpha(static_cast<std::size_t>(envz.carrier().size()), -1);
    for (int a = 0; a < Q.order(); ++a)
        for (int zc = 0; zc < b.z.quotient.space.size(); ++zc) {
            int c = envz.class_of(a, zc);
            int value = b.mu_gh[static_cast<std::size_t>(a)][static_cast<std::size_t>(b.phi.apply(zc))];
            if (alpha[static_cast<std::size_t>(c)] == -1)
                alpha[static_cast<std::size_t>(c)] = value;
            else if (alpha[static_cast<std::size_t>(c)] != value)
                throw TheoremViolation("the canonical map of the quotient globalization is not well defined");
        }

    QuotientGlobalizationVerification v;
    v.alpha = ContinuousMap{envz.carrier(), b.xg_mod_h.space, alpha};
    if (!map_properties(v.alpha).homeomorphism)
        throw TheoremViolation("the quotient globalization map is not a homeomorphism");
    if (!is_g_map(v.alpha, envz.as_global_action(), target).is_g_map)
        throw TheoremViolation("the quotient globalization map is not equivariant");
    v.verified = true;
    return v;
}

BondingMapResult bonding_map(const PartialAction& eta,
                             const std::vector<int>& h1,
                             const std::vector<int>& h2) {
    for (int m : h1)
        if (std::find(h2.begin(), h2.end(), m) == h2.end())
            throw Error(errc::not_nested, "H1 must be contained in H2");

    QuotientActionBundle b1 = build_quotient_action(eta, h1);
    QuotientActionBundle b2 = build_quotient_action(eta, h2);

    // the unique map with pi_{H2} = map ∘ pi_{H1}
    std::vector<int> m(static_cast<std::size_t>(b1.z.quotient.space.size()), -1);
    for (int x = 0; x < eta.space.size(); ++x) {
        int c1 = b1.z.quotient.class_of[static_cast<std::size_t>(x)];
        int c2 = b2.z.quotient.class_of[static_cast<std::size_t>(x)];
        if (m[static_cast<std::size_t>(c1)] == -1)
            m[static_cast<std::size_t>(c1)] = c2;
        else if (m[static_cast<std::size_t>(c1)] != c2)
            throw TheoremViolation("H1-orbits do not refine H2-orbits");
    }

    BondingMapResult r;
    r.map = ContinuousMap{b1.z.quotient.space, b2.z.quotient.space, m};
    if (!r.map.is_monotone()) throw TheoremViolation("the bonding map is not continuous");
    r.g_map_verified = is_g_map(r.map, b1.eta_pullback, b2.eta_pullback).is_g_map;
    if (!r.g_map_verified) throw TheoremViolation("the bonding map is not a G-map");
    return r;
}

ClosedDomainCorollary closed_domain_corollary_check(const QuotientActionBundle& b) {
    ClosedDomainCorollary r;
    Subset h = subset_of(static_cast<std::size_t>(b.base.group.group.order()), b.subgroup);
    r.hypotheses_met = b.base.space.discrete() &&
                       domain_report(b.base).is_closed &&
                       b.base.group.topology.is_closed(h);
    r.domain_closed = domain_report(b.eta_mod).is_closed;
    if (r.hypotheses_met && !r.domain_closed)
        throw TheoremViolation("the quotient action domain must be closed under the stated hypotheses");
    return r;
}

} // namespace pact
