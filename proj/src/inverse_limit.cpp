#include "pact/inverse_limit.hpp"

#include <algorithm>

namespace pact {

IndexPoset validate_poset(const std::vector<std::string>& ids,
                          const std::vector<std::pair<std::string, std::string>>& relations) {
    if (ids.size() > 6) throw Error(errc::not_directed, "index posets are limited to 6 elements");
    FiniteSpace s = space_from_preorder(ids, relations);
    IndexPoset p{ids, s.leq};
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (i != j && p.le(i, j) && p.le(j, i))
                throw Error(errc::not_directed, "index relation is not antisymmetric");
    // directedness by enumeration
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            bool bounded = false;
            for (int k = 0; k < p.size(); ++k)
                if (p.le(i, k) && p.le(j, k)) { bounded = true; break; }
            if (!bounded)
                throw Error(errc::not_directed,
                            "indices '" + ids[static_cast<std::size_t>(i)] + "' and '" +
                                ids[static_cast<std::size_t>(j)] + "' have no upper bound");
        }
    return p;
}

InverseSystem build_system(const PartialAction& eta,
                           const IndexPoset& index,
                           const std::vector<std::vector<int>>& subgroups) {
    if (subgroups.size() != static_cast<std::size_t>(index.size()))
        throw Error(errc::not_total, "one subgroup required per index");
    InverseSystem sys;
    sys.base = eta;
    sys.index = index;
    sys.subgroups = subgroups;
    for (auto& h : sys.subgroups) std::sort(h.begin(), h.end());

    // H_j ⊆ H_i whenever i <= j
    for (int i = 0; i < index.size(); ++i)
        for (int j = 0; j < index.size(); ++j)
            if (index.le(i, j) && !std::includes(sys.subgroups[static_cast<std::size_t>(i)].begin(),
                                                 sys.subgroups[static_cast<std::size_t>(i)].end(),
                                                 sys.subgroups[static_cast<std::size_t>(j)].begin(),
                                                 sys.subgroups[static_cast<std::size_t>(j)].end()))
                throw Error(errc::not_nested,
                            "H at '" + index.ids[static_cast<std::size_t>(j)] +
                                "' must be contained in H at '" + index.ids[static_cast<std::size_t>(i)] + "'");

    for (int i = 0; i < index.size(); ++i)
        sys.bundles.push_back(build_quotient_action(eta, sys.subgroups[static_cast<std::size_t>(i)]));

    // pi_i^j : X_j -> X_i for i <= j, the unique map over pi_{H_i}
    sys.bonds.assign(static_cast<std::size_t>(index.size()),
                     std::vector<ContinuousMap>(static_cast<std::size_t>(index.size())));
    for (int i = 0; i < index.size(); ++i)
        for (int j = 0; j < index.size(); ++j) {
            if (!index.le(i, j)) continue;
            const auto& bj = sys.bundles[static_cast<std::size_t>(j)];
            const auto& bi = sys.bundles[static_cast<std::size_t>(i)];
            std::vector<int> m(static_cast<std::size_t>(bj.z.quotient.space.size()), -1);
            for (int x = 0; x < eta.space.size(); ++x) {
                int cj = bj.z.quotient.class_of[static_cast<std::size_t>(x)];
                int ci = bi.z.quotient.class_of[static_cast<std::size_t>(x)];
                if (m[static_cast<std::size_t>(cj)] == -1)
                    m[static_cast<std::size_t>(cj)] = ci;
                else if (m[static_cast<std::size_t>(cj)] != ci)
                    throw TheoremViolation("orbits do not refine along the index order");
            }
            ContinuousMap bond{bj.z.quotient.space, bi.z.quotient.space, m};
            if (!bond.is_monotone()) throw TheoremViolation("a bonding map is not continuous");
            if (!is_g_map(bond, bj.eta_pullback, bi.eta_pullback).is_g_map)
                throw TheoremViolation("a bonding map is not a G-map");
            sys.bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(bond);
        }

    // pi_i^k = pi_i^j ∘ pi_j^k on every chain
    for (int i = 0; i < index.size(); ++i)
        for (int j = 0; j < index.size(); ++j)
            for (int k = 0; k < index.size(); ++k) {
                if (!(index.le(i, j) && index.le(j, k))) continue;
                const auto& ij = sys.bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const auto& jk = sys.bonds[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                const auto& ik = sys.bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                for (int c = 0; c < jk.dom.size(); ++c)
                    if (ij.apply(jk.apply(c)) != ik.apply(c))
                        throw TheoremViolation("bonding maps do not compose along a chain");
            }
    return sys;
}

LimitSpace inverse_limit(const InverseSystem& sys) {
    const int ni = sys.index.size();
    LimitSpace lim;

    // enumerate bond-compatible tuples
    std::vector<int> sizes;
    for (const auto& b : sys.bundles) sizes.push_back(b.z.quotient.space.size());
    std::vector<int> tuple(static_cast<std::size_t>(ni), 0);
    while (true) {
        bool compatible = true;
        for (int i = 0; i < ni && compatible; ++i)
            for (int j = 0; j < ni && compatible; ++j)
                if (i != j && sys.index.le(i, j) &&
                    sys.bonds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].apply(
                        tuple[static_cast<std::size_t>(j)]) != tuple[static_cast<std::size_t>(i)])
                    compatible = false;
        if (compatible) lim.threads.push_back(tuple);
        int pos = ni - 1;
        while (pos >= 0 && ++tuple[static_cast<std::size_t>(pos)] == sizes[static_cast<std::size_t>(pos)]) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    const int nt = static_cast<int>(lim.threads.size());
    for (const auto& t : lim.threads) {
        std::string label = "(";
        for (int i = 0; i < ni; ++i) {
            if (i) label += ",";
            label += sys.bundles[static_cast<std::size_t>(i)].z.quotient.space.points
                         [static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        }
        label += ")";
        lim.space.points.push_back(label);
    }
    // componentwise preorder: the subspace topology of the product
    lim.space.leq.assign(static_cast<std::size_t>(nt), Subset(static_cast<std::size_t>(nt), 0));
    for (int a = 0; a < nt; ++a)
        for (int b = 0; b < nt; ++b) {
            bool below = true;
            for (int i = 0; i < ni && below; ++i)
                if (!sys.bundles[static_cast<std::size_t>(i)].z.quotient.space.below(
                        lim.threads[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)],
                        lim.threads[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]))
                    below = false;
            lim.space.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = below;
        }

    for (int i = 0; i < ni; ++i) {
        std::vector<int> proj(static_cast<std::size_t>(nt));
        for (int t = 0; t < nt; ++t)
            proj[static_cast<std::size_t>(t)] = lim.threads[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)];
        ContinuousMap phi{lim.space, sys.bundles[static_cast<std::size_t>(i)].z.quotient.space, proj};
        if (!phi.is_monotone()) throw TheoremViolation("a limit projection is not continuous");
        lim.projections.push_back(std::move(phi));
    }
    return lim;
}

LambdaResult lambda_equivalence(const InverseSystem& sys) {
    const PartialAction& eta = sys.base;
    if (!eta.space.discrete())
        throw Error(errc::hypotheses_not_met, "the carrier must be Hausdorff (discrete)");
    if (!domain_report(eta).is_closed)
        throw Error(errc::hypotheses_not_met, "G*X must be closed");

    LambdaResult r;
    r.limit = inverse_limit(sys);
    const int ni = sys.index.size();
    const int nx = eta.space.size();

    std::vector<int> lam(static_cast<std::size_t>(nx), -1);
    for (int x = 0; x < nx; ++x) {
        std::vector<int> tuple(static_cast<std::size_t>(ni));
        for (int i = 0; i < ni; ++i)
            tuple[static_cast<std::size_t>(i)] =
                sys.bundles[static_cast<std::size_t>(i)].z.quotient.class_of[static_cast<std::size_t>(x)];
        auto it = std::find(r.limit.threads.begin(), r.limit.threads.end(), tuple);
        if (it == r.limit.threads.end())
            throw TheoremViolation("lambda(x) is not a thread");
        lam[static_cast<std::size_t>(x)] = static_cast<int>(it - r.limit.threads.begin());
    }
    r.lambda = ContinuousMap{eta.space, r.limit.space, lam};

    MapProperties p = map_properties(r.lambda);
    if (!p.injective) throw TheoremViolation("lambda is not injective");
    if (!p.surjective) throw TheoremViolation("lambda is not surjective onto the threads");
    if (!p.continuous) throw TheoremViolation("lambda is not continuous");
    if (!p.homeomorphism) throw TheoremViolation("lambda is not open onto the limit");

    // theta transported along lambda
    const FiniteGroup& G = eta.group.group;
    const int nt = static_cast<int>(r.limit.threads.size());
    std::vector<int> lam_inv(static_cast<std::size_t>(nt), -1);
    for (int x = 0; x < nx; ++x) lam_inv[static_cast<std::size_t>(lam[static_cast<std::size_t>(x)])] = x;
    std::vector<Subset> domain(static_cast<std::size_t>(G.order()), Subset(static_cast<std::size_t>(nt), 0));
    std::vector<std::vector<int>> theta(static_cast<std::size_t>(G.order()),
                                        std::vector<int>(static_cast<std::size_t>(nt), -1));
    for (int g = 0; g < G.order(); ++g)
        for (int t = 0; t < nt; ++t) {
            int x = lam_inv[static_cast<std::size_t>(t)];
            if (eta.domain[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)])
                domain[static_cast<std::size_t>(g)][static_cast<std::size_t>(t)] = 1;
            if (eta.defined(g, x))
                theta[static_cast<std::size_t>(g)][static_cast<std::size_t>(t)] =
                    lam[static_cast<std::size_t>(eta.act(g, x))];
        }
    r.theta = validate_partial_action(eta.group, r.limit.space, domain, theta);
    if (!is_g_map(r.lambda, eta, r.theta).is_g_equivalence)
        throw TheoremViolation("lambda is not a G-equivalence");

    // the projections separate points from closed sets
    for (int x = 0; x < nx; ++x) {
        for (const auto& open_set : eta.space.all_opens()) {
            Subset closed = subset_complement(open_set);
            if (closed[static_cast<std::size_t>(x)]) continue;
            bool separated = false;
            for (int i = 0; i < ni && !separated; ++i) {
                const auto& zi = sys.bundles[static_cast<std::size_t>(i)].z.quotient;
                Subset image(static_cast<std::size_t>(zi.space.size()), 0);
                for (int y : subset_members(closed))
                    image[static_cast<std::size_t>(zi.class_of[static_cast<std::size_t>(y)])] = 1;
                Subset cl = zi.space.closure(image);
                if (!cl[static_cast<std::size_t>(zi.class_of[static_cast<std::size_t>(x)])]) separated = true;
            }
            if (!separated)
                throw TheoremViolation("the projections do not separate a point from a closed set");
        }
    }
    r.verified = true;
    return r;
}

} // namespace pact
