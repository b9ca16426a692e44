#include "pact/partial_action.hpp"

#include <array>

#include "pact/union_find.hpp"

namespace pact {

bool PartialAction::is_global() const {
    for (const auto& d : domain)
        if (subset_size(d) != static_cast<std::size_t>(space.size())) return false;
    return true;
}

Subset PartialAction::graph() const {
    const int ng = group.group.order();
    const int nx = space.size();
    Subset s(static_cast<std::size_t>(ng * nx), 0);
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nx; ++x)
            if (defined(g, x))
                s[static_cast<std::size_t>(product_index(space, g, x))] = 1;
    return s;
}

namespace {

std::string el(const PartialAction& a, int g) { return a.group.group.elements[static_cast<std::size_t>(g)]; }
std::string pt(const PartialAction& a, int x) { return a.space.points[static_cast<std::size_t>(x)]; }

// (PA1)-(PA3), re-derived from the graph relation alone.
void cross_check_axioms(const PartialAction& a) {
    const int ng = a.group.group.order();
    const int nx = a.space.size();
    const FiniteGroup& G = a.group.group;
    for (int x = 0; x < nx; ++x) {
        if (!a.defined(G.identity, x) || a.act(G.identity, x) != x)
            throw TheoremViolation("PA3 fails at " + pt(a, x));
        for (int g = 0; g < ng; ++g) {
            if (!a.defined(g, x)) continue;
            int gx = a.act(g, x);
            if (!a.defined(G.inv(g), gx) || a.act(G.inv(g), gx) != x)
                throw TheoremViolation("PA1 fails at (" + el(a, g) + "," + pt(a, x) + ")");
            for (int h = 0; h < ng; ++h) {
                if (!a.defined(h, gx)) continue;
                int gh = G.mul(h, g);
                if (!a.defined(gh, x) || a.act(gh, x) != a.act(h, gx))
                    throw TheoremViolation("PA2 fails at (" + el(a, h) + "," + el(a, g) + "," + pt(a, x) + ")");
            }
        }
    }
}

} // namespace

PartialAction validate_partial_action(const TopologicalFiniteGroup& group,
                                      const FiniteSpace& space,
                                      const std::vector<Subset>& domain,
                                      const std::vector<std::vector<int>>& eta,
                                      bool set_theoretic) {
    const int ng = group.group.order();
    const int nx = space.size();
    if (domain.size() != static_cast<std::size_t>(ng) || eta.size() != static_cast<std::size_t>(ng))
        throw Error(errc::not_total, "one domain and one map required per group element");
    for (int g = 0; g < ng; ++g) {
        if (domain[static_cast<std::size_t>(g)].size() != static_cast<std::size_t>(nx) ||
            eta[static_cast<std::size_t>(g)].size() != static_cast<std::size_t>(nx))
            throw Error(errc::not_total, "domain or map has wrong carrier size");
    }

    PartialAction a{group, space, domain, eta};
    const FiniteGroup& G = group.group;

    // X_1 = X and eta_1 = id
    if (subset_size(domain[static_cast<std::size_t>(G.identity)]) != static_cast<std::size_t>(nx))
        throw Error(errc::identity_domain_not_full, "X_1 must be the whole space");
    for (int x = 0; x < nx; ++x)
        if (eta[static_cast<std::size_t>(G.identity)][static_cast<std::size_t>(x)] != x)
            throw Error(errc::identity_domain_not_full, "eta_1 must be the identity");

    // each eta_g a bijection X_{g^-1} -> X_g
    for (int g = 0; g < ng; ++g) {
        const Subset& src = domain[static_cast<std::size_t>(G.inv(g))];
        const Subset& dst = domain[static_cast<std::size_t>(g)];
        Subset image(static_cast<std::size_t>(nx), 0);
        for (int x = 0; x < nx; ++x) {
            int y = eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)];
            if (!src[static_cast<std::size_t>(x)]) {
                if (y != -1)
                    throw Error(errc::not_homeomorphism,
                                "eta_" + el(a, g) + " defined outside X_{g^-1} at " + pt(a, x));
                continue;
            }
            if (y < 0 || y >= nx || !dst[static_cast<std::size_t>(y)] || image[static_cast<std::size_t>(y)])
                throw Error(errc::not_homeomorphism, "eta_" + el(a, g) + " is not a bijection onto X_g");
            image[static_cast<std::size_t>(y)] = 1;
        }
        if (image != dst)
            throw Error(errc::not_homeomorphism, "eta_" + el(a, g) + " does not cover X_g");
    }

    if (!set_theoretic) {
        for (int g = 0; g < ng; ++g)
            if (!space.is_open(domain[static_cast<std::size_t>(g)]))
                throw Error(errc::domain_not_open, "X_" + el(a, g) + " is not open");

        for (int g = 0; g < ng; ++g) {
            const Subset& src = domain[static_cast<std::size_t>(G.inv(g))];
            auto mem = subset_members(src);
            for (int x : mem)
                for (int y : mem) {
                    bool below_src = space.below(x, y);
                    bool below_dst = space.below(a.act(g, x), a.act(g, y));
                    if (below_src != below_dst)
                        throw Error(errc::not_homeomorphism,
                                    "eta_" + el(a, g) + " is not a homeomorphism (order broken at " +
                                        pt(a, x) + "," + pt(a, y) + ")");
                }
        }
    }

    // Composition laws: eta_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}, and
    // eta_g ∘ eta_h = eta_{gh} on X_{h^-1} ∩ X_{h^-1 g^-1}.
    for (int g = 0; g < ng; ++g) {
        for (int h = 0; h < ng; ++h) {
            Subset lhs(static_cast<std::size_t>(nx), 0);
            Subset src = subset_intersection(domain[static_cast<std::size_t>(G.inv(g))],
                                             domain[static_cast<std::size_t>(h)]);
            for (int x : subset_members(src)) lhs[static_cast<std::size_t>(a.act(g, x))] = 1;
            Subset rhs = subset_intersection(domain[static_cast<std::size_t>(g)],
                                             domain[static_cast<std::size_t>(G.mul(g, h))]);
            if (lhs != rhs)
                throw Error(errc::composition_law_fails,
                            "eta_" + el(a, g) + "(X_{g^-1} ∩ X_" + el(a, h) + ") ≠ X_g ∩ X_{gh}");

            Subset dom_gh = subset_intersection(domain[static_cast<std::size_t>(G.inv(h))],
                                                domain[static_cast<std::size_t>(G.inv(G.mul(g, h)))]);
            for (int x : subset_members(dom_gh)) {
                int hx = a.act(h, x);
                if (!a.defined(g, hx) || a.act(g, hx) != a.act(G.mul(g, h), x))
                    throw Error(errc::composition_law_fails,
                                "eta_" + el(a, g) + "∘eta_" + el(a, h) + " ≠ eta_{gh} at " + pt(a, x));
            }
        }
    }

    if (!set_theoretic) {
        ContinuousMap ev = evaluation_map(a);
        const int n = ev.dom.size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (ev.dom.below(i, j) && !ev.cod.below(ev.apply(i), ev.apply(j)))
                    throw Error(errc::evaluation_not_continuous,
                                "witness " + ev.dom.points[static_cast<std::size_t>(i)]);
    }

    cross_check_axioms(a);
    return a;
}

ContinuousMap evaluation_map(const PartialAction& a) {
    FiniteSpace prod = product(a.group.topology, a.space);
    Subset graph = a.graph();
    FiniteSpace dom = subspace(prod, graph);
    std::vector<int> mapping;
    mapping.reserve(subset_size(graph));
    for (int g = 0; g < a.group.group.order(); ++g)
        for (int x = 0; x < a.space.size(); ++x)
            if (a.defined(g, x)) mapping.push_back(a.act(g, x));
    return ContinuousMap{dom, a.space, std::move(mapping)};
}

DomainReport domain_report(const PartialAction& a) {
    FiniteSpace prod = product(a.group.topology, a.space);
    Subset graph = a.graph();
    DomainReport r;
    r.is_open = prod.is_open(graph);
    r.is_closed = prod.is_closed(graph);
    r.is_clopen = r.is_open && r.is_closed;
    return r;
}

StabilizerDomain stabilizer_domain(const PartialAction& a, int x) {
    if (x < 0 || x >= a.space.size()) throw Error(errc::unknown_point, "stabilizer of unknown point");
    StabilizerDomain r;
    r.gx = empty_subset(static_cast<std::size_t>(a.group.group.order()));
    for (int g = 0; g < a.group.group.order(); ++g)
        if (a.defined(g, x)) r.gx[static_cast<std::size_t>(g)] = 1;
    r.is_closed = a.group.topology.is_closed(r.gx);
    return r;
}

PartialAction induce_from_global(const PartialAction& global, const Subset& open_subset) {
    if (!global.is_global()) throw Error(errc::not_global, "source action must be global");
    if (!global.space.is_open(open_subset))
        throw Error(errc::not_open_subset, "induced carrier must be open");

    const FiniteGroup& G = global.group.group;
    FiniteSpace sub = subspace(global.space, open_subset);
    std::vector<int> idx = subspace_index_map(open_subset);
    const int ng = G.order();
    const int nx = sub.size();
    std::vector<Subset> domain(static_cast<std::size_t>(ng), Subset(static_cast<std::size_t>(nx), 0));
    std::vector<std::vector<int>> eta(static_cast<std::size_t>(ng),
                                      std::vector<int>(static_cast<std::size_t>(nx), -1));
    // X_g = X ∩ u_g(X)
    for (int g = 0; g < ng; ++g)
        for (int y = 0; y < global.space.size(); ++y) {
            if (!open_subset[static_cast<std::size_t>(y)]) continue;
            int uy = global.act(g, y);
            if (uy >= 0 && open_subset[static_cast<std::size_t>(uy)]) {
                domain[static_cast<std::size_t>(g)][static_cast<std::size_t>(idx[static_cast<std::size_t>(uy)])] = 1;
                eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(idx[static_cast<std::size_t>(y)])] =
                    idx[static_cast<std::size_t>(uy)];
            }
        }
    return validate_partial_action(global.group, sub, domain, eta);
}

PartialAction pullback(const PartialAction& a, const TopologicalFiniteGroup& g, const GroupHom& phi) {
    if (phi.cod.elements != a.group.group.elements || phi.dom.elements != g.group.elements)
        throw Error(errc::carrier_mismatch, "homomorphism endpoints do not match");
    if (!ContinuousMap{g.topology, a.group.topology, phi.mapping}.is_monotone())
        throw Error(errc::not_continuous_group, "homomorphism is not continuous");
    const int ng = g.group.order();
    std::vector<Subset> domain(static_cast<std::size_t>(ng));
    std::vector<std::vector<int>> eta(static_cast<std::size_t>(ng));
    for (int x = 0; x < ng; ++x) {
        domain[static_cast<std::size_t>(x)] = a.domain[static_cast<std::size_t>(phi.apply(x))];
        eta[static_cast<std::size_t>(x)] = a.eta[static_cast<std::size_t>(phi.apply(x))];
    }
    return validate_partial_action(g, a.space, domain, eta);
}

PartialAction restrict_to_subgroup(const PartialAction& a, const std::vector<int>& subgroup) {
    if (!is_subgroup(a.group.group, subgroup))
        throw Error(errc::not_normal, "not a subgroup");
    std::vector<int> members = subgroup;
    std::sort(members.begin(), members.end());

    FiniteGroup h;
    for (int m : members) h.elements.push_back(a.group.group.elements[static_cast<std::size_t>(m)]);
    const std::size_t k = members.size();
    std::vector<int> pos(static_cast<std::size_t>(a.group.group.order()), -1);
    for (std::size_t i = 0; i < k; ++i) pos[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    h.product.assign(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            h.product[i][j] = pos[static_cast<std::size_t>(a.group.group.mul(members[i], members[j]))];
    h = validate_group(h.elements, h.product);

    FiniteSpace htopo = subspace(a.group.topology, subset_of(static_cast<std::size_t>(a.group.group.order()), members));
    TopologicalFiniteGroup ht = make_topological_group(h, htopo);

    std::vector<Subset> domain(k);
    std::vector<std::vector<int>> eta(k);
    for (std::size_t i = 0; i < k; ++i) {
        domain[i] = a.domain[static_cast<std::size_t>(members[i])];
        eta[i] = a.eta[static_cast<std::size_t>(members[i])];
    }
    return validate_partial_action(ht, a.space, domain, eta);
}

OrbitSpace orbit_space(const PartialAction& a) {
    const int nx = a.space.size();
    const int ng = a.group.group.order();
    // relation {(x, eta_g(x))}
    std::vector<Subset> rel(static_cast<std::size_t>(nx), Subset(static_cast<std::size_t>(nx), 0));
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nx; ++x)
            if (a.defined(g, x)) rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(a.act(g, x))] = 1;
    // already reflexive, symmetric and transitive for a valid action
    for (int x = 0; x < nx; ++x) {
        if (!rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)])
            throw TheoremViolation("orbit relation not reflexive");
        for (int y = 0; y < nx; ++y) {
            if (rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] !=
                rel[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])
                throw TheoremViolation("orbit relation not symmetric");
            if (!rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) continue;
            for (int z = 0; z < nx; ++z)
                if (rel[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] &&
                    !rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)])
                    throw TheoremViolation("orbit relation not transitive");
        }
    }

    UnionFind uf(nx);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < nx; ++y)
            if (rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) uf.unite(x, y);

    OrbitSpace r;
    r.quotient = quotient_by_class_of(a.space, uf.labels());

    MapProperties p = map_properties(r.quotient.pi);
    if (!p.continuous || !p.open_map)
        throw TheoremViolation("orbit quotient map must be continuous and open");
    return r;
}

ClosednessReport closedness_report(const PartialAction& a) {
    ClosednessReport r;
    r.domain_closed = domain_report(a).is_closed;
    r.eta_closed_map = map_properties(evaluation_map(a)).closed_map;
    r.pi_perfect = map_properties(orbit_space(a).quotient.pi).perfect;
    if (r.domain_closed) {
        if (!r.eta_closed_map) throw TheoremViolation("eta must be closed when G*X is closed");
        if (!r.pi_perfect) throw TheoremViolation("pi_G must be perfect when G*X is closed");
    }
    return r;
}

GraphOfAction graph_of_action(const PartialAction& a) {
    GraphOfAction r;
    const int ng = a.group.group.order();
    const int nx = a.space.size();
    FiniteSpace xx = product(a.space, a.space);
    FiniteSpace gxx = product(a.group.topology, xx);
    Subset graph(static_cast<std::size_t>(gxx.size()), 0);
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nx; ++x)
            if (a.defined(g, x)) {
                int y = a.act(g, x);
                r.triples.push_back({g, x, y});
                graph[static_cast<std::size_t>(product_index(xx, g, product_index(a.space, x, y)))] = 1;
            }
    r.is_closed = gxx.is_closed(graph);
    return r;
}

namespace {

bool g_map_condition(const ContinuousMap& f, const PartialAction& ax, const PartialAction& ay) {
    for (int g = 0; g < ax.group.group.order(); ++g)
        for (int x = 0; x < ax.space.size(); ++x) {
            if (!ax.defined(g, x)) continue;
            int fx = f.apply(x);
            if (!ay.defined(g, fx) || f.apply(ax.act(g, x)) != ay.act(g, fx)) return false;
        }
    return true;
}

} // namespace

GMapReport is_g_map(const ContinuousMap& f, const PartialAction& ax, const PartialAction& ay) {
    if (ax.group.group.elements != ay.group.group.elements)
        throw Error(errc::carrier_mismatch, "both actions must share the group");
    GMapReport r;
    r.is_g_map = g_map_condition(f, ax, ay);
    r.is_g_equivalence = false;
    if (r.is_g_map && map_properties(f).homeomorphism) {
        std::vector<int> inv(static_cast<std::size_t>(f.cod.size()), -1);
        for (int x = 0; x < f.dom.size(); ++x) inv[static_cast<std::size_t>(f.apply(x))] = x;
        r.is_g_equivalence = g_map_condition(ContinuousMap{f.cod, f.dom, inv}, ay, ax);
    }
    return r;
}

PropertyFlags property_flags(const FiniteSpace& s) {
    Separation sep = separation(s);
    return PropertyFlags{sep.hausdorff, sep.regular, sep.metrizable, sep.second_countable};
}

PropertyTransferReport property_transfer_orbit(const PartialAction& a) {
    PropertyTransferReport r;
    r.source = property_flags(a.space);
    r.target = property_flags(orbit_space(a).quotient.space);
    r.hypotheses_met = domain_report(a).is_closed;
    if (r.hypotheses_met) {
        if (r.source.hausdorff && !r.target.hausdorff) throw TheoremViolation("Hausdorff does not transfer to the orbit space");
        if (r.source.regular && !r.target.regular) throw TheoremViolation("regularity does not transfer to the orbit space");
        if (r.source.metrizable && !r.target.metrizable) throw TheoremViolation("metrizability does not transfer to the orbit space");
        if (r.source.second_countable && !r.target.second_countable) throw TheoremViolation("second countability does not transfer");
    }
    return r;
}

} // namespace pact
