#include "pact/globalization.hpp"

#include "pact/union_find.hpp"

namespace pact {

namespace {

// (g,x) R (h,y)  iff  x in X_{g^-1 h} and eta_{h^-1 g}(x) = y
bool related(const PartialAction& a, int g, int x, int h, int y) {
    const FiniteGroup& G = a.group.group;
    int hg = G.mul(G.inv(h), g);
    return a.defined(hg, x) && a.act(hg, x) == y;
}

} // namespace

PartialAction EnvelopingSpace::as_global_action() const {
    const int ng = source.group.group.order();
    const std::size_t k = static_cast<std::size_t>(carrier().size());
    std::vector<Subset> domain(static_cast<std::size_t>(ng), full_subset(k));
    return validate_partial_action(source.group, carrier(), domain, mu);
}

EnvelopingSpace globalize(const PartialAction& a) {
    const FiniteGroup& G = a.group.group;
    const int ng = G.order();
    const int nx = a.space.size();
    const int n = ng * nx;

    EnvelopingSpace env;
    env.source = a;
    env.product_gx = product(a.group.topology, a.space);

    auto pair_index = [&](int g, int x) { return product_index(a.space, g, x); };

    // R must be an equivalence relation; verified rather than assumed.
    std::vector<Subset> rel(static_cast<std::size_t>(n), Subset(static_cast<std::size_t>(n), 0));
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nx; ++x)
            for (int h = 0; h < ng; ++h)
                for (int y = 0; y < nx; ++y)
                    rel[static_cast<std::size_t>(pair_index(g, x))][static_cast<std::size_t>(pair_index(h, y))] =
                        related(a, g, x, h, y);
    for (int i = 0; i < n; ++i) {
        if (!rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
            throw TheoremViolation("R is not reflexive at " + env.product_gx.points[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw TheoremViolation("R is not symmetric");
            if (!rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            for (int k = 0; k < n; ++k)
                if (rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
                    !rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                    throw TheoremViolation("R is not transitive");
        }
    }

    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) uf.unite(i, j);
    env.classes = quotient_by_class_of(env.product_gx, uf.labels());
    const int k = env.classes.space.size();

    // mu_g[h,x] = [gh,x]; must not depend on the representative
    env.mu.assign(static_cast<std::size_t>(ng), std::vector<int>(static_cast<std::size_t>(k), -1));
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int x = 0; x < nx; ++x) {
                int c = env.classes.class_of[static_cast<std::size_t>(pair_index(h, x))];
                int target = env.classes.class_of[static_cast<std::size_t>(pair_index(G.mul(g, h), x))];
                int& slot = env.mu[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)];
                if (slot == -1)
                    slot = target;
                else if (slot != target)
                    throw TheoremViolation("mu is not well defined on a class");
            }

    // mu is a continuous global action by homeomorphisms
    PartialAction global = env.as_global_action();
    for (int c = 0; c < k; ++c)
        if (env.mu[static_cast<std::size_t>(G.identity)][static_cast<std::size_t>(c)] != c)
            throw TheoremViolation("mu_1 is not the identity");
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int c = 0; c < k; ++c)
                if (env.mu[static_cast<std::size_t>(g)][static_cast<std::size_t>(
                        env.mu[static_cast<std::size_t>(h)][static_cast<std::size_t>(c)])] !=
                    env.mu[static_cast<std::size_t>(G.mul(g, h))][static_cast<std::size_t>(c)])
                    throw TheoremViolation("mu is not an action");

    // iota and q
    std::vector<int> iota_map(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x)
        iota_map[static_cast<std::size_t>(x)] =
            env.classes.class_of[static_cast<std::size_t>(pair_index(G.identity, x))];
    env.iota = ContinuousMap{a.space, env.classes.space, iota_map};
    env.q = env.classes.pi;

    Subset image = env.iota.image(full_subset(static_cast<std::size_t>(nx)));
    if (subset_size(image) != static_cast<std::size_t>(nx))
        throw TheoremViolation("iota is not injective");
    if (!env.iota.is_monotone()) throw TheoremViolation("iota is not continuous");
    if (!env.carrier().is_open(image)) throw TheoremViolation("iota(X) is not open");
    {
        MapProperties qp = map_properties(env.q);
        if (!qp.continuous || !qp.open_map) throw TheoremViolation("q must be continuous and open");
    }

    // minimality: every class is mu_g(iota(x)) for its members (g,x)
    for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nx; ++x)
            if (env.mu[static_cast<std::size_t>(g)][static_cast<std::size_t>(iota_map[static_cast<std::size_t>(x)])] !=
                env.classes.class_of[static_cast<std::size_t>(pair_index(g, x))])
                throw TheoremViolation("G·iota(X) does not exhaust the enveloping space");

    // the action induced on iota(X) is G-equivalent to eta under iota
    {
        PartialAction induced = induce_from_global(global, image);
        std::vector<int> idx = subspace_index_map(image);
        std::vector<int> f(static_cast<std::size_t>(nx));
        for (int x = 0; x < nx; ++x)
            f[static_cast<std::size_t>(x)] = idx[static_cast<std::size_t>(iota_map[static_cast<std::size_t>(x)])];
        ContinuousMap fmap{a.space, induced.space, f};
        if (!is_g_map(fmap, a, induced).is_g_equivalence)
            throw TheoremViolation("the induced action on iota(X) is not G-equivalent to eta");
    }
    return env;
}

T1Report t1_report(const EnvelopingSpace& env) {
    const PartialAction& a = env.source;
    T1Report r;
    r.domain_closed = domain_report(a).is_closed;
    r.all_gx_closed = true;
    for (int x = 0; x < a.space.size(); ++x)
        if (!stabilizer_domain(a, x).is_closed) r.all_gx_closed = false;
    r.xg_t1 = separation(env.carrier()).t1;
    r.x_hausdorff = separation(a.space).hausdorff;

    if (r.domain_closed && !r.all_gx_closed)
        throw TheoremViolation("closed domain must force closed stabilizer domains");
    if (r.all_gx_closed && r.x_hausdorff && !r.xg_t1)
        throw TheoremViolation("closed stabilizers over a Hausdorff space must give a T1 enveloping space");
    return r;
}

HatActionResult hat_action(const PartialAction& a) {
    const FiniteGroup& G = a.group.group;
    const int ng = G.order();
    const int nx = a.space.size();
    FiniteSpace prod = product(a.group.topology, a.space);
    const int n = prod.size();

    // (G x X)_g = G x X_g, eta_hat_g(h,x) = (h g^-1, eta_g(x))
    std::vector<Subset> domain(static_cast<std::size_t>(ng), Subset(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<int>> eta(static_cast<std::size_t>(ng),
                                      std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int x = 0; x < nx; ++x) {
                if (a.domain[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)])
                    domain[static_cast<std::size_t>(g)]
                          [static_cast<std::size_t>(product_index(a.space, h, x))] = 1;
                if (a.defined(g, x))
                    eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(product_index(a.space, h, x))] =
                        product_index(a.space, G.mul(h, G.inv(g)), a.act(g, x));
            }

    HatActionResult r{validate_partial_action(a.group, prod, domain, eta), false};

    // its orbit space is the enveloping space, via the canonical class map
    EnvelopingSpace env = globalize(a);
    OrbitSpace orb = orbit_space(r.eta_hat);
    const int k = orb.quotient.space.size();
    std::vector<int> to_env(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < n; ++i) {
        int oc = orb.quotient.class_of[static_cast<std::size_t>(i)];
        int ec = env.classes.class_of[static_cast<std::size_t>(i)];
        if (to_env[static_cast<std::size_t>(oc)] == -1)
            to_env[static_cast<std::size_t>(oc)] = ec;
        else if (to_env[static_cast<std::size_t>(oc)] != ec)
            throw TheoremViolation("orbit classes of eta_hat do not refine the enveloping classes");
    }
    ContinuousMap canonical{orb.quotient.space, env.carrier(), to_env};
    if (!map_properties(canonical).homeomorphism)
        throw TheoremViolation("the orbit space of eta_hat is not homeomorphic to the enveloping space");
    r.orbit_space_matches = true;
    return r;
}

GlobalComparison compare_with_global(const PartialAction& u, const Subset& open_subset) {
    if (!u.is_global()) throw Error(errc::not_global, "expected a global action");
    const FiniteGroup& G = u.group.group;
    Subset reach = empty_subset(static_cast<std::size_t>(u.space.size()));
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < u.space.size(); ++x)
            if (open_subset[static_cast<std::size_t>(x)])
                reach[static_cast<std::size_t>(u.act(g, x))] = 1;
    if (subset_size(reach) != static_cast<std::size_t>(u.space.size()))
        throw Error(errc::gx_not_all_of_y, "G·X must cover the whole space");

    PartialAction induced = induce_from_global(u, open_subset);
    GlobalComparison r{globalize(induced), {}, false};

    // alpha([g,x]) = u(g,x), with x read back in the big carrier
    auto members = subset_members(open_subset);
    const int k = r.env.carrier().size();
    std::vector<int> alpha(static_cast<std::size_t>(k), -1);
    for (int g = 0; g < G.order(); ++g)
        for (int xs = 0; xs < induced.space.size(); ++xs) {
            int c = r.env.class_of(g, xs);
            int target = u.act(g, members[static_cast<std::size_t>(xs)]);
            if (alpha[static_cast<std::size_t>(c)] == -1)
                alpha[static_cast<std::size_t>(c)] = target;
            else if (alpha[static_cast<std::size_t>(c)] != target)
                throw TheoremViolation("alpha is not well defined");
        }
    r.alpha = ContinuousMap{r.env.carrier(), u.space, alpha};
    if (!map_properties(r.alpha).homeomorphism)
        throw TheoremViolation("alpha is not a homeomorphism");
    if (!is_g_map(r.alpha, r.env.as_global_action(), u).is_g_map)
        throw TheoremViolation("alpha is not a G-map");
    r.verified = true;
    return r;
}

EnvTransferReport property_transfer_env(const PartialAction& a) {
    EnvTransferReport r;
    r.source = property_flags(product(a.group.topology, a.space));
    r.target = property_flags(globalize(a).carrier());
    r.hypotheses_met = domain_report(a).is_closed;
    if (r.hypotheses_met) {
        if (r.source.hausdorff && !r.target.hausdorff) throw TheoremViolation("Hausdorff does not transfer to X_G");
        if (r.source.regular && !r.target.regular) throw TheoremViolation("regularity does not transfer to X_G");
        if (r.source.metrizable && !r.target.metrizable) throw TheoremViolation("metrizability does not transfer to X_G");
        if (r.source.second_countable && !r.target.second_countable) throw TheoremViolation("second countability does not transfer to X_G");
    }
    return r;
}

HausdorffDomainCheck hausdorff_implies_closed_domain_check(const PartialAction& a) {
    HausdorffDomainCheck r;
    r.hypotheses_met = a.space.discrete(); // compact Hausdorff at finite scale
    r.xg_hausdorff = separation(globalize(a).carrier()).hausdorff;
    r.domain_closed = domain_report(a).is_closed;
    if (r.hypotheses_met && r.xg_hausdorff && !r.domain_closed)
        throw TheoremViolation("a Hausdorff enveloping space must force a closed domain");
    return r;
}

} // namespace pact
