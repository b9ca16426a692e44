#include "pact/metrics.hpp"

#include <charconv>

namespace pact {

Rational parse_rational(const std::string& text) {
    long long num = 0, den = 1;
    auto slash = text.find('/');
    std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
    auto [p1, e1] = std::from_chars(ns.data(), ns.data() + ns.size(), num);
    if (e1 != std::errc{} || p1 != ns.data() + ns.size())
        throw Error(errc::parse_error, "bad rational '" + text + "'");
    if (slash != std::string::npos) {
        std::string ds = text.substr(slash + 1);
        auto [p2, e2] = std::from_chars(ds.data(), ds.data() + ds.size(), den);
        if (e2 != std::errc{} || p2 != ds.data() + ds.size() || den == 0)
            throw Error(errc::parse_error, "bad rational '" + text + "'");
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

FiniteMetric validate_metric(const std::vector<std::string>& points,
                             const std::vector<std::vector<Rational>>& dist) {
    const int n = static_cast<int>(points.size());
    if (dist.size() != static_cast<std::size_t>(n))
        throw Error(errc::bad_metric, "distance matrix must be square over the points");
    for (const auto& row : dist)
        if (row.size() != static_cast<std::size_t>(n))
            throw Error(errc::bad_metric, "distance matrix must be square over the points");
    FiniteMetric m{points, dist};
    for (int x = 0; x < n; ++x) {
        if (m.at(x, x) != Rational(0))
            throw Error(errc::bad_metric, "d(" + points[static_cast<std::size_t>(x)] + ",·) has a nonzero diagonal");
        for (int y = 0; y < n; ++y) {
            if (x != y && m.at(x, y) <= Rational(0))
                throw Error(errc::bad_metric, "distances between distinct points must be positive");
            if (m.at(x, y) != m.at(y, x))
                throw Error(errc::bad_metric, "distance matrix is not symmetric");
            for (int z = 0; z < n; ++z)
                if (m.at(x, z) > m.at(x, y) + m.at(y, z))
                    throw Error(errc::bad_metric,
                                "triangle inequality fails at (" + points[static_cast<std::size_t>(x)] + "," +
                                    points[static_cast<std::size_t>(y)] + "," + points[static_cast<std::size_t>(z)] + ")");
        }
    }
    return m;
}

FiniteMetric unit_metric(const std::vector<std::string>& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) dist[i][i] = Rational(0);
    return FiniteMetric{points, dist};
}

InvarianceReport is_invariant_metric(const PartialAction& a, const FiniteMetric& d) {
    if (d.points != a.space.points)
        throw Error(errc::carrier_mismatch, "metric carrier must equal the action carrier");
    InvarianceReport r;
    r.invariant = true;
    const FiniteGroup& G = a.group.group;
    for (int g = 0; g < G.order(); ++g) {
        const Subset& src = a.domain[static_cast<std::size_t>(G.inv(g))];
        auto mem = subset_members(src);
        for (int x : mem)
            for (int y : mem)
                if (d.at(a.act(g, x), a.act(g, y)) != d.at(x, y)) {
                    r.invariant = false;
                    r.witness = "(" + G.elements[static_cast<std::size_t>(g)] + "," +
                                a.space.points[static_cast<std::size_t>(x)] + "," +
                                a.space.points[static_cast<std::size_t>(y)] + ")";
                    return r;
                }
    }
    return r;
}

InvariantMetricResult invariant_metric_via_globalization(const PartialAction& a,
                                                         const std::optional<FiniteMetric>& seed) {
    InvariantMetricResult r{globalize(a), {}, {}};
    const FiniteSpace& xg = r.env.carrier();
    if (!separation(xg).t1)
        throw Error(errc::not_metrizable, "the enveloping space is not T1");

    FiniteMetric base = seed ? *seed : unit_metric(xg.points);
    if (base.points != xg.points)
        throw Error(errc::carrier_mismatch, "seed metric must live on the enveloping space");
    base = validate_metric(base.points, base.dist);

    const FiniteGroup& G = a.group.group;
    const int k = xg.size();
    const Rational order(G.order());
    std::vector<std::vector<Rational>> avg(static_cast<std::size_t>(k),
                                           std::vector<Rational>(static_cast<std::size_t>(k), Rational(0)));
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            Rational sum(0);
            for (int g = 0; g < G.order(); ++g)
                sum += base.at(r.env.mu[static_cast<std::size_t>(g)][static_cast<std::size_t>(p)],
                               r.env.mu[static_cast<std::size_t>(g)][static_cast<std::size_t>(q)]);
            avg[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = sum / order;
        }
    r.metric_on_env = validate_metric(xg.points, avg);

    // exact mu-invariance, for every group element and every pair
    for (int g = 0; g < G.order(); ++g)
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q)
                if (r.metric_on_env.at(r.env.mu[static_cast<std::size_t>(g)][static_cast<std::size_t>(p)],
                                       r.env.mu[static_cast<std::size_t>(g)][static_cast<std::size_t>(q)]) !=
                    r.metric_on_env.at(p, q))
                    throw TheoremViolation("the averaged metric is not invariant");

    // restriction along iota
    const int nx = a.space.size();
    std::vector<std::vector<Rational>> on_x(static_cast<std::size_t>(nx),
                                            std::vector<Rational>(static_cast<std::size_t>(nx)));
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < nx; ++y)
            on_x[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                r.metric_on_env.at(r.env.iota.apply(x), r.env.iota.apply(y));
    r.metric_on_space = validate_metric(a.space.points, on_x);
    if (!a.space.discrete())
        throw TheoremViolation("a T1 enveloping space must make the carrier discrete");
    if (!is_invariant_metric(a, r.metric_on_space).invariant)
        throw TheoremViolation("the restricted metric is not invariant for the partial action");
    return r;
}

OrbitMetrizability orbit_metrizability_report(const PartialAction& a) {
    Separation s = separation(orbit_space(a).quotient.space);
    OrbitMetrizability r;
    r.orbit_t1 = s.t1;
    r.orbit_regular = s.regular;
    r.orbit_metrizable = s.metrizable;
    r.consistent = r.orbit_metrizable == (r.orbit_regular && r.orbit_t1);
    if (!r.consistent)
        throw TheoremViolation("metrizability of the orbit space must equal regular + T1");
    return r;
}

std::vector<Subset> hyperspace_elements(int n) {
    std::vector<Subset> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Subset s(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s[static_cast<std::size_t>(i)] = 1;
        out.push_back(std::move(s));
    }
    return out;
}

FiniteMetric hausdorff_metric(const FiniteMetric& d) {
    const int n = d.size();
    auto elements = hyperspace_elements(n);
    const int m = static_cast<int>(elements.size());
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (const auto& s : elements) labels.push_back(subset_label(s, d.points));

    auto directed = [&](const Subset& a, const Subset& b) {
        Rational worst(0);
        for (int x : subset_members(a)) {
            Rational best(-1);
            for (int y : subset_members(b)) {
                const Rational& v = d.at(x, y);
                if (best < Rational(0) || v < best) best = v;
            }
            if (best > worst) worst = best;
        }
        return worst;
    };

    std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(m),
                                            std::vector<Rational>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                std::max(directed(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]),
                         directed(elements[static_cast<std::size_t>(j)], elements[static_cast<std::size_t>(i)]));
    return validate_metric(labels, dist);
}

HyperspaceActionResult hyperspace_action(const PartialAction& a, const FiniteMetric& d) {
    if (d.points != a.space.points)
        throw Error(errc::carrier_mismatch, "metric carrier must equal the action carrier");
    const FiniteGroup& G = a.group.group;
    const int n = a.space.size();
    auto elements = hyperspace_elements(n);
    const int m = static_cast<int>(elements.size());

    HyperspaceActionResult r;
    r.dh = hausdorff_metric(d);
    FiniteSpace carrier = discrete_space(r.dh.points);

    // (g,A) acts when A ⊆ X_{g^-1}; the image side is A ⊆ X_g
    std::vector<Subset> domain(static_cast<std::size_t>(G.order()), Subset(static_cast<std::size_t>(m), 0));
    std::vector<std::vector<int>> eta(static_cast<std::size_t>(G.order()),
                                      std::vector<int>(static_cast<std::size_t>(m), -1));
    auto index_of_set = [&](const Subset& s) {
        std::uint64_t mask = 0;
        for (int i = 0; i < n; ++i)
            if (s[static_cast<std::size_t>(i)]) mask |= std::uint64_t{1} << i;
        return static_cast<int>(mask - 1);
    };
    for (int g = 0; g < G.order(); ++g)
        for (int i = 0; i < m; ++i) {
            const Subset& set = elements[static_cast<std::size_t>(i)];
            if (subset_leq(set, a.domain[static_cast<std::size_t>(g)]))
                domain[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)] = 1;
            if (subset_leq(set, a.domain[static_cast<std::size_t>(G.inv(g))])) {
                Subset image(static_cast<std::size_t>(n), 0);
                for (int x : subset_members(set)) image[static_cast<std::size_t>(a.act(g, x))] = 1;
                eta[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)] = index_of_set(image);
            }
        }
    r.action = validate_partial_action(a.group, carrier, domain, eta);

    if (is_invariant_metric(a, d).invariant) {
        if (!is_invariant_metric(r.action, r.dh).invariant)
            throw TheoremViolation("an invariant base metric must make the Hausdorff metric invariant");
        r.invariance_propagated = true;
    }
    return r;
}

} // namespace pact
