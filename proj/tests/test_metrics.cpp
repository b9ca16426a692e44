#include <doctest.h>

#include "pact/fixtures.hpp"

using namespace pact;

namespace {

FiniteMetric abs_metric(const std::vector<long long>& values, const std::vector<std::string>& labels) {
    const std::size_t n = values.size();
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dist[i][j] = Rational(values[i] > values[j] ? values[i] - values[j] : values[j] - values[i]);
    return validate_metric(labels, dist);
}

// the classical formulation: the least epsilon in the distance-value set
// with A within epsilon of B and B within epsilon of A
Rational dh_by_epsilon(const FiniteMetric& d, const Subset& a, const Subset& b) {
    std::vector<Rational> values;
    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y) values.push_back(d.at(x, y));
    std::sort(values.begin(), values.end());
    auto within = [&](const Subset& from, const Subset& to, const Rational& eps) {
        for (int x : subset_members(from)) {
            bool near = false;
            for (int y : subset_members(to))
                if (d.at(x, y) <= eps) near = true;
            if (!near) return false;
        }
        return true;
    };
    for (const Rational& eps : values)
        if (within(a, b, eps) && within(b, a, eps)) return eps;
    return values.back();
}

} // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(format_rational(Rational(7, 2)) == "7/2");
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

TEST_CASE("metric validation catches each axiom failure") {
    std::vector<std::string> pts = {"x", "y"};
    CHECK_NOTHROW(validate_metric(pts, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}));

    try {
        validate_metric(pts, {{Rational(0), Rational(1)}, {Rational(2), Rational(0)}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::bad_metric);
    }
    CHECK_THROWS_AS(validate_metric(pts, {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}), Error);
    CHECK_THROWS_AS(validate_metric(pts, {{Rational(1), Rational(1)}, {Rational(1), Rational(0)}}), Error);
    // triangle: d(x,z)=5 > 1+1
    CHECK_THROWS_AS(validate_metric({"x", "y", "z"},
                                    {{Rational(0), Rational(1), Rational(5)},
                                     {Rational(1), Rational(0), Rational(1)},
                                     {Rational(5), Rational(1), Rational(0)}}),
                    Error);
}

TEST_CASE("invariance of the absolute-value metric for neg-z3") {
    Fixture fx = load_fixture("neg-z3");
    REQUIRE(fx.metric.has_value());
    CHECK(is_invariant_metric(fx.action, *fx.metric).invariant);

    // perturb one paired distance on one side only
    FiniteMetric bad = *fx.metric;
    bad.dist[0][1] = Rational(3, 2); // d(-2,-1), while d(1,2) stays 1
    bad.dist[1][0] = Rational(3, 2);
    bad = validate_metric(bad.points, bad.dist);
    InvarianceReport r = is_invariant_metric(fx.action, bad);
    CHECK(!r.invariant);
    CHECK(!r.witness.empty());
}

TEST_CASE("a trivial action leaves every metric invariant") {
    FiniteSpace d = discrete_space({"x", "y"});
    TopologicalFiniteGroup z2 = discrete_group(cyclic_group(2));
    std::vector<Subset> domain = {full_subset(2), empty_subset(2)};
    std::vector<std::vector<int>> eta = {{0, 1}, {-1, -1}};
    PartialAction a = validate_partial_action(z2, d, domain, eta);
    CHECK(is_invariant_metric(a, abs_metric({0, 7}, {"x", "y"})).invariant);
}

TEST_CASE("metric on the wrong carrier is rejected") {
    PartialAction a = load_fixture("neg-z3").action;
    try {
        is_invariant_metric(a, abs_metric({0, 1}, {"x", "y"}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::carrier_mismatch);
    }
}

TEST_CASE("averaging over the globalization yields an exactly invariant metric") {
    PartialAction a = load_fixture("neg-z3").action;
    InvariantMetricResult r = invariant_metric_via_globalization(a);
    const FiniteGroup& g = a.group.group;
    for (int e = 0; e < g.order(); ++e)
        for (int p = 0; p < r.metric_on_env.size(); ++p)
            for (int q = 0; q < r.metric_on_env.size(); ++q)
                CHECK(r.metric_on_env.at(r.env.mu[static_cast<std::size_t>(e)][static_cast<std::size_t>(p)],
                                         r.env.mu[static_cast<std::size_t>(e)][static_cast<std::size_t>(q)]) ==
                      r.metric_on_env.at(p, q));
    CHECK(is_invariant_metric(a, r.metric_on_space).invariant);
}

TEST_CASE("an invariant seed is a fixed point of the averaging") {
    PartialAction u = load_fixture("metric-hyper").action;
    EnvelopingSpace env = globalize(u);
    // the envelope of a global action is a copy of X; transport the metric
    FiniteMetric seed = unit_metric(env.carrier().points);
    seed.dist[0][1] = seed.dist[1][0] = Rational(2);
    seed = validate_metric(seed.points, seed.dist);
    InvariantMetricResult r = invariant_metric_via_globalization(u, seed);
    CHECK(r.metric_on_env.dist == seed.dist);
}

TEST_CASE("a non-T1 envelope admits no compatible metric") {
    try {
        invariant_metric_via_globalization(load_fixture("sierpinski-z2").action);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_metrizable);
    }
}

TEST_CASE("orbit metrizability reports") {
    OrbitMetrizability sier = orbit_metrizability_report(load_fixture("sierpinski-z2").action);
    CHECK(!sier.orbit_t1);
    CHECK(!sier.orbit_metrizable);
    CHECK(sier.consistent);

    OrbitMetrizability f = orbit_metrizability_report(load_fixture("cyclic-f").action);
    CHECK(f.orbit_t1);
    CHECK(f.orbit_regular);
    CHECK(f.orbit_metrizable);
}

TEST_CASE("Hausdorff distance by max-min") {
    FiniteMetric d = abs_metric({0, 1, 3}, {"0", "1", "3"});
    FiniteMetric dh = hausdorff_metric(d);
    REQUIRE(dh.size() == 7);

    auto index_of = [&](const std::string& label) {
        for (int i = 0; i < dh.size(); ++i)
            if (dh.points[static_cast<std::size_t>(i)] == label) return i;
        return -1;
    };
    CHECK(dh.at(index_of("{0,1}"), index_of("{0,3}")) == Rational(2));
    for (int i = 0; i < dh.size(); ++i) CHECK(dh.at(i, i) == Rational(0));
    CHECK(dh.at(index_of("{0}"), index_of("{3}")) == d.at(0, 2));
    CHECK(dh.at(index_of("{1}"), index_of("{3}")) == d.at(1, 2));
}

TEST_CASE("max-min agrees with the epsilon formulation") {
    std::vector<FiniteMetric> metrics = {
        abs_metric({0, 1, 3}, {"0", "1", "3"}),
        abs_metric({0, 2, 5, 9}, {"a", "b", "c", "d"}),
        *load_fixture("neg-z3").metric,
        *load_fixture("metric-hyper").metric,
    };
    for (const auto& d : metrics) {
        FiniteMetric dh = hausdorff_metric(d);
        auto elements = hyperspace_elements(d.size());
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (std::size_t j = 0; j < elements.size(); ++j)
                CHECK(dh.at(static_cast<int>(i), static_cast<int>(j)) ==
                      dh_by_epsilon(d, elements[i], elements[j]));
    }
}

TEST_CASE("the hyperspace action of the swap") {
    Fixture fx = load_fixture("metric-hyper");
    HyperspaceActionResult r = hyperspace_action(fx.action, *fx.metric);
    REQUIRE(r.dh.size() == 3);
    CHECK(r.action.is_global());
    CHECK(r.invariance_propagated);
    // the swap exchanges the singletons and fixes {-1,1}
    CHECK(r.action.act(1, 0) == 1);
    CHECK(r.action.act(1, 2) == 2);
}

TEST_CASE("invariance propagates to the hyperspace for neg-z3") {
    Fixture fx = load_fixture("neg-z3");
    HyperspaceActionResult r = hyperspace_action(fx.action, *fx.metric);
    CHECK(r.invariance_propagated);
    CHECK(is_invariant_metric(r.action, r.dh).invariant);
    // the domain of g collects exactly the subsets inside X_g
    const PartialAction& a = fx.action;
    auto elements = hyperspace_elements(a.space.size());
    for (int g = 0; g < a.group.group.order(); ++g)
        for (std::size_t i = 0; i < elements.size(); ++i)
            CHECK(static_cast<bool>(r.action.domain[static_cast<std::size_t>(g)][i]) ==
                  subset_leq(elements[i], a.domain[static_cast<std::size_t>(g)]));
}
