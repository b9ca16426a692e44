#include <doctest.h>

#include "pact/fixtures.hpp"
#include "random_actions.hpp"

using namespace pact;

TEST_CASE("cyclic-f modulo the even subgroup") {
    PartialAction a = load_fixture("cyclic-f").action;
    QuotientActionBundle b = build_quotient_action(a, {0, 2, 4});

    REQUIRE(b.quotient_grp.group.group.order() == 2);
    REQUIRE(b.z.quotient.space.size() == 2);
    CHECK(b.z.quotient.space.points == std::vector<std::string>{"{0,1,2}", "{3}"});

    // the nontrivial coset is defined exactly on the U-class and fixes it
    int coset = 1, u_class = 0;
    CHECK(b.eta_mod.domain[1] == subset_of(2, {0}));
    CHECK(b.eta_mod.defined(coset, u_class));
    CHECK(b.eta_mod.act(coset, u_class) == u_class);
    CHECK(!b.eta_mod.defined(coset, 1));
}

TEST_CASE("quotient by the whole group acts trivially on the orbit space") {
    PartialAction a = load_fixture("neg-z3").action;
    QuotientActionBundle b = build_quotient_action(a, {0, 1, 2});
    CHECK(b.quotient_grp.group.group.order() == 1);
    CHECK(b.z.quotient.space.size() == 2); // {-1,1} and {-2,2}
    CHECK(b.eta_mod.is_global());
}

TEST_CASE("quotient by the trivial subgroup reproduces the action") {
    PartialAction a = load_fixture("cyclic-f").action;
    QuotientActionBundle b = build_quotient_action(a, {0});
    REQUIRE(b.z.quotient.space.size() == a.space.size());
    std::vector<int> mapping;
    for (int x = 0; x < a.space.size(); ++x)
        mapping.push_back(b.z.quotient.class_of[static_cast<std::size_t>(x)]);
    GMapReport r = is_g_map(ContinuousMap{a.space, b.z.quotient.space, mapping}, a, b.eta_pullback);
    CHECK(r.is_g_equivalence);
}

TEST_CASE("the pullback action is the coset action read through the projection") {
    PartialAction a = load_fixture("cyclic-f").action;
    QuotientActionBundle b = build_quotient_action(a, {0, 3});
    const FiniteGroup& g = a.group.group;
    for (int e = 0; e < g.order(); ++e) {
        int coset = b.quotient_grp.coset_of[static_cast<std::size_t>(e)];
        CHECK(b.eta_pullback.domain[static_cast<std::size_t>(e)] ==
              b.eta_mod.domain[static_cast<std::size_t>(coset)]);
        for (int z = 0; z < b.z.quotient.space.size(); ++z)
            if (b.eta_pullback.defined(e, z))
                CHECK(b.eta_pullback.act(e, z) == b.eta_mod.act(coset, z));
    }
}

TEST_CASE("phi embeds the orbit space openly into X_G mod H") {
    for (const auto& name : embedded_fixture_names()) {
        CAPTURE(name);
        PartialAction a = load_fixture(name).action;
        for (const auto& h : all_normal_subgroups(a.group.group)) {
            QuotientActionBundle b = build_quotient_action(a, h);
            MapProperties p = map_properties(b.phi);
            CHECK(p.injective);
            CHECK(p.continuous);
            Subset image = b.phi.image(full_subset(static_cast<std::size_t>(b.phi.dom.size())));
            CHECK(b.xg_mod_h.space.is_open(image));
        }
    }
}

TEST_CASE("psi identifies the two-step and one-step orbit spaces") {
    PartialAction f = load_fixture("cyclic-f").action;
    PsiVerification even = psi_homeomorphism(build_quotient_action(f, {0, 2, 4}));
    CHECK(even.verified);
    CHECK(even.psi.cod.size() == 2);
    CHECK(even.psi.cod.discrete());

    PartialAction neg = load_fixture("neg-z3").action;
    PsiVerification whole = psi_homeomorphism(build_quotient_action(neg, {0, 1, 2}));
    CHECK(whole.verified);
    CHECK(whole.psi.dom.size() == 2);

    PsiVerification triv = psi_homeomorphism(build_quotient_action(f, {0}));
    CHECK(triv.verified);
}

TEST_CASE("the globalization of the quotient action matches X_G mod H") {
    for (const auto& name : {"cyclic-f", "clopen-z2", "chain-z4"}) {
        CAPTURE(name);
        PartialAction a = load_fixture(name).action;
        for (const auto& h : all_normal_subgroups(a.group.group)) {
            QuotientGlobalizationVerification v = globalization_of_quotient(build_quotient_action(a, h));
            CHECK(v.verified);
        }
    }
}

TEST_CASE("bonding maps factor the finer projection") {
    PartialAction a = load_fixture("cyclic-f").action;

    BondingMapResult same = bonding_map(a, {0, 3}, {0, 3});
    for (int z = 0; z < same.map.dom.size(); ++z) CHECK(same.map.apply(z) == z);

    BondingMapResult coarse = bonding_map(a, {0, 3}, {0, 1, 2, 3, 4, 5});
    CHECK(coarse.map.dom.size() == 4);
    CHECK(coarse.map.cod.size() == 2);
    CHECK(coarse.g_map_verified);

    // pi_{H2} = bond . pi_{H1} pointwise
    QuotientActionBundle b1 = build_quotient_action(a, {0, 3});
    QuotientActionBundle b2 = build_quotient_action(a, {0, 1, 2, 3, 4, 5});
    for (int x = 0; x < a.space.size(); ++x)
        CHECK(coarse.map.apply(b1.z.quotient.class_of[static_cast<std::size_t>(x)]) ==
              b2.z.quotient.class_of[static_cast<std::size_t>(x)]);
}

TEST_CASE("bonding maps compose along chains") {
    PartialAction a = load_fixture("cyclic-f").action;
    std::vector<int> h1 = {0}, h2 = {0, 3}, h3 = {0, 1, 2, 3, 4, 5};
    ContinuousMap m12 = bonding_map(a, h1, h2).map;
    ContinuousMap m23 = bonding_map(a, h2, h3).map;
    ContinuousMap m13 = bonding_map(a, h1, h3).map;
    for (int z = 0; z < m12.dom.size(); ++z) CHECK(m23.apply(m12.apply(z)) == m13.apply(z));
}

TEST_CASE("non-nested subgroups are rejected") {
    PartialAction a = load_fixture("cyclic-f").action;
    try {
        bonding_map(a, {0, 2, 4}, {0, 3});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_nested);
    }
}

TEST_CASE("closed-domain corollary across fixtures") {
    ClosedDomainCorollary good = closed_domain_corollary_check(
        build_quotient_action(load_fixture("cyclic-f").action, {0, 3}));
    CHECK(good.hypotheses_met);
    CHECK(good.domain_closed);

    ClosedDomainCorollary neg = closed_domain_corollary_check(
        build_quotient_action(load_fixture("neg-z3").action, {0, 1, 2}));
    CHECK(neg.hypotheses_met);
    CHECK(neg.domain_closed);

    ClosedDomainCorollary sier = closed_domain_corollary_check(
        build_quotient_action(load_fixture("sierpinski-z2").action, {0, 1}));
    CHECK(!sier.hypotheses_met);
}

TEST_CASE("route agreement on random instances") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        PartialAction a = pact_test::random_partial_action(rng, 6, 4);
        auto subgroups = all_normal_subgroups(a.group.group);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(subgroups.size()) - 1);
        const auto& h = subgroups[static_cast<std::size_t>(pick(rng))];
        // build_quotient_action throws on any Route A / Route B disagreement
        QuotientActionBundle b = build_quotient_action(a, h);
        CHECK(psi_homeomorphism(b).verified);
    }
}
