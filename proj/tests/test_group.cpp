#include <doctest.h>

#include "pact/group.hpp"

using namespace pact;

namespace {

// S3 as permutations of {0,1,2}: id, (01), (02), (12), (012), (021)
FiniteGroup s3() {
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](int a, int b) {
        std::vector<int> c(3);
        for (int i = 0; i < 3; ++i)
            c[static_cast<std::size_t>(i)] =
                perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                    perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
        for (int k = 0; k < 6; ++k)
            if (perms[static_cast<std::size_t>(k)] == c) return k;
        return -1;
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = compose(a, b);
    return validate_group({"id", "t01", "t02", "t12", "c012", "c021"}, table);
}

} // namespace

TEST_CASE("cyclic groups validate with derived inverses") {
    FiniteGroup z2 = cyclic_group(2);
    CHECK(z2.order() == 2);
    CHECK(z2.identity == 0);
    CHECK(z2.inv(1) == 1);

    FiniteGroup z6 = cyclic_group(6);
    CHECK(z6.inv(4) == 2);
    CHECK(z6.mul(3, 5) == 2);
}

TEST_CASE("a swapped table entry breaks associativity") {
    FiniteGroup z6 = cyclic_group(6);
    auto table = z6.product;
    std::swap(table[2][3], table[2][4]);
    try {
        validate_group(z6.elements, table);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_associative);
        CHECK(std::string(e.what()).find("(") != std::string::npos); // witness triple named
    }
}

TEST_CASE("subgroup generation and normality") {
    FiniteGroup z6 = cyclic_group(6);
    SubgroupResult r = subgroup_and_normality(z6, {2});
    CHECK(r.members == std::vector<int>{0, 2, 4});
    CHECK(r.is_normal);

    FiniteGroup g = s3();
    SubgroupResult t = subgroup_and_normality(g, {1});
    CHECK(t.members.size() == 2);
    CHECK(!t.is_normal);

    SubgroupResult triv = subgroup_and_normality(g, {0});
    CHECK(triv.members == std::vector<int>{0});
    CHECK(triv.is_normal);
}

TEST_CASE("all_subgroups enumerates the lattice") {
    CHECK(all_subgroups(cyclic_group(6)).size() == 4);  // {0},{0,3},{0,2,4},Z6
    CHECK(all_subgroups(s3()).size() == 6);             // 1, three of order 2, A3, S3
    CHECK(all_normal_subgroups(s3()).size() == 3);
}

TEST_CASE("quotient group by a normal subgroup") {
    FiniteGroup z6 = cyclic_group(6);
    QuotientGroupResult q = quotient_group(z6, {0, 3});
    REQUIRE(q.group.order() == 3);
    // isomorphic to Z3: every element cubed is the identity
    for (int g = 0; g < 3; ++g)
        CHECK(q.group.mul(g, q.group.mul(g, g)) == q.group.identity);
    CHECK(kernel(q.projection) == std::vector<int>{0, 3});

    QuotientGroupResult whole = quotient_group(z6, {0, 1, 2, 3, 4, 5});
    CHECK(whole.group.order() == 1);

    QuotientGroupResult triv = quotient_group(z6, {0});
    CHECK(triv.group.order() == 6);
    for (int g = 0; g < 6; ++g) CHECK(triv.projection.apply(g) == g);
}

TEST_CASE("quotient by a non-normal subgroup is rejected") {
    FiniteGroup g = s3();
    try {
        quotient_group(g, {0, 1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_normal);
    }
}

TEST_CASE("kernel of the mod-2 reduction") {
    FiniteGroup z4 = cyclic_group(4);
    FiniteGroup z2 = cyclic_group(2);
    GroupHom f = make_hom(z4, z2, {0, 1, 0, 1});
    CHECK(kernel(f) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(make_hom(z4, z2, {0, 0, 1, 0}), Error);
}

TEST_CASE("topological groups require continuous operations") {
    FiniteGroup z2 = cyclic_group(2);
    TopologicalFiniteGroup d = discrete_group(z2);
    CHECK(d.topology.discrete());

    // Sierpinski topology on Z2: inversion is a homeomorphism but
    // multiplication by the nontrivial element breaks monotonicity
    FiniteSpace sier = space_from_opens({"0", "1"}, {{}, {"1"}, {"0", "1"}});
    CHECK_THROWS_AS(make_topological_group(z2, sier), Error);

    // the indiscrete topology always works
    FiniteSpace indiscrete = space_from_opens({"0", "1"}, {{}, {"0", "1"}});
    TopologicalFiniteGroup t = make_topological_group(z2, indiscrete);
    CHECK(!t.topology.discrete());
}

TEST_CASE("translations are homeomorphisms of the group topology") {
    FiniteGroup z4 = cyclic_group(4);
    TopologicalFiniteGroup g = discrete_group(z4);
    for (int a = 0; a < 4; ++a) {
        std::vector<int> left(4), right(4);
        for (int x = 0; x < 4; ++x) {
            left[static_cast<std::size_t>(x)] = z4.mul(a, x);
            right[static_cast<std::size_t>(x)] = z4.mul(x, a);
        }
        CHECK(map_properties(ContinuousMap{g.topology, g.topology, left}).homeomorphism);
        CHECK(map_properties(ContinuousMap{g.topology, g.topology, right}).homeomorphism);
    }
}

TEST_CASE("quotient topological group carries the quotient topology") {
    TopologicalQuotientGroup q = quotient_topological_group(discrete_group(cyclic_group(6)), {0, 3});
    CHECK(q.group.group.order() == 3);
    CHECK(q.group.topology.discrete());
    CHECK(q.coset_of[3] == q.coset_of[0]);
    CHECK(q.group.group.elements[0] == "{0,3}");
}
