#include <doctest.h>

#include "g31/independence.hpp"

using namespace g31;

TEST_CASE("is_independent basics") {
    Graph g(6);
    CHECK(is_independent(g, VertexSubset::from_triples(
                                6, {{{1, 2, 3}}, {{1, 2, 4}}, {{1, 2, 5}}})));
    CHECK_FALSE(is_independent(g, VertexSubset::from_triples(
                                      6, {{{1, 2, 3}}, {{3, 4, 5}}})));
    CHECK(is_independent(g, VertexSubset(6)));
}

TEST_CASE("alpha at n=5 is 4 (Petersen graph)") {
    Graph g(5);
    CHECK(brute_force_alpha(g) == 4);
    AlphaResult a = independence_number(g);
    CHECK(a.alpha == 4);
    CHECK(a.proven);
    CHECK(a.witness.size() == 4);
    CHECK(is_independent(g, a.witness));
}

TEST_CASE("branch-and-bound alpha matches the exhaustive oracle for n <= 7") {
    for (int n = 5; n <= 7; ++n) {
        Graph g(n);
        AlphaResult a = independence_number(g);
        REQUIRE(a.proven);
        REQUIRE(a.alpha == brute_force_alpha(g));
        REQUIRE(is_independent(g, a.witness));
        REQUIRE(a.witness.size() == a.alpha);
    }
}

TEST_CASE("alpha is monotone in n") {
    std::int64_t prev = 0;
    for (int n = 5; n <= 9; ++n) {
        AlphaResult a = independence_number(Graph(n));
        REQUIRE(a.proven);
        CHECK(a.alpha >= prev);
        prev = a.alpha;
    }
}

TEST_CASE("budget exhaustion reports proven=false") {
    AlphaResult a = independence_number(Graph(8), 3);
    CHECK_FALSE(a.proven);
}

TEST_CASE("generate_family produces the maximal families") {
    Graph g6(6);
    VertexSubset t1 = generate_family({FamilyKind::type1, {1, 2}}, 6);
    CHECK(t1.size() == 4);
    CHECK(t1 == VertexSubset::from_triples(
                    6, {{{1, 2, 3}}, {{1, 2, 4}}, {{1, 2, 5}}, {{1, 2, 6}}}));

    VertexSubset t2 = generate_family({FamilyKind::type2, {1, 2, 3, 4}}, 6);
    CHECK(t2.size() == 4);
    for (const Triple& a : t2.triples())
        for (const Triple& b : t2.triples())
            if (a != b)
                CHECK(intersection_size(a, b) == 2);

    VertexSubset t3 = generate_family({FamilyKind::type3, {}}, 9);
    CHECK(t3.size() == 3);
    CHECK(t3 == VertexSubset::from_triples(9, {{{1, 2, 3}}, {{4, 5, 6}}, {{7, 8, 9}}}));

    CHECK_THROWS_AS(generate_family({FamilyKind::type1, {1, 7}}, 6),
                    std::invalid_argument);
}

TEST_CASE("every generated family is independent") {
    Graph g(9);
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j)
            CHECK(is_independent(g, generate_family({FamilyKind::type1, {i, j}}, 9)));
    CHECK(is_independent(g, generate_family({FamilyKind::type2, {2, 3, 5, 8}}, 9)));
    CHECK(is_independent(g, generate_family({FamilyKind::type3, {}}, 9)));
}

TEST_CASE("decompose_claim1 on simple shapes") {
    Graph g(6);
    VertexSubset shared_pair = VertexSubset::from_triples(
        6, {{{1, 2, 3}}, {{1, 2, 4}}, {{1, 2, 5}}});
    Decomposition d1 = decompose_claim1(g, shared_pair);
    REQUIRE(d1.ok);
    REQUIRE(d1.parts.size() == 1);
    CHECK(d1.parts[0].type.kind == FamilyKind::type1);
    CHECK(d1.parts[0].type.params == std::vector<int>{1, 2});

    VertexSubset disjoint = VertexSubset::from_triples(6, {{{1, 2, 3}}, {{4, 5, 6}}});
    Decomposition d3 = decompose_claim1(g, disjoint);
    REQUIRE(d3.ok);
    REQUIRE(d3.parts.size() == 1);
    CHECK(d3.parts[0].type.kind == FamilyKind::type3);

    VertexSubset in_4set = VertexSubset::from_triples(6, {{{1, 2, 3}}, {{1, 2, 4}}});
    Decomposition d2 = decompose_claim1(g, in_4set);
    REQUIRE(d2.ok);
    REQUIRE(d2.parts.size() == 1);
    CHECK(d2.parts[0].type.kind == FamilyKind::type2);

    Decomposition bad = decompose_claim1(
        g, VertexSubset::from_triples(6, {{{1, 2, 3}}, {{3, 4, 5}}}));
    CHECK_FALSE(bad.ok);
}

TEST_CASE("every independent set of G(6,3,1) decomposes") {
    Graph g(6);
    std::vector<VertexSubset> sets = all_independent_sets(g);
    CHECK(sets.size() > 20);  // at least the singletons and the empty set
    for (const VertexSubset& u : sets) {
        Decomposition d = decompose_claim1(g, u);
        REQUIRE_MESSAGE(d.ok, d.failure);
        std::string why;
        REQUIRE_MESSAGE(validate_decomposition(u, d, &why), why);
    }
}
