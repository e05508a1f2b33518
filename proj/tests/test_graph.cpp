#include "doctest.h"

#include "trigon/errors.hpp"
#include "trigon/field.hpp"
#include "trigon/graph.hpp"
#include "trigon/plane.hpp"

using namespace trigon;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i) g.side[i] = 0;
    for (int j = 0; j < b; ++j) g.side[a + j] = 1;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

} // namespace

TEST_CASE("a 6-cycle is a generalized 3-gon") {
    auto cert = certify_mgon(cycle(6), 3);
    CHECK(cert.pass);
    CHECK(cert.diameter == 3);
    CHECK(cert.girth == 6);
    CHECK(cert.regular_degree == 2);
}

TEST_CASE("K_{3,3} fails the 3-gon girth requirement") {
    auto cert = certify_mgon(complete_bipartite(3, 3), 3);
    CHECK_FALSE(cert.pass);
    CHECK(cert.girth == 4);
    CHECK(cert.diameter == 2);
    CHECK(cert.short_cycle.size() == 4);
}

TEST_CASE("disconnected graphs fail with a witness pair") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    auto cert = certify_mgon(g, 3);
    CHECK_FALSE(cert.pass);
    CHECK_FALSE(cert.connected);
    CHECK(cert.distant_pair[0] != cert.distant_pair[1]);
}

TEST_CASE("incidence graph of PG(2,q) is a generalized 3-gon") {
    for (int q : {2, 3, 4}) {
        CAPTURE(q);
        Field f(q);
        auto pl = ProjectivePlane::build(f);
        Graph g = incidence_graph(pl);
        CHECK(g.n == 2 * pl.n());
        CHECK(g.edge_count() == static_cast<long long>(pl.n()) * (q + 1));
        auto cert = certify_mgon(g, 3);
        CHECK(cert.pass);
        CHECK(cert.regular_degree == q + 1);
    }
}

TEST_CASE("even cycles certify as m-gons of half their length") {
    CHECK(certify_mgon(cycle(8), 4).pass);
    CHECK_FALSE(certify_mgon(cycle(8), 3).pass);
    CHECK(certify_mgon(cycle(12), 6).pass);
}

TEST_CASE("isomorphism search finds a relabeling and validates it") {
    Graph a = cycle(6);
    Graph b(6);
    // same cycle with scrambled labels 0->2->4->1->3->5->0
    int order[6] = {2, 4, 1, 3, 5, 0};
    for (int i = 0; i < 6; ++i) b.add_edge(order[i], order[(i + 1) % 6]);
    auto res = graphs_isomorphic(a, b);
    CHECK(res.isomorphic);
    CHECK(is_isomorphism(a, b, res.mapping));
}

TEST_CASE("non-isomorphic graphs with equal degree sequences are separated") {
    // two 3-regular graphs on 6 vertices: K_{3,3} vs the prism (C3 x K2)
    Graph prism(6);
    prism.add_edge(0, 1);
    prism.add_edge(1, 2);
    prism.add_edge(2, 0);
    prism.add_edge(3, 4);
    prism.add_edge(4, 5);
    prism.add_edge(5, 3);
    prism.add_edge(0, 3);
    prism.add_edge(1, 4);
    prism.add_edge(2, 5);
    auto res = graphs_isomorphic(prism, complete_bipartite(3, 3));
    CHECK_FALSE(res.isomorphic);
}

TEST_CASE("plane incidence graphs of different orders are not isomorphic") {
    Field f2(2), f3(3);
    Graph a = incidence_graph(ProjectivePlane::build(f2));
    Graph b = incidence_graph(ProjectivePlane::build(f3));
    CHECK_FALSE(graphs_isomorphic(a, b).isomorphic);
}

TEST_CASE("isomorphism search is capped at 200 vertices") {
    Graph big(201);
    CHECK_THROWS_AS(graphs_isomorphic(big, big), TooLarge);
}

TEST_CASE("is_isomorphism rejects wrong mappings") {
    Graph a = cycle(6);
    std::vector<int> ident{0, 1, 2, 3, 4, 5};
    CHECK(is_isomorphism(a, a, ident));
    std::vector<int> swapped{1, 0, 2, 3, 4, 5}; // breaks adjacency with 2
    CHECK_FALSE(is_isomorphism(a, a, swapped));
    std::vector<int> not_bijective{0, 0, 2, 3, 4, 5};
    CHECK_FALSE(is_isomorphism(a, a, not_bijective));
}

TEST_CASE("add_edge validates endpoints and deduplicates") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
}
