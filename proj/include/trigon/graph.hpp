#pragma once

#include <array>
#include <string>
#include <vector>

#include "trigon/errors.hpp"
#include "trigon/plane.hpp"

namespace trigon {

// Simple undirected graph. `side` carries an optional bipartition class per
// vertex (0/1, or -1 when unknown); construction helpers fill it in.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> side;

    explicit Graph(int vertices = 0) : n(vertices), adj(vertices), side(vertices, -1) {}
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    long long edge_count() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    // -1 when degrees differ across vertices.
    int regular_degree() const;
    void sort_adjacency();
};

// Bipartite incidence graph: vertices 0..n-1 are the points (side 0),
// n..2n-1 the lines (side 1).
Graph incidence_graph(const ProjectivePlane& plane);

struct MgonCertificate {
    int m = 0;
    bool pass = false;
    bool connected = false;
    int diameter = -1; // -1 when disconnected
    int girth = -1;    // -1 when acyclic
    int regular_degree = -1;
    std::vector<int> short_cycle;           // witness when girth < 2m
    std::array<int, 2> distant_pair{-1, -1}; // witness when diameter > m or disconnected
    std::string detail;
};

// Generalized m-gon test per the definition: connected, diameter m, and
// girth 2m (injectivity radius m). Failures carry witnesses, never throw.
MgonCertificate certify_mgon(const Graph& g, int m);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping; // vertex of g1 -> vertex of g2
};

// Backtracking isomorphism search with iterated degree-refinement colors.
// Guarded to graphs of at most 200 vertices (throws TooLarge).
IsoResult graphs_isomorphic(const Graph& g1, const Graph& g2);

// Checks that `mapping` is a bijection g1 -> g2 preserving adjacency exactly.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping);

} // namespace trigon
