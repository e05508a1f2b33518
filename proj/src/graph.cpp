#include "trigon/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace trigon {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw Error("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (has_edge(u, v)) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::find(a.begin(), a.end(), v) != a.end();
}

long long Graph::edge_count() const {
    long long s = 0;
    for (const auto& a : adj) s += static_cast<long long>(a.size());
    return s / 2;
}

int Graph::regular_degree() const {
    if (n == 0) return -1;
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return -1;
    return d;
}

void Graph::sort_adjacency() {
    for (auto& a : adj) std::sort(a.begin(), a.end());
}

Graph incidence_graph(const ProjectivePlane& plane) {
    const int n = plane.n();
    Graph g(2 * n);
    for (int p = 0; p < n; ++p) g.side[p] = 0;
    for (int l = 0; l < n; ++l) g.side[n + l] = 1;
    for (int p = 0; p < n; ++p)
        for (int l : plane.lines_through(p)) g.add_edge(p, n + l);
    g.sort_adjacency();
    return g;
}

namespace {

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> qu;
    dist[src] = 0;
    qu.push(src);
    while (!qu.empty()) {
        int v = qu.front();
        qu.pop();
        for (int w : g.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                qu.push(w);
            }
    }
    return dist;
}

// Shortest cycle through root found by BFS; fills `cycle` with a simple
// cycle when one shorter than `best` exists. Scanning every root gives the
// exact girth.
void shortest_cycle_from(const Graph& g, int root, int& best, std::vector<int>& cycle) {
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::queue<int> qu;
    dist[root] = 0;
    qu.push(root);
    while (!qu.empty()) {
        int v = qu.front();
        qu.pop();
        if (2 * dist[v] >= best) return; // deeper levels cannot improve
        for (int w : g.adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                qu.push(w);
            } else if (w != parent[v] && parent[w] != v) {
                // Non-tree edge: walk both endpoints up to their meeting
                // point to obtain a simple cycle.
                std::vector<int> pv, pw;
                int a = v, b = w;
                while (dist[a] > dist[b]) {
                    pv.push_back(a);
                    a = parent[a];
                }
                while (dist[b] > dist[a]) {
                    pw.push_back(b);
                    b = parent[b];
                }
                while (a != b) {
                    pv.push_back(a);
                    pw.push_back(b);
                    a = parent[a];
                    b = parent[b];
                }
                pv.push_back(a);
                int len = static_cast<int>(pv.size() + pw.size());
                if (len >= 3 && len < best) {
                    best = len;
                    cycle = pv;
                    cycle.insert(cycle.end(), pw.rbegin(), pw.rend());
                }
            }
        }
    }
}

} // namespace

MgonCertificate certify_mgon(const Graph& g, int m) {
    MgonCertificate cert;
    cert.m = m;
    cert.regular_degree = g.regular_degree();
    if (g.n == 0) {
        cert.detail = "empty graph";
        return cert;
    }

    auto d0 = bfs_dist(g, 0);
    for (int v = 0; v < g.n; ++v)
        if (d0[v] < 0) {
            cert.connected = false;
            cert.distant_pair = {0, v};
            cert.detail = "disconnected: vertex " + std::to_string(v) +
                          " unreachable from vertex 0";
            return cert;
        }
    cert.connected = true;

    int diameter = 0;
    std::array<int, 2> far{0, 0};
    for (int v = 0; v < g.n; ++v) {
        auto d = bfs_dist(g, v);
        for (int w = 0; w < g.n; ++w)
            if (d[w] > diameter) {
                diameter = d[w];
                far = {v, w};
            }
    }
    cert.diameter = diameter;

    int best = g.n + 1;
    std::vector<int> cycle;
    for (int v = 0; v < g.n; ++v) shortest_cycle_from(g, v, best, cycle);
    cert.girth = (best <= g.n) ? best : -1;

    cert.pass = (cert.diameter == m) && (cert.girth == 2 * m);
    if (!cert.pass) {
        if (cert.diameter != m) cert.distant_pair = far;
        if (cert.girth >= 0 && cert.girth < 2 * m) cert.short_cycle = cycle;
        cert.detail = "diameter " + std::to_string(cert.diameter) + " (want " +
                      std::to_string(m) + "), girth " + std::to_string(cert.girth) +
                      " (want " + std::to_string(2 * m) + ")";
    } else {
        cert.detail = "generalized " + std::to_string(m) + "-gon";
    }
    return cert;
}

namespace {

// Iterated neighborhood refinement: vertices get integer colors, stabilized
// under the multiset of neighbor colors.
std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(g.n, 0);
    for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < g.n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_ids;
        std::vector<int> next(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> sig;
            sig.reserve(g.adj[v].size());
            for (int w : g.adj[v]) sig.push_back(color[w]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(color[v], std::move(sig));
            auto it = next_ids.find(key);
            if (it == next_ids.end())
                it = next_ids.emplace(std::move(key), static_cast<int>(next_ids.size())).first;
            next[v] = it->second;
        }
        bool changed = (next != color);
        color = std::move(next);
        if (!changed) break;
    }
    return color;
}

struct IsoSearcher {
    const Graph& g1;
    const Graph& g2;
    std::vector<int> c1, c2;
    std::vector<int> order;    // g1 vertices, BFS-ish
    std::vector<int> mapping;  // g1 -> g2 or -1
    std::vector<char> used;    // g2 vertices already taken

    IsoSearcher(const Graph& a, const Graph& b) : g1(a), g2(b) {
        c1 = refine_colors(g1);
        c2 = refine_colors(g2);
        mapping.assign(g1.n, -1);
        used.assign(g2.n, 0);
        // Visit vertices so that each one (after the first of a component)
        // has an already-visited neighbor; anchors candidates quickly.
        std::vector<char> seen(g1.n, 0);
        for (int s = 0; s < g1.n; ++s) {
            if (seen[s]) continue;
            std::queue<int> qu;
            qu.push(s);
            seen[s] = 1;
            while (!qu.empty()) {
                int v = qu.front();
                qu.pop();
                order.push_back(v);
                for (int w : g1.adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        qu.push(w);
                    }
            }
        }
    }

    bool feasible(int v, int w) const {
        if (c1[v] != c2[w]) return false;
        if (g1.degree(v) != g2.degree(w)) return false;
        // All previously mapped neighbors/non-neighbors must agree.
        for (int u : g1.adj[v]) {
            int mu = mapping[u];
            if (mu >= 0 && !g2.has_edge(w, mu)) return false;
        }
        int mapped_nbrs_v = 0;
        for (int u : g1.adj[v])
            if (mapping[u] >= 0) ++mapped_nbrs_v;
        int mapped_nbrs_w = 0;
        for (int u : g2.adj[w])
            if (used[u]) ++mapped_nbrs_w;
        return mapped_nbrs_v == mapped_nbrs_w;
    }

    bool rec(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < g2.n; ++w) {
            if (used[w] || !feasible(v, w)) continue;
            mapping[v] = w;
            used[w] = 1;
            if (rec(depth + 1)) return true;
            mapping[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

std::vector<int> color_histogram(const std::vector<int>& colors) {
    std::vector<int> h;
    for (int c : colors) {
        if (c >= static_cast<int>(h.size())) h.resize(c + 1, 0);
        ++h[c];
    }
    std::sort(h.begin(), h.end());
    return h;
}

} // namespace

IsoResult graphs_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n > 200 || g2.n > 200)
        throw TooLarge("isomorphism search capped at 200 vertices");
    IsoResult res;
    if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return res;
    IsoSearcher s(g1, g2);
    if (color_histogram(s.c1) != color_histogram(s.c2)) return res;
    if (s.rec(0)) {
        res.isomorphic = true;
        res.mapping = s.mapping;
    }
    return res;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping) {
    if (g1.n != g2.n || static_cast<int>(mapping.size()) != g1.n) return false;
    std::vector<char> hit(g2.n, 0);
    for (int v = 0; v < g1.n; ++v) {
        int w = mapping[v];
        if (w < 0 || w >= g2.n || hit[w]) return false;
        hit[w] = 1;
    }
    if (g1.edge_count() != g2.edge_count()) return false;
    for (int v = 0; v < g1.n; ++v)
        for (int u : g1.adj[v])
            if (!g2.has_edge(mapping[v], mapping[u])) return false;
    return true;
}

} // namespace trigon
