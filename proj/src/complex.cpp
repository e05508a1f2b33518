#include "trigon/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "trigon/errors.hpp"

namespace trigon {

namespace {

std::array<int, 3> rotate(const std::array<int, 3>& t, int r) {
    return {t[(0 + r) % 3], t[(1 + r) % 3], t[(2 + r) % 3]};
}

std::array<int, 3> canonical_rotation(const std::array<int, 3>& t) {
    std::array<int, 3> best = t;
    for (int r = 1; r < 3; ++r) best = std::min(best, rotate(t, r));
    return best;
}

}  // namespace

Polyhedron::Polyhedron(Presentation pres) : pres_(std::move(pres)) {
    std::set<std::array<int, 3>> reps;
    for (const auto& t : pres_.tuples) reps.insert(canonical_rotation(t));
    faces_.assign(reps.begin(), reps.end());
}

Polyhedron build_polyhedron(const Presentation& pres) {
    PolygonalAxiomReport rep = verify_polygonal_axioms(pres);
    if (!rep.pass()) {
        std::string what = "polygonal axioms fail";
        if (!rep.witnesses.empty()) what += ": " + rep.witnesses.front();
        throw InvalidPresentation(what);
    }
    return Polyhedron(pres);
}

Graph link(const Polyhedron& poly, int u) {
    if (u < 1 || u > 3) throw MalformedInput("link vertex must be 1, 2, or 3");
    const Presentation& pres = poly.presentation();
    const int n = pres.n();
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) g.side[i] = 0;
    for (int i = 0; i < n; ++i) g.side[n + i] = 1;
    // A face (a1, a2, a3) with tag(a_t) = t passes through vertex u between
    // the incoming germ of a_{u-1} (indices mod 3) and the outgoing germ of
    // a_u.
    const int out_pos = u - 1;
    const int in_pos = (u + 1) % 3;
    for (const auto& f : poly.faces()) {
        int out_letter = f[out_pos];
        int in_letter = f[in_pos];
        g.add_edge(pres.idx_of(out_letter), n + pres.idx_of(in_letter));
    }
    g.sort_adjacency();
    return g;
}

namespace {

// Checks that the link edge set equals the incidence-graph edge set under
// the explicit relabeling. map_out / map_in send link germ indices to model
// node indices.
bool edge_sets_equal(const Graph& link_graph, const Graph& model,
                     const std::vector<int>& map_out,
                     const std::vector<int>& map_in) {
    if (link_graph.edge_count() != model.edge_count()) return false;
    const int n = static_cast<int>(map_out.size());
    for (int i = 0; i < n; ++i) {
        for (int nb : link_graph.adj[i]) {
            if (!model.has_edge(map_out[i], map_in[nb - n])) return false;
        }
    }
    return true;
}

}  // namespace

LinkReport certify_links(const Polyhedron& poly) {
    const Presentation& pres = poly.presentation();
    const ProjectivePlane& pl = pres.plane;
    const int n = pres.n();
    const auto& T = pres.T;

    LinkReport rep;

    // Corner semantics: the triple (i, j, k) encodes x_i in y_k at vertex 1,
    // x_j in y_i at vertex 2 and x_j in y_k at vertex 3.
    rep.corner_semantics = true;
    for (const auto& kt : pres.K) {
        int i = kt[0], j = kt[1], k = kt[2];
        if (!pl.incident(i, T[k]) || !pl.incident(j, T[i]) ||
            !pl.incident(j, T[k])) {
            rep.corner_semantics = false;
            break;
        }
    }

    Graph primal = incidence_graph(pl);
    ProjectivePlane dual = pl.dual();
    Graph dual_graph = incidence_graph(dual);

    std::vector<int> ident(n), via_t(n);
    for (int i = 0; i < n; ++i) ident[i] = i;
    for (int i = 0; i < n; ++i) via_t[i] = T[i];

    for (int u = 1; u <= 3; ++u) {
        LinkCertificate& cert = rep.links[u - 1];
        cert.vertex = u;
        Graph lk = link(poly, u);
        cert.gon = certify_mgon(lk, 3);
        const Graph& model = (u == 3) ? dual_graph : primal;
        if (u == 1 || u == 2) {
            // out germ i -> point i, in germ n+i -> line node n + T(i)
            std::vector<int> map_in(n);
            for (int i = 0; i < n; ++i) map_in[i] = n + T[i];
            cert.natural_iso = edge_sets_equal(lk, model, ident, map_in);
        } else {
            // out germ i -> dual point node T(i), in germ n+i -> dual line
            // node n + i
            std::vector<int> map_in(n);
            for (int i = 0; i < n; ++i) map_in[i] = n + i;
            cert.natural_iso = edge_sets_equal(lk, model, via_t, map_in);
        }
        cert.search_iso = graphs_isomorphic(lk, model).isomorphic;
    }
    return rep;
}

CountReport verify_counts(const Polyhedron& poly) {
    const Presentation& pres = poly.presentation();
    CountReport rep;
    rep.vertices = poly.vertex_count();
    rep.edges = poly.edge_count();
    rep.faces = poly.face_count();
    rep.euler = poly.euler_characteristic();

    std::vector<char> used(static_cast<size_t>(pres.n_letters()), 0);
    for (const auto& f : poly.faces())
        for (int letter : f) used[static_cast<size_t>(letter)] = 1;
    rep.letters_unused =
        std::count(used.begin(), used.end(), static_cast<char>(0));

    long long s_total = 0, t_total = 0;
    for (int u = 1; u <= 3; ++u) {
        Graph lk = link(poly, u);
        rep.link_nodes[u - 1] = lk.n;
        rep.link_edges[u - 1] = lk.edge_count();
        s_total += lk.n;
        t_total += lk.edge_count();
    }
    rep.link_derived_edges = s_total / 2;
    rep.link_derived_faces = t_total / 3;
    rep.direct_matches_links = (s_total % 2 == 0) && (t_total % 3 == 0) &&
                               rep.link_derived_edges == rep.edges &&
                               rep.link_derived_faces == rep.faces;
    rep.formula_edges = 3 * s_total;
    rep.formula_faces = t_total;
    rep.formula_matches_direct =
        rep.formula_edges == rep.edges && rep.formula_faces == rep.faces;
    return rep;
}

}  // namespace trigon
