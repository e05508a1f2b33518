#pragma once

#include <array>
#include <string>
#include <vector>

#include "trigon/graph.hpp"
#include "trigon/presentation.hpp"

namespace trigon {

// The polygonal presentation realized as a 2-complex: three vertices
// (one per tag cycle), one edge per tagged letter, one triangular face
// per tuple class. Tuples are stored via their canonical (lexicographically
// least) rotation, which for a valid presentation starts with the tag-1
// letter.
class Polyhedron {
public:
    explicit Polyhedron(Presentation pres);

    const Presentation& presentation() const { return pres_; }
    const ProjectivePlane& plane() const { return pres_.plane; }

    int vertex_count() const { return 3; }
    long long edge_count() const { return 3LL * pres_.n(); }
    long long face_count() const { return static_cast<long long>(faces_.size()); }
    long long euler_characteristic() const {
        return vertex_count() - edge_count() + face_count();
    }

    // Canonical face representatives, sorted.
    const std::vector<std::array<int, 3>>& faces() const { return faces_; }

private:
    Presentation pres_;
    std::vector<std::array<int, 3>> faces_;
};

// Validates the polygonal axioms and assembles the complex.
// Throws InvalidPresentation when an axiom fails.
Polyhedron build_polyhedron(const Presentation& pres);

// Link of vertex u (1-based, u in {1,2,3}) as an undirected bipartite graph
// on 2n nodes. Node i in [0,n) is the outgoing germ of edge x^u_i at u;
// node n+i is the incoming germ of edge x^{u-1}_i (equivalently, of the
// line letter lambda(x^{u-1}_i) = y^u_i). Each face passing through u
// contributes one edge between the two germs it joins there.
Graph link(const Polyhedron& poly, int u);

// Certification that every vertex link is the incidence graph of a
// generalized 3-gon. For u = 1, 2 the link is naturally isomorphic to the
// incidence graph of the plane itself (out germ i -> point i, in germ
// n+i -> line T(i)); for u = 3 it is naturally isomorphic to the incidence
// graph of the dual plane (out germ i -> dual point T(i), in germ n+i ->
// dual line i). Both the explicit natural map and an independent
// isomorphism search are checked.
struct LinkCertificate {
    int vertex = 0;
    MgonCertificate gon;
    bool natural_iso = false;
    bool search_iso = false;
    bool pass() const { return gon.pass && natural_iso && search_iso; }
};

struct LinkReport {
    std::array<LinkCertificate, 3> links;
    bool corner_semantics = false;  // each face meets u in the incidence it encodes
    bool pass() const {
        return corner_semantics && links[0].pass() && links[1].pass() &&
               links[2].pass();
    }
};

LinkReport certify_links(const Polyhedron& poly);

// Count cross-check. Direct counts come from the complex itself; the
// link-derived counts recompute E and F from link degrees (each edge has
// two germs, each face three corners). Those must agree. The last two
// fields evaluate the literal closed forms 3 * sum_i s_i and sum_i t_i
// for comparison; they are reported but do not gate the pass flag.
struct CountReport {
    long long vertices = 0;
    long long edges = 0;
    long long faces = 0;
    long long euler = 0;
    long long letters_unused = 0;          // letters on no face; must be 0
    std::array<long long, 3> link_nodes{};  // s_u
    std::array<long long, 3> link_edges{};  // t_u
    long long link_derived_edges = 0;       // (sum s_u) / 2
    long long link_derived_faces = 0;       // (sum t_u) / 3
    bool direct_matches_links = false;
    long long formula_edges = 0;  // 3 * sum s_u
    long long formula_faces = 0;  // sum t_u
    bool formula_matches_direct = false;  // advisory only
    bool pass() const { return direct_matches_links && letters_unused == 0; }
};

CountReport verify_counts(const Polyhedron& poly);

}  // namespace trigon
