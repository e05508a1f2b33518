#pragma once

#include <array>
#include <string>
#include <vector>

#include "trigon/bijection.hpp"
#include "trigon/errors.hpp"
#include "trigon/plane.hpp"

namespace trigon {

// Triples K over the plane: (i,j,k) with x_i on y_k, x_j on y_i, x_j on y_k,
// where y_t = T(x_t). Built by extending incident pairs; two further
// constructions (brute force and the T* recipe) exist as cross-checks.
std::vector<std::array<int, 3>> build_triples(const ProjectivePlane& plane,
                                              const std::vector<int>& T);
std::vector<std::array<int, 3>> build_triples_bruteforce(const ProjectivePlane& plane,
                                                         const std::vector<int>& T);
std::vector<std::array<int, 3>> build_triples_via_tstar(const ProjectivePlane& plane,
                                                        const std::vector<int>& T);

struct PairUniquenessReport {
    struct Position {
        std::string name;          // which pair of the triple is fixed
        long long admissible = 0;  // pairs satisfying the defining incidence
        std::vector<std::string> violations;
    };
    std::array<Position, 3> positions; // (i,j), (j,k), (i,k)
    bool pass = true;
};

// Lemma 3 check: every admissible pair extends to exactly one triple of K in
// each of the three positions, and inadmissible pairs extend to none.
PairUniquenessReport verify_pair_uniqueness(const std::vector<std::array<int, 3>>& K,
                                            const ProjectivePlane& plane,
                                            const std::vector<int>& T);

// The tagged presentation. Letters live in three copies: letter id
// (t-1)*n + i stands for x_i^t (t = 1,2 tags points, t = 3 tags, via the
// dual convention, the line y_i). Tuples are ordered letter-id triples,
// closed under cyclic rotation; canonical order is ascending.
struct Presentation {
    ProjectivePlane plane;
    std::vector<int> T, Tinv;
    std::vector<std::array<int, 3>> K;      // lex sorted
    std::vector<std::array<int, 3>> tuples; // 3|K| letter-id triples, sorted

    int q() const { return plane.q(); }
    int n() const { return plane.n(); }
    int n_letters() const { return 3 * plane.n(); }

    int letter(int tag, int idx) const { return (tag - 1) * plane.n() + idx; }
    int tag_of(int letter) const { return letter / plane.n() + 1; }
    int idx_of(int letter) const { return letter % plane.n(); }
    // lambda(x_i^t) = y_i^{t+1}; line-letters share the id scheme.
    int lambda_of(int letter) const {
        return ((tag_of(letter) % 3)) * plane.n() + idx_of(letter);
    }
    // Axiom-2 incidence: is letter b incident with the line lambda(a) in the
    // relevant graph copy? Nonconsecutive tags are never incident.
    bool lambda_incident(int a, int b) const;

    // Index of a tuple in canonical order, -1 if absent.
    int tuple_index(const std::array<int, 3>& t) const;
    // Unique tuple with the given first and second letter, -1 if none.
    int tuple_with_first_second(int a, int b) const {
        return pair12_[static_cast<size_t>(a) * n_letters() + b];
    }
    // Unique tuple with the given first and third letter, -1 if none.
    int tuple_with_first_third(int a, int c) const {
        return pair13_[static_cast<size_t>(a) * n_letters() + c];
    }

    std::vector<int> pair12_, pair13_; // dense pair -> tuple index, -1 empty
    void rebuild_lookups();
};

// Tags K into the three labeled copies and closes under rotation. Verifies
// the bijection and Lemma 3 first; throws UnverifiedBijection / InvalidK.
Presentation tag_presentation(const std::vector<std::array<int, 3>>& K,
                              const ProjectivePlane& plane, const std::vector<int>& T);

struct PolygonalAxiomReport {
    bool axiom1 = true; // rotation closure
    bool axiom2 = true; // pair extendable iff incident with lambda
    bool axiom3 = true; // at most one extension per ordered pair
    std::vector<std::string> witnesses;
    bool pass() const { return axiom1 && axiom2 && axiom3; }
};

PolygonalAxiomReport verify_polygonal_axioms(const Presentation& pres);

// Convenience: search T (first solution), build and verify everything.
Presentation build_presentation(const ProjectivePlane& plane, const std::vector<int>& T);

} // namespace trigon
