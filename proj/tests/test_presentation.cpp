#include "doctest.h"

#include <algorithm>
#include <set>

#include "trigon/bijection.hpp"
#include "trigon/errors.hpp"
#include "trigon/field.hpp"
#include "trigon/plane.hpp"
#include "trigon/presentation.hpp"

using namespace trigon;

namespace {

ProjectivePlane plane_of(int q) {
    Field f(q);
    return ProjectivePlane::build(f);
}

std::vector<int> canonical_T(const ProjectivePlane& pl) {
    return *search_basic_bijection(pl).T;
}

} // namespace

TEST_CASE("q=2 triples match the frozen set") {
    auto pl = plane_of(2);
    auto T = canonical_T(pl);
    auto K = build_triples(pl, T);
    std::vector<std::array<int, 3>> expected = {
        {0, 1, 4}, {0, 3, 6}, {0, 5, 2}, {1, 2, 4}, {1, 3, 0}, {1, 6, 5},
        {2, 0, 4}, {2, 5, 3}, {2, 6, 1}, {3, 2, 1}, {3, 4, 6}, {3, 5, 0},
        {4, 0, 6}, {4, 1, 5}, {4, 2, 3}, {5, 1, 0}, {5, 4, 3}, {5, 6, 2},
        {6, 0, 2}, {6, 3, 1}, {6, 4, 5}};
    CHECK(K == expected);
}

TEST_CASE("the three triple constructions agree at q=2 and q=3") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        auto pl = plane_of(q);
        auto T = canonical_T(pl);
        auto k2 = build_triples(pl, T);
        auto kb = build_triples_bruteforce(pl, T);
        auto k3 = build_triples_via_tstar(pl, T);
        CHECK(k2 == kb);
        CHECK(k2 == k3);
        CHECK(k2.size() == static_cast<size_t>((q + 1) * (q * q + q + 1)));
    }
}

TEST_CASE("q=3 triples have the frozen boundary values") {
    auto pl = plane_of(3);
    auto K = build_triples(pl, canonical_T(pl));
    REQUIRE(K.size() == 52);
    CHECK(K[0] == std::array<int, 3>{0, 1, 4});
    CHECK(K[1] == std::array<int, 3>{0, 4, 1});
    CHECK(K[2] == std::array<int, 3>{0, 7, 12});
    CHECK(K[3] == std::array<int, 3>{0, 10, 8});
    CHECK(K[4] == std::array<int, 3>{1, 0, 4});
    CHECK(K.back() == std::array<int, 3>{12, 9, 11});
}

TEST_CASE("triples satisfy the three defining incidences") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        auto pl = plane_of(q);
        auto T = canonical_T(pl);
        for (const auto& t : build_triples(pl, T)) {
            CHECK(pl.incident(t[0], T[t[2]])); // x_i on y_k
            CHECK(pl.incident(t[1], T[t[0]])); // x_j on y_i
            CHECK(pl.incident(t[1], T[t[2]])); // x_j on y_k
        }
    }
}

TEST_CASE("pair uniqueness holds in all three positions") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        auto pl = plane_of(q);
        auto T = canonical_T(pl);
        auto K = build_triples(pl, T);
        auto rep = verify_pair_uniqueness(K, pl, T);
        CHECK(rep.pass);
        for (const auto& pos : rep.positions) {
            CHECK(pos.admissible == static_cast<long long>(K.size()));
            CHECK(pos.violations.empty());
        }
    }
}

TEST_CASE("a corrupted K fails pair uniqueness and tagging") {
    auto pl = plane_of(2);
    auto T = canonical_T(pl);
    auto K = build_triples(pl, T);
    auto bad = K;
    bad[0][1] = (bad[0][1] + 1) % pl.n(); // break an incidence
    auto rep = verify_pair_uniqueness(bad, pl, T);
    CHECK_FALSE(rep.pass);
    CHECK_THROWS_AS(tag_presentation(bad, pl, T), InvalidK);
}

TEST_CASE("tagging requires a clean bijection") {
    auto pl = plane_of(2);
    auto T = canonical_T(pl);
    auto K = build_triples(pl, T);
    auto badT = T;
    std::swap(badT[0], badT[1]);
    CHECK_THROWS_AS(tag_presentation(K, pl, badT), UnverifiedBijection);
    CHECK_THROWS_AS(build_triples(pl, badT), UnverifiedBijection);
}

TEST_CASE("tagged presentation has 3|K| tuples closed under rotation") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        auto pl = plane_of(q);
        auto T = canonical_T(pl);
        auto pres = build_presentation(pl, T);
        CHECK(pres.tuples.size() == pres.K.size() * 3);
        CHECK(pres.tuples.size() ==
              static_cast<size_t>(3 * (q + 1) * (q * q + q + 1)));
        CHECK(std::is_sorted(pres.tuples.begin(), pres.tuples.end()));
        for (const auto& t : pres.tuples) {
            std::array<int, 3> r{t[1], t[2], t[0]};
            CHECK(pres.tuple_index(r) >= 0);
            // tags distinct and cyclically ordered
            int t0 = pres.tag_of(t[0]);
            CHECK(pres.tag_of(t[1]) == t0 % 3 + 1);
            CHECK(pres.tag_of(t[2]) == (t0 % 3 + 1) % 3 + 1);
        }
    }
}

TEST_CASE("every letter appears in at least one tuple") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        auto pl = plane_of(q);
        auto pres = build_presentation(pl, canonical_T(pl));
        std::vector<char> used(static_cast<size_t>(pres.n_letters()), 0);
        for (const auto& t : pres.tuples)
            for (int letter : t) used[static_cast<size_t>(letter)] = 1;
        CHECK(std::count(used.begin(), used.end(), char(0)) == 0);
    }
}

TEST_CASE("polygonal axioms pass for q=2 and q=3") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        auto pl = plane_of(q);
        auto rep = verify_polygonal_axioms(build_presentation(pl, canonical_T(pl)));
        CHECK(rep.axiom1);
        CHECK(rep.axiom2);
        CHECK(rep.axiom3);
    }
}

TEST_CASE("removing one rotation breaks axiom 1") {
    auto pl = plane_of(2);
    auto pres = build_presentation(pl, canonical_T(pl));
    pres.tuples.erase(pres.tuples.begin());
    pres.rebuild_lookups();
    auto rep = verify_polygonal_axioms(pres);
    CHECK_FALSE(rep.axiom1);
}

TEST_CASE("adding a second extension of a pair breaks axiom 3") {
    auto pl = plane_of(2);
    auto pres = build_presentation(pl, canonical_T(pl));
    auto extra = pres.tuples[0];
    // new tuple sharing the first two letters but with a different third
    extra[2] = (extra[2] == pres.tuples[1][2]) ? pres.tuples[2][2] : pres.tuples[1][2];
    if (extra[2] == pres.tuples[0][2]) extra[2] = pres.letter(3, (pres.idx_of(extra[2]) + 1) % pl.n());
    pres.tuples.push_back(extra);
    std::sort(pres.tuples.begin(), pres.tuples.end());
    pres.rebuild_lookups();
    auto rep = verify_polygonal_axioms(pres);
    CHECK_FALSE(rep.axiom3);
}

TEST_CASE("lambda incidence matches the tuple pair table exactly (axiom 2)") {
    auto pl = plane_of(2);
    auto pres = build_presentation(pl, canonical_T(pl));
    const int L = pres.n_letters();
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) {
            bool has = pres.tuple_with_first_second(a, b) >= 0;
            CHECK(has == pres.lambda_incident(a, b));
        }
}

TEST_CASE("pair lookup tables are consistent with tuple_index") {
    auto pl = plane_of(3);
    auto pres = build_presentation(pl, canonical_T(pl));
    for (size_t i = 0; i < pres.tuples.size(); ++i) {
        const auto& t = pres.tuples[i];
        CHECK(pres.tuple_with_first_second(t[0], t[1]) == static_cast<int>(i));
        CHECK(pres.tuple_with_first_third(t[0], t[2]) == static_cast<int>(i));
        CHECK(pres.tuple_index(t) == static_cast<int>(i));
    }
}

TEST_CASE("letter helpers roundtrip") {
    auto pl = plane_of(2);
    auto pres = build_presentation(pl, canonical_T(pl));
    for (int tag = 1; tag <= 3; ++tag)
        for (int i = 0; i < pl.n(); ++i) {
            int letter = pres.letter(tag, i);
            CHECK(pres.tag_of(letter) == tag);
            CHECK(pres.idx_of(letter) == i);
            CHECK(pres.tag_of(pres.lambda_of(letter)) == tag % 3 + 1);
            CHECK(pres.idx_of(pres.lambda_of(letter)) == i);
        }
}
