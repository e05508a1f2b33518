#include "trigon/presentation.hpp"

#include <algorithm>

namespace trigon {

namespace {

std::vector<int> invert(const ProjectivePlane& plane, const std::vector<int>& T) {
    std::vector<int> inv(plane.n(), -1);
    for (int x = 0; x < plane.n(); ++x) inv[T[x]] = x;
    return inv;
}

void require_clean(const ProjectivePlane& plane, const std::vector<int>& T) {
    auto rep = verify_basic_bijection(plane, T);
    if (!rep.clean())
        throw UnverifiedBijection("T fails the basic-bijection properties (" +
                                  std::to_string(rep.prop1_violations.size()) +
                                  " property-1, " + std::to_string(rep.prop2_violations.size()) +
                                  " property-2 violations)");
}

} // namespace

std::vector<std::array<int, 3>> build_triples(const ProjectivePlane& plane,
                                              const std::vector<int>& T) {
    require_clean(plane, T);
    auto Tinv = invert(plane, T);
    std::vector<std::array<int, 3>> K;
    const int n = plane.n();
    K.reserve(static_cast<size_t>(n) * (plane.q() + 1));
    // Extend every incident pair x_j on y_i; the third member is forced:
    // y_k is the line through x_i and x_j.
    for (int i = 0; i < n; ++i)
        for (int j : plane.points_on(T[i])) {
            int k = Tinv[plane.line_through(i, j)];
            K.push_back({i, j, k});
        }
    std::sort(K.begin(), K.end());
    return K;
}

std::vector<std::array<int, 3>> build_triples_bruteforce(const ProjectivePlane& plane,
                                                         const std::vector<int>& T) {
    require_clean(plane, T);
    std::vector<std::array<int, 3>> K;
    const int n = plane.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!plane.incident(j, T[i])) continue;
            for (int k = 0; k < n; ++k)
                if (plane.incident(i, T[k]) && plane.incident(j, T[k])) K.push_back({i, j, k});
        }
    std::sort(K.begin(), K.end());
    return K;
}

std::vector<std::array<int, 3>> build_triples_via_tstar(const ProjectivePlane& plane,
                                                        const std::vector<int>& T) {
    require_clean(plane, T);
    std::vector<std::array<int, 3>> K;
    const int n = plane.n();
    for (int k = 0; k < n; ++k) {
        int y = T[k];
        const auto& pts = plane.points_on(y);
        auto image = induced_line_map(plane, T, y); // image[a] = T*(pts[a])
        for (int j : pts) {
            // i is the unique point of I(y) with T*(x_i) = x_j (Lemma 2).
            int i = -1;
            for (size_t a = 0; a < pts.size(); ++a)
                if (image[a] == j) {
                    i = pts[a];
                    break;
                }
            if (i < 0)
                throw Error("T* not surjective on line " + std::to_string(y));
            K.push_back({i, j, k});
        }
    }
    std::sort(K.begin(), K.end());
    return K;
}

PairUniquenessReport verify_pair_uniqueness(const std::vector<std::array<int, 3>>& K,
                                            const ProjectivePlane& plane,
                                            const std::vector<int>& T) {
    PairUniquenessReport rep;
    const int n = plane.n();
    rep.positions[0].name = "(i,j)";
    rep.positions[1].name = "(j,k)";
    rep.positions[2].name = "(i,k)";

    // Multiplicity of each ordered pair in each position.
    std::vector<int> mult_ij(static_cast<size_t>(n) * n, 0);
    std::vector<int> mult_jk(static_cast<size_t>(n) * n, 0);
    std::vector<int> mult_ik(static_cast<size_t>(n) * n, 0);
    for (const auto& t : K) {
        ++mult_ij[static_cast<size_t>(t[0]) * n + t[1]];
        ++mult_jk[static_cast<size_t>(t[1]) * n + t[2]];
        ++mult_ik[static_cast<size_t>(t[0]) * n + t[2]];
    }

    auto scan = [&](int pos, const std::vector<int>& mult, auto admissible) {
        auto& P = rep.positions[pos];
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int m = mult[static_cast<size_t>(a) * n + b];
                bool ok = admissible(a, b);
                if (ok) {
                    ++P.admissible;
                    if (m != 1)
                        P.violations.push_back("pair " + P.name + "=(" + std::to_string(a) + "," +
                                               std::to_string(b) + ") extends to " +
                                               std::to_string(m) + " triples");
                } else if (m != 0) {
                    P.violations.push_back("inadmissible pair " + P.name + "=(" +
                                           std::to_string(a) + "," + std::to_string(b) +
                                           ") extends to " + std::to_string(m) + " triples");
                }
            }
        if (!P.violations.empty()) rep.pass = false;
    };
    scan(0, mult_ij, [&](int i, int j) { return plane.incident(j, T[i]); });
    scan(1, mult_jk, [&](int j, int k) { return plane.incident(j, T[k]); });
    scan(2, mult_ik, [&](int i, int k) { return plane.incident(i, T[k]); });
    return rep;
}

bool Presentation::lambda_incident(int a, int b) const {
    int ta = tag_of(a);
    if (tag_of(b) != ta % 3 + 1) return false;
    switch (ta) {
        case 1: return plane.incident(idx_of(b), T[idx_of(a)]); // x_j on y_i
        case 2: return plane.incident(idx_of(a), T[idx_of(b)]); // x_j on y_k
        default: return plane.incident(idx_of(b), T[idx_of(a)]); // x_i on y_k
    }
}

int Presentation::tuple_index(const std::array<int, 3>& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) return -1;
    return static_cast<int>(it - tuples.begin());
}

void Presentation::rebuild_lookups() {
    const size_t L = static_cast<size_t>(n_letters());
    pair12_.assign(L * L, -1);
    pair13_.assign(L * L, -1);
    for (size_t ti = 0; ti < tuples.size(); ++ti) {
        const auto& t = tuples[ti];
        // Later duplicates do not overwrite; axiom 3 reports them.
        auto& s12 = pair12_[static_cast<size_t>(t[0]) * L + t[1]];
        if (s12 < 0) s12 = static_cast<int>(ti);
        auto& s13 = pair13_[static_cast<size_t>(t[0]) * L + t[2]];
        if (s13 < 0) s13 = static_cast<int>(ti);
    }
}

Presentation tag_presentation(const std::vector<std::array<int, 3>>& K,
                              const ProjectivePlane& plane, const std::vector<int>& T) {
    require_clean(plane, T);
    auto uniq = verify_pair_uniqueness(K, plane, T);
    if (!uniq.pass) {
        std::string first;
        for (const auto& p : uniq.positions)
            if (!p.violations.empty()) {
                first = p.violations.front();
                break;
            }
        throw InvalidK(first);
    }

    Presentation pres{plane, T, invert(plane, T), K, {}, {}, {}};
    std::sort(pres.K.begin(), pres.K.end());
    pres.tuples.reserve(pres.K.size() * 3);
    for (const auto& t : pres.K) {
        int a = pres.letter(1, t[0]);
        int b = pres.letter(2, t[1]);
        int c = pres.letter(3, t[2]);
        pres.tuples.push_back({a, b, c});
        pres.tuples.push_back({b, c, a});
        pres.tuples.push_back({c, a, b});
    }
    std::sort(pres.tuples.begin(), pres.tuples.end());
    pres.rebuild_lookups();
    return pres;
}

PolygonalAxiomReport verify_polygonal_axioms(const Presentation& pres) {
    PolygonalAxiomReport rep;
    auto note = [&rep](std::string w) {
        if (rep.witnesses.size() < 32) rep.witnesses.push_back(std::move(w));
    };
    const int L = pres.n_letters();

    // Axiom 1: rotation closure.
    for (const auto& t : pres.tuples) {
        std::array<int, 3> r{t[1], t[2], t[0]};
        if (pres.tuple_index(r) < 0) {
            rep.axiom1 = false;
            note("rotation (" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                 std::to_string(r[2]) + ") missing");
        }
    }

    // Pair multiplicities for axioms 2 and 3.
    std::vector<int> mult(static_cast<size_t>(L) * L, 0);
    for (const auto& t : pres.tuples) ++mult[static_cast<size_t>(t[0]) * L + t[1]];

    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) {
            int m = mult[static_cast<size_t>(a) * L + b];
            bool inc = pres.lambda_incident(a, b);
            if ((m > 0) != inc) {
                rep.axiom2 = false;
                note("pair (" + std::to_string(a) + "," + std::to_string(b) + ") " +
                     (inc ? "incident but not extendable" : "extendable but not incident"));
            }
            if (m > 1) {
                rep.axiom3 = false;
                note("pair (" + std::to_string(a) + "," + std::to_string(b) + ") extends to " +
                     std::to_string(m) + " tuples");
            }
        }
    return rep;
}

Presentation build_presentation(const ProjectivePlane& plane, const std::vector<int>& T) {
    auto K = build_triples(plane, T);
    auto pres = tag_presentation(K, plane, T);
    auto ax = verify_polygonal_axioms(pres);
    if (!ax.pass())
        throw InvalidPresentation(ax.witnesses.empty() ? "polygonal axioms fail"
                                                       : ax.witnesses.front());
    return pres;
}

} // namespace trigon
