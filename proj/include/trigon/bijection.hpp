#pragma once

#include <optional>
#include <vector>

#include "trigon/errors.hpp"
#include "trigon/plane.hpp"

namespace trigon {

// A candidate basic bijection is a point->line id map T. The two defining
// properties:
//   1. x is never incident with T(x);
//   2. for x1 != x2 the point T(x1) ^ T(x2) does not lie on the line x1 x2.
struct BijectionReport {
    bool bijective = false;
    std::vector<int> duplicate_lines;  // line ids hit more than once
    std::vector<int> prop1_violations; // points x with x on T(x)
    struct Prop2Violation {
        int x1, x2;
        int meet_point; // T(x1) ^ T(x2)
        int line;       // line through x1, x2 containing it
    };
    std::vector<Prop2Violation> prop2_violations;
    bool clean() const {
        return bijective && prop1_violations.empty() && prop2_violations.empty();
    }
};

BijectionReport verify_basic_bijection(const ProjectivePlane& plane, const std::vector<int>& T);

struct SearchConfig {
    enum class Mode { FirstSolution, CountAll, ExhaustiveNonexistence };
    Mode mode = Mode::FirstSolution;
    // Pin T of the first processed point to its first admissible line.
    // Defaults: on for first-solution, off for the counting modes (raw
    // counts must be unscaled).
    std::optional<bool> symmetry_fix;
    std::optional<std::vector<int>> order; // point processing order
    long long budget_ms = 0;               // 0 = unlimited

    bool pin_effective() const {
        if (symmetry_fix) return *symmetry_fix;
        return mode == Mode::FirstSolution;
    }
};

struct SearchResult {
    std::optional<std::vector<int>> T; // present iff a solution was found
    unsigned long long count = 0;      // solutions seen (1 in first-solution mode)
    bool exhausted = false;            // full tree explored
    long long nodes = 0;
};

// Deterministic backtracking over points in canonical (or configured) order;
// candidate lines in ascending id order, filtered incrementally by the two
// properties. Throws SearchTimeout when the budget runs out.
SearchResult search_basic_bijection(const ProjectivePlane& plane, const SearchConfig& cfg = {});

// Lemma 2 map T* on I(y): x -> T(x) ^ y. Returned in the order of
// points_on(y): result[a] = T*(points_on(y)[a]). Throws UnverifiedBijection
// when T(x) = y for some x on y (possible only for invalid T).
std::vector<int> induced_line_map(const ProjectivePlane& plane, const std::vector<int>& T, int y);

} // namespace trigon
