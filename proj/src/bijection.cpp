#include "trigon/bijection.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace trigon {

BijectionReport verify_basic_bijection(const ProjectivePlane& plane, const std::vector<int>& T) {
    const int n = plane.n();
    BijectionReport rep;
    if (static_cast<int>(T.size()) != n)
        throw MalformedInput("T must assign a line to each of the " + std::to_string(n) +
                             " points");
    std::vector<int> hits(n, 0);
    for (int x = 0; x < n; ++x) {
        if (T[x] < 0 || T[x] >= n)
            throw MalformedInput("T[" + std::to_string(x) + "] out of range");
        ++hits[T[x]];
    }
    for (int l = 0; l < n; ++l)
        if (hits[l] > 1) rep.duplicate_lines.push_back(l);
    rep.bijective = rep.duplicate_lines.empty();

    for (int x = 0; x < n; ++x)
        if (plane.incident(x, T[x])) rep.prop1_violations.push_back(x);

    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = x1 + 1; x2 < n; ++x2) {
            if (T[x1] == T[x2]) continue; // bijectivity violation reported above
            int m = plane.meet(T[x1], T[x2]);
            int l = plane.line_through(x1, x2);
            if (plane.incident(m, l))
                rep.prop2_violations.push_back({x1, x2, m, l});
        }
    return rep;
}

namespace {

struct Searcher {
    const ProjectivePlane& plane;
    const SearchConfig& cfg;
    int n;
    std::vector<int> order;
    std::vector<int> T;       // by point id, -1 unassigned
    std::vector<char> used;   // by line id
    SearchResult result;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    bool stop = false;

    Searcher(const ProjectivePlane& pl, const SearchConfig& c) : plane(pl), cfg(c), n(pl.n()) {
        if (cfg.order) {
            order = *cfg.order;
            std::vector<char> seen(n, 0);
            if (static_cast<int>(order.size()) != n)
                throw MalformedInput("search order must list every point exactly once");
            for (int x : order) {
                if (x < 0 || x >= n || seen[x])
                    throw MalformedInput("search order must list every point exactly once");
                seen[x] = 1;
            }
        } else {
            order.resize(n);
            std::iota(order.begin(), order.end(), 0);
        }
        T.assign(n, -1);
        used.assign(n, 0);
        if (cfg.budget_ms > 0) {
            deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg.budget_ms);
            has_deadline = true;
        }
    }

    bool admissible(int depth, int x, int y) const {
        if (plane.incident(x, y)) return false; // property 1
        for (int d = 0; d < depth; ++d) {
            int x2 = order[d];
            int y2 = T[x2];
            if (y2 == y) return false; // shared line (also caught by `used`)
            int m = plane.meet(y, y2);
            if (plane.incident(m, plane.line_through(x, x2))) return false; // property 2
        }
        return true;
    }

    void rec(int depth) {
        if (stop) return;
        if ((++result.nodes & 0x3ff) == 0 && has_deadline &&
            std::chrono::steady_clock::now() > deadline)
            throw SearchTimeout(cfg.budget_ms);
        if (depth == n) {
            ++result.count;
            if (!result.T) result.T = T;
            if (cfg.mode != SearchConfig::Mode::CountAll) stop = true;
            return;
        }
        int x = order[depth];
        for (int y = 0; y < n; ++y) {
            if (used[y] || !admissible(depth, x, y)) continue;
            T[x] = y;
            used[y] = 1;
            rec(depth + 1);
            T[x] = -1;
            used[y] = 0;
            if (stop) return;
            if (depth == 0 && cfg.pin_effective()) break; // pin to first admissible line
        }
    }
};

} // namespace

SearchResult search_basic_bijection(const ProjectivePlane& plane, const SearchConfig& cfg) {
    Searcher s(plane, cfg);
    s.rec(0);
    s.result.exhausted = !s.stop;
    return s.result;
}

std::vector<int> induced_line_map(const ProjectivePlane& plane, const std::vector<int>& T, int y) {
    const auto& pts = plane.points_on(y);
    std::vector<int> image;
    image.reserve(pts.size());
    for (int x : pts) {
        if (T[x] == y)
            throw UnverifiedBijection("T(x) = y for x = " + std::to_string(x) + " on line " +
                                      std::to_string(y) + "; property 1 cannot hold");
        image.push_back(plane.meet(T[x], y));
    }
    return image;
}

} // namespace trigon
