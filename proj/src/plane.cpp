#include "trigon/plane.hpp"

#include <algorithm>

namespace trigon {

ProjectivePlane ProjectivePlane::build(const Field& f) {
    const int q = f.q();
    ProjectivePlane pl;
    pl.q_ = q;
    pl.n_ = q * q + q + 1;

    // Normalized representatives of nonzero vectors in GF(q)^3: leftmost
    // nonzero coordinate equals 1. Generated in lexicographic order.
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::array<int, 3> v{a, b, c};
                int nz = -1;
                for (int t = 0; t < 3; ++t)
                    if (v[t] != 0) {
                        nz = t;
                        break;
                    }
                if (nz < 0 || v[nz] != 1) continue;
                reps.push_back(v);
            }
    std::sort(reps.begin(), reps.end());
    if (static_cast<int>(reps.size()) != pl.n_)
        throw Error("projective point count mismatch");

    pl.pt_coords_ = reps;
    pl.ln_coords_ = reps;
    pl.inc_.assign(static_cast<size_t>(pl.n_) * pl.n_, 0);
    for (int i = 0; i < pl.n_; ++i)
        for (int j = 0; j < pl.n_; ++j) {
            int s = 0;
            for (int t = 0; t < 3; ++t) s = f.add(s, f.mul(reps[i][t], reps[j][t]));
            pl.inc_[static_cast<size_t>(i) * pl.n_ + j] = (s == 0) ? 1 : 0;
        }
    pl.finish_tables();
    return pl;
}

ProjectivePlane ProjectivePlane::from_lines(int q, const std::vector<std::vector<int>>& line_sets) {
    if (q < 2) throw MalformedInput("order q must be at least 2");
    const int n = q * q + q + 1;
    if (line_sets.empty()) throw MalformedInput("no lines given");
    if (static_cast<int>(line_sets.size()) != n)
        throw AxiomViolation("expected " + std::to_string(n) + " lines for order " +
                             std::to_string(q) + ", got " + std::to_string(line_sets.size()));

    ProjectivePlane pl;
    pl.q_ = q;
    pl.n_ = n;
    pl.inc_.assign(static_cast<size_t>(n) * n, 0);
    for (int l = 0; l < n; ++l) {
        for (int p : line_sets[l]) {
            if (p < 0 || p >= n)
                throw MalformedInput("point id " + std::to_string(p) + " out of range on line " +
                                     std::to_string(l));
            uint8_t& cell = pl.inc_[static_cast<size_t>(p) * n + l];
            if (cell) throw MalformedInput("point " + std::to_string(p) + " repeated on line " +
                                           std::to_string(l));
            cell = 1;
        }
    }
    pl.finish_tables();
    PlaneAxiomReport rep = pl.validate();
    if (!rep.pass) throw AxiomViolation(rep.violations.front());
    return pl;
}

void ProjectivePlane::finish_tables() {
    on_line_.assign(n_, {});
    pencils_.assign(n_, {});
    for (int p = 0; p < n_; ++p)
        for (int l = 0; l < n_; ++l)
            if (inc_[static_cast<size_t>(p) * n_ + l]) {
                on_line_[l].push_back(p);
                pencils_[p].push_back(l);
            }
    lt_.assign(static_cast<size_t>(n_) * n_, -1);
    meet_.assign(static_cast<size_t>(n_) * n_, -1);
    for (int l = 0; l < n_; ++l) {
        const auto& pts = on_line_[l];
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b) {
                // First common line wins; validate() reports duplicates.
                auto& fwd = lt_[static_cast<size_t>(pts[a]) * n_ + pts[b]];
                if (fwd < 0) fwd = l;
                auto& bwd = lt_[static_cast<size_t>(pts[b]) * n_ + pts[a]];
                if (bwd < 0) bwd = l;
            }
    }
    for (int p = 0; p < n_; ++p) {
        const auto& lns = pencils_[p];
        for (size_t a = 0; a < lns.size(); ++a)
            for (size_t b = a + 1; b < lns.size(); ++b) {
                auto& fwd = meet_[static_cast<size_t>(lns[a]) * n_ + lns[b]];
                if (fwd < 0) fwd = p;
                auto& bwd = meet_[static_cast<size_t>(lns[b]) * n_ + lns[a]];
                if (bwd < 0) bwd = p;
            }
    }
}

int ProjectivePlane::line_through(int p1, int p2) const {
    range(p1);
    range(p2);
    if (p1 == p2) throw SamePoint();
    return lt_[static_cast<size_t>(p1) * n_ + p2];
}

int ProjectivePlane::meet(int l1, int l2) const {
    range(l1);
    range(l2);
    if (l1 == l2) throw SameLine();
    return meet_[static_cast<size_t>(l1) * n_ + l2];
}

ProjectivePlane ProjectivePlane::dual() const {
    ProjectivePlane d;
    d.q_ = q_;
    d.n_ = n_;
    d.inc_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int p = 0; p < n_; ++p)
        for (int l = 0; l < n_; ++l)
            d.inc_[static_cast<size_t>(l) * n_ + p] = inc_[static_cast<size_t>(p) * n_ + l];
    d.pt_coords_ = ln_coords_;
    d.ln_coords_ = pt_coords_;
    d.finish_tables();
    return d;
}

PlaneAxiomReport ProjectivePlane::validate() const {
    PlaneAxiomReport rep;
    auto note = [&rep](std::string v) {
        if (rep.violations.size() < 32) rep.violations.push_back(std::move(v));
    };
    const int expected = q_ + 1;
    for (int l = 0; l < n_; ++l)
        if (static_cast<int>(on_line_[l].size()) != expected)
            note("line " + std::to_string(l) + " has " + std::to_string(on_line_[l].size()) +
                 " points, expected " + std::to_string(expected));
    for (int p = 0; p < n_; ++p)
        if (static_cast<int>(pencils_[p].size()) != expected)
            note("point " + std::to_string(p) + " lies on " + std::to_string(pencils_[p].size()) +
                 " lines, expected " + std::to_string(expected));

    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
            ++rep.point_pairs_checked;
            int common = 0, first = -1, second = -1;
            for (int l : pencils_[a])
                if (inc_[static_cast<size_t>(b) * n_ + l]) {
                    ++common;
                    (common == 1 ? first : second) = l;
                }
            if (common == 0)
                note("points " + std::to_string(a) + "," + std::to_string(b) +
                     " lie on no common line");
            else if (common > 1)
                note("points " + std::to_string(a) + "," + std::to_string(b) +
                     " lie on lines " + std::to_string(first) + " and " + std::to_string(second));
        }
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
            ++rep.line_pairs_checked;
            int common = 0, first = -1, second = -1;
            for (int p : on_line_[a])
                if (inc_[static_cast<size_t>(p) * n_ + b]) {
                    ++common;
                    (common == 1 ? first : second) = p;
                }
            if (common == 0)
                note("lines " + std::to_string(a) + "," + std::to_string(b) +
                     " share no point");
            else if (common > 1)
                note("lines " + std::to_string(a) + "," + std::to_string(b) +
                     " share points " + std::to_string(first) + " and " + std::to_string(second));
        }
    rep.pass = rep.violations.empty();
    return rep;
}

int ProjectivePlane::range(int id) const {
    if (id < 0 || id >= n_)
        throw Error("id " + std::to_string(id) + " out of range for plane of order " +
                    std::to_string(q_));
    return id;
}

} // namespace trigon
