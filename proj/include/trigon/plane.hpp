#pragma once

#include <array>
#include <string>
#include <vector>

#include "trigon/errors.hpp"
#include "trigon/field.hpp"

namespace trigon {

struct PlaneAxiomReport {
    bool pass = false;
    long long point_pairs_checked = 0;
    long long line_pairs_checked = 0;
    std::vector<std::string> violations;
};

// A finite projective plane of order q: n = q^2+q+1 points and lines with
// ids 0..n-1. Planes built from a field carry normalized homogeneous
// coordinates (leftmost nonzero coordinate 1, lexicographic id order);
// planes loaded from incidence data do not.
class ProjectivePlane {
public:
    // PG(2,q): points are the 1-dimensional subspaces of GF(q)^3, lines the
    // 2-dimensional ones represented by normal vectors; incidence is a zero
    // dot product.
    static ProjectivePlane build(const Field& f);

    // From explicit point sets per line; verifies the plane axioms and
    // throws AxiomViolation / MalformedInput.
    static ProjectivePlane from_lines(int q, const std::vector<std::vector<int>>& line_sets);

    int q() const noexcept { return q_; }
    int n() const noexcept { return n_; }

    bool incident(int point, int line) const {
        return inc_[static_cast<size_t>(range(point)) * n_ + range(line)] != 0;
    }
    const std::vector<int>& points_on(int line) const { return on_line_[range(line)]; }
    const std::vector<int>& lines_through(int point) const { return pencils_[range(point)]; }

    int line_through(int p1, int p2) const;
    int meet(int l1, int l2) const;

    ProjectivePlane dual() const;

    bool has_coords() const noexcept { return !pt_coords_.empty(); }
    const std::vector<std::array<int, 3>>& point_coords() const { return pt_coords_; }
    const std::vector<std::array<int, 3>>& line_coords() const { return ln_coords_; }

    // Exhaustive axiom check over all point pairs and line pairs.
    PlaneAxiomReport validate() const;

private:
    ProjectivePlane() = default;
    void finish_tables();
    int range(int id) const;

    int q_ = 0, n_ = 0;
    std::vector<uint8_t> inc_;               // n*n, [point*n + line]
    std::vector<std::vector<int>> on_line_;  // I(y), sorted
    std::vector<std::vector<int>> pencils_;  // lines through a point, sorted
    std::vector<int> lt_;                    // n*n line-through table, -1 diagonal
    std::vector<int> meet_;                  // n*n meet table, -1 diagonal
    std::vector<std::array<int, 3>> pt_coords_, ln_coords_;
};

} // namespace trigon
