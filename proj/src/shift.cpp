#include "trigon/shift.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "trigon/errors.hpp"

namespace trigon {

int BitMatrix::row_sum(int r) const {
    int s = 0;
    const uint64_t* w = row(r);
    for (int i = 0; i < words_; ++i) s += std::popcount(w[i]);
    return s;
}

long long BitMatrix::total() const {
    long long s = 0;
    for (uint64_t w : bits_) s += std::popcount(w);
    return s;
}

bool BitMatrix::any() const {
    for (uint64_t w : bits_)
        if (w) return true;
    return false;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(n_);
    for (int r = 0; r < n_; ++r)
        for (int c : row_bits(r)) t.set(c, r);
    return t;
}

BitMatrix BitMatrix::unioned(const BitMatrix& other) const {
    BitMatrix u(n_);
    for (size_t i = 0; i < bits_.size(); ++i)
        u.bits_[i] = bits_[i] | other.bits_[i];
    return u;
}

std::vector<int> BitMatrix::row_bits(int r) const {
    std::vector<int> out;
    const uint64_t* w = row(r);
    for (int i = 0; i < words_; ++i) {
        uint64_t v = w[i];
        while (v) {
            int b = std::countr_zero(v);
            out.push_back(i * 64 + b);
            v &= v - 1;
        }
    }
    return out;
}

int BitMatrix::row_and_popcount(int r, const BitMatrix& other, int s) const {
    const uint64_t* a = row(r);
    const uint64_t* b = other.row(s);
    int total = 0;
    for (int i = 0; i < words_; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::string reading_name(Reading r) {
    return r == Reading::Adopted ? "adopted" : "geometric";
}

namespace {

std::array<int, 3> rotate3(const std::array<int, 3>& t, int r) {
    return {t[(0 + r) % 3], t[(1 + r) % 3], t[(2 + r) % 3]};
}

std::array<int, 3> face_of(const std::array<int, 3>& t) {
    std::array<int, 3> best = t;
    for (int r = 1; r < 3; ++r) best = std::min(best, rotate3(t, r));
    return best;
}

} // namespace

ShiftSystem build_transition_matrices(const Presentation& pres, Reading reading) {
    ShiftSystem sys;
    sys.q = pres.q();
    sys.reading = reading;
    sys.alphabet = pres.tuples;
    sys.N = static_cast<int>(sys.alphabet.size());
    sys.color.resize(sys.N);
    for (int i = 0; i < sys.N; ++i)
        sys.color[i] = pres.tag_of(sys.alphabet[i][0]);
    sys.M1 = BitMatrix(sys.N);
    sys.M2 = BitMatrix(sys.N);

    const auto& tup = sys.alphabet;
    if (reading == Reading::Adopted) {
        for (int a = 0; a < sys.N; ++a) {
            for (int b = 0; b < sys.N; ++b) {
                if (pres.tuple_with_first_second(tup[a][1], tup[b][0]) >= 0)
                    sys.M1.set(a, b);
                if (pres.tuple_with_first_third(tup[a][1], tup[b][2]) >= 0)
                    sys.M2.set(a, b);
            }
        }
    } else {
        std::vector<std::array<int, 3>> faces(sys.N);
        for (int i = 0; i < sys.N; ++i) faces[i] = face_of(tup[i]);
        for (int s = 0; s < sys.N; ++s) {
            for (int p = 0; p < sys.N; ++p) {
                int m1 = pres.tuple_with_first_second(tup[p][1], tup[s][0]);
                if (m1 >= 0) {
                    const auto& psi = tup[m1];
                    if (tup[p][2] != psi[1] && tup[s][1] != psi[2])
                        sys.M1.set(s, p);
                }
                int m2 = pres.tuple_with_first_third(tup[p][1], tup[s][2]);
                if (m2 >= 0) {
                    const auto& psi = tup[m2];
                    if (tup[p][2] != psi[1] && tup[s][0] != psi[0])
                        sys.M2.set(s, p);
                }
            }
        }
    }
    return sys;
}

H0Result check_h0(const ShiftSystem& sys) {
    H0Result r;
    r.m1_nonzero = sys.M1.any();
    r.m2_nonzero = sys.M2.any();
    return r;
}

H1Result check_h1(const ShiftSystem& sys) {
    H1Result r;
    const int N = sys.N;
    BitMatrix m1t = sys.M1.transposed();
    BitMatrix m2t = sys.M2.transposed();
    r.h1a = true;
    r.h1b = true;
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            // (M1 M2)(i,k) = <row i of M1, column k of M2>
            int p12 = sys.M1.row_and_popcount(i, m2t, k);
            int p21 = sys.M2.row_and_popcount(i, m1t, k);
            r.sum_m1m2 += static_cast<unsigned long long>(p12);
            r.sum_m2m1 += static_cast<unsigned long long>(p21);
            if (p12 != p21) {
                r.h1a = false;
                ++r.differing_entries;
                if (r.first_difference[0] < 0) r.first_difference = {i, k};
            }
            if (p12 > r.max_entry) r.max_entry = p12;
            if (p12 > 1) {
                r.h1b = false;
                ++r.entries_over_one;
                if (r.first_over[0] < 0) r.first_over = {i, k};
            }
        }
    }
    return r;
}

UniqueCompletionResult check_unique_completion(const ShiftSystem& sys) {
    UniqueCompletionResult r;
    const int N = sys.N;
    BitMatrix m1t = sys.M1.transposed();
    for (int a = 0; a < N; ++a) {
        std::vector<int> betas = sys.M1.row_bits(a);
        for (int b : betas) {
            for (int p : sys.M2.row_bits(b)) {
                ++r.chains;
                int completions = sys.M2.row_and_popcount(a, m1t, p);
                if (completions > r.max_completions) r.max_completions = completions;
                if (completions == 0) {
                    ++r.zero_completions;
                } else if (completions == 1) {
                    ++r.unique_completions;
                } else {
                    ++r.multi_completions;
                }
                if (completions != 1 && r.witness[0] < 0) r.witness = {a, b, p};
            }
        }
    }
    return r;
}

namespace {

// Reachability of every vertex from vertex 0 along rows, i.e. edges
// column -> row of M.
bool all_reachable(const BitMatrix& m, int* missing) {
    const int n = m.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : m.row_bits(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) {
            if (missing) *missing = v;
            return false;
        }
    }
    return true;
}

bool strongly_connected(const BitMatrix& m, std::string* witness,
                        const std::string& name) {
    int missing = -1;
    if (!all_reachable(m, &missing)) {
        if (witness)
            *witness = name + ": vertex " + std::to_string(missing) +
                       " not reachable from 0";
        return false;
    }
    if (!all_reachable(m.transposed(), &missing)) {
        if (witness)
            *witness = name + ": vertex 0 not reachable from " +
                       std::to_string(missing);
        return false;
    }
    return true;
}

} // namespace

H2Result check_h2(const ShiftSystem& sys) {
    H2Result r;
    std::string w;
    r.union_strong = strongly_connected(sys.M1.unioned(sys.M2), &w, "union");
    if (!r.union_strong && r.witness.empty()) r.witness = w;
    r.m1_strong = strongly_connected(sys.M1, &w, "M1");
    if (!r.m1_strong && r.witness.empty()) r.witness = w;
    r.m2_strong = strongly_connected(sys.M2, &w, "M2");
    if (!r.m2_strong && r.witness.empty()) r.witness = w;
    return r;
}

namespace {

// Shared DFS over the cell rectangle [0,m1] x [0,m2], row-major with the
// first axis fastest. succ1/succ2 are column -> successor lists (ascending),
// so candidate sets are generated in ascending alphabet order.
struct RectDfs {
    const ShiftSystem& sys;
    int m1, m2;
    std::vector<std::vector<int>> succ1, succ2;
    std::vector<int> grid; // (m1+1) * (m2+1), index i + j * (m1+1)

    RectDfs(const ShiftSystem& s, int m1_, int m2_)
        : sys(s), m1(m1_), m2(m2_),
          grid(static_cast<size_t>(m1_ + 1) * (m2_ + 1), -1) {
        succ1.resize(sys.N);
        succ2.resize(sys.N);
        BitMatrix m1t = sys.M1.transposed();
        BitMatrix m2t = sys.M2.transposed();
        for (int b = 0; b < sys.N; ++b) {
            succ1[b] = m1t.row_bits(b);
            succ2[b] = m2t.row_bits(b);
        }
    }

    int cells() const { return (m1 + 1) * (m2 + 1); }
    int at(int i, int j) const { return grid[i + j * (m1 + 1)]; }
    void put(int i, int j, int v) { grid[i + j * (m1 + 1)] = v; }

    // visit(ci) for ci == cells() receives the complete grid; returning
    // false aborts the whole search.
    template <typename Visit>
    bool run(Visit&& visit) {
        return rec(0, visit);
    }

    template <typename Visit>
    bool rec(int ci, Visit& visit) {
        if (ci == cells()) return visit(grid);
        int i = ci % (m1 + 1);
        int j = ci / (m1 + 1);
        if (i == 0 && j == 0) {
            for (int a = 0; a < sys.N; ++a) {
                put(0, 0, a);
                if (!rec(ci + 1, visit)) return false;
            }
        } else if (j == 0) {
            for (int a : succ1[at(i - 1, 0)]) {
                put(i, 0, a);
                if (!rec(ci + 1, visit)) return false;
            }
        } else if (i == 0) {
            for (int a : succ2[at(0, j - 1)]) {
                put(0, j, a);
                if (!rec(ci + 1, visit)) return false;
            }
        } else {
            const auto& left = succ1[at(i - 1, j)];
            const auto& below = succ2[at(i, j - 1)];
            // both ascending; intersect by merge
            size_t x = 0, y = 0;
            while (x < left.size() && y < below.size()) {
                if (left[x] < below[y]) {
                    ++x;
                } else if (left[x] > below[y]) {
                    ++y;
                } else {
                    put(i, j, left[x]);
                    if (!rec(ci + 1, visit)) return false;
                    ++x;
                    ++y;
                }
            }
        }
        return true;
    }
};

} // namespace

H3Result check_h3(const ShiftSystem& sys, int p_max, std::array<int, 2> window) {
    if (p_max < 1) throw MalformedInput("h3: p_max must be at least 1");
    if (window[0] < p_max + 1 || window[1] < p_max + 1)
        throw WindowTooSmall("window " + std::to_string(window[0]) + "x" +
                             std::to_string(window[1]) +
                             " cannot contain a period box for p_max " +
                             std::to_string(p_max));
    H3Result res;
    res.p_max = p_max;
    res.window = window;
    for (int p1 = -p_max; p1 <= p_max; ++p1) {
        for (int p2 = -p_max; p2 <= p_max; ++p2) {
            if (p1 == 0 && p2 == 0) continue;
            ++res.periods_tested;
            int m1 = std::abs(p1), m2 = std::abs(p2);
            int l0i = std::max(-p1, 0), l0j = std::max(-p2, 0);
            int l1i = l0i + p1, l1j = l0j + p2;
            RectDfs dfs(sys, m1, m2);
            H3Witness wit;
            bool found = false;
            dfs.run([&](const std::vector<int>& grid) {
                int a = grid[l0i + l0j * (m1 + 1)];
                int b = grid[l1i + l1j * (m1 + 1)];
                if (a != b) {
                    wit.p = {p1, p2};
                    wit.box = {m1 + 1, m2 + 1};
                    wit.word = grid;
                    found = true;
                    return false; // stop the search
                }
                return true;
            });
            if (found) {
                ++res.periods_witnessed;
                res.witnesses.push_back(std::move(wit));
            } else {
                res.failures.push_back({p1, p2});
            }
        }
    }
    return res;
}

unsigned long long count_words_dfs(const ShiftSystem& sys, int m1, int m2,
                                   int max_cells) {
    if (m1 < 0 || m2 < 0) throw MalformedInput("word rectangle extents must be >= 0");
    long long cells = static_cast<long long>(m1 + 1) * (m2 + 1);
    if (cells > max_cells)
        throw BudgetExceeded("word rectangle has " + std::to_string(cells) +
                             " cells, budget " + std::to_string(max_cells));
    RectDfs dfs(sys, m1, m2);
    unsigned long long total = 0;
    dfs.run([&](const std::vector<int>&) {
        ++total;
        return true;
    });
    return total;
}

unsigned long long count_strip_by_power(const ShiftSystem& sys, int axis, int r) {
    if (axis != 1 && axis != 2) throw MalformedInput("strip axis must be 1 or 2");
    if (r < 0) throw MalformedInput("strip length must be >= 0");
    const BitMatrix& m = (axis == 1) ? sys.M1 : sys.M2;
    const int N = sys.N;
    std::vector<unsigned long long> v(N, 1), next(N, 0);
    for (int step = 0; step < r; ++step) {
        for (int a = 0; a < N; ++a) {
            unsigned long long acc = 0;
            for (int b : m.row_bits(a)) {
                if (acc > std::numeric_limits<unsigned long long>::max() - v[b])
                    throw TooLarge("strip word count overflows 64 bits at length " +
                                   std::to_string(step + 1));
                acc += v[b];
            }
            next[a] = acc;
        }
        v.swap(next);
    }
    unsigned long long total = 0;
    for (unsigned long long x : v) {
        if (total > std::numeric_limits<unsigned long long>::max() - x)
            throw TooLarge("strip word count overflows 64 bits");
        total += x;
    }
    return total;
}

unsigned long long count_words(const ShiftSystem& sys, int m1, int m2,
                               int max_cells) {
    if (m1 < 0 || m2 < 0) throw MalformedInput("word rectangle extents must be >= 0");
    if (m2 == 0) return count_strip_by_power(sys, 1, m1);
    if (m1 == 0) return count_strip_by_power(sys, 2, m2);
    return count_words_dfs(sys, m1, m2, max_cells);
}

std::vector<std::vector<int>> enumerate_words(const ShiftSystem& sys, int m1,
                                              int m2, unsigned long long limit,
                                              int max_cells) {
    if (m1 < 0 || m2 < 0) throw MalformedInput("word rectangle extents must be >= 0");
    long long cells = static_cast<long long>(m1 + 1) * (m2 + 1);
    if (cells > max_cells)
        throw BudgetExceeded("word rectangle has " + std::to_string(cells) +
                             " cells, budget " + std::to_string(max_cells));
    std::vector<std::vector<int>> out;
    if (limit == 0) return out;
    RectDfs dfs(sys, m1, m2);
    dfs.run([&](const std::vector<int>& grid) {
        out.push_back(grid);
        return out.size() < limit;
    });
    return out;
}

bool word_admissible(const ShiftSystem& sys, int m1, int m2,
                     const std::vector<int>& word) {
    if (word.size() != static_cast<size_t>((m1 + 1) * (m2 + 1))) return false;
    auto at = [&](int i, int j) { return word[i + j * (m1 + 1)]; };
    for (int j = 0; j <= m2; ++j) {
        for (int i = 0; i <= m1; ++i) {
            int a = at(i, j);
            if (a < 0 || a >= sys.N) return false;
            if (i > 0 && !sys.M1.get(a, at(i - 1, j))) return false;
            if (j > 0 && !sys.M2.get(a, at(i, j - 1))) return false;
        }
    }
    return true;
}

ColorStructure color_structure(const ShiftSystem& sys) {
    ColorStructure cs;
    std::set<int> s1, s2;
    for (int a = 0; a < sys.N; ++a) {
        for (int b : sys.M1.row_bits(a))
            s1.insert(((sys.color[a] - sys.color[b]) % 3 + 3) % 3);
        for (int b : sys.M2.row_bits(a))
            s2.insert(((sys.color[a] - sys.color[b]) % 3 + 3) % 3);
    }
    cs.shifts_m1.assign(s1.begin(), s1.end());
    cs.shifts_m2.assign(s2.begin(), s2.end());

    auto cubed_diag_positive = [&](const BitMatrix& m) {
        BitMatrix mt = m.transposed();
        // (M^3)(i,i) = sum_j (M)(i,j) (M^2)(j,i); compute row i of M^2 lazily
        // via M(i,j) & M(j,k) pairs: popcount over the middle vertex.
        const int N = m.size();
        for (int i = 0; i < N; ++i) {
            bool positive = false;
            for (int j : m.row_bits(i)) {
                // need path j -> i of length 2: exists k with M(j,k), M(k,i)
                if (m.row_and_popcount(j, mt, i) > 0) {
                    positive = true;
                    break;
                }
            }
            if (!positive) return false;
        }
        return true;
    };
    cs.m1_cubed_diag_positive = cubed_diag_positive(sys.M1);
    cs.m2_cubed_diag_positive = cubed_diag_positive(sys.M2);
    return cs;
}

std::string ScanPattern::describe() const {
    std::ostringstream os;
    os << "table" << shape << " row@" << row_pos << " col@" << col_pos
       << " dr=" << (distinct_row ? 1 : 0) << " dc=" << (distinct_col ? 1 : 0);
    return os.str();
}

namespace {

bool scan_pair_passes(const BitMatrix& a1, const BitMatrix& a2) {
    const int N = a1.size();
    if (!a1.any() || !a2.any()) return false;
    BitMatrix a1t = a1.transposed();
    BitMatrix a2t = a2.transposed();
    // H1a and H1b with early exit
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            int p12 = a1.row_and_popcount(i, a2t, k);
            int p21 = a2.row_and_popcount(i, a1t, k);
            if (p12 != p21 || p12 > 1) return false;
        }
    }
    // unique completion via (M2 M1)
    for (int a = 0; a < N; ++a) {
        for (int b : a1.row_bits(a)) {
            for (int p : a2.row_bits(b)) {
                if (a2.row_and_popcount(a, a1t, p) != 1) return false;
            }
        }
    }
    return strongly_connected(a1.unioned(a2), nullptr, "") &&
           strongly_connected(a1, nullptr, "") &&
           strongly_connected(a2, nullptr, "");
}

} // namespace

ReadingScanResult scan_readings(const Presentation& pres) {
    const auto& tup = pres.tuples;
    const int N = static_cast<int>(tup.size());
    std::vector<std::array<int, 3>> faces(N);
    for (int i = 0; i < N; ++i) faces[i] = face_of(tup[i]);

    std::vector<ScanPattern> pats;
    for (int shape : {12, 13})
        for (int ra = 1; ra <= 3; ++ra)
            for (int cb = 1; cb <= 3; ++cb)
                for (int dr = 0; dr <= 1; ++dr)
                    for (int dc = 0; dc <= 1; ++dc)
                        pats.push_back({shape, ra, cb, dr != 0, dc != 0});

    auto build = [&](const ScanPattern& p) {
        BitMatrix m(N);
        for (int ri = 0; ri < N; ++ri) {
            int rl = tup[ri][p.row_pos - 1];
            for (int ci = 0; ci < N; ++ci) {
                int cl = tup[ci][p.col_pos - 1];
                int ti = (p.shape == 12) ? pres.tuple_with_first_second(rl, cl)
                                         : pres.tuple_with_first_third(rl, cl);
                if (ti < 0) continue;
                if (p.distinct_row && face_of(tup[ti]) == faces[ri]) continue;
                if (p.distinct_col && face_of(tup[ti]) == faces[ci]) continue;
                m.set(ri, ci);
            }
        }
        return m;
    };

    std::vector<BitMatrix> mats;
    std::vector<bool> has_zero_row;
    mats.reserve(pats.size());
    for (const auto& p : pats) {
        BitMatrix m = build(p);
        bool zero = false;
        for (int r = 0; r < N && !zero; ++r)
            if (m.row_sum(r) == 0) zero = true;
        has_zero_row.push_back(zero);
        mats.push_back(std::move(m));
    }

    ReadingScanResult res;
    res.patterns = static_cast<int>(pats.size());
    for (size_t i = 0; i < pats.size(); ++i) {
        if (has_zero_row[i]) continue;
        for (size_t j = 0; j < pats.size(); ++j) {
            if (has_zero_row[j]) continue;
            ++res.pairs_tested;
            if (scan_pair_passes(mats[i], mats[j]))
                res.passing.push_back({pats[i], pats[j]});
        }
    }
    return res;
}

HypothesisReport run_hypothesis_checks(const Presentation& pres, Reading reading,
                                       int p_max, std::array<int, 2> window) {
    ShiftSystem sys = build_transition_matrices(pres, reading);
    HypothesisReport rep;
    rep.reading = reading;
    rep.q = sys.q;
    rep.N = sys.N;

    BitMatrix m1t = sys.M1.transposed();
    BitMatrix m2t = sys.M2.transposed();
    std::set<int> rs1, rs2, cs1, cs2;
    for (int i = 0; i < sys.N; ++i) {
        rs1.insert(sys.M1.row_sum(i));
        rs2.insert(sys.M2.row_sum(i));
        cs1.insert(m1t.row_sum(i));
        cs2.insert(m2t.row_sum(i));
    }
    rep.row_sums_m1.assign(rs1.begin(), rs1.end());
    rep.row_sums_m2.assign(rs2.begin(), rs2.end());
    rep.col_sums_m1.assign(cs1.begin(), cs1.end());
    rep.col_sums_m2.assign(cs2.begin(), cs2.end());

    rep.h0 = check_h0(sys);
    rep.h1 = check_h1(sys);
    rep.uc = check_unique_completion(sys);
    rep.h2 = check_h2(sys);
    rep.h3 = check_h3(sys, p_max, window);
    rep.colors = color_structure(sys);

    if (!rep.h1.pass()) {
        if (reading == Reading::Adopted && sys.N <= 100) {
            rep.scan = scan_readings(pres);
            std::ostringstream os;
            os << "adopted reading fails H1; swept " << rep.scan->pairs_tested
               << " mechanical reading pairs, " << rep.scan->passing.size()
               << " pass all checks";
            rep.scan_note = os.str();
        } else if (reading == Reading::Adopted) {
            rep.scan_note =
                "adopted reading fails H1; alphabet too large for the reading "
                "sweep, see the q=2 scan";
        }
    }
    return rep;
}

} // namespace trigon
