#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigon/presentation.hpp"

namespace trigon {

// Dense square bit matrix with 64-bit row words; rows index successors,
// columns predecessors throughout this module.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n)
        : n_(n), words_((n + 63) / 64),
          bits_(static_cast<size_t>(n) * static_cast<size_t>((n + 63) / 64), 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void set(int r, int c) { bits_[word(r, c)] |= bit(c); }
    void reset(int r, int c) { bits_[word(r, c)] &= ~bit(c); }
    bool get(int r, int c) const { return (bits_[word(r, c)] & bit(c)) != 0; }

    const uint64_t* row(int r) const { return bits_.data() + index(r); }
    uint64_t* row(int r) { return bits_.data() + index(r); }

    int row_sum(int r) const;
    long long total() const;
    bool any() const;
    BitMatrix transposed() const;
    BitMatrix unioned(const BitMatrix& other) const;
    std::vector<int> row_bits(int r) const; // ascending column indices

    // popcount(row(r) of *this AND row(s) of other)
    int row_and_popcount(int r, const BitMatrix& other, int s) const;

    bool operator==(const BitMatrix& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    size_t index(int r) const { return static_cast<size_t>(r) * words_; }
    size_t word(int r, int c) const { return index(r) + c / 64; }
    static uint64_t bit(int c) { return uint64_t{1} << (c % 64); }

    int n_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
};

// How pairwise adjacency between alphabet tuples is read off the
// presentation. Adopted: the successor's middle letter keyed against the
// predecessor's boundary letter through the pair tables. Geometric: the
// mediating tuple is looked up the same way but must additionally avoid the
// faces of both endpoints.
enum class Reading { Adopted, Geometric };

std::string reading_name(Reading r);

// The subshift data: alphabet = tuples of the presentation in canonical
// order, two horizontal/vertical transition matrices, and the tag coloring
// (tag of each tuple's first letter).
struct ShiftSystem {
    int q = 0;
    int N = 0;
    Reading reading = Reading::Adopted;
    std::vector<std::array<int, 3>> alphabet;
    std::vector<int> color; // 1..3 per alphabet entry
    BitMatrix M1, M2;       // M(a, b) = 1: b can precede a along the axis
};

ShiftSystem build_transition_matrices(const Presentation& pres,
                                      Reading reading = Reading::Adopted);

struct H0Result {
    bool m1_nonzero = false;
    bool m2_nonzero = false;
    bool pass() const { return m1_nonzero && m2_nonzero; }
};

H0Result check_h0(const ShiftSystem& sys);

// H1a: M1 M2 == M2 M1 entrywise. H1b: all entries of M1 M2 lie in {0,1}.
struct H1Result {
    bool h1a = false;
    long long differing_entries = 0;
    std::array<int, 2> first_difference{-1, -1};
    bool h1b = false;
    long long entries_over_one = 0;
    int max_entry = 0;
    std::array<int, 2> first_over{-1, -1};
    unsigned long long sum_m1m2 = 0;
    unsigned long long sum_m2m1 = 0;
    bool pass() const { return h1a && h1b; }
};

H1Result check_h1(const ShiftSystem& sys);

// L-shaped chains (alpha <-M1- beta, beta <-M2- psi ... in successor order:
// M1(alpha, beta) = 1 and M2(beta, psi) = 1) must admit exactly one common
// completion gamma with M2(alpha, gamma) = M1(gamma, psi) = 1.
struct UniqueCompletionResult {
    long long chains = 0;
    long long zero_completions = 0;
    long long unique_completions = 0;
    long long multi_completions = 0;
    int max_completions = 0;
    std::array<int, 3> witness{-1, -1, -1}; // first chain with != 1 completions
    bool pass() const { return chains > 0 && chains == unique_completions; }
};

UniqueCompletionResult check_unique_completion(const ShiftSystem& sys);

// Strong connectivity (irreducibility), for the union digraph and for each
// matrix separately.
struct H2Result {
    bool union_strong = false;
    bool m1_strong = false;
    bool m2_strong = false;
    std::string witness; // description of the first failing reachability
    bool pass() const { return union_strong && m1_strong && m2_strong; }
};

H2Result check_h2(const ShiftSystem& sys);

// Aperiodicity witness search: for every nonzero period vector p with
// |p_1|, |p_2| <= p_max, find a locally admissible word on the minimal
// bounding box of {0, p} whose values at the two corners differ. A witness
// on the minimal box extends nothing and restricts everything: any larger
// window containing a translate of the box restricts to such a word, and
// conversely, so searching the minimal box is exact. The window parameter
// states the region the caller cares about and must be able to contain
// every box (both extents at least p_max + 1), else WindowTooSmall.
struct H3Witness {
    std::array<int, 2> p{0, 0};
    std::array<int, 2> box{0, 0};   // cell extents (m1+1, m2+1)
    std::vector<int> word;          // row-major cells, axis-1 fastest
};

struct H3Result {
    int p_max = 0;
    std::array<int, 2> window{0, 0};
    int periods_tested = 0;
    int periods_witnessed = 0;
    std::vector<H3Witness> witnesses;
    std::vector<std::array<int, 2>> failures; // periods with no witness
    bool pass() const {
        return periods_tested > 0 && periods_witnessed == periods_tested;
    }
};

H3Result check_h3(const ShiftSystem& sys, int p_max,
                  std::array<int, 2> window = {5, 5});

// Locally admissible words on the rectangle with extents (m1+1) x (m2+1)
// cells. DFS is exact for small rectangles and guarded by a cell budget
// (default 12 cells -> BudgetExceeded). Strips (m2 == 0 or m1 == 0) of any
// length are counted by iterated matrix application with overflow checks.
unsigned long long count_words_dfs(const ShiftSystem& sys, int m1, int m2,
                                   int max_cells = 12);
unsigned long long count_strip_by_power(const ShiftSystem& sys, int axis, int r);
// Dispatch: strips via powers, rectangles via DFS.
unsigned long long count_words(const ShiftSystem& sys, int m1, int m2,
                               int max_cells = 12);

// Lexicographic enumeration (row-major cell order, alphabet order per cell)
// of up to `limit` words on the rectangle.
std::vector<std::vector<int>> enumerate_words(const ShiftSystem& sys, int m1,
                                              int m2, unsigned long long limit,
                                              int max_cells = 12);

// Re-checks a row-major word against both matrices.
bool word_admissible(const ShiftSystem& sys, int m1, int m2,
                     const std::vector<int>& word);

// Tag-color structure of the transition digraphs: the set of color
// differences (successor minus predecessor mod 3) realized by each matrix,
// and whether every diagonal entry of M_j^3 is positive.
struct ColorStructure {
    std::vector<int> shifts_m1; // ascending distinct values
    std::vector<int> shifts_m2;
    bool m1_cubed_diag_positive = false;
    bool m2_cubed_diag_positive = false;
};

ColorStructure color_structure(const ShiftSystem& sys);

// Exhaustive scan over the mechanical reading space: matrices defined by
// one pair table (first+second or first+third), a row position and a column
// position feeding the key, and optional face-distinctness constraints
// against the row and column tuples. 72 patterns per matrix role; ordered
// pairs with no zero row in either matrix are tested against the full
// hypothesis pipeline.
struct ScanPattern {
    int shape = 12; // 12: first+second table, 13: first+third
    int row_pos = 1, col_pos = 1; // 1-based tuple positions
    bool distinct_row = false, distinct_col = false;
    std::string describe() const;
};

struct ReadingScanResult {
    int patterns = 0;       // matrix candidates per role
    int pairs_tested = 0;   // ordered pairs surviving the zero-row filter
    std::vector<std::array<ScanPattern, 2>> passing;
};

ReadingScanResult scan_readings(const Presentation& pres);

// Full hypothesis report for one reading. The scan is attached when the
// adopted reading fails H1 and the alphabet is small enough to sweep.
struct HypothesisReport {
    Reading reading = Reading::Adopted;
    int q = 0;
    int N = 0;
    std::vector<int> row_sums_m1, row_sums_m2; // ascending distinct values
    std::vector<int> col_sums_m1, col_sums_m2;
    H0Result h0;
    H1Result h1;
    UniqueCompletionResult uc;
    H2Result h2;
    H3Result h3;
    ColorStructure colors;
    std::optional<ReadingScanResult> scan;
    std::string scan_note;
    bool all_pass() const {
        return h0.pass() && h1.pass() && uc.pass() && h2.pass() && h3.pass();
    }
};

HypothesisReport run_hypothesis_checks(const Presentation& pres,
                                       Reading reading = Reading::Adopted,
                                       int p_max = 3,
                                       std::array<int, 2> window = {5, 5});

} // namespace trigon
