#pragma once

#include "ramsey/exact.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ramsey {

// One estimate R_n(3) in [lower, upper], with a free-text provenance note.
struct KnowledgeBaseEntry {
    unsigned n = 0;
    Natural lower;
    Natural upper;
    std::string provenance;
};

// Per-n estimates for R_n(3); at most one entry per n. Entries always
// satisfy 3 <= lower <= upper.
class KnowledgeBase {
public:
    // The shipped table of known values: R_1=3, R_2=6, R_3=17,
    // 51 <= R_4 <= 62, 162 <= R_5 <= 307.
    static KnowledgeBase defaults();

    // Text format, one record per line: n lower upper provenance...
    // '#' starts a comment; blank lines are ignored.
    static KnowledgeBase parse(std::istream& in, const std::string& source);
    static KnowledgeBase load(const std::string& path);

    // Inserts or replaces after validating the entry invariants.
    void set(KnowledgeBaseEntry entry);

    // Overlay: replace upper(k) by a strictly stronger assumed value,
    // tagged "assumption". Returns false (and leaves the base unchanged)
    // when the assumption does not strengthen the stored upper bound.
    // Throws std::domain_error for k < 2 or an assumption below the
    // stored lower bound.
    bool assume(unsigned k, const Natural& upper);

    const KnowledgeBaseEntry* find(unsigned n) const;
    const std::map<unsigned, KnowledgeBaseEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::map<unsigned, KnowledgeBaseEntry> entries_;
};

// Anchor data (k, a, q = a/k!) for the closed-form bound
// f(n) = floor(n!(e - q)) + 1, valid for n >= k.
struct AdaptiveBound {
    unsigned k = 0;
    Natural a;
    ExactRational q;
};

// One application of R_n(3) <= n (R_{n-1}(3) - 1) + 2.
Natural gg_step(unsigned n, const Natural& prev_upper);

// Largest admissible parameter: a = floor(k!e) - upper_k + 1, q = a/k!
// reduced. Requires k >= 2 and upper_k <= floor(k!e) + 1.
AdaptiveBound adaptive_from_anchor(unsigned k, const Natural& upper_k);

// f(n) = floor_scaled(n, b.q) + 1, defined for n >= b.k.
Natural closed_form_bound(const AdaptiveBound& b, unsigned n);

// gg_step applied for k+1, ..., n starting from upper_k (upper_k itself
// when n = k). Requires n >= k >= 2.
Natural propagate_recursive(unsigned k, const Natural& upper_k, unsigned n);

// With the one-larger parameter a' = floor(k!e) - upper_k + 2 and
// q' = a'/k!, checks that the bound already fails at n = k:
// floor(k!(e - q')) + 1 == upper_k - 1 < upper_k. In other words, the
// maximal admissible a cannot be improved.
bool check_optimality_remark(unsigned k, const Natural& upper_k);

// Closes the base under gg_step: for each n up to max_n (starting at the
// smallest stored n), upper(n) = min(stored upper, recursion from n-1),
// lower carried from storage (3 when absent). Entries beyond max_n are
// dropped. Throws std::domain_error on an empty base, or when recursion
// pushes an upper estimate below a stored lower bound (inconsistent base).
KnowledgeBase normalize_kb(const KnowledgeBase& kb, unsigned max_n);

// min(upper_R(n) - 2, floor(n!e) - 1), both classical upper bounds on the
// Schur number S(n). Requires n >= 2 and kb normalized through n.
Natural schur_upper(unsigned n, const KnowledgeBase& kb);

// One evaluated upper-bound route for a given n.
struct BoundCandidate {
    enum class Kind { anchor, recursion, stored };
    Kind kind = Kind::stored;
    unsigned anchor_k = 0;  // 0 unless kind == anchor
    Natural a;
    ExactRational q;
    Natural value;
    std::string label;  // e.g. "anchor k=4 (q=1/6)", "recursion from n=4"
};

struct BoundTableRow {
    unsigned n = 0;
    Natural lower;
    Natural best_upper;
    std::size_t winner = 0;  // index into candidates
    std::vector<BoundCandidate> candidates;
};

// For each n up to max_n: evaluates the closed form for the maximal
// AdaptiveBound of every stored anchor k <= n (k >= 2), plus the recursion
// from the previous row's best value, plus the stored estimate itself, and
// reports the minimum. Ties break toward the smallest anchor k, then
// closed form over recursion over stored — the tied values are equal, so
// the choice is purely presentational.
std::vector<BoundTableRow> best_bounds_table(const KnowledgeBase& kb, unsigned max_n);

}  // namespace ramsey
