#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/schur.hpp"

#include <cstdint>
#include <optional>

namespace ramsey {

// Node-count limit for the backtracking searches. A node is one accepted
// assignment (an edge receiving a color, or an integer joining a block).
// In the parallel coloring search the limit applies to the shared prefix
// enumeration and to each branch independently, keeping the outcome
// deterministic for any worker count.
struct SearchBudget {
    std::uint64_t max_nodes = 500'000'000;
};

// Outcome of exists_good_coloring. An absent witness is a proof: the
// search exhausted every coloring (up to symmetry) without finding a
// triangle-free one. Running out of budget throws BudgetExceeded instead.
struct ColoringSearch {
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;
};

// Searches for an n-coloring of the edges of K_N with no monochromatic
// triangle. Backtracking over edges in colex order (so a colored K_m is
// extended to K_{m+1}), pruning as soon as a new edge closes a
// monochromatic triangle, with colors introduced in increasing order
// (color c+1 is available only once color c has been used).
//
// With more than one worker the tree is split at a fixed depth into
// branches searched independently; the witness returned is the one from
// the lexicographically first successful branch and the node count is
// prefix + sum over branches up to and including it, so witness and count
// are identical for every worker count. Requires n >= 1 and N <= 64.
ColoringSearch exists_good_coloring(unsigned N, unsigned n, const SearchBudget& budget = {},
                                    unsigned workers = 1);

// Largest N the Schur search may examine (sum bitsets are sized for it).
inline constexpr unsigned kMaxSchurLimit = 320;

// Outcome of schur_number. When exceeds_limit is false, value is S(n)
// exactly: the largest N <= limit whose integers 1..N admit a sum-free
// partition into n blocks, established by exhausting all partitions of
// 1..value+1. When exceeds_limit is true even 1..limit admits one, so
// S(n) >= limit and value == limit. witness realizes 1..value.
struct SchurSearch {
    bool exceeds_limit = false;
    unsigned value = 0;
    std::uint64_t nodes = 0;
    std::optional<SchurPartition> witness;
};

// Exhaustive backtracking: integers 1, 2, 3, ... are assigned to blocks in
// order, pruning any assignment that creates x + y = z inside a block
// (x = y allowed), with symmetry breaking (1 goes to block 0; block j+1 is
// available only once block j is nonempty). Requires n >= 1 and
// 1 <= limit <= kMaxSchurLimit.
SchurSearch schur_number(unsigned n, unsigned limit, const SearchBudget& budget = {});

}  // namespace ramsey
