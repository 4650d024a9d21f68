#pragma once

#include "ramsey/bounds.hpp"

#include <optional>
#include <vector>

namespace ramsey {

// A partition of the integers 1..N into n blocks.
class SchurPartition {
public:
    SchurPartition(unsigned bound, unsigned block_count);

    unsigned bound() const { return bound_; }  // N
    unsigned block_count() const { return block_count_; }

    unsigned block(unsigned v) const;  // v in 1..N
    void set_block(unsigned v, unsigned b);

    friend bool operator==(const SchurPartition& a, const SchurPartition& b) {
        return a.bound_ == b.bound_ && a.block_count_ == b.block_count_ &&
               a.blocks_ == b.blocks_;
    }

private:
    unsigned bound_;
    unsigned block_count_;
    std::vector<std::uint8_t> blocks_;
};

// x + y = z with x <= y and all three in one block. x = y is allowed:
// 1 + 1 = 2 in a single block already counts.
struct SchurViolation {
    unsigned x = 0;
    unsigned y = 0;
    unsigned z = 0;
};

// The smallest violation in lexicographic (z, x) order, or absent when
// the partition is sum-free.
std::optional<SchurViolation> find_schur_violation(const SchurPartition& p);

// computed_s <= upper_R(n) - 2 and, for n >= 2, computed_s <= floor(n!e) - 1
// — the two classical inequalities tying S(n) to R_n(3). kb must be
// normalized through n.
bool check_schur_ramsey_link(unsigned n, const KnowledgeBase& kb, const Natural& computed_s);

}  // namespace ramsey
