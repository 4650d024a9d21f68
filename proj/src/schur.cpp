#include "ramsey/schur.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

SchurPartition::SchurPartition(unsigned bound, unsigned block_count)
    : bound_(bound), block_count_(block_count), blocks_(bound, 0) {
    if (bound == 0)
        throw std::domain_error("SchurPartition: bound must be at least 1");
    if (block_count == 0 || block_count > 255)
        throw std::domain_error("SchurPartition: block count must be in 1..255");
}

unsigned SchurPartition::block(unsigned v) const {
    if (v < 1 || v > bound_)
        throw std::domain_error("SchurPartition: integer out of range");
    return blocks_[v - 1];
}

void SchurPartition::set_block(unsigned v, unsigned b) {
    if (v < 1 || v > bound_)
        throw std::domain_error("SchurPartition: integer out of range");
    if (b >= block_count_)
        throw std::domain_error("SchurPartition: block " + std::to_string(b) + " out of range");
    blocks_[v - 1] = static_cast<std::uint8_t>(b);
}

std::optional<SchurViolation> find_schur_violation(const SchurPartition& p) {
    unsigned N = p.bound();
    for (unsigned z = 2; z <= N; ++z) {
        unsigned bz = p.block(z);
        for (unsigned x = 1; 2 * x <= z; ++x) {
            unsigned y = z - x;
            if (p.block(x) == bz && p.block(y) == bz)
                return SchurViolation{x, y, z};
        }
    }
    return std::nullopt;
}

bool check_schur_ramsey_link(unsigned n, const KnowledgeBase& kb, const Natural& computed_s) {
    const KnowledgeBaseEntry* entry = kb.find(n);
    if (!entry)
        throw std::domain_error("check_schur_ramsey_link: knowledge base has no entry for n=" +
                                std::to_string(n) + " (normalize it through n first)");
    if (computed_s > entry->upper - 2)
        return false;
    if (n >= 2 && computed_s > floor_factorial_e(n) - 1)
        return false;
    return true;
}

}  // namespace ramsey
