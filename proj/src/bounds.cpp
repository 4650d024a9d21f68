#include "ramsey/bounds.hpp"

#include "ramsey/errors.hpp"
#include "line_reader.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace ramsey {

KnowledgeBase KnowledgeBase::defaults() {
    KnowledgeBase kb;
    kb.set({1, 3, 3, "exact (trivial)"});
    kb.set({2, 6, 6, "exact (Greenwood-Gleason 1955)"});
    kb.set({3, 17, 17, "exact (Greenwood-Gleason 1955)"});
    kb.set({4, 51, 62, "interval (Chung 1973; Fettes-Kramer-Radziszowski 2004)"});
    kb.set({5, 162, 307, "interval (Exoo 1994; recursion from n=4)"});
    return kb;
}

KnowledgeBase KnowledgeBase::parse(std::istream& in, const std::string& source) {
    KnowledgeBase kb;
    detail::LineReader reader(in);
    std::string line;
    std::size_t lineno = 0;
    while (reader.next(line, lineno)) {
        std::istringstream fields(line);
        std::string tok_n, tok_lower, tok_upper;
        if (!(fields >> tok_n >> tok_lower >> tok_upper))
            throw FormatError(source, lineno, "expected: n lower upper provenance...");
        KnowledgeBaseEntry entry;
        entry.n = detail::parse_unsigned(tok_n, source, lineno);
        entry.lower = detail::parse_natural(tok_lower, source, lineno);
        entry.upper = detail::parse_natural(tok_upper, source, lineno);
        std::getline(fields, entry.provenance);
        auto begin = entry.provenance.find_first_not_of(" \t");
        entry.provenance = begin == std::string::npos ? "" : entry.provenance.substr(begin);
        if (kb.find(entry.n))
            throw FormatError(source, lineno, "duplicate entry for n=" + std::to_string(entry.n));
        try {
            kb.set(std::move(entry));
        } catch (const std::domain_error& e) {
            throw FormatError(source, lineno, e.what());
        }
    }
    return kb;
}

KnowledgeBase KnowledgeBase::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError(path, 0, "cannot open file");
    return parse(in, path);
}

void KnowledgeBase::set(KnowledgeBaseEntry entry) {
    if (entry.n < 1)
        throw std::domain_error("knowledge base: n must be at least 1");
    if (entry.lower < 3)
        throw std::domain_error("knowledge base: lower bound below 3 at n=" +
                                std::to_string(entry.n));
    if (entry.lower > entry.upper)
        throw std::domain_error("knowledge base: lower exceeds upper at n=" +
                                std::to_string(entry.n));
    entries_[entry.n] = std::move(entry);
}

bool KnowledgeBase::assume(unsigned k, const Natural& upper) {
    if (k < 2)
        throw std::domain_error("assumptions reference k >= 2");
    const KnowledgeBaseEntry* stored = find(k);
    Natural lower = stored ? stored->lower : Natural(3);
    if (upper < lower)
        throw std::domain_error("assumed R_" + std::to_string(k) + "(3) <= " + upper.str() +
                                " contradicts the known lower bound " + lower.str());
    if (stored && upper >= stored->upper)
        return false;
    set({k, lower, upper, "assumption"});
    return true;
}

const KnowledgeBaseEntry* KnowledgeBase::find(unsigned n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? nullptr : &it->second;
}

Natural gg_step(unsigned n, const Natural& prev_upper) {
    if (n < 2)
        throw std::domain_error("gg_step: recursion defined for n >= 2");
    if (prev_upper < 3)
        throw std::domain_error("gg_step: previous upper bound must be at least 3");
    return Natural(n) * (prev_upper - 1) + 2;
}

AdaptiveBound adaptive_from_anchor(unsigned k, const Natural& upper_k) {
    if (k < 2)
        throw std::domain_error("adaptive_from_anchor: anchors require k >= 2");
    Natural e_floor = floor_factorial_e(k);
    if (upper_k > e_floor + 1)
        throw std::domain_error("adaptive_from_anchor: anchor " + upper_k.str() +
                                " is weaker than the unconditional floor(k!e)+1 = " +
                                Natural(e_floor + 1).str());
    AdaptiveBound b;
    b.k = k;
    b.a = checked_sub(e_floor + 1, upper_k);
    b.q = ExactRational::fraction(b.a, factorial(k));
    return b;
}

Natural closed_form_bound(const AdaptiveBound& b, unsigned n) {
    if (n < b.k)
        throw std::domain_error("closed_form_bound: bound only valid for n >= k");
    return floor_scaled(n, b.q) + 1;
}

Natural propagate_recursive(unsigned k, const Natural& upper_k, unsigned n) {
    if (k < 2)
        throw std::domain_error("propagate_recursive: recursion starts at k >= 2");
    if (n < k)
        throw std::domain_error("propagate_recursive: target n below anchor k");
    Natural value = upper_k;
    for (unsigned m = k + 1; m <= n; ++m)
        value = gg_step(m, value);
    return value;
}

bool check_optimality_remark(unsigned k, const Natural& upper_k) {
    if (k < 2)
        throw std::domain_error("check_optimality_remark: anchors require k >= 2");
    Natural e_floor = floor_factorial_e(k);
    if (upper_k > e_floor + 1)
        throw std::domain_error("check_optimality_remark: anchor weaker than unconditional bound");
    Natural a_prime = checked_sub(e_floor + 2, upper_k);
    ExactRational q_prime = ExactRational::fraction(a_prime, factorial(k));
    // The bound with a' must already fail at n = k, landing exactly one
    // short of the anchor: f'(k) = upper_k - 1 < upper_k.
    return floor_scaled(k, q_prime) + 2 == upper_k;
}

KnowledgeBase normalize_kb(const KnowledgeBase& kb, unsigned max_n) {
    if (kb.empty())
        throw std::domain_error("normalize_kb: empty knowledge base");
    unsigned first = kb.entries().begin()->first;
    if (first > max_n)
        throw std::domain_error("normalize_kb: no entry at or below max_n");
    KnowledgeBase out;
    Natural prev_upper;
    for (unsigned n = first; n <= max_n; ++n) {
        const KnowledgeBaseEntry* stored = kb.find(n);
        KnowledgeBaseEntry entry;
        if (n == first) {
            entry = *stored;
        } else {
            Natural rec = gg_step(n, prev_upper);
            if (stored) {
                if (rec < stored->lower)
                    throw std::domain_error("normalize_kb: recursion gives " + rec.str() +
                                            " below the stored lower bound " +
                                            stored->lower.str() + " at n=" + std::to_string(n));
                entry = *stored;
                if (rec < entry.upper) {
                    entry.upper = rec;
                    entry.provenance = "recursion from n=" + std::to_string(n - 1);
                }
            } else {
                entry = {n, 3, rec, "recursion from n=" + std::to_string(n - 1)};
            }
        }
        prev_upper = entry.upper;
        out.set(std::move(entry));
    }
    return out;
}

Natural schur_upper(unsigned n, const KnowledgeBase& kb) {
    if (n < 2)
        throw std::domain_error("schur_upper: bound stated for n >= 2");
    const KnowledgeBaseEntry* entry = kb.find(n);
    if (!entry)
        throw std::domain_error("schur_upper: knowledge base has no entry for n=" +
                                std::to_string(n) + " (normalize it through n first)");
    Natural via_ramsey = checked_sub(entry->upper, 2);
    Natural via_euler = floor_factorial_e(n) - 1;
    return via_ramsey < via_euler ? via_ramsey : via_euler;
}

std::vector<BoundTableRow> best_bounds_table(const KnowledgeBase& kb, unsigned max_n) {
    KnowledgeBase norm = normalize_kb(kb, max_n);
    unsigned first = norm.entries().begin()->first;
    std::vector<BoundTableRow> rows;
    Natural prev_best;
    for (unsigned n = first; n <= max_n; ++n) {
        const KnowledgeBaseEntry* entry = norm.find(n);
        BoundTableRow row;
        row.n = n;
        row.lower = entry->lower;
        // Candidate order fixes the tie-break: anchors by ascending k,
        // then the recursion, then the bare stored estimate.
        for (const auto& [k, anchor_entry] : kb.entries()) {
            if (k < 2 || k > n)
                continue;
            BoundCandidate c;
            c.kind = BoundCandidate::Kind::anchor;
            c.anchor_k = k;
            AdaptiveBound b = adaptive_from_anchor(k, norm.find(k)->upper);
            c.a = b.a;
            c.q = b.q;
            c.value = closed_form_bound(b, n);
            c.label = "anchor k=" + std::to_string(k) + " (q=" + b.q.str() + ")";
            row.candidates.push_back(std::move(c));
        }
        if (n > first) {
            BoundCandidate c;
            c.kind = BoundCandidate::Kind::recursion;
            c.value = gg_step(n, prev_best);
            c.label = "recursion from n=" + std::to_string(n - 1);
            row.candidates.push_back(std::move(c));
        }
        if (const KnowledgeBaseEntry* stored = kb.find(n)) {
            BoundCandidate c;
            c.kind = BoundCandidate::Kind::stored;
            c.value = stored->upper;
            c.label = "stored";
            row.candidates.push_back(std::move(c));
        }
        row.winner = 0;
        for (std::size_t i = 1; i < row.candidates.size(); ++i)
            if (row.candidates[i].value < row.candidates[row.winner].value)
                row.winner = i;
        row.best_upper = row.candidates[row.winner].value;
        prev_best = row.best_upper;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ramsey
