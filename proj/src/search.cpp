#include "ramsey/search.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <cstddef>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace ramsey {

namespace {

// How often the branch workers poll the shared abort flag, in nodes.
constexpr std::uint64_t kAbortPollMask = 1023;

// Depth (in edges) at which the coloring tree is split into branches.
// Fixed — independent of the worker count — so node totals and the chosen
// witness never depend on parallelism.
constexpr std::size_t kSplitDepth = 6;

// Backtracking over the edges of K_N in colex order. Per-color adjacency
// bitmasks make the triangle test two loads and an AND: edge {i, j} in
// color c closes a monochromatic triangle iff some vertex is already
// c-adjacent to both i and j.
class TriangleFreeSearch {
public:
    // on_complete is invoked with the assignment and the number of colors
    // in use whenever stop_depth edges are colored; returning true stops
    // the whole search with that assignment in place.
    TriangleFreeSearch(unsigned N, unsigned n, std::size_t stop_depth, std::uint64_t max_nodes,
                       std::function<bool(const std::vector<std::uint8_t>&, unsigned)> on_complete,
                       std::function<bool()> should_abort = {})
        : n_(n),
          stop_depth_(stop_depth),
          max_nodes_(max_nodes),
          on_complete_(std::move(on_complete)),
          should_abort_(std::move(should_abort)),
          adj_(n) {
        for (unsigned j = 1; j < N; ++j)
            for (unsigned i = 0; i < j; ++i)
                edges_.emplace_back(i, j);
        for (auto& masks : adj_)
            masks.fill(0);
        assignment_.reserve(edges_.size());
    }

    // Replays an already-validated prefix, returning the color-use count.
    unsigned replay(const std::vector<std::uint8_t>& prefix) {
        unsigned used = 0;
        for (std::size_t depth = 0; depth < prefix.size(); ++depth) {
            unsigned c = prefix[depth];
            apply(depth, c);
            if (c == used)
                ++used;
        }
        return used;
    }

    bool run(unsigned used) { return dfs(assignment_.size(), used); }

    // After run() returns true the full winning assignment is in place.
    const std::vector<std::uint8_t>& assignment() const { return assignment_; }

    std::uint64_t nodes() const { return nodes_; }
    bool budget_hit() const { return budget_hit_; }
    bool aborted() const { return aborted_; }

private:
    void apply(std::size_t depth, unsigned c) {
        auto [i, j] = edges_[depth];
        adj_[c][i] |= 1ull << j;
        adj_[c][j] |= 1ull << i;
        assignment_.push_back(static_cast<std::uint8_t>(c));
    }

    void undo(std::size_t depth, unsigned c) {
        auto [i, j] = edges_[depth];
        adj_[c][i] &= ~(1ull << j);
        adj_[c][j] &= ~(1ull << i);
        assignment_.pop_back();
    }

    // Counts an accepted assignment against the budget and abort flag.
    bool accept() {
        if (nodes_ == max_nodes_) {
            budget_hit_ = true;
            return false;
        }
        ++nodes_;
        if ((nodes_ & kAbortPollMask) == 0 && should_abort_ && should_abort_()) {
            aborted_ = true;
            return false;
        }
        return true;
    }

    bool dfs(std::size_t depth, unsigned used) {
        if (depth == stop_depth_)
            return on_complete_(assignment_, used);
        auto [i, j] = edges_[depth];
        // Color symmetry breaking: a fresh color may be opened only in
        // sequence, so color c+1 is an option only once c has been used.
        unsigned last = std::min(used, n_ - 1);
        for (unsigned c = 0; c <= last; ++c) {
            if (adj_[c][i] & adj_[c][j])
                continue;  // would close a monochromatic triangle
            if (budget_hit_ || aborted_ || !accept())
                return false;
            apply(depth, c);
            if (dfs(depth + 1, c == used ? used + 1 : used))
                return true;
            undo(depth, c);
        }
        return false;
    }

    unsigned n_;
    std::size_t stop_depth_;
    std::uint64_t max_nodes_;
    std::function<bool(const std::vector<std::uint8_t>&, unsigned)> on_complete_;
    std::function<bool()> should_abort_;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges_;
    std::vector<std::array<std::uint64_t, 64>> adj_;
    std::vector<std::uint8_t> assignment_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    bool aborted_ = false;
};

struct BranchSeed {
    std::vector<std::uint8_t> colors;
    unsigned used = 0;
};

struct BranchOutcome {
    enum class Kind { pending, found, exhausted, budget, aborted };
    Kind kind = Kind::pending;
    std::uint64_t nodes = 0;
    std::vector<std::uint8_t> assignment;
};

EdgeColoring coloring_from_assignment(unsigned N, unsigned n,
                                      const std::vector<std::uint8_t>& assignment) {
    EdgeColoring c(N, n);
    std::size_t index = 0;
    for (unsigned j = 1; j < N; ++j)
        for (unsigned i = 0; i < j; ++i)
            c.set_color(i, j, assignment[index++]);
    return c;
}

}  // namespace

ColoringSearch exists_good_coloring(unsigned N, unsigned n, const SearchBudget& budget,
                                    unsigned workers) {
    if (n < 1 || n > 255)
        throw std::domain_error("exists_good_coloring: color count must be in 1..255");
    if (N > 64)
        throw std::domain_error("exists_good_coloring: bitmask search supports N <= 64");
    if (workers == 0)
        workers = 1;

    const std::size_t total_edges = EdgeColoring::edge_count(N);
    const std::size_t split = std::min(kSplitDepth, total_edges);

    // Phase 1: enumerate every triangle-free coloring of the first `split`
    // edges. This is always done in full (a few hundred prefixes at most),
    // so the branch list is the same whatever happens later.
    std::vector<BranchSeed> seeds;
    TriangleFreeSearch prefix(
        N, n, split, budget.max_nodes,
        [&seeds](const std::vector<std::uint8_t>& assignment, unsigned used) {
            seeds.push_back({assignment, used});
            return false;
        });
    prefix.run(0);
    if (prefix.budget_hit())
        throw BudgetExceeded(prefix.nodes());
    const std::uint64_t prefix_nodes = prefix.nodes();

    if (split == total_edges) {
        // The prefixes are complete colorings; the first one found is the
        // lexicographically first witness.
        ColoringSearch result;
        result.nodes = prefix_nodes;
        if (!seeds.empty())
            result.witness = coloring_from_assignment(N, n, seeds.front().colors);
        return result;
    }

    // Phase 2: search below each prefix independently, each branch with its
    // own node budget. first_found tracks the smallest branch index that
    // has produced a witness; branches beyond it may abort, branches before
    // it always run to completion, so the combined outcome is deterministic.
    std::vector<BranchOutcome> outcomes(seeds.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_found{seeds.size()};

    auto worker = [&]() {
        for (;;) {
            std::size_t b = next.fetch_add(1);
            if (b >= seeds.size())
                return;
            if (b > first_found.load()) {
                outcomes[b].kind = BranchOutcome::Kind::aborted;
                continue;
            }
            TriangleFreeSearch search(
                N, n, total_edges, budget.max_nodes,
                [](const std::vector<std::uint8_t>&, unsigned) { return true; },
                [&first_found, b]() { return b > first_found.load(); });
            unsigned used = search.replay(seeds[b].colors);
            bool found = search.run(used);
            BranchOutcome& out = outcomes[b];
            out.nodes = search.nodes();
            if (search.aborted()) {
                out.kind = BranchOutcome::Kind::aborted;
            } else if (found) {
                out.kind = BranchOutcome::Kind::found;
                out.assignment = search.assignment();
                std::size_t cur = first_found.load();
                while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
                }
            } else if (search.budget_hit()) {
                out.kind = BranchOutcome::Kind::budget;
            } else {
                out.kind = BranchOutcome::Kind::exhausted;
            }
        }
    };

    std::size_t thread_count = std::min<std::size_t>(workers, seeds.size());
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::size_t t = 0; t < thread_count; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    std::size_t winner = seeds.size();
    for (std::size_t b = 0; b < seeds.size(); ++b)
        if (outcomes[b].kind == BranchOutcome::Kind::found) {
            winner = b;
            break;
        }

    ColoringSearch result;
    if (winner < seeds.size()) {
        result.nodes = prefix_nodes;
        for (std::size_t b = 0; b <= winner; ++b)
            result.nodes += outcomes[b].nodes;
        result.witness = coloring_from_assignment(N, n, outcomes[winner].assignment);
        return result;
    }
    std::uint64_t total = prefix_nodes;
    bool budget_hit = false;
    for (const BranchOutcome& out : outcomes) {
        total += out.nodes;
        budget_hit = budget_hit || out.kind == BranchOutcome::Kind::budget;
    }
    if (budget_hit)
        throw BudgetExceeded(total);
    result.nodes = total;
    return result;
}

namespace {

// Sum-free partition backtracking. members[b] has bit v set when v is in
// block b; sums[b] has bit s set when s = x + y for some x, y already in b
// (x = y included). Placing v in b is legal iff sums[b] misses bit v, and
// the update is one shift-or: after members[b].set(v),
// sums[b] |= members[b] << v covers both v + x and v + v.
using SchurBits = std::bitset<kMaxSchurLimit + 1>;

class SchurDfs {
public:
    SchurDfs(unsigned n, unsigned limit, std::uint64_t max_nodes)
        : n_(n), limit_(limit), max_nodes_(max_nodes), members_(n), sums_(n),
          assignment_(limit, 0) {}

    void run() { dfs(1, 0); }

    unsigned best() const { return best_; }
    bool exceeds_limit() const { return exceeds_; }
    std::uint64_t nodes() const { return nodes_; }
    bool budget_hit() const { return budget_hit_; }
    const std::vector<std::uint8_t>& best_assignment() const { return best_assignment_; }

private:
    bool dfs(unsigned v, unsigned used) {
        if (v > limit_) {
            // All of 1..limit placed: S(n) is at least the whole window.
            exceeds_ = true;
            return true;
        }
        unsigned last = std::min(used, n_ - 1);
        for (unsigned b = 0; b <= last; ++b) {
            if (sums_[b].test(v))
                continue;  // v = x + y inside block b
            if (budget_hit_) {
                return false;
            }
            if (nodes_ == max_nodes_) {
                budget_hit_ = true;
                return false;
            }
            ++nodes_;
            assignment_[v - 1] = static_cast<std::uint8_t>(b);
            if (v > best_) {
                best_ = v;
                best_assignment_.assign(assignment_.begin(), assignment_.begin() + v);
            }
            members_[b].set(v);
            SchurBits saved = sums_[b];
            sums_[b] |= members_[b] << v;
            if (dfs(v + 1, b == used ? used + 1 : used))
                return true;
            sums_[b] = saved;
            members_[b].reset(v);
        }
        return false;
    }

    unsigned n_;
    unsigned limit_;
    std::uint64_t max_nodes_;
    std::vector<SchurBits> members_;
    std::vector<SchurBits> sums_;
    std::vector<std::uint8_t> assignment_;
    std::vector<std::uint8_t> best_assignment_;
    unsigned best_ = 0;
    bool exceeds_ = false;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
};

}  // namespace

SchurSearch schur_number(unsigned n, unsigned limit, const SearchBudget& budget) {
    if (n < 1 || n > 255)
        throw std::domain_error("schur_number: block count must be in 1..255");
    if (limit < 1 || limit > kMaxSchurLimit)
        throw std::domain_error("schur_number: limit must be in 1.." +
                                std::to_string(kMaxSchurLimit));
    SchurDfs dfs(n, limit, budget.max_nodes);
    dfs.run();
    if (dfs.budget_hit())
        throw BudgetExceeded(dfs.nodes());
    SchurSearch result;
    result.exceeds_limit = dfs.exceeds_limit();
    result.value = dfs.best();
    result.nodes = dfs.nodes();
    if (!dfs.best_assignment().empty()) {
        SchurPartition p(dfs.best(), n);
        for (unsigned v = 1; v <= dfs.best(); ++v)
            p.set_block(v, dfs.best_assignment()[v - 1]);
        result.witness = p;
    }
    return result;
}

}  // namespace ramsey
