#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

namespace sgcc {

/// Search limits for the exact solvers. A zero/empty field means unlimited.
struct Budget {
    long long max_nodes = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget seconds(double s) {
        Budget b;
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(s));
        return b;
    }

    bool exhausted(long long nodes) const {
        if (max_nodes && nodes > max_nodes) return true;
        if (deadline && (nodes & 1023) == 0 && std::chrono::steady_clock::now() > *deadline) return true;
        return false;
    }
};

/// Weighted set cover over at most 64 elements.
struct SetCoverProblem {
    int elements = 0;
    std::vector<std::uint64_t> sets;
    std::vector<int> costs;
};

struct SetCoverResult {
    bool feasible = false;
    bool exact = false;  // false when the budget ran out (best found so far is reported)
    int cost = 0;
    std::vector<std::size_t> chosen;
    long long nodes = 0;
};

namespace detail {

class SetCoverSearch {
public:
    SetCoverSearch(const SetCoverProblem& p, const Budget& budget) : p_(p), budget_(budget) {
        containing_.resize(static_cast<std::size_t>(p.elements));
        for (std::size_t s = 0; s < p.sets.size(); ++s) {
            std::uint64_t w = p.sets[s];
            while (w) {
                containing_[static_cast<std::size_t>(std::countr_zero(w))].push_back(s);
                w &= w - 1;
            }
        }
        for (auto& list : containing_)
            std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
                return p_.costs[a] != p_.costs[b] ? p_.costs[a] < p_.costs[b] : a < b;
            });
    }

    SetCoverResult run(std::optional<int> upper_bound) {
        const std::uint64_t all = p_.elements == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p_.elements) - 1;
        for (int e = 0; e < p_.elements; ++e)
            if (containing_[static_cast<std::size_t>(e)].empty()) return result_;
        greedy(all);
        if (upper_bound && (!result_.feasible || *upper_bound < result_.cost)) {
            // The hint only tightens pruning; a witness must still be found.
            bound_ = *upper_bound + 1;
        }
        if (result_.feasible) bound_ = std::min(bound_, result_.cost);
        stack_.clear();
        search(all, 0);
        result_.exact = !aborted_;
        result_.nodes = nodes_;
        return result_;
    }

private:
    void greedy(std::uint64_t uncovered) {
        std::vector<std::size_t> chosen;
        int cost = 0;
        while (uncovered) {
            std::size_t best = 0;
            double best_ratio = std::numeric_limits<double>::max();
            for (std::size_t s = 0; s < p_.sets.size(); ++s) {
                int gain = std::popcount(p_.sets[s] & uncovered);
                if (!gain) continue;
                double r = static_cast<double>(p_.costs[s]) / gain;
                if (r < best_ratio) {
                    best_ratio = r;
                    best = s;
                }
            }
            chosen.push_back(best);
            cost += p_.costs[best];
            uncovered &= ~p_.sets[best];
        }
        // Drop redundant members, most expensive first.
        std::vector<std::size_t> order(chosen.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p_.costs[chosen[a]] > p_.costs[chosen[b]]; });
        std::vector<char> keep(chosen.size(), 1);
        for (std::size_t i : order) {
            std::uint64_t others = 0;
            for (std::size_t j = 0; j < chosen.size(); ++j)
                if (j != i && keep[j]) others |= p_.sets[chosen[j]];
            if ((p_.sets[chosen[i]] & ~others) == 0) {
                keep[i] = 0;
                cost -= p_.costs[chosen[i]];
            }
        }
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (keep[i]) kept.push_back(chosen[i]);
        offer(kept, cost);
    }

    void offer(const std::vector<std::size_t>& chosen, int cost) {
        if (result_.feasible && cost >= result_.cost) return;
        result_.feasible = true;
        result_.cost = cost;
        result_.chosen = chosen;
        std::sort(result_.chosen.begin(), result_.chosen.end());
        bound_ = std::min(bound_, cost);
    }

    // Sum over uncovered elements of the cheapest cost share any set offers them.
    double lower_bound(std::uint64_t uncovered) const {
        double lb = 0;
        std::uint64_t w = uncovered;
        while (w) {
            const auto e = static_cast<std::size_t>(std::countr_zero(w));
            w &= w - 1;
            double best = std::numeric_limits<double>::max();
            for (std::size_t s : containing_[e]) {
                double r = static_cast<double>(p_.costs[s]) / std::popcount(p_.sets[s] & uncovered);
                best = std::min(best, r);
            }
            lb += best;
        }
        return lb;
    }

    void search(std::uint64_t uncovered, int cost) {
        if (aborted_) return;
        if (budget_.exhausted(++nodes_)) {
            aborted_ = true;
            return;
        }
        if (!uncovered) {
            offer(stack_, cost);
            return;
        }
        if (cost + static_cast<int>(std::ceil(lower_bound(uncovered) - 1e-9)) >= bound_) return;
        if (auto it = seen_.find(uncovered); it != seen_.end() && it->second <= cost) return;
        seen_[uncovered] = cost;

        // Branch on the uncovered element with the fewest candidate sets.
        std::size_t pivot = 0;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        std::uint64_t w = uncovered;
        while (w) {
            auto e = static_cast<std::size_t>(std::countr_zero(w));
            w &= w - 1;
            if (containing_[e].size() < fewest) {
                fewest = containing_[e].size();
                pivot = e;
            }
        }
        // Sets with the same trace on the uncovered elements are interchangeable; keep the cheapest.
        std::unordered_map<std::uint64_t, std::size_t> by_trace;
        std::vector<std::size_t> candidates;
        for (std::size_t s : containing_[pivot]) {
            std::uint64_t trace = p_.sets[s] & uncovered;
            if (by_trace.emplace(trace, s).second) candidates.push_back(s);
        }
        // Most new coverage per unit cost first.
        std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
            long long ga = std::popcount(p_.sets[a] & uncovered);
            long long gb = std::popcount(p_.sets[b] & uncovered);
            long long lhs = ga * p_.costs[b];
            long long rhs = gb * p_.costs[a];
            return lhs != rhs ? lhs > rhs : a < b;
        });
        for (std::size_t s : candidates) {
            if (cost + p_.costs[s] >= bound_) continue;
            stack_.push_back(s);
            search(uncovered & ~p_.sets[s], cost + p_.costs[s]);
            stack_.pop_back();
            if (aborted_) return;
        }
    }

    const SetCoverProblem& p_;
    Budget budget_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<std::size_t> stack_;
    std::unordered_map<std::uint64_t, int> seen_;
    SetCoverResult result_;
    int bound_ = std::numeric_limits<int>::max();
    long long nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace detail

/// Exact minimum-cost set cover by branch and bound. `upper_bound`, when given, is a cost
/// known to be achievable and is used for pruning.
inline SetCoverResult solve_set_cover(const SetCoverProblem& p, const Budget& budget = {},
                                      std::optional<int> upper_bound = {}) {
    detail::SetCoverSearch search(p, budget);
    return search.run(upper_bound);
}

}  // namespace sgcc
