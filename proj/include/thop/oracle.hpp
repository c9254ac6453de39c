#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "thop/evaluator.hpp"
#include "thop/model.hpp"

namespace thop {

struct OracleResult {
    long long optimal_profit = 0;
    Solution best;
    long long feasible_count = 0;   // feasible (tour, plan) pairs examined
    bool found_feasible = false;
};

namespace detail {

inline void enumerate_plans(const std::vector<int>& tour, const std::vector<int>& tour_items,
                            const Instance& inst, OracleResult& out, bool require_all_cities_used) {
    std::size_t k = tour_items.size();
    std::vector<long long> weight_of(k), profit_of(k);
    for (std::size_t i = 0; i < k; ++i) {
        weight_of[i] = inst.item(tour_items[i]).weight;
        profit_of[i] = inst.item(tour_items[i]).profit;
    }
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
        long long weight = 0, profit = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) {
                weight += weight_of[i];
                profit += profit_of[i];
            }
        if (weight > inst.capacity) continue;
        Solution sol;
        sol.tour = tour;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) sol.plan.push_back(tour_items[i]);
        std::sort(sol.plan.begin(), sol.plan.end());
        if (require_all_cities_used && prune_tour(tour, sol.plan, inst) != tour) continue;
        Evaluation ev = evaluate(sol, inst);
        if (!ev.feasible) continue;
        ++out.feasible_count;
        if (!out.found_feasible || ev.profit > out.optimal_profit) {
            out.found_feasible = true;
            out.optimal_profit = ev.profit;
            out.best = std::move(sol);
        }
    }
}

inline OracleResult solve_exact_impl(const Instance& inst, int max_n, int max_m,
                                     bool require_all_cities_used) {
    if (inst.n > max_n || inst.m > max_m)
        throw InputError("instance too large for exhaustive search (n=" + std::to_string(inst.n) +
                         ", m=" + std::to_string(inst.m) + "; limits n<=" + std::to_string(max_n) +
                         ", m<=" + std::to_string(max_m) + ")");
    OracleResult out;
    out.best = {{1, inst.n}, {}};

    std::vector<int> interior;
    for (int c = 2; c < inst.n; ++c) interior.push_back(c);
    int ni = static_cast<int>(interior.size());

    // lexicographic over subsets, then lexicographic permutations
    for (std::uint32_t mask = 0; mask < (1U << ni); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < ni; ++i)
            if (mask >> i & 1) subset.push_back(interior[static_cast<std::size_t>(i)]);
        std::sort(subset.begin(), subset.end());
        do {
            std::vector<int> tour;
            tour.push_back(1);
            tour.insert(tour.end(), subset.begin(), subset.end());
            tour.push_back(inst.n);
            std::vector<int> tour_items;
            for (int c : subset)
                for (int id : inst.items_at[static_cast<std::size_t>(c)]) tour_items.push_back(id);
            std::sort(tour_items.begin(), tour_items.end());
            enumerate_plans(tour, tour_items, inst, out, require_all_cities_used);
        } while (std::next_permutation(subset.begin(), subset.end()));
    }
    return out;
}

}  // namespace detail

/// Exhaustive ground truth: every interior-city subset, every ordering, every
/// item subset. Deterministic, including the witness solution. Refuses
/// instances beyond (max_n, max_m).
inline OracleResult solve_exact(const Instance& inst, int max_n = 10, int max_m = 14) {
    return detail::solve_exact_impl(inst, max_n, max_m, /*require_all_cities_used=*/false);
}

/// Same search restricted to tours where every interior city hosts a stolen
/// item (i.e. zeta(tour, plan) == tour). Used to check pruning closure.
inline OracleResult solve_exact_pruned_only(const Instance& inst, int max_n = 10, int max_m = 14) {
    return detail::solve_exact_impl(inst, max_n, max_m, /*require_all_cities_used=*/true);
}

}  // namespace thop
