#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "thop/evaluator.hpp"
#include "thop/model.hpp"
#include "thop/rng.hpp"

namespace thop {

/// Exponent triple of the item score; non-negative and summing to 1.
struct ScoreWeights {
    double theta = 1.0 / 3.0;  // profit exponent
    double delta = 1.0 / 3.0;  // weight exponent
    double gamma = 1.0 / 3.0;  // distance exponent
};

inline ScoreWeights draw_weights(Rng& rng) {
    for (;;) {
        double a = rng.uniform01(), b = rng.uniform01(), c = rng.uniform01();
        double sum = a + b + c;
        if (sum < 1e-12) continue;
        return {a / sum, b / sum, c / sum};
    }
}

/// Sum of consecutive-leg distances along the tour from the item's city to
/// the final city.
inline long long suffix_distance(const Item& item, const std::vector<int>& tour,
                                 const Instance& inst) {
    auto pos = std::find(tour.begin(), tour.end(), item.city);
    if (pos == tour.end())
        throw InputError("item " + std::to_string(item.id) + " is at city " +
                         std::to_string(item.city) + ", which is not on the tour");
    long long d = 0;
    for (auto it = pos; it + 1 != tour.end(); ++it) d += inst.distance(*it, *(it + 1));
    return d;
}

/// s_i = p^theta / (w^delta * d^gamma)
inline double score(const Item& item, double suffix_dist, const ScoreWeights& w) {
    return std::pow(static_cast<double>(item.profit), w.theta) /
           (std::pow(static_cast<double>(item.weight), w.delta) *
            std::pow(suffix_dist, w.gamma));
}

namespace detail {

// Items on the tour ordered by decreasing score; ties broken by lower id.
inline std::vector<int> score_order(const std::vector<long long>& suffix_dists,
                                    const ScoreWeights& w, const Instance& inst) {
    std::vector<std::pair<double, int>> scored;
    scored.reserve(static_cast<std::size_t>(inst.m));
    for (const Item& it : inst.items) {
        long long d = suffix_dists[static_cast<std::size_t>(it.id - 1)];
        if (d < 0) continue;  // city not on tour
        scored.emplace_back(score(it, static_cast<double>(d), w), it.id);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<int> order;
    order.reserve(scored.size());
    for (const auto& [s, id] : scored) order.push_back(id);
    return order;
}

// Suffix distance per item on the given tour, -1 for items off the tour.
inline std::vector<long long> tour_suffix_distances(const std::vector<int>& tour,
                                                    const Instance& inst) {
    std::vector<long long> to_end(static_cast<std::size_t>(inst.n) + 1, -1);
    long long acc = 0;
    to_end[static_cast<std::size_t>(tour.back())] = 0;
    for (std::size_t k = tour.size() - 1; k-- > 0;) {
        acc += inst.distance(tour[k], tour[k + 1]);
        to_end[static_cast<std::size_t>(tour[k])] = acc;
    }
    std::vector<long long> per_item(static_cast<std::size_t>(inst.m), -1);
    for (const Item& it : inst.items)
        per_item[static_cast<std::size_t>(it.id - 1)] = to_end[static_cast<std::size_t>(it.city)];
    return per_item;
}

// One greedy sweep over a precomputed score order. Recomputes the pruned-tour
// travel time from scratch for each tentative item.
inline std::vector<int> greedy_sweep(const std::vector<int>& tour, const std::vector<int>& order,
                                     const Instance& inst) {
    std::vector<int> selected;
    long long weight = 0;
    for (int id : order) {
        const Item& it = inst.item(id);
        if (weight + it.weight > inst.capacity) continue;
        selected.push_back(id);
        Solution tentative{prune_tour(tour, selected, inst), selected};
        std::sort(tentative.plan.begin(), tentative.plan.end());
        if (evaluate(tentative, inst).time > inst.max_time + kTimeTolerance) {
            selected.pop_back();
        } else {
            weight += it.weight;
        }
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

}  // namespace detail

/// One attempt of the packing heuristic: items considered in decreasing score
/// order, each kept only if both the capacity and the time limit survive.
inline std::vector<int> greedy_pack_once(const std::vector<int>& tour, const ScoreWeights& w,
                                         const Instance& inst) {
    std::vector<long long> dists = detail::tour_suffix_distances(tour, inst);
    return detail::greedy_sweep(tour, detail::score_order(dists, w, inst), inst);
}

/// Multi-try packing: ptries attempts with fresh random exponents, best
/// profit wins. Suffix distances are fixed on the full tour across attempts.
inline std::vector<int> pack(const std::vector<int>& tour, int ptries, Rng& rng,
                             const Instance& inst) {
    if (ptries < 1) throw InputError("ptries must be at least 1");
    std::vector<long long> dists = detail::tour_suffix_distances(tour, inst);
    std::vector<int> best;
    long long best_profit = -1;
    for (int t = 0; t < ptries; ++t) {
        ScoreWeights w = draw_weights(rng);
        std::vector<int> z = detail::greedy_sweep(tour, detail::score_order(dists, w, inst), inst);
        long long profit = 0;
        for (int id : z) profit += inst.item(id).profit;
        if (profit > best_profit) {
            best_profit = profit;
            best = std::move(z);
        }
    }
    return best;
}

inline long long plan_profit(const std::vector<int>& plan, const Instance& inst) {
    long long p = 0;
    for (int id : plan) p += inst.item(id).profit;
    return p;
}

/// Fractional knapsack optimum: greedy by profit/weight ratio, taking a
/// fraction of the first overflowing item. Upper bound on every feasible
/// ThOP profit.
inline double fractional_kp_ub(const Instance& inst) {
    std::vector<int> order(static_cast<std::size_t>(inst.m));
    for (int i = 0; i < inst.m; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Item &ia = inst.item(a), &ib = inst.item(b);
        long long lhs = ia.profit * ib.weight, rhs = ib.profit * ia.weight;
        if (lhs != rhs) return lhs > rhs;
        return a < b;
    });
    double ub = 0.0;
    long long remaining = inst.capacity;
    for (int id : order) {
        const Item& it = inst.item(id);
        if (it.weight <= remaining) {
            ub += static_cast<double>(it.profit);
            remaining -= it.weight;
        } else {
            ub += static_cast<double>(it.profit) * static_cast<double>(remaining) /
                  static_cast<double>(it.weight);
            break;
        }
    }
    return ub;
}

}  // namespace thop
