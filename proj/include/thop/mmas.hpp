#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thop/evaluator.hpp"
#include "thop/model.hpp"
#include "thop/packing.hpp"
#include "thop/rng.hpp"

namespace thop {

struct MmasParams {
    int ants = 196;
    double alpha = 1.24;
    double beta = 5.46;
    double rho = 0.51;
    int ptries = 1;
    double time_budget_seconds = 0.0;  // <= 0: use ceil(m/10) seconds
    long long iteration_cap = 0;       // > 0: run exactly this many iterations, ignore the clock
    std::uint64_t seed = 1;
    int candidate_list_size = 20;
    int global_best_period = 25;       // global-best deposits every k-th iteration
    int stagnation_limit = 250;        // iterations without improvement before trail reset
    bool check_invariants = false;     // verify pheromone bounds after every update
};

struct PheromoneState {
    int n = 0;
    std::vector<double> tau;  // n*n, symmetric
    double tau_min = 0.0;
    double tau_max = 0.0;
    double best_cost = 0.0;

    double get(int a, int b) const { return tau[static_cast<std::size_t>(a - 1) * n + (b - 1)]; }
    void set(int a, int b, double v) {
        tau[static_cast<std::size_t>(a - 1) * n + (b - 1)] = v;
        tau[static_cast<std::size_t>(b - 1) * n + (a - 1)] = v;
    }
};

/// Cost the ACO minimizes: UB + 1 - p(z). Strictly positive; fitness = 1/cost.
inline double fitness_cost(double plan_profit, double ub) {
    if (plan_profit > ub + 1e-6)
        throw std::logic_error("plan profit exceeds the fractional knapsack bound");
    return ub + 1.0 - plan_profit;
}

namespace detail {

// Nearest neighbors per city, interior cities only (1 and n are never
// selectable during construction).
inline std::vector<std::vector<int>> candidate_lists(const Instance& inst, int size) {
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(inst.n) + 1);
    std::vector<int> interior;
    for (int c = 2; c < inst.n; ++c) interior.push_back(c);
    for (int c = 1; c <= inst.n; ++c) {
        std::vector<int> cand;
        for (int o : interior)
            if (o != c) cand.push_back(o);
        std::sort(cand.begin(), cand.end(), [&](int a, int b) {
            long long da = inst.distance(c, a), db = inst.distance(c, b);
            if (da != db) return da < db;
            return a < b;
        });
        if (static_cast<int>(cand.size()) > size) cand.resize(static_cast<std::size_t>(size));
        lists[static_cast<std::size_t>(c)] = std::move(cand);
    }
    return lists;
}

inline double edge_desirability(const PheromoneState& ph, const MmasParams& p,
                                const Instance& inst, int a, int b) {
    long long d = inst.distance(a, b);
    double eta = 1.0 / static_cast<double>(d == 0 ? 1 : d);
    return std::pow(ph.get(a, b), p.alpha) * std::pow(eta, p.beta);
}

inline int roulette_pick(const std::vector<int>& options, const std::vector<double>& weights,
                         double total, Rng& rng) {
    if (total <= 0.0) return options[rng.below(options.size())];
    double r = rng.uniform01() * total;
    for (std::size_t i = 0; i < options.size(); ++i) {
        r -= weights[i];
        if (r <= 0.0) return options[i];
    }
    return options.back();
}

inline std::vector<int> construct_tour_impl(const PheromoneState& ph, const MmasParams& params,
                                            Rng& rng, const Instance& inst,
                                            const std::vector<std::vector<int>>& candidates) {
    std::vector<int> tour;
    tour.reserve(static_cast<std::size_t>(inst.n));
    tour.push_back(1);
    std::vector<char> visited(static_cast<std::size_t>(inst.n) + 1, 0);
    visited[1] = 1;
    visited[static_cast<std::size_t>(inst.n)] = 1;  // appended at the end, never drawn
    int remaining = inst.n - 2;
    std::vector<int> options;
    std::vector<double> weights;
    int current = 1;
    while (remaining > 0) {
        options.clear();
        weights.clear();
        double total = 0.0;
        for (int c : candidates[static_cast<std::size_t>(current)]) {
            if (visited[static_cast<std::size_t>(c)]) continue;
            double w = edge_desirability(ph, params, inst, current, c);
            options.push_back(c);
            weights.push_back(w);
            total += w;
        }
        if (options.empty() || total <= 0.0) {
            // fallback: all unvisited interior cities
            options.clear();
            weights.clear();
            total = 0.0;
            for (int c = 2; c < inst.n; ++c) {
                if (visited[static_cast<std::size_t>(c)]) continue;
                double w = edge_desirability(ph, params, inst, current, c);
                options.push_back(c);
                weights.push_back(w);
                total += w;
            }
        }
        int next = roulette_pick(options, weights, total, rng);
        visited[static_cast<std::size_t>(next)] = 1;
        tour.push_back(next);
        current = next;
        --remaining;
    }
    tour.push_back(inst.n);
    return tour;
}

}  // namespace detail

/// One probabilistic Hamiltonian path 1 -> interior cities -> n, next city
/// drawn proportionally to tau^alpha * (1/d)^beta.
inline std::vector<int> construct_tour(const PheromoneState& ph, const MmasParams& params,
                                       Rng& rng, const Instance& inst) {
    return detail::construct_tour_impl(ph, params, rng, inst,
                                       detail::candidate_lists(inst, params.candidate_list_size));
}

/// Evaporates all edges, deposits 1/cost on the depositing tour's edges, and
/// clamps to [tau_min, tau_max]. Bounds themselves are managed by the caller
/// (recomputed when the best cost improves).
inline void update_pheromone(PheromoneState& ph, const std::vector<int>& deposit_tour,
                             double cost, const MmasParams& params, const Instance& inst) {
    (void)inst;
    for (double& t : ph.tau) t *= (1.0 - params.rho);
    double delta = 1.0 / cost;
    for (std::size_t k = 0; k + 1 < deposit_tour.size(); ++k)
        ph.set(deposit_tour[k], deposit_tour[k + 1],
               ph.get(deposit_tour[k], deposit_tour[k + 1]) + delta);
    for (double& t : ph.tau) t = std::clamp(t, ph.tau_min, ph.tau_max);
}

struct IterationStat {
    long long iteration = 0;
    double elapsed_seconds = 0.0;
    long long iter_best_profit = 0;
    long long global_best_profit = 0;
    double tau_min = 0.0;
    double tau_max = 0.0;
};

struct SolveResult {
    Solution best;             // tour stored pruned
    Evaluation eval;
    double ub = 0.0;
    long long iterations = 0;
    std::vector<IterationStat> stats;
};

/// Full optimization loop: construct tours, pack each, keep the best plan by
/// profit, deposit pheromone from the iteration best (periodically the global
/// best), until the wall-clock budget or the iteration cap is reached.
inline SolveResult solve(const Instance& inst, const MmasParams& params) {
    SolveResult res;
    res.ub = fractional_kp_ub(inst);
    res.best = {{1, inst.n}, {}};
    res.eval = evaluate(res.best, inst);
    if (inst.n == 2 || inst.m == 0) return res;

    auto t0 = std::chrono::steady_clock::now();
    double budget = params.time_budget_seconds > 0.0
                        ? params.time_budget_seconds
                        : std::ceil(static_cast<double>(inst.m) / 10.0);
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    const std::vector<std::vector<int>> candidates =
        detail::candidate_lists(inst, params.candidate_list_size);

    PheromoneState ph;
    ph.n = inst.n;
    ph.best_cost = res.ub + 1.0;  // empty plan
    ph.tau_max = 1.0 / (params.rho * ph.best_cost);
    ph.tau_min = ph.tau_max / (2.0 * inst.n);
    ph.tau.assign(static_cast<std::size_t>(inst.n) * inst.n, ph.tau_max);

    long long best_profit = 0;
    int since_improvement = 0;
    bool first_solution_seen = false;

    for (long long iter = 0;; ++iter) {
        if (params.iteration_cap > 0) {
            if (iter >= params.iteration_cap) break;
        } else if (iter > 0 && elapsed() >= budget) {
            break;
        }

        Solution iter_best;
        long long iter_best_profit = -1;
        for (int ant = 0; ant < params.ants; ++ant) {
            Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(iter),
                             static_cast<std::uint64_t>(ant)));
            std::vector<int> tour = detail::construct_tour_impl(ph, params, rng, inst, candidates);
            std::vector<int> plan = pack(tour, params.ptries, rng, inst);
            long long profit = plan_profit(plan, inst);
            if (profit > iter_best_profit) {
                iter_best_profit = profit;
                iter_best = {prune_tour(tour, plan, inst), plan};
            }
        }
        bool improved = iter_best_profit > best_profit;
        if (improved) {
            best_profit = iter_best_profit;
            res.best = iter_best;
            res.eval = evaluate(res.best, inst);
        }

        if (improved || !first_solution_seen) {
            ph.best_cost = fitness_cost(static_cast<double>(best_profit), res.ub);
            ph.tau_max = 1.0 / (params.rho * ph.best_cost);
            ph.tau_min = ph.tau_max / (2.0 * inst.n);
            if (!first_solution_seen) {
                // trails start at the bound derived from the first iteration's best
                std::fill(ph.tau.begin(), ph.tau.end(), ph.tau_max);
                first_solution_seen = true;
            }
            since_improvement = 0;
        } else {
            ++since_improvement;
        }

        bool use_global = params.global_best_period > 0 &&
                          (iter + 1) % params.global_best_period == 0;
        const Solution& depositor = use_global ? res.best : iter_best;
        long long depositor_profit = use_global ? best_profit : iter_best_profit;
        update_pheromone(ph, depositor.tour,
                         fitness_cost(static_cast<double>(depositor_profit), res.ub), params, inst);

        if (params.check_invariants) {
            for (double t : ph.tau)
                if (t < ph.tau_min - 1e-15 || t > ph.tau_max + 1e-15)
                    throw std::logic_error("pheromone value escaped [tau_min, tau_max]");
        }

        if (since_improvement >= params.stagnation_limit) {
            std::fill(ph.tau.begin(), ph.tau.end(), ph.tau_max);
            since_improvement = 0;
        }

        res.stats.push_back({iter,
                             params.iteration_cap > 0 ? 0.0 : elapsed(),
                             std::max<long long>(iter_best_profit, 0), best_profit,
                             ph.tau_min, ph.tau_max});
        res.iterations = iter + 1;
    }
    return res;
}

}  // namespace thop
