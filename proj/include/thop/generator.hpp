#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "thop/model.hpp"
#include "thop/rng.hpp"

namespace thop {

/// Random CEIL_2D instance recipe. Items land only on interior cities.
/// max_time <= 0 asks for an automatic limit: time_factor times the time of
/// the index-order path 1..n at maximum speed.
struct GenConfig {
    std::string name = "generated";
    int n = 6;
    int items_per_city = 2;
    long long profit_min = 1, profit_max = 100;
    long long weight_min = 1, weight_max = 30;
    long long capacity = 0;      // <= 0: half of total item weight (at least 1)
    double max_time = 0.0;
    double time_factor = 2.0;
    double v_min = 0.1, v_max = 1.0;
    int coord_range = 50;
    std::uint64_t seed = 1;
};

inline Instance generate_instance(const GenConfig& cfg) {
    if (cfg.n < 2) throw InputError("generator needs n >= 2");
    if (cfg.items_per_city < 0) throw InputError("items per city must be non-negative");
    if (cfg.profit_min < 1 || cfg.profit_min > cfg.profit_max)
        throw InputError("invalid profit range");
    if (cfg.weight_min < 1 || cfg.weight_min > cfg.weight_max)
        throw InputError("invalid weight range");
    if (!(cfg.v_min > 0 && cfg.v_min <= cfg.v_max)) throw InputError("invalid speed range");

    Rng rng(mix_seed(0x7468306722ULL, cfg.seed));
    Instance inst;
    inst.name = cfg.name;
    inst.n = cfg.n;
    inst.edge_type = EdgeWeightType::Ceil2D;
    inst.coords.resize(static_cast<std::size_t>(cfg.n));
    for (auto& p : inst.coords)
        p = {static_cast<double>(rng.range(0, cfg.coord_range)),
             static_cast<double>(rng.range(0, cfg.coord_range))};
    // coincident cities would make degenerate zero legs common; nudge them apart
    for (int i = 1; i < cfg.n; ++i)
        for (int j = 0; j < i; ++j)
            if (inst.coords[static_cast<std::size_t>(i)] == inst.coords[static_cast<std::size_t>(j)])
                inst.coords[static_cast<std::size_t>(i)].x += 1.0 + static_cast<double>(rng.below(3));

    long long total_weight = 0;
    for (int c = 2; c < cfg.n; ++c)
        for (int k = 0; k < cfg.items_per_city; ++k) {
            Item it;
            it.id = static_cast<int>(inst.items.size()) + 1;
            it.profit = rng.range(cfg.profit_min, cfg.profit_max);
            it.weight = rng.range(cfg.weight_min, cfg.weight_max);
            it.city = c;
            total_weight += it.weight;
            inst.items.push_back(it);
        }
    inst.m = static_cast<int>(inst.items.size());
    inst.capacity = cfg.capacity > 0 ? cfg.capacity : std::max<long long>(1, total_weight / 2);
    inst.v_min = cfg.v_min;
    inst.v_max = cfg.v_max;

    detail::build_distance_matrix(inst);
    if (cfg.max_time > 0) {
        inst.max_time = cfg.max_time;
    } else {
        long long path = 0;
        for (int c = 1; c < cfg.n; ++c) path += inst.distance(c, c + 1);
        inst.max_time = std::max(1.0, cfg.time_factor * static_cast<double>(path) / inst.v_max);
    }
    validate_instance(inst);
    detail::index_items(inst);
    return inst;
}

}  // namespace thop
