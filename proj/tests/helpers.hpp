#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "thop/model.hpp"
#include "thop/rng.hpp"

namespace thop::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(THOP_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Instance load_fixture(const std::string& name) {
    return load_instance(fixture_path(name));
}

inline Instance fig1() { return load_fixture("fig1.thop"); }
inline Instance fig1_t20() { return load_fixture("fig1_t20.thop"); }

/// Explicit-matrix instance from inline data, for hand-built fixtures.
inline Instance make_explicit(int n, const std::vector<long long>& matrix,
                              const std::vector<Item>& items, long long capacity,
                              double max_time, double v_min = 0.1, double v_max = 1.0) {
    Instance inst;
    inst.name = "inline";
    inst.n = n;
    inst.m = static_cast<int>(items.size());
    inst.edge_type = EdgeWeightType::Explicit;
    inst.dist = matrix;
    inst.items = items;
    inst.capacity = capacity;
    inst.max_time = max_time;
    inst.v_min = v_min;
    inst.v_max = v_max;
    validate_instance(inst);
    detail::index_items(inst);
    return inst;
}

/// Random tour 1 -> shuffled interior subset -> n.
inline std::vector<int> random_tour(const Instance& inst, Rng& rng, bool full = false) {
    std::vector<int> interior;
    for (int c = 2; c < inst.n; ++c)
        if (full || rng.below(2) == 0) interior.push_back(c);
    for (std::size_t i = interior.size(); i > 1; --i)
        std::swap(interior[i - 1], interior[rng.below(i)]);
    std::vector<int> tour;
    tour.push_back(1);
    tour.insert(tour.end(), interior.begin(), interior.end());
    tour.push_back(inst.n);
    return tour;
}

}  // namespace thop::test
