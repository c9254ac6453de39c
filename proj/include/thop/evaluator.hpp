#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "thop/model.hpp"

namespace thop {

// Feasibility tolerance on the time limit; leg times are fractional.
inline constexpr double kTimeTolerance = 1e-9;

enum class Violation { None, Overweight, Overtime, MalformedTour };

inline const char* to_string(Violation v) {
    switch (v) {
        case Violation::None: return "none";
        case Violation::Overweight: return "overweight";
        case Violation::Overtime: return "overtime";
        case Violation::MalformedTour: return "malformed-tour";
    }
    return "?";
}

struct Evaluation {
    long long profit = 0;
    long long weight = 0;
    double time = 0.0;
    bool feasible = false;
    Violation violation = Violation::MalformedTour;
    std::string detail;  // human-readable reason for malformed tours
};

/// Simulates the tour city by city: items are picked up at their city before
/// the departing leg, and each leg costs distance/speed at the current load.
inline Evaluation evaluate(const Solution& sol, const Instance& inst) {
    Evaluation ev;
    const std::vector<int>& tour = sol.tour;
    if (tour.empty() || tour.front() != 1 || tour.back() != inst.n) {
        ev.detail = "tour must start at city 1 and end at city " + std::to_string(inst.n);
        return ev;
    }
    std::vector<char> on_tour(static_cast<std::size_t>(inst.n) + 1, 0);
    for (int c : tour) {
        if (c < 1 || c > inst.n) {
            ev.detail = "tour city out of range: " + std::to_string(c);
            return ev;
        }
        if (on_tour[static_cast<std::size_t>(c)]) {
            ev.detail = "tour repeats city " + std::to_string(c);
            return ev;
        }
        on_tour[static_cast<std::size_t>(c)] = 1;
    }
    std::vector<long long> pickup(static_cast<std::size_t>(inst.n) + 1, 0);
    for (int id : sol.plan) {
        const Item& it = inst.item(id);
        if (!on_tour[static_cast<std::size_t>(it.city)]) {
            ev.detail = "item " + std::to_string(id) + " at unvisited city " + std::to_string(it.city);
            return ev;
        }
        pickup[static_cast<std::size_t>(it.city)] += it.weight;
        ev.profit += it.profit;
        ev.weight += it.weight;
    }
    ev.violation = Violation::None;
    if (ev.weight > inst.capacity) {
        ev.violation = Violation::Overweight;
        return ev;
    }
    long long carried = 0;
    for (std::size_t k = 0; k + 1 < tour.size(); ++k) {
        carried += pickup[static_cast<std::size_t>(tour[k])];
        ev.time += static_cast<double>(inst.distance(tour[k], tour[k + 1])) / inst.speed(carried);
    }
    if (ev.time > inst.max_time + kTimeTolerance) {
        ev.violation = Violation::Overtime;
        return ev;
    }
    ev.feasible = true;
    return ev;
}

/// The tour-pruning map: keeps city 1, city n, and every city where the plan
/// steals at least one item, in original order.
inline std::vector<int> prune_tour(const std::vector<int>& tour, const std::vector<int>& plan,
                                   const Instance& inst) {
    std::vector<char> keep(static_cast<std::size_t>(inst.n) + 1, 0);
    for (int id : plan) keep[static_cast<std::size_t>(inst.item(id).city)] = 1;
    std::vector<int> pruned;
    pruned.reserve(tour.size());
    for (int c : tour)
        if (c == 1 || c == inst.n || keep[static_cast<std::size_t>(c)]) pruned.push_back(c);
    return pruned;
}

inline long long tour_length(const std::vector<int>& tour, const Instance& inst) {
    long long len = 0;
    for (std::size_t k = 0; k + 1 < tour.size(); ++k) len += inst.distance(tour[k], tour[k + 1]);
    return len;
}

// Solution file format: two bracketed lists, interior tour cities then item
// ids. Cities 1 and n are implicit.
inline std::string serialize_solution(const Solution& sol, const Instance& inst) {
    std::ostringstream out;
    auto write_list = [&out](const std::vector<int>& xs) {
        out << "[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out << " ";
            out << xs[i];
        }
        out << "]\n";
    };
    std::vector<int> interior;
    for (int c : sol.tour)
        if (c != 1 && c != inst.n) interior.push_back(c);
    write_list(interior);
    write_list(sol.plan);
    return out.str();
}

namespace detail {

inline std::vector<int> parse_bracket_list(const std::string& line, int lineno) {
    std::string t = trim(line);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("line " + std::to_string(lineno) + ": expected a bracketed list, got '" +
                         line + "'");
    std::istringstream in(t.substr(1, t.size() - 2));
    std::vector<int> xs;
    int v;
    while (in >> v) xs.push_back(v);
    if (!in.eof())
        throw ParseError("line " + std::to_string(lineno) + ": non-integer entry in '" + line + "'");
    return xs;
}

}  // namespace detail

inline Solution parse_solution(const std::string& text, const Instance& inst) {
    std::istringstream in(text);
    std::string line1, line2;
    if (!std::getline(in, line1)) throw ParseError("solution file is empty");
    if (!std::getline(in, line2)) throw ParseError("solution file is missing the item line");
    Solution sol;
    sol.tour.push_back(1);
    for (int c : detail::parse_bracket_list(line1, 1)) sol.tour.push_back(c);
    sol.tour.push_back(inst.n);
    sol.plan = detail::parse_bracket_list(line2, 2);
    for (int id : sol.plan)
        if (id < 1 || id > inst.m)
            throw ParseError("line 2: item id out of range: " + std::to_string(id));
    return sol;
}

}  // namespace thop
