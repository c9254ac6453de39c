#pragma once

#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thop/evaluator.hpp"
#include "thop/mmas.hpp"
#include "thop/model.hpp"

namespace thop {

inline std::string csv_double(double v, int precision = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

/// Aggregated result of repeated solve runs on one instance, in the layout of
/// the benchmark tables: mean/best profit, optional reference and
/// approximation ratio, and solution-structure statistics from the best run
/// (distance per visited city, fraction of time limit and capacity used).
struct BenchmarkRecord {
    std::string instance;
    std::string group;
    std::vector<long long> run_profits;
    double mean_profit = 0.0;
    long long best_profit = 0;
    std::optional<double> reference;
    std::optional<double> ratio;
    long long distance_traveled = 0;
    long long cities_visited = 0;
    double d_per_city = 0.0;
    double pct_time = 0.0;
    double pct_weight = 0.0;
    std::string error;  // non-empty when the instance failed
};

/// Group id XXX_YY_ZZZ: the first three underscore-separated tokens of the
/// instance name (fewer tokens -> whole name).
inline std::string group_of(const std::string& instance_name) {
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        pos = instance_name.find('_', pos);
        if (pos == std::string::npos) return instance_name;
        ++pos;
    }
    return instance_name.substr(0, pos - 1);
}

inline BenchmarkRecord make_record(const std::string& instance_name, const Instance& inst,
                                   const std::vector<SolveResult>& runs,
                                   std::optional<double> reference) {
    BenchmarkRecord rec;
    rec.instance = instance_name;
    rec.group = group_of(instance_name);
    const SolveResult* best_run = nullptr;
    for (const SolveResult& r : runs) {
        rec.run_profits.push_back(r.eval.profit);
        if (!best_run || r.eval.profit > best_run->eval.profit) best_run = &r;
    }
    rec.mean_profit = runs.empty() ? 0.0
                                   : static_cast<double>(std::accumulate(rec.run_profits.begin(),
                                                                         rec.run_profits.end(), 0LL)) /
                                         static_cast<double>(runs.size());
    if (best_run) {
        rec.best_profit = best_run->eval.profit;
        rec.distance_traveled = tour_length(best_run->best.tour, inst);
        rec.cities_visited = static_cast<long long>(best_run->best.tour.size());
        rec.d_per_city = static_cast<double>(rec.distance_traveled) /
                         static_cast<double>(rec.cities_visited);
        rec.pct_time = 100.0 * best_run->eval.time / inst.max_time;
        rec.pct_weight = 100.0 * static_cast<double>(best_run->eval.weight) /
                         static_cast<double>(inst.capacity);
    }
    rec.reference = reference;
    if (reference && *reference > 0) rec.ratio = rec.mean_profit / *reference;
    return rec;
}

inline std::string benchmark_csv_header() {
    return "instance,group,runs,mean_profit,best_profit,reference_profit,approx_ratio,"
           "distance_traveled,cities_visited,D,pct_T,pct_W,error";
}

inline std::string benchmark_csv_row(const BenchmarkRecord& rec) {
    std::ostringstream out;
    out << rec.instance << ',' << rec.group << ',' << rec.run_profits.size() << ','
        << csv_double(rec.mean_profit) << ',' << rec.best_profit << ','
        << (rec.reference ? csv_double(*rec.reference) : "") << ','
        << (rec.ratio ? csv_double(*rec.ratio) : "") << ','
        << rec.distance_traveled << ',' << rec.cities_visited << ','
        << csv_double(rec.d_per_city) << ',' << csv_double(rec.pct_time) << ','
        << csv_double(rec.pct_weight) << ',' << rec.error;
    return out.str();
}

struct GroupSummary {
    std::string group;
    int count = 0;
    double mean_ratio = 0.0;
    double stdev_ratio = 0.0;  // sample standard deviation
};

inline std::vector<GroupSummary> summarize_groups(const std::vector<BenchmarkRecord>& records) {
    std::vector<GroupSummary> out;
    for (const BenchmarkRecord& rec : records) {
        if (!rec.ratio) continue;
        GroupSummary* g = nullptr;
        for (GroupSummary& s : out)
            if (s.group == rec.group) g = &s;
        if (!g) {
            out.push_back({rec.group, 0, 0.0, 0.0});
            g = &out.back();
        }
        ++g->count;
        g->mean_ratio += *rec.ratio;  // running sum, finalized below
    }
    for (GroupSummary& s : out) s.mean_ratio /= s.count;
    for (GroupSummary& s : out) {
        double ss = 0.0;
        for (const BenchmarkRecord& rec : records)
            if (rec.ratio && rec.group == s.group)
                ss += (*rec.ratio - s.mean_ratio) * (*rec.ratio - s.mean_ratio);
        s.stdev_ratio = s.count > 1 ? std::sqrt(ss / (s.count - 1)) : 0.0;
    }
    return out;
}

inline std::string group_csv_header() { return "group,count,mean_ratio,stdev_ratio"; }

inline std::string group_csv_row(const GroupSummary& g) {
    std::ostringstream out;
    out << g.group << ',' << g.count << ',' << csv_double(g.mean_ratio) << ','
        << csv_double(g.stdev_ratio);
    return out.str();
}

inline std::string stats_csv_header() {
    return "iteration,elapsed_seconds,iter_best_profit,global_best_profit,tau_min,tau_max";
}

inline std::string stats_csv_row(const IterationStat& s) {
    std::ostringstream out;
    out << s.iteration << ',' << csv_double(s.elapsed_seconds, 3) << ',' << s.iter_best_profit
        << ',' << s.global_best_profit << ',' << csv_double(s.tau_min, 9) << ','
        << csv_double(s.tau_max, 9);
    return out.str();
}

}  // namespace thop
