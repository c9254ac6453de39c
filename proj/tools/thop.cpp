// Command-line front end: solve instances, validate solution files, run
// benchmark batches, and generate random instances.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "thop/evaluator.hpp"
#include "thop/generator.hpp"
#include "thop/mmas.hpp"
#include "thop/model.hpp"
#include "thop/oracle.hpp"
#include "thop/packing.hpp"
#include "thop/reporting.hpp"

namespace fs = std::filesystem;
using namespace thop;

namespace {

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

struct ParamFlags {
    std::optional<int> ants;
    std::optional<double> alpha, beta, rho;
    std::optional<int> ptries;
    std::optional<double> budget_seconds;
    std::optional<long long> iterations;
    std::optional<int> candidate_list;

    void apply(MmasParams& p) const {
        if (ants) p.ants = *ants;
        if (alpha) p.alpha = *alpha;
        if (beta) p.beta = *beta;
        if (rho) p.rho = *rho;
        if (ptries) p.ptries = *ptries;
        if (budget_seconds) p.time_budget_seconds = *budget_seconds;
        if (iterations) p.iteration_cap = *iterations;
        if (candidate_list) p.candidate_list_size = *candidate_list;
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
    cmd->add_option("--ants", f.ants, "Number of ants per iteration");
    cmd->add_option("--alpha", f.alpha, "Pheromone exponent");
    cmd->add_option("--beta", f.beta, "Heuristic (inverse distance) exponent");
    cmd->add_option("--rho", f.rho, "Evaporation rate in (0,1)");
    cmd->add_option("--ptries", f.ptries, "Packing attempts per tour");
    cmd->add_option("--budget-seconds", f.budget_seconds,
                    "Wall-clock budget per run (default: ceil(m/10) seconds)");
    cmd->add_option("--iterations", f.iterations,
                    "Fixed iteration count instead of a wall-clock budget (deterministic)");
    cmd->add_option("--candidate-list", f.candidate_list, "Candidate list size");
}

// Per-group parameter overrides, one group per line:
//   eil51_05_usw ants=100 alpha=2.0 rho=0.3
std::map<std::string, std::vector<std::pair<std::string, std::string>>>
parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string group, kv;
        ls >> group;
        while (ls >> kv) {
            std::size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParseError("config line " + std::to_string(lineno) +
                                 ": expected key=value, got '" + kv + "'");
            cfg[group].emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
    }
    return cfg;
}

void apply_config(const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& cfg,
                  const std::string& instance_name, MmasParams& p) {
    auto it = cfg.find(group_of(instance_name));
    if (it == cfg.end()) return;
    for (const auto& [key, value] : it->second) {
        if (key == "ants") p.ants = std::stoi(value);
        else if (key == "alpha") p.alpha = std::stod(value);
        else if (key == "beta") p.beta = std::stod(value);
        else if (key == "rho") p.rho = std::stod(value);
        else if (key == "ptries") p.ptries = std::stoi(value);
        else throw ParseError("unknown config key: '" + key + "'");
    }
}

std::string params_header(const std::string& instance_name, const MmasParams& p) {
    std::ostringstream out;
    out << "# instance=" << instance_name << " seed=" << p.seed << " ants=" << p.ants
        << " alpha=" << p.alpha << " beta=" << p.beta << " rho=" << p.rho
        << " ptries=" << p.ptries;
    if (p.iteration_cap > 0) out << " iterations=" << p.iteration_cap;
    else if (p.time_budget_seconds > 0) out << " budget_seconds=" << p.time_budget_seconds;
    else out << " budget_seconds=auto";
    return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::vector<SolveResult> run_many(const Instance& inst, MmasParams params, int runs,
                                  std::uint64_t base_seed) {
    std::vector<SolveResult> results;
    for (int r = 0; r < runs; ++r) {
        params.seed = base_seed + static_cast<std::uint64_t>(r);
        results.push_back(solve(inst, params));
    }
    return results;
}

// Record for one solved instance, written by cmd_solve and cmd_bench.
BenchmarkRecord solve_and_record(const std::string& instance_path, const MmasParams& base_params,
                                 int runs, std::uint64_t seed, std::optional<double> reference,
                                 const fs::path* out_dir) {
    Instance inst = load_instance(instance_path);
    std::string name = stem_of(instance_path);
    std::vector<SolveResult> results = run_many(inst, base_params, runs, seed);
    if (out_dir) {
        for (int r = 0; r < runs; ++r) {
            MmasParams p = base_params;
            p.seed = seed + static_cast<std::uint64_t>(r);
            const SolveResult& res = results[static_cast<std::size_t>(r)];
            write_file(*out_dir / (name + ".run" + std::to_string(r) + ".sol"),
                       serialize_solution(res.best, inst));
            std::ostringstream stats;
            stats << params_header(name, p) << "\n" << stats_csv_header() << "\n";
            for (const IterationStat& s : res.stats) stats << stats_csv_row(s) << "\n";
            write_file(*out_dir / (name + ".run" + std::to_string(r) + ".stats.csv"), stats.str());
        }
    }
    return make_record(name, inst, results, reference);
}

std::map<std::string, double> load_reference_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open reference table: " + path);
    std::map<std::string, double> refs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty()) continue;
        if (first && line.starts_with("instance")) {
            first = false;
            continue;
        }
        first = false;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("reference table row needs 'instance,best_known_profit': " + line);
        refs[detail::trim(line.substr(0, comma))] = std::stod(line.substr(comma + 1));
    }
    return refs;
}

std::vector<std::string> expand_globs(const std::vector<std::string>& patterns) {
    std::vector<std::string> paths;
    for (const std::string& pat : patterns) {
        if (pat.find('*') == std::string::npos && pat.find('?') == std::string::npos) {
            paths.push_back(pat);
            continue;
        }
        fs::path p(pat);
        fs::path dir = p.parent_path().empty() ? "." : p.parent_path();
        std::string file_pat = p.filename().string();
        auto matches = [&](const std::string& name) {
            // greedy '*'/'?' match, sufficient for benchmark file patterns
            std::function<bool(std::size_t, std::size_t)> m = [&](std::size_t i, std::size_t j) {
                while (j < file_pat.size()) {
                    if (file_pat[j] == '*') {
                        for (std::size_t k = i; k <= name.size(); ++k)
                            if (m(k, j + 1)) return true;
                        return false;
                    }
                    if (i >= name.size()) return false;
                    if (file_pat[j] != '?' && file_pat[j] != name[i]) return false;
                    ++i;
                    ++j;
                }
                return i == name.size();
            };
            return m(0, 0);
        };
        std::vector<std::string> found;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && matches(entry.path().filename().string()))
                found.push_back(entry.path().string());
        std::sort(found.begin(), found.end());
        paths.insert(paths.end(), found.begin(), found.end());
    }
    return paths;
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path) {
    Instance inst = load_instance(instance_path);
    std::ifstream in(solution_path);
    if (!in) {
        std::cerr << "cannot open solution file: " << solution_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Solution sol = parse_solution(buf.str(), inst);
    Evaluation ev = evaluate(sol, inst);
    char line[256];
    switch (ev.violation) {
        case Violation::None:
            std::snprintf(line, sizeof(line), "profit %lld weight %lld time %g feasible",
                          ev.profit, ev.weight, ev.time);
            break;
        case Violation::Overtime:
            std::snprintf(line, sizeof(line), "infeasible: overtime (%.2f > %g)", ev.time,
                          inst.max_time);
            break;
        case Violation::Overweight:
            std::snprintf(line, sizeof(line), "infeasible: overweight (%lld > %lld)", ev.weight,
                          inst.capacity);
            break;
        case Violation::MalformedTour:
            std::snprintf(line, sizeof(line), "malformed-tour: %s", ev.detail.c_str());
            break;
    }
    std::cout << line << "\n";
    return ev.feasible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ThOP solver: MAX-MIN ant system with randomized greedy packing"};
    app.require_subcommand(1);

    // solve
    std::string solve_instance_path, solve_out_dir = ".", solve_config_path;
    int solve_runs = 10;
    std::uint64_t solve_seed = 1;
    ParamFlags solve_flags;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance over several runs");
    solve_cmd->add_option("instance", solve_instance_path, "Instance file")->required();
    solve_cmd->add_option("--runs", solve_runs, "Independent runs (default 10)");
    solve_cmd->add_option("--seed", solve_seed, "Base RNG seed; run k uses seed+k");
    solve_cmd->add_option("--out", solve_out_dir, "Output directory");
    solve_cmd->add_option("--config", solve_config_path, "Per-group parameter override file");
    add_param_flags(solve_cmd, solve_flags);

    // validate
    std::string val_instance_path, val_solution_path;
    auto* val_cmd = app.add_subcommand("validate", "Evaluate a solution file against an instance");
    val_cmd->add_option("instance", val_instance_path, "Instance file")->required();
    val_cmd->add_option("solution", val_solution_path, "Solution file")->required();

    // bench
    std::vector<std::string> bench_patterns;
    std::string bench_reference_path, bench_out = "bench.csv", bench_config_path;
    int bench_runs = 10, bench_jobs = 1;
    std::uint64_t bench_seed = 1;
    ParamFlags bench_flags;
    auto* bench_cmd = app.add_subcommand("bench", "Run a batch and aggregate a benchmark CSV");
    bench_cmd->add_option("instances", bench_patterns, "Instance files or globs")->required();
    bench_cmd->add_option("--reference", bench_reference_path,
                          "CSV with columns instance,best_known_profit");
    bench_cmd->add_option("--out", bench_out, "Output CSV path (group summary goes to *_groups.csv)");
    bench_cmd->add_option("--jobs", bench_jobs, "Concurrent instances");
    bench_cmd->add_option("--runs", bench_runs, "Runs per instance (default 10)");
    bench_cmd->add_option("--seed", bench_seed, "Base RNG seed");
    bench_cmd->add_option("--config", bench_config_path, "Per-group parameter override file");
    add_param_flags(bench_cmd, bench_flags);

    // gen
    GenConfig gen_cfg;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random tiny instance");
    gen_cmd->add_option("--n", gen_cfg.n, "Number of cities");
    gen_cmd->add_option("--items-per-city", gen_cfg.items_per_city, "Items on each interior city");
    gen_cmd->add_option("--profit-min", gen_cfg.profit_min, "Minimum item profit");
    gen_cmd->add_option("--profit-max", gen_cfg.profit_max, "Maximum item profit");
    gen_cmd->add_option("--weight-min", gen_cfg.weight_min, "Minimum item weight");
    gen_cmd->add_option("--weight-max", gen_cfg.weight_max, "Maximum item weight");
    gen_cmd->add_option("--capacity", gen_cfg.capacity, "Knapsack capacity (default: half of total weight)");
    gen_cmd->add_option("--max-time", gen_cfg.max_time, "Time limit (default: auto from tour length)");
    gen_cmd->add_option("--time-factor", gen_cfg.time_factor, "Auto time limit factor");
    gen_cmd->add_option("--vmin", gen_cfg.v_min, "Minimum speed");
    gen_cmd->add_option("--vmax", gen_cfg.v_max, "Maximum speed");
    gen_cmd->add_option("--coord-range", gen_cfg.coord_range, "Coordinate range [0, R]");
    gen_cmd->add_option("--seed", gen_cfg.seed, "Generator seed");
    gen_cmd->add_option("--name", gen_cfg.name, "Instance name");
    gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) {
            MmasParams params;
            if (!solve_config_path.empty())
                apply_config(parse_config_file(solve_config_path), stem_of(solve_instance_path),
                             params);
            solve_flags.apply(params);
            fs::path out_dir(solve_out_dir);
            fs::create_directories(out_dir);
            BenchmarkRecord rec = solve_and_record(solve_instance_path, params, solve_runs,
                                                   solve_seed, std::nullopt, &out_dir);
            std::ostringstream summary;
            summary << benchmark_csv_header() << "\n" << benchmark_csv_row(rec) << "\n";
            write_file(out_dir / (rec.instance + ".summary.csv"), summary.str());
            std::cout << benchmark_csv_header() << "\n" << benchmark_csv_row(rec) << "\n";
            return 0;
        }
        if (*val_cmd) return cmd_validate(val_instance_path, val_solution_path);
        if (*bench_cmd) {
            std::vector<std::string> paths = expand_globs(bench_patterns);
            if (paths.empty()) {
                std::cerr << "no instances matched\n";
                return 2;
            }
            std::map<std::string, double> refs;
            if (!bench_reference_path.empty()) refs = load_reference_table(bench_reference_path);
            std::map<std::string, std::vector<std::pair<std::string, std::string>>> cfg;
            if (!bench_config_path.empty()) cfg = parse_config_file(bench_config_path);

            std::vector<BenchmarkRecord> records(paths.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= paths.size()) return;
                    std::string name = stem_of(paths[i]);
                    try {
                        MmasParams params;
                        apply_config(cfg, name, params);
                        bench_flags.apply(params);
                        std::optional<double> ref;
                        if (auto it = refs.find(name); it != refs.end()) ref = it->second;
                        records[i] = solve_and_record(paths[i], params, bench_runs, bench_seed,
                                                      ref, nullptr);
                    } catch (const std::exception& e) {
                        records[i].instance = name;
                        records[i].group = group_of(name);
                        records[i].error = e.what();
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int j = 1; j < bench_jobs; ++j) pool.emplace_back(worker);
            worker();
            for (std::thread& t : pool) t.join();

            std::ostringstream out;
            out << benchmark_csv_header() << "\n";
            for (const BenchmarkRecord& rec : records) out << benchmark_csv_row(rec) << "\n";
            write_file(bench_out, out.str());

            fs::path groups_path = fs::path(bench_out);
            groups_path.replace_filename(groups_path.stem().string() + "_groups.csv");
            std::ostringstream gout;
            gout << group_csv_header() << "\n";
            for (const GroupSummary& g : summarize_groups(records)) gout << group_csv_row(g) << "\n";
            write_file(groups_path, gout.str());
            std::cout << "wrote " << bench_out << " and " << groups_path.string() << "\n";
            bool any_error = false;
            for (const BenchmarkRecord& rec : records)
                if (!rec.error.empty()) {
                    any_error = true;
                    std::cerr << rec.instance << ": " << rec.error << "\n";
                }
            return any_error ? 1 : 0;
        }
        if (*gen_cmd) {
            Instance inst = generate_instance(gen_cfg);
            std::string text = serialize_instance(inst);
            if (gen_out.empty()) std::cout << text;
            else write_file(gen_out, text);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
