// Acceptance suite: end-to-end checks over the solver, oracle, packing
// heuristic, and CLI. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

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

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

std::string fixture(const std::string& name) {
    return std::string(THOP_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GenConfig tiny_config(Rng& rng) {
    GenConfig cfg;
    cfg.n = 4 + static_cast<int>(rng.below(5));                     // n in [4, 8]
    int max_ipc = std::min(3, 10 / (cfg.n - 2));                    // m <= 10
    cfg.items_per_city = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_ipc)));
    cfg.seed = rng.next();
    return cfg;
}

// --- criterion 1: worked-example regression --------------------------------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    Instance inst = load_instance(fixture("fig1.thop"));
    Instance tight = load_instance(fixture("fig1_t20.thop"));

    Evaluation a = evaluate({{1, 2, 3, 4}, {1, 4}}, inst);
    Evaluation b = evaluate({{1, 3, 2, 4}, {1, 4}}, inst);
    Evaluation c = evaluate({{1, 3, 4}, {3}}, inst);
    Evaluation d = evaluate({{1, 3, 4}, {4, 5}}, tight);

    std::ostringstream detail;
    if (!(a.feasible && a.profit == 60 && near(a.time, 75.0, 1e-9))) detail << "[trace 1,2,3,4] ";
    if (!(!b.feasible && b.violation == Violation::Overtime && near(b.time, 83.43, 0.01)))
        detail << "[trace 1,3,2,4: expected 83.43, evaluator gives " << b.time << "] ";
    if (!(c.feasible && c.profit == 100 && near(c.time, 56.0, 1e-9))) detail << "[trace 1,3,4] ";
    if (!(d.feasible && d.profit == 80 && near(d.time, 18.5, 1e-9))) detail << "[trace T=20] ";
    if (elapsed_since(t0) >= 1.0) detail << "[runtime] ";
    report(1, "worked-example regression on the 4-city instance", detail.str().empty(),
           detail.str());
}

// --- criterion 2: oracle optimality reproduction ----------------------------

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    OracleResult r75 = solve_exact(load_instance(fixture("fig1.thop")));
    OracleResult r20 = solve_exact(load_instance(fixture("fig1_t20.thop")));
    bool ok = r75.optimal_profit == 100 && r20.optimal_profit == 80 && elapsed_since(t0) < 1.0;
    report(2, "oracle reproduces optima 100 (T=75) and 80 (T=20)", ok);
}

// --- criteria 3 + 4: heuristic-meets-oracle and bound sandwich ---------------

void criteria3and4() {
    const int cases = 200;
    Rng rng(20260823);
    int hits = 0, feasible = 0, exceed = 0, sandwich_violations = 0;
    MmasParams params;
    params.time_budget_seconds = 1.0;
    for (int i = 0; i < cases; ++i) {
        Instance inst = generate_instance(tiny_config(rng));
        OracleResult oracle = solve_exact(inst);
        params.seed = rng.next();
        SolveResult heur = solve(inst, params);
        if (heur.eval.feasible) ++feasible;
        if (heur.eval.profit == oracle.optimal_profit) ++hits;
        if (heur.eval.profit > oracle.optimal_profit) ++exceed;
        double ub = fractional_kp_ub(inst);
        if (!(static_cast<double>(heur.eval.profit) <= static_cast<double>(oracle.optimal_profit) + 1e-9 &&
              static_cast<double>(oracle.optimal_profit) <= ub + 1e-9))
            ++sandwich_violations;
    }
    {
        std::ostringstream detail;
        detail << "hits=" << hits << "/" << cases << " feasible=" << feasible << " exceed=" << exceed;
        report(3, "heuristic matches the oracle on >=90% of tiny instances",
               hits * 10 >= cases * 9 && exceed == 0 && feasible == cases, detail.str());
    }
    // fixtures participate in the sandwich too
    for (const char* name : {"fig1.thop", "fig1_t20.thop"}) {
        Instance inst = load_instance(fixture(name));
        if (static_cast<double>(solve_exact(inst).optimal_profit) > fractional_kp_ub(inst) + 1e-9)
            ++sandwich_violations;
    }
    report(4, "bound sandwich heuristic <= oracle <= fractional UB (zero violations)",
           sandwich_violations == 0, std::to_string(sandwich_violations) + " violations");
}

// --- criterion 5: MMAS invariants over 1000 iterations -----------------------

void criterion5() {
    MmasParams params;
    params.iteration_cap = 1000;
    params.check_invariants = true;  // solve() throws if any tau escapes its bounds
    params.seed = 31;
    bool ok = true;
    std::string detail;
    try {
        SolveResult r = solve(load_instance(fixture("fig1.thop")), params);
        long long prev = 0;
        for (const IterationStat& s : r.stats) {
            if (s.global_best_profit < prev) {
                ok = false;
                detail = "incumbent profit decreased";
            }
            prev = s.global_best_profit;
        }
        if (r.stats.size() != 1000) {
            ok = false;
            detail = "expected 1000 iterations";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(5, "pheromone bounds and incumbent monotonicity over 1000 iterations", ok, detail);
}

// --- criterion 6: packing feasibility property -------------------------------

void criterion6() {
    const int total_calls = 100000;
    Rng rng(606);
    int infeasible = 0;
    int calls = 0;
    while (calls < total_calls) {
        Instance inst = generate_instance(tiny_config(rng));
        for (int k = 0; k < 500 && calls < total_calls; ++k, ++calls) {
            std::vector<int> interior;
            for (int c = 2; c < inst.n; ++c)
                if (rng.below(2) == 0) interior.push_back(c);
            for (std::size_t i = interior.size(); i > 1; --i)
                std::swap(interior[i - 1], interior[rng.below(i)]);
            std::vector<int> tour{1};
            tour.insert(tour.end(), interior.begin(), interior.end());
            tour.push_back(inst.n);
            std::vector<int> z = pack(tour, 1 + static_cast<int>(rng.below(3)), rng, inst);
            Evaluation ev = evaluate({prune_tour(tour, z, inst), z}, inst);
            if (!ev.feasible || ev.weight > inst.capacity ||
                ev.time > inst.max_time + kTimeTolerance)
                ++infeasible;
        }
    }
    report(6, "100000 randomized pack calls produce zero infeasible plans", infeasible == 0,
           std::to_string(infeasible) + " infeasible");
}

// --- criterion 7: CLI determinism --------------------------------------------

int run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + THOP_CLI_PATH + "\" " + args;
    return std::system(cmd.c_str());
}

void criterion7() {
    fs::path base = fs::temp_directory_path() / "thop_acceptance_det";
    fs::remove_all(base);
    fs::create_directories(base / "a");
    fs::create_directories(base / "b");
    bool ok = true;
    std::string detail;
    for (const char* sub : {"a", "b"}) {
        int rc = run_cli("solve \"" + fixture("fig1.thop") + "\" --runs 1 --seed 5 --iterations 200 --out \"" +
                         (base / sub).string() + "\" > /dev/null");
        if (rc != 0) {
            ok = false;
            detail = "solve exited with " + std::to_string(rc);
        }
    }
    for (const char* file : {"fig1.run0.sol", "fig1.run0.stats.csv", "fig1.summary.csv"}) {
        std::string a = read_file(base / "a" / file);
        std::string b = read_file(base / "b" / file);
        if (a.empty() || a != b) {
            ok = false;
            detail = std::string(file) + " differs or is empty";
        }
    }
    report(7, "two seeded runs with --iterations 200 are byte-identical", ok, detail);

    // emitted solution files must validate cleanly
    int rc = run_cli("validate \"" + fixture("fig1.thop") + "\" \"" +
                     (base / "a" / "fig1.run0.sol").string() + "\" > /dev/null");
    if (rc != 0) {
        std::cout << "       note: emitted solution failed validation" << std::endl;
        ++g_failures;
    }
}

// --- criterion 8: grouped benchmark CSV --------------------------------------

void criterion8() {
    fs::path base = fs::temp_directory_path() / "thop_acceptance_bench";
    fs::remove_all(base);
    fs::create_directories(base);

    // four copies of the figure instances across two groups; references are
    // picked so each group has ratios {0.8, 1.0} -> mean 0.9, stdev 0.1*sqrt(2)
    std::string t75 = read_file(fixture("fig1.thop"));
    std::string t20 = read_file(fixture("fig1_t20.thop"));
    std::map<std::string, std::string> files = {
        {"fig_01_unc_01_01.thop", t75},  // profit 100, reference 125 -> 0.8
        {"fig_01_unc_01_02.thop", t20},  // profit 80,  reference 80  -> 1.0
        {"fig_05_usw_01_01.thop", t75},  // profit 100, reference 100 -> 1.0
        {"fig_05_usw_01_02.thop", t20},  // profit 80,  reference 100 -> 0.8
    };
    for (const auto& [name, text] : files) {
        std::ofstream out(base / name, std::ios::binary);
        out << text;
    }
    {
        std::ofstream ref(base / "reference.csv");
        ref << "instance,best_known_profit\n";
        ref << "fig_01_unc_01_01,125\n";
        ref << "fig_01_unc_01_02,80\n";
        ref << "fig_05_usw_01_01,100\n";
        ref << "fig_05_usw_01_02,100\n";
    }
    int rc = run_cli("bench \"" + (base / "*.thop").string() + "\" --reference \"" +
                     (base / "reference.csv").string() + "\" --out \"" +
                     (base / "bench.csv").string() +
                     "\" --runs 2 --seed 1 --iterations 80 > /dev/null");
    bool ok = rc == 0;
    std::string detail = ok ? "" : "bench exited with " + std::to_string(rc);

    // every row's ratio must be exactly mean/reference; profits 100 and 80
    std::map<std::string, std::pair<double, double>> expect = {
        {"fig_01_unc_01_01", {100.0, 0.8}},
        {"fig_01_unc_01_02", {80.0, 1.0}},
        {"fig_05_usw_01_01", {100.0, 1.0}},
        {"fig_05_usw_01_02", {80.0, 0.8}},
    };
    std::ifstream in(base / "bench.csv");
    std::string line;
    std::getline(in, line);  // header
    int rows = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> cols;
        std::stringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ',')) cols.push_back(col);
        if (cols.size() < 7) continue;
        ++rows;
        auto it = expect.find(cols[0]);
        if (it == expect.end()) {
            ok = false;
            detail = "unexpected row " + cols[0];
            continue;
        }
        if (cols[3] != csv_double(it->second.first) || cols[6] != csv_double(it->second.second)) {
            ok = false;
            detail = cols[0] + ": mean=" + cols[3] + " ratio=" + cols[6];
        }
    }
    if (rows != 4) {
        ok = false;
        detail = "expected 4 rows, got " + std::to_string(rows);
    }

    std::ifstream gin(base / "bench_groups.csv");
    std::getline(gin, line);  // header
    int groups = 0;
    double expected_stdev = 0.1 * std::sqrt(2.0);
    while (std::getline(gin, line)) {
        std::vector<std::string> cols;
        std::stringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ',')) cols.push_back(col);
        if (cols.size() != 4) continue;
        ++groups;
        if ((cols[0] != "fig_01_unc" && cols[0] != "fig_05_usw") || cols[1] != "2" ||
            cols[2] != csv_double(0.9) || cols[3] != csv_double(expected_stdev)) {
            ok = false;
            detail = "group row: " + line;
        }
    }
    if (groups != 2) {
        ok = false;
        detail = "expected 2 group rows, got " + std::to_string(groups);
    }
    report(8, "bench emits correctly grouped approximation-ratio CSVs", ok, detail);
}

// --- criterion 9: score monotonicity ------------------------------------------

void criterion9() {
    Rng rng(909);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        long long p = rng.range(1, 10000), w = rng.range(1, 10000);
        double d = 1.0 + rng.uniform01() * 9999.0;
        ScoreWeights sw = draw_weights(rng);
        Item base{1, p, w, 2};
        double s = score(base, d, sw);
        if (sw.theta > 1e-9 && !(score({1, p + 7, w, 2}, d, sw) > s)) ++violations;
        if (sw.delta > 1e-9 && !(score({1, p, w + 7, 2}, d, sw) < s)) ++violations;
        if (sw.gamma > 1e-9 && !(score(base, d + 7.0, sw) < s)) ++violations;
    }
    report(9, "score strictly monotone in profit, weight, and distance", violations == 0,
           std::to_string(violations) + " violations");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criteria3and4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures) {
        std::cout << g_failures << " criterion check(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
