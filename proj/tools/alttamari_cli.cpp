// Command-line front end: build alt nu-Tamari lattices, dump orbits and
// statistics, run the theorem-verification suites, and scan the
// delta-invariance conjecture.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "alttamari/exports.hpp"
#include "alttamari/scan.hpp"
#include "alttamari/verify.hpp"

namespace at = alttamari;

namespace {

long long guard_from_env(long long fallback) {
    if (const char* env = std::getenv("TAMARI_MAX_ELEMENTS")) {
        try {
            return std::stoll(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparsable TAMARI_MAX_ELEMENTS\n";
        }
    }
    return fallback;
}

// comma list; shorter vectors are left-padded with zeros, matching the
// convention that drops forced leading zeros (e.g. "2,0" for EN^2E^2N)
at::IncrementVector parse_delta(const std::string& text, const at::RunLength& nu) {
    std::vector<int> vals;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) vals.push_back(std::stoi(cur));
    int n = nu.north_count();
    if (static_cast<int>(vals.size()) > n)
        throw std::invalid_argument("delta has more entries than nu has N steps");
    at::IncrementVector d(static_cast<size_t>(n), 0);
    std::copy(vals.begin(), vals.end(), d.end() - static_cast<long>(vals.size()));
    at::validate_increment(nu, d);
    return d;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

int print_suite(const at::SuiteReport& rep, const std::string& out_path) {
    for (const auto& c : rep.cases) {
        std::cout << (c.pass ? "  PASS " : "  FAIL ") << c.name;
        if (!c.pass) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    std::cout << "suite " << rep.suite << ": "
              << (rep.all_pass() ? "all " + std::to_string(rep.cases.size()) + " cases passed"
                                 : std::to_string(rep.failed_count()) + " of " +
                                       std::to_string(rep.cases.size()) + " cases FAILED")
              << "\n";
    if (!out_path.empty()) {
        at::json j;
        j["suite"] = rep.suite;
        j["pass"] = rep.all_pass();
        j["total"] = rep.cases.size();
        j["failed"] = rep.failed_count();
        at::json cases = at::json::array();
        for (const auto& c : rep.cases)
            cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["cases"] = cases;
        write_file(out_path, j.dump(2) + "\n");
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alt nu-Tamari lattices, rowmotion, and closed-form verification"};
    app.require_subcommand(1);

    long long default_guard = guard_from_env(50000);

    // ---- build ----
    std::string b_nu, b_delta, b_export, b_out, b_stats;
    long long b_guard = default_guard;
    auto* build = app.add_subcommand("build", "build one alt nu-Tamari lattice");
    build->add_option("--nu", b_nu, "base path, e.g. \"EN^2E^2N\" or \"(1,0,2,0)\"")->required();
    build->add_option("--delta", b_delta,
                      "increment vector as a comma list (left-padded with zeros); default: the nu-Tamari choice delta=nu");
    build->add_option("--export", b_export, "write the cover graph: dot | json")
        ->check(CLI::IsMember({"dot", "json"}));
    build->add_option("--out", b_out, "output file for --export (default lattice.dot / lattice.json)");
    build->add_option("--stats", b_stats, "print orbit sums for these statistics (comma list, e.g. ddeg,area)");
    build->add_option("--max-elements", b_guard, "element guard (env TAMARI_MAX_ELEMENTS overrides the default)");

    // ---- verify ----
    std::string v_suite, v_out;
    int v_max_a = 6, v_max_b = 6, v_count = 20, v_jobs = 0;
    unsigned long long v_seed = 20260810ull;
    auto* verify = app.add_subcommand("verify", "run a theorem-verification suite");
    verify->add_option("--suite", v_suite, "hook | two-row | switching | csp | interval")->required();
    verify->add_option("--max-a", v_max_a, "largest a (default 6)");
    verify->add_option("--max-b", v_max_b, "largest b (default 6)");
    verify->add_option("--count", v_count, "sample count for the interval suite (default 20)");
    verify->add_option("--seed", v_seed, "seed for the interval suite sampler");
    verify->add_option("--jobs", v_jobs, "worker threads (default: hardware concurrency)");
    verify->add_option("--out", v_out, "also write a machine-readable JSON report");

    // ---- scan ----
    std::string s_nu, s_delta, s_stats = "ddeg", s_out, s_format = "table";
    int s_max_n = 4, s_max_e = 6, s_random = 0, s_jobs = 0;
    unsigned long long s_seed = 1;
    long long s_guard = default_guard;
    bool s_all_deltas = false;
    auto* scan = app.add_subcommand("scan", "scan the delta-invariance conjecture");
    scan->add_option("--nu", s_nu, "scan one explicit base path instead of generating");
    scan->add_option("--max-n", s_max_n, "generator bound on N steps (default 4)");
    scan->add_option("--max-e", s_max_e, "generator bound on E steps (default 6)");
    scan->add_option("--random", s_random, "sample this many random paths instead of exhausting");
    scan->add_option("--seed", s_seed, "seed for --random");
    scan->add_flag("--all-deltas", s_all_deltas, "iterate the full increment-vector product (default)");
    scan->add_option("--delta", s_delta, "check only this increment vector (comma list)");
    scan->add_option("--stats", s_stats, "statistics to compare, comma list (default ddeg)");
    scan->add_option("--max-elements", s_guard, "element guard; larger paths are skipped with a notice");
    scan->add_option("--jobs", s_jobs, "worker threads (default: hardware concurrency)");
    scan->add_option("--out", s_out, "also write a machine-readable JSON report");
    scan->add_option("--format", s_format, "stdout format: table | json")->check(CLI::IsMember({"table", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            at::LatticePath nu = at::parse_path(b_nu);
            at::RunLength rl = at::run_length(nu);
            at::IncrementVector delta = b_delta.empty() ? at::tamari_increment(rl) : parse_delta(b_delta, rl);
            at::BuildOptions opt;
            opt.max_elements = b_guard;
            at::AltTamariLattice L = at::build_alt_tamari(nu, delta, opt);

            std::cout << "nu: " << at::to_string(nu) << "\n";
            std::cout << "delta: " << at::detail::seq_str(delta) << "\n";
            std::cout << "elements: " << L.lattice.size() << "\n";
            std::cout << "covers: " << L.lattice.cover_count() << "\n";
            std::cout << "semidistributive: " << (L.lattice.is_semidistributive() ? "yes" : "no") << "\n";

            std::vector<at::StatReport> reports;
            if (!b_stats.empty()) {
                at::OrbitDecomposition dec = at::orbit_decomposition(L.lattice);
                at::StatContext ctx{&L.lattice, &L.elements, &L.nu};
                std::istringstream is(b_stats);
                std::string name;
                while (std::getline(is, name, ',')) {
                    reports.push_back(at::orbit_stat_report(ctx, dec, name));
                    std::cout << at::stat_report_table(reports.back());
                }
            }

            if (!b_export.empty()) {
                std::vector<std::string> labels;
                for (const auto& p : L.elements) labels.push_back(at::to_string(p));
                if (b_export == "dot") {
                    std::string path = b_out.empty() ? "lattice.dot" : b_out;
                    write_file(path, at::to_dot(L.lattice, labels));
                    std::cout << "wrote " << path << "\n";
                } else {
                    std::string path = b_out.empty() ? "lattice.json" : b_out;
                    at::json j;
                    j["nu"] = at::to_string(nu);
                    j["delta"] = delta;
                    j["cover_graph"] = at::cover_graph_json(L.lattice, labels);
                    j["orbits"] = at::orbit_json(at::orbit_decomposition(L.lattice));
                    if (!reports.empty()) {
                        at::json stats = at::json::array();
                        for (const auto& r : reports) stats.push_back(at::stat_report_json(r));
                        j["statistics"] = stats;
                    }
                    write_file(path, j.dump(2) + "\n");
                    std::cout << "wrote " << path << "\n";
                }
            }
            return 0;
        }

        if (*verify) {
            at::SuiteReport rep;
            if (v_suite == "hook") rep = at::verify_hook(v_max_a, v_max_b, v_jobs);
            else if (v_suite == "two-row") rep = at::verify_two_row(v_max_a, v_max_b, v_jobs);
            else if (v_suite == "switching") rep = at::verify_switching(v_max_a, v_max_b, v_jobs);
            else if (v_suite == "csp") rep = at::verify_csp(v_max_a, v_max_b, v_jobs);
            else if (v_suite == "interval") rep = at::verify_interval(v_count, v_seed, 2000, v_jobs);
            else {
                std::cerr << "unknown suite '" << v_suite << "' (hook, two-row, switching, csp, interval)\n";
                return 2;
            }
            return print_suite(rep, v_out);
        }

        if (*scan) {
            at::ScanConfig cfg;
            if (!s_nu.empty()) cfg.nus.push_back(at::parse_path(s_nu));
            cfg.max_n = s_max_n;
            cfg.max_e = s_max_e;
            cfg.random_count = s_random;
            cfg.seed = s_seed;
            cfg.max_elements = s_guard;
            cfg.jobs = s_jobs;
            cfg.stats.clear();
            {
                std::istringstream is(s_stats);
                std::string cur;
                while (std::getline(is, cur, ',')) cfg.stats.push_back(cur);
            }
            if (!s_delta.empty()) {
                if (cfg.nus.empty())
                    throw std::invalid_argument("--delta needs an explicit --nu");
                cfg.all_deltas = false;
                cfg.deltas.push_back(parse_delta(s_delta, at::run_length(cfg.nus[0])));
            }
            at::ScanReport rep = at::run_conjecture_scan(cfg);

            at::json j;
            at::json entries = at::json::array();
            for (const auto& e : rep.entries)
                entries.push_back({{"nu", e.nu},
                                   {"elements", e.elements},
                                   {"deltas", e.delta_count},
                                   {"skipped", e.skipped},
                                   {"consistent", e.consistent},
                                   {"witness", e.witness}});
            j["entries"] = entries;
            j["scanned"] = rep.scanned;
            j["skipped"] = rep.skipped;
            j["consistent"] = rep.all_consistent;

            if (s_format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& e : rep.entries) {
                    if (e.skipped) {
                        std::cout << "  SKIP " << e.nu << " (" << e.elements << " elements)\n";
                    } else if (!e.consistent) {
                        std::cout << "  COUNTEREXAMPLE " << e.nu << ": " << e.witness << "\n";
                    }
                }
                std::cout << "scanned " << rep.scanned << " paths (" << rep.skipped << " skipped): "
                          << (rep.all_consistent ? "CONSISTENT" : "COUNTEREXAMPLE FOUND") << "\n";
            }
            if (!s_out.empty()) write_file(s_out, j.dump(2) + "\n");
            return rep.all_consistent ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
