#pragma once

// Conjecture scan: for each base path nu, build the alt lattice for every
// increment vector and compare orbit-size multisets and statistic orbit-sum
// multisets across them. Reports CONSISTENT or a counterexample witness.

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alttamari/parallel.hpp"
#include "alttamari/stats.hpp"
#include "alttamari/tamari.hpp"
#include "alttamari/verify.hpp"

namespace alttamari {

struct ScanConfig {
    std::vector<LatticePath> nus;  // explicit targets; empty = generate below
    int max_n = 4;                 // generator: up to this many N steps
    int max_e = 6;                 // generator: up to this many E steps
    int random_count = 0;          // > 0: sample instead of exhaustive generation
    unsigned long long seed = 1;
    long long max_elements = 50000;
    std::vector<std::string> stats = {"ddeg"};
    bool all_deltas = true;
    std::vector<IncrementVector> deltas;  // used when all_deltas is false
    int jobs = 0;
};

struct ScanEntry {
    std::string nu;
    long long elements = 0;
    int delta_count = 0;
    bool skipped = false;
    bool consistent = true;
    std::string witness;
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    int scanned = 0;
    int skipped = 0;
    bool all_consistent = true;
};

namespace detail {

inline std::vector<IncrementVector> all_increments(const RunLength& nu) {
    int n = nu.north_count();
    std::vector<IncrementVector> out;
    IncrementVector d(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(d);
        int i = n - 1;
        while (i >= 0 && d[static_cast<size_t>(i)] == nu.values[static_cast<size_t>(i) + 1]) --i;
        if (i < 0) break;
        ++d[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) d[static_cast<size_t>(j)] = 0;
    }
    return out;
}

inline std::vector<LatticePath> all_paths_up_to(int max_n, int max_e) {
    std::vector<LatticePath> out;
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_e; ++m) {
            if (n == 0 && m == 0) continue;
            // all words with n N's and m E's, lex order (E < N)
            std::string w(static_cast<size_t>(m), 'E');
            w.append(static_cast<size_t>(n), 'N');
            while (true) {
                out.push_back(LatticePath{w});
                if (!std::next_permutation(w.begin(), w.end())) break;
            }
        }
    }
    return out;
}

} // namespace detail

inline ScanEntry scan_one(const LatticePath& nu, const ScanConfig& cfg) {
    ScanEntry e;
    e.nu = to_string(nu);
    unsigned long long count = count_nu_paths(nu);
    e.elements = static_cast<long long>(count);
    if (count > static_cast<unsigned long long>(cfg.max_elements)) {
        e.skipped = true;
        e.witness = "skipped: |P(nu)| exceeds the element guard";
        return e;
    }

    RunLength rl = run_length(nu);
    std::vector<IncrementVector> deltas = cfg.all_deltas ? detail::all_increments(rl) : cfg.deltas;
    e.delta_count = static_cast<int>(deltas.size());

    std::vector<int> ref_sizes;
    std::vector<std::vector<std::pair<long long, long long>>> ref_stats;
    std::string ref_delta;
    BuildOptions opt;
    opt.max_elements = cfg.max_elements;
    for (const auto& d : deltas) {
        AltTamariLattice L = build_alt_tamari(nu, d, opt);
        if (!L.lattice.is_semidistributive()) {
            e.consistent = false;
            e.witness = "delta=" + detail::seq_str(d) + " produced a non-semidistributive lattice";
            return e;
        }
        OrbitDecomposition dec = orbit_decomposition(L.lattice);
        std::vector<int> sizes = dec.sizes();
        std::sort(sizes.begin(), sizes.end());

        StatContext ctx{&L.lattice, &L.elements, &L.nu};
        std::vector<std::vector<std::pair<long long, long long>>> stat_sums;
        for (const auto& name : cfg.stats) {
            StatReport rep = orbit_stat_report(ctx, dec, name);
            std::vector<std::pair<long long, long long>> sums;
            for (size_t i = 0; i < rep.orbit_sums.size(); ++i)
                sums.emplace_back(rep.orbit_sizes[i], rep.orbit_sums[i]);
            std::sort(sums.begin(), sums.end());
            stat_sums.push_back(std::move(sums));
        }

        if (ref_delta.empty()) {
            ref_sizes = sizes;
            ref_stats = stat_sums;
            ref_delta = detail::seq_str(d);
            continue;
        }
        if (sizes != ref_sizes) {
            e.consistent = false;
            e.witness = "orbit sizes differ: delta=" + ref_delta + " gives " + detail::seq_str(ref_sizes) +
                        ", delta=" + detail::seq_str(d) + " gives " + detail::seq_str(sizes);
            return e;
        }
        for (size_t s = 0; s < cfg.stats.size(); ++s) {
            if (stat_sums[s] != ref_stats[s]) {
                e.consistent = false;
                e.witness = "statistic '" + cfg.stats[s] + "' orbit sums differ between delta=" + ref_delta +
                            " and delta=" + detail::seq_str(d);
                return e;
            }
        }
    }
    return e;
}

inline ScanReport run_conjecture_scan(const ScanConfig& cfg) {
    std::vector<LatticePath> nus = cfg.nus;
    if (nus.empty()) {
        if (cfg.random_count > 0) {
            std::mt19937_64 rng(cfg.seed);
            for (int i = 0; i < cfg.random_count; ++i)
                nus.push_back(sample_random_nu(rng, cfg.max_n, cfg.max_e));
        } else {
            nus = detail::all_paths_up_to(cfg.max_n, cfg.max_e);
        }
    }

    ScanReport rep;
    rep.entries.resize(nus.size());
    run_indexed(nus.size(), cfg.jobs, [&](size_t i) { rep.entries[i] = scan_one(nus[i], cfg); });
    for (const auto& e : rep.entries) {
        if (e.skipped) ++rep.skipped;
        else ++rep.scanned;
        if (!e.skipped && !e.consistent) rep.all_consistent = false;
    }
    return rep;
}

} // namespace alttamari
