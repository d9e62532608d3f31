#pragma once

// Path and poset statistics, per-orbit sums, and the homomesy/homometry
// verdicts (exact rational arithmetic, never floating point).

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "alttamari/lattice.hpp"
#include "alttamari/path.hpp"
#include "alttamari/rational.hpp"
#include "alttamari/rotation.hpp"

namespace alttamari {

struct PathStats {
    int peak = 0;       // NE factors
    int val = 0;        // EN factors
    long long area = 0; // cells between mu and nu
};

// y-coordinate of each E step in order; the area between two paths with the
// same endpoints is the columnwise difference of these profiles.
inline std::vector<int> east_heights(const LatticePath& p) {
    std::vector<int> h;
    h.reserve(static_cast<size_t>(p.east_count()));
    int y = 0;
    for (char c : p.steps) {
        if (c == 'N') ++y;
        else h.push_back(y);
    }
    return h;
}

inline PathStats path_stats(const LatticePath& mu, const LatticePath& nu) {
    require_nu_path(mu, nu);
    PathStats st;
    for (size_t i = 0; i + 1 < mu.steps.size(); ++i) {
        if (mu.steps[i] == 'N' && mu.steps[i + 1] == 'E') ++st.peak;
        if (mu.steps[i] == 'E' && mu.steps[i + 1] == 'N') ++st.val;
    }
    auto hm = east_heights(mu);
    auto hn = east_heights(nu);
    for (size_t i = 0; i < hm.size(); ++i) st.area += hm[i] - hn[i];
    return st;
}

// Statistics are evaluated against this bundle; the path-based ones need
// element payloads, ddeg needs only the lattice.
struct StatContext {
    const FiniteLattice* lattice = nullptr;
    const std::vector<LatticePath>* paths = nullptr;
    const LatticePath* nu = nullptr;
};

using StatFn = std::function<long long(const StatContext&, int)>;

inline const std::map<std::string, StatFn>& statistic_registry() {
    static const std::map<std::string, StatFn> reg = {
        {"ddeg",
         [](const StatContext& c, int id) -> long long { return ddeg(*c.lattice, id); }},
        {"peak",
         [](const StatContext& c, int id) -> long long {
             if (!c.paths || !c.nu) throw std::invalid_argument("statistic 'peak' needs path elements");
             return path_stats((*c.paths)[static_cast<size_t>(id)], *c.nu).peak;
         }},
        {"val",
         [](const StatContext& c, int id) -> long long {
             if (!c.paths || !c.nu) throw std::invalid_argument("statistic 'val' needs path elements");
             return path_stats((*c.paths)[static_cast<size_t>(id)], *c.nu).val;
         }},
        {"area",
         [](const StatContext& c, int id) -> long long {
             if (!c.paths || !c.nu) throw std::invalid_argument("statistic 'area' needs path elements");
             return path_stats((*c.paths)[static_cast<size_t>(id)], *c.nu).area;
         }},
    };
    return reg;
}

inline const StatFn& statistic_fn(const std::string& name) {
    const auto& reg = statistic_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw std::invalid_argument("unknown statistic '" + name + "'");
    return it->second;
}

struct StatReport {
    std::string statistic;
    std::vector<int> orbit_sizes;
    std::vector<long long> orbit_sums;
    bool homomesic = false;
    Rational average;   // common orbit average when homomesic
    bool homometric = false;
};

inline StatReport orbit_stat_report(const StatContext& ctx, const OrbitDecomposition& dec,
                                    const std::string& name) {
    const StatFn& fn = statistic_fn(name);
    StatReport rep;
    rep.statistic = name;
    for (const auto& orbit : dec.orbits) {
        long long sum = 0;
        for (int id : orbit) sum += fn(ctx, id);
        rep.orbit_sizes.push_back(static_cast<int>(orbit.size()));
        rep.orbit_sums.push_back(sum);
    }

    rep.homomesic = true;
    if (!rep.orbit_sums.empty()) {
        rep.average = Rational(rep.orbit_sums[0], rep.orbit_sizes[0]);
        for (size_t i = 1; i < rep.orbit_sums.size(); ++i)
            if (Rational(rep.orbit_sums[i], rep.orbit_sizes[i]) != rep.average) rep.homomesic = false;
    }

    rep.homometric = true;
    std::map<int, long long> by_size;
    for (size_t i = 0; i < rep.orbit_sums.size(); ++i) {
        auto [it, fresh] = by_size.emplace(rep.orbit_sizes[i], rep.orbit_sums[i]);
        if (!fresh && it->second != rep.orbit_sums[i]) rep.homometric = false;
    }
    return rep;
}

} // namespace alttamari
