#pragma once

// DOT and JSON serialization for cover graphs, orbit decompositions,
// bracket vectors, statistic reports, and prediction records.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "alttamari/bracket.hpp"
#include "alttamari/closed_forms.hpp"
#include "alttamari/lattice.hpp"
#include "alttamari/stats.hpp"

namespace alttamari {

using json = nlohmann::json;

inline std::string to_dot(const FiniteLattice& L, const std::vector<std::string>& labels,
                          const std::string& name = "cover_graph") {
    std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
    for (int i = 0; i < L.size(); ++i) {
        std::string lab = i < static_cast<int>(labels.size()) ? labels[static_cast<size_t>(i)] : std::to_string(i);
        out += "  " + std::to_string(i) + " [label=\"" + lab + "\"];\n";
    }
    for (auto [u, v] : L.covers())
        out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

inline json orbit_json(const OrbitDecomposition& dec) {
    json j;
    j["order"] = dec.order;
    j["sizes"] = dec.sizes();
    j["orbits"] = dec.orbits;
    return j;
}

inline json cover_graph_json(const FiniteLattice& L, const std::vector<std::string>& labels) {
    json j;
    j["count"] = L.size();
    j["elements"] = labels;
    json edges = json::array();
    for (auto [u, v] : L.covers()) edges.push_back({u, v});
    j["covers"] = edges;
    return j;
}

inline json bracket_json(const BracketVector& b) {
    json j;
    j["entries"] = b.entries;
    j["fixed_positions"] = b.fixed_positions;
    return j;
}

inline json stat_report_json(const StatReport& r) {
    json j;
    j["statistic"] = r.statistic;
    j["orbit_sizes"] = r.orbit_sizes;
    j["orbit_sums"] = r.orbit_sums;
    j["homomesic"] = r.homomesic;
    if (r.homomesic) j["average"] = r.average.str();
    j["homometric"] = r.homometric;
    return j;
}

inline std::string stat_report_table(const StatReport& r) {
    std::string out = "statistic " + r.statistic + "\n";
    out += "  orbit  size  sum\n";
    for (size_t i = 0; i < r.orbit_sums.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "  %5zu %5d %4lld\n", i, r.orbit_sizes[i], r.orbit_sums[i]);
        out += buf;
    }
    out += "  homomesic:  " + std::string(r.homomesic ? "yes" : "no");
    if (r.homomesic) out += " (average " + r.average.str() + ")";
    out += "\n  homometric: " + std::string(r.homometric ? "yes" : "no") + "\n";
    return out;
}

inline json hook_prediction_json(const HookPrediction& p) {
    json j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["k"] = p.k;
    j["gcd"] = p.g;
    j["lcm"] = p.l;
    j["orbit_sizes"] = p.orbit_sizes;
    j["row_order"] = p.row_order;
    j["ddeg"] = {{"orbit", p.ddeg_o}, {"extra_orbit", p.ddeg_o_prime}};
    j["peak"] = {{"orbit", p.peak_o}, {"extra_orbit", p.peak_o_prime}};
    j["val"] = {{"orbit", p.val_o}, {"extra_orbit", p.val_o_prime}};
    if (p.area_o) j["area"] = {{"orbit", p.area_o->str()}, {"extra_orbit", p.area_o_prime->str()}};
    return j;
}

inline json two_row_prediction_json(const TwoRowPrediction& p) {
    json j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["quotient"] = p.s;
    j["remainder"] = p.r;
    json cls = json::array();
    for (const auto& c : p.classes)
        cls.push_back({{"name", c.name}, {"count", c.count}, {"size", c.size}, {"ddeg_sum", c.ddeg_sum}});
    j["classes"] = cls;
    j["element_count"] = p.element_count();
    return j;
}

inline json csp_polynomial_json(const CspPolynomial& f) {
    json j;
    json terms = json::array();
    for (auto [e, c] : f.coeff) terms.push_back({{"exponent", e}, {"coefficient", c}});
    j["terms"] = terms;
    j["value_at_one"] = f.at_one();
    return j;
}

} // namespace alttamari
