#pragma once

// The two studied families with their simplified coordinates attached:
// alt hook-Tamari H_{delta(k)}(a,b) and alt 2-row-Tamari T_{delta(k)}(a,b).

#include <vector>

#include "alttamari/bracket.hpp"
#include "alttamari/tamari.hpp"

namespace alttamari {

struct HookLattice {
    int a = 0, b = 0, k = 0;
    AltTamariLattice alt;
    std::vector<HookCoords> coords;  // per element id

    Coord point(int id) const { return Coord{coords[static_cast<size_t>(id)].s, coords[static_cast<size_t>(id)].t}; }
};

inline HookLattice build_hook(int a, int b, int k, const BuildOptions& opt = {}) {
    HookLattice h;
    h.a = a;
    h.b = b;
    h.k = k;
    h.alt = build_alt_tamari(hook_nu(a, b), hook_delta(a, b, k), opt);
    LatticePath base = hook_nu_hat(a, b, k);
    h.coords.reserve(h.alt.elements.size());
    for (const auto& mu : h.alt.elements)
        h.coords.push_back(hook_coords(bracket_vector(base, mu), a, b, k));
    return h;
}

struct TwoRowLattice {
    int a = 0, b = 0, k = 0;
    AltTamariLattice alt;
    std::vector<TwoRowTriple> triples;  // per element id

    // planar embedding used throughout section-4 arguments: x = u+v, y = a-s
    Coord point(int id) const {
        const auto& t = triples[static_cast<size_t>(id)];
        return Coord{t.u + t.v, t.height};
    }
};

inline TwoRowLattice build_two_row(int a, int b, int k, const BuildOptions& opt = {}) {
    TwoRowLattice t;
    t.a = a;
    t.b = b;
    t.k = k;
    t.alt = build_alt_tamari(two_row_nu(a, b), two_row_delta(a, b, k), opt);
    LatticePath base = two_row_nu_hat(a, b, k);
    t.triples.reserve(t.alt.elements.size());
    for (const auto& mu : t.alt.elements)
        t.triples.push_back(two_row_triple(bracket_vector(base, mu), a, b, k));
    return t;
}

} // namespace alttamari
