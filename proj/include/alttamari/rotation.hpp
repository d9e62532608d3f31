#pragma once

// Delta-altitude profiles and delta-rotations: the cover moves of the
// alt nu-Tamari order.

#include <stdexcept>
#include <vector>

#include "alttamari/path.hpp"

namespace alttamari {

// alt values at the lattice points along mu, indexed 0..length(mu).
// Starts at 0; each E step subtracts 1; the i-th N step adds delta_i.
using AltProfile = std::vector<int>;

namespace detail {

inline AltProfile altitude_profile_unchecked(const IncrementVector& delta, const LatticePath& mu) {
    AltProfile prof;
    prof.reserve(mu.steps.size() + 1);
    prof.push_back(0);
    int i = 0;
    for (char c : mu.steps) {
        if (c == 'E') prof.push_back(prof.back() - 1);
        else prof.push_back(prof.back() + delta[static_cast<size_t>(i++)]);
    }
    return prof;
}

// One cover per valley EN of mu, valleys left to right. x is the point
// inside the valley, y the first later point at the same altitude; the
// subpath mu(x,y) trades places with the E step before x.
inline std::vector<LatticePath> covers_unchecked(const IncrementVector& delta, const LatticePath& mu) {
    AltProfile prof = altitude_profile_unchecked(delta, mu);
    std::vector<LatticePath> out;
    const std::string& s = mu.steps;
    for (size_t p = 0; p + 1 < s.size(); ++p) {
        if (s[p] != 'E' || s[p + 1] != 'N') continue;
        int target = prof[p + 1];
        size_t q = 0;
        for (size_t t = p + 2; t < prof.size(); ++t) {
            if (prof[t] == target) { q = t; break; }
        }
        if (q == 0) throw std::logic_error("delta-rotation: no matching altitude point after valley");
        std::string next;
        next.reserve(s.size());
        next.append(s, 0, p);
        next.append(s, p + 1, q - (p + 1));
        next.push_back('E');
        next.append(s, q, std::string::npos);
        out.push_back(LatticePath{std::move(next)});
    }
    return out;
}

} // namespace detail

inline void require_nu_path(const LatticePath& mu, const LatticePath& nu) {
    if (!weakly_above(mu, nu))
        throw std::invalid_argument("path is not weakly above the base path (not a nu-path)");
}

inline AltProfile delta_altitude(const LatticePath& nu, const IncrementVector& delta, const LatticePath& mu) {
    validate_increment(run_length(nu), delta);
    require_nu_path(mu, nu);
    return detail::altitude_profile_unchecked(delta, mu);
}

inline std::vector<LatticePath> delta_covers(const LatticePath& nu, const IncrementVector& delta,
                                             const LatticePath& mu) {
    validate_increment(run_length(nu), delta);
    require_nu_path(mu, nu);
    auto out = detail::covers_unchecked(delta, mu);
    for (const auto& p : out) {
        if (!weakly_above(p, nu))
            throw std::logic_error("delta-rotation left the nu-path region");
    }
    return out;
}

} // namespace alttamari
