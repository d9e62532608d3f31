#pragma once

// nu-bracket vectors: fixed positions from the base path, remaining slots
// filled right to left per value class. Componentwise order on bracket
// vectors with a shared base realizes the Tamari order.
//
// Also the simplified coordinates for the hook family (s,t) and the 2-row
// family (a-s, u, v), parsed from bracket vectors with strict shape checks.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "alttamari/path.hpp"

namespace alttamari {

struct BracketVector {
    std::vector<int> entries;
    std::vector<int> fixed_positions;  // fixed_positions[i] = index holding value i

    friend bool operator==(const BracketVector&, const BracketVector&) = default;
};

// nu-hat = (sum(nu) - sum(delta), delta_1, ..., delta_n): the base path for
// which Tam_delta(nu) is the interval [nu, 1^nu] in Tam(nu-hat).
inline LatticePath nu_hat(const RunLength& nu, const IncrementVector& delta) {
    validate_increment(nu, delta);
    RunLength h;
    h.values.reserve(nu.values.size());
    int total = nu.east_count();
    int dsum = 0;
    for (int d : delta) dsum += d;
    h.values.push_back(total - dsum);
    h.values.insert(h.values.end(), delta.begin(), delta.end());
    return from_run_length(h);
}

inline BracketVector bracket_vector(const LatticePath& base, const LatticePath& mu) {
    if (!weakly_above(mu, base))
        throw std::invalid_argument("bracket_vector: path is not weakly above the base");
    auto base_pts = points_along(base);
    auto mu_pts = points_along(mu);
    int n = base.north_count();
    int r = static_cast<int>(base_pts.size()) - 1;

    BracketVector b;
    b.entries.assign(static_cast<size_t>(r) + 1, -1);
    b.fixed_positions.assign(static_cast<size_t>(n) + 1, -1);
    for (int i = 0; i <= r; ++i) b.fixed_positions[static_cast<size_t>(base_pts[static_cast<size_t>(i)].y)] = i;
    for (int v = 0; v <= n; ++v) b.entries[static_cast<size_t>(b.fixed_positions[static_cast<size_t>(v)])] = v;

    std::vector<int> count(static_cast<size_t>(n) + 1, 0);
    for (const auto& p : mu_pts) ++count[static_cast<size_t>(p.y)];
    for (int v = 0; v <= n; ++v) {
        int need = count[static_cast<size_t>(v)] - 1;
        for (int i = b.fixed_positions[static_cast<size_t>(v)] - 1; need > 0; --i) {
            if (i < 0) throw std::logic_error("bracket_vector: ran out of slots");
            if (b.entries[static_cast<size_t>(i)] < 0) {
                b.entries[static_cast<size_t>(i)] = v;
                --need;
            }
        }
    }
    return b;
}

inline bool componentwise_leq(const BracketVector& b1, const BracketVector& b2) {
    if (b1.entries.size() != b2.entries.size() || b1.fixed_positions != b2.fixed_positions)
        throw std::invalid_argument("componentwise_leq: bracket vectors have different shapes");
    for (size_t i = 0; i < b1.entries.size(); ++i)
        if (b1.entries[i] > b2.entries[i]) return false;
    return true;
}

// ---- hook family, nu = E N^{a-1} E^{b-1} N ------------------------------

struct HookCoords {
    int s = 0;
    int t = 0;
    friend bool operator==(const HookCoords&, const HookCoords&) = default;
};

namespace detail {

[[noreturn]] inline void bad_shape(const std::string& what) {
    throw std::invalid_argument("bracket vector does not have the expected family shape: " + what);
}

inline std::vector<int> expected_fixed_positions(const LatticePath& base) {
    auto pts = points_along(base);
    int n = base.north_count();
    std::vector<int> f(static_cast<size_t>(n) + 1, -1);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) f[static_cast<size_t>(pts[static_cast<size_t>(i)].y)] = i;
    return f;
}

} // namespace detail

inline LatticePath hook_nu(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("hook family needs a, b >= 1");
    std::string s = "E";
    s.append(static_cast<size_t>(a - 1), 'N');
    s.append(static_cast<size_t>(b - 1), 'E');
    s.push_back('N');
    return LatticePath{std::move(s)};
}

inline IncrementVector hook_delta(int a, int b, int k) {
    if (a < 1 || b < 1) throw std::invalid_argument("hook family needs a, b >= 1");
    if (k < 0 || k > b - 1) throw std::invalid_argument("hook family needs 0 <= k <= b-1");
    if (a == 1) return IncrementVector{0};
    IncrementVector d(static_cast<size_t>(a), 0);
    d[static_cast<size_t>(a) - 2] = k;
    return d;
}

inline LatticePath hook_nu_hat(int a, int b, int k) {
    return nu_hat(run_length(hook_nu(a, b)), hook_delta(a, b, k));
}

// (s, t) from the nu-hat(k)-bracket vector of an element of H_{delta(k)}(a,b):
// s is the entry right before the fixed 0, t the number of top values in the
// non-fixed blocks around it. Anything off the characterized shape is rejected.
inline HookCoords hook_coords(const BracketVector& b, int a, int b_len, int k) {
    LatticePath base = hook_nu_hat(a, b_len, k);
    auto f = detail::expected_fixed_positions(base);
    if (b.fixed_positions != f || b.entries.size() != static_cast<size_t>(base.length()) + 1)
        detail::bad_shape("fixed positions do not match nu-hat(" + std::to_string(k) + ")");
    int f0 = f[0];
    if (f0 < 1) detail::bad_shape("no slot before the fixed 0");
    int s = b.entries[static_cast<size_t>(f0) - 1];
    if (s < 0 || s > a) detail::bad_shape("s out of range");

    std::vector<char> is_fixed(b.entries.size(), 0);
    for (int pos : f) is_fixed[static_cast<size_t>(pos)] = 1;
    std::vector<int> block;  // the concatenation (alpha, beta), or gamma for a=1
    for (size_t i = 0; i < b.entries.size(); ++i) {
        if (!is_fixed[i] && static_cast<int>(i) != f0 - 1) block.push_back(b.entries[i]);
    }
    int hi = (a > 1) ? a : 1;
    int lo = hi - 1;
    int t = 0;
    bool seen_lo = false;
    for (int v : block) {
        if (v == hi && !seen_lo) ++t;
        else if (v == lo) seen_lo = true;
        else detail::bad_shape("block is not of the form (hi..hi, lo..lo)");
    }
    if (static_cast<int>(block.size()) != b_len - 1) detail::bad_shape("block has the wrong length");

    if (a == 1) {
        if (s == 1 && t != b_len - 1) detail::bad_shape("s=1 forces t=b-1");
    } else if (s == a - 1) {
        if (t > b_len - 1 - k) detail::bad_shape("s=a-1 forces t <= b-1-k");
    } else if (s == a) {
        if (t < b_len - 1 - k) detail::bad_shape("s=a forces t >= b-1-k");
    }
    return HookCoords{s, t};
}

// ---- 2-row family, nu = E^a N E^b N --------------------------------------

struct TwoRowTriple {
    int height = 0;  // a - s
    int u = 0;       // number of 2's in alpha
    int v = 0;       // number of 2's in beta
    friend bool operator==(const TwoRowTriple&, const TwoRowTriple&) = default;
};

inline LatticePath two_row_nu(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("2-row family needs a, b >= 0");
    std::string s;
    s.append(static_cast<size_t>(a), 'E');
    s.push_back('N');
    s.append(static_cast<size_t>(b), 'E');
    s.push_back('N');
    return LatticePath{std::move(s)};
}

inline IncrementVector two_row_delta(int a, int b, int k) {
    if (a < 0 || b < 0) throw std::invalid_argument("2-row family needs a, b >= 0");
    if (k < 0 || k > b) throw std::invalid_argument("2-row family needs 0 <= k <= b");
    return IncrementVector{k, 0};
}

inline LatticePath two_row_nu_hat(int a, int b, int k) {
    return nu_hat(run_length(two_row_nu(a, b)), two_row_delta(a, b, k));
}

inline TwoRowTriple two_row_triple(const BracketVector& b, int a, int b_len, int k) {
    LatticePath base = two_row_nu_hat(a, b_len, k);
    auto f = detail::expected_fixed_positions(base);
    if (b.fixed_positions != f || b.entries.size() != static_cast<size_t>(base.length()) + 1)
        detail::bad_shape("fixed positions do not match nu-hat(" + std::to_string(k) + ")");
    int f0 = f[0];

    int s = 0;
    for (int i = f0 - 1; i >= 0 && b.entries[static_cast<size_t>(i)] == 0; --i) ++s;
    if (s > a) detail::bad_shape("more than a leading zeros");

    // alpha = non-fixed slots before the zero run, beta = slots between the
    // fixed 0 and the fixed 1
    std::vector<int> alpha(b.entries.begin(), b.entries.begin() + (f0 - s));
    std::vector<int> beta(b.entries.begin() + f0 + 1, b.entries.begin() + f[1]);
    if (static_cast<int>(alpha.size()) != a + b_len - k - s || static_cast<int>(beta.size()) != k)
        detail::bad_shape("alpha/beta block lengths are off");

    int u = 0, v = 0;
    bool seen_one = false;
    for (int x : alpha) {
        if (x == 2 && !seen_one) ++u;
        else if (x == 1) seen_one = true;
        else detail::bad_shape("alpha is not of the form (2..2, 1..1)");
    }
    for (int x : beta) {
        if (x == 2 && !seen_one) ++v;
        else if (x == 1) seen_one = true;
        else detail::bad_shape("beta is not of the form (2..2, 1..1) after alpha");
    }
    if (v > 0 && u != a + b_len - k - s)
        detail::bad_shape("v > 0 requires alpha to be all 2's");
    return TwoRowTriple{a - s, u, v};
}

} // namespace alttamari
