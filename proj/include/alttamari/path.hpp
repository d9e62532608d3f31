#pragma once

// Lattice-path primitives: N/E words, run-length encodings, increment
// vectors, and enumeration of the paths weakly above a base path.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alttamari {

struct Coord {
    int x = 0;
    int y = 0;
    friend bool operator==(const Coord&, const Coord&) = default;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

// A path over {N, E}, stored as a string of 'N'/'E' characters.
// The empty path is allowed (degenerate one-point case).
struct LatticePath {
    std::string steps;

    LatticePath() = default;
    explicit LatticePath(std::string s) : steps(std::move(s)) {}

    int length() const { return static_cast<int>(steps.size()); }
    int east_count() const { return static_cast<int>(std::count(steps.begin(), steps.end(), 'E')); }
    int north_count() const { return static_cast<int>(std::count(steps.begin(), steps.end(), 'N')); }
    Coord endpoint() const { return Coord{east_count(), north_count()}; }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// x-coordinates of the N steps, in order. Determines the path together
// with the total number of E steps; also the canonical sort key.
inline std::vector<int> north_xcoords(const LatticePath& p) {
    std::vector<int> out;
    int x = 0;
    for (char c : p.steps) {
        if (c == 'E') ++x;
        else out.push_back(x);
    }
    return out;
}

inline std::vector<Coord> points_along(const LatticePath& p) {
    std::vector<Coord> pts;
    pts.reserve(p.steps.size() + 1);
    Coord cur{0, 0};
    pts.push_back(cur);
    for (char c : p.steps) {
        if (c == 'E') ++cur.x;
        else ++cur.y;
        pts.push_back(cur);
    }
    return pts;
}

// Run-length form (nu_0, nu_1, ..., nu_n): nu_0 initial E steps, nu_i the
// E steps right after the i-th N step.
struct RunLength {
    std::vector<int> values;

    int north_count() const { return static_cast<int>(values.size()) - 1; }
    int east_count() const { return std::accumulate(values.begin(), values.end(), 0); }
};

inline RunLength run_length(const LatticePath& p) {
    RunLength r;
    r.values.assign(1, 0);
    for (char c : p.steps) {
        if (c == 'E') ++r.values.back();
        else r.values.push_back(0);
    }
    return r;
}

inline LatticePath from_run_length(const RunLength& r) {
    if (r.values.empty()) throw std::invalid_argument("run-length form must have at least one entry");
    std::string s;
    s.append(static_cast<size_t>(r.values[0]), 'E');
    for (size_t i = 1; i < r.values.size(); ++i) {
        if (r.values[i] < 0) throw std::invalid_argument("run-length entries must be nonnegative");
        s.push_back('N');
        s.append(static_cast<size_t>(r.values[i]), 'E');
    }
    return LatticePath{std::move(s)};
}

// Canonical text form, grouping repeated steps with exponents: "EN^2E^2N".
inline std::string to_string(const LatticePath& p) {
    std::string out;
    size_t i = 0;
    while (i < p.steps.size()) {
        size_t j = i;
        while (j < p.steps.size() && p.steps[j] == p.steps[i]) ++j;
        out.push_back(p.steps[i]);
        if (j - i > 1) {
            out.push_back('^');
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

// Parses either the word grammar (step exponent?)* or the run-length
// alternate "(nu_0,nu_1,...,nu_n)".
inline LatticePath parse_path(std::string_view text) {
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw std::invalid_argument("run-length form: missing ')'");
        RunLength r;
        std::string cur;
        for (char c : text.substr(1, text.size() - 2)) {
            if (c == ',') {
                if (cur.empty()) throw std::invalid_argument("run-length form: empty entry");
                r.values.push_back(std::stoi(cur));
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == ' ') {
                if (c != ' ') cur.push_back(c);
            } else {
                throw std::invalid_argument(std::string("run-length form: bad character '") + c + "'");
            }
        }
        if (cur.empty()) throw std::invalid_argument("run-length form: empty entry");
        r.values.push_back(std::stoi(cur));
        return from_run_length(r);
    }

    std::string s;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != 'N' && c != 'E')
            throw std::invalid_argument(std::string("path text: bad character '") + c + "'");
        ++i;
        long long rep = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("path text: '^' without exponent");
            rep = std::stoll(std::string(text.substr(i, j - i)));
            if (rep <= 0) throw std::invalid_argument("path text: exponent must be positive");
            if (rep > 1000000) throw std::invalid_argument("path text: exponent too large");
            i = j;
        }
        s.append(static_cast<size_t>(rep), c);
    }
    return LatticePath{std::move(s)};
}

// Increment vector delta = (delta_1..delta_n), 0 <= delta_i <= nu_i.
using IncrementVector = std::vector<int>;

inline void validate_increment(const RunLength& nu, const IncrementVector& delta) {
    int n = nu.north_count();
    if (static_cast<int>(delta.size()) != n)
        throw std::invalid_argument("increment vector has wrong length (need one entry per N step)");
    for (int i = 0; i < n; ++i) {
        if (delta[i] < 0 || delta[i] > nu.values[static_cast<size_t>(i) + 1])
            throw std::invalid_argument("increment vector entry out of range 0..nu_i");
    }
}

inline IncrementVector tamari_increment(const RunLength& nu) {
    return IncrementVector(nu.values.begin() + 1, nu.values.end());
}

inline IncrementVector dyck_increment(const RunLength& nu) {
    return IncrementVector(static_cast<size_t>(nu.north_count()), 0);
}

inline bool same_endpoints(const LatticePath& a, const LatticePath& b) {
    return a.endpoint() == b.endpoint();
}

inline bool weakly_above(const LatticePath& mu, const LatticePath& nu) {
    if (!same_endpoints(mu, nu)) return false;
    auto xm = north_xcoords(mu);
    auto xn = north_xcoords(nu);
    for (size_t i = 0; i < xm.size(); ++i)
        if (xm[i] > xn[i]) return false;
    return true;
}

struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of paths weakly above nu with nu's endpoints, saturating well
// above any sensible guard so callers can compare against a bound.
inline unsigned long long count_nu_paths(const LatticePath& nu) {
    constexpr unsigned long long cap = 1ull << 62;
    auto bound = north_xcoords(nu);
    int n = static_cast<int>(bound.size());
    int m = nu.east_count();
    if (n == 0) return 1;
    // f[x] = number of prefixes whose last N step sits at x
    std::vector<unsigned long long> f(static_cast<size_t>(m) + 1, 0);
    for (int x = 0; x <= bound[0]; ++x) f[static_cast<size_t>(x)] = 1;
    for (int j = 1; j < n; ++j) {
        std::vector<unsigned long long> g(static_cast<size_t>(m) + 1, 0);
        unsigned long long acc = 0;
        for (int x = 0; x <= bound[static_cast<size_t>(j)]; ++x) {
            acc += f[static_cast<size_t>(x)];
            if (acc > cap) acc = cap;
            g[static_cast<size_t>(x)] = acc;
        }
        f.swap(g);
    }
    unsigned long long total = 0;
    for (auto v : f) {
        total += v;
        if (total > cap) return cap;
    }
    return total;
}

// All nu-paths in canonical order: ascending by the tuple of x-coordinates
// of their N steps. nu is last, the top path N^n E^m first.
inline std::vector<LatticePath> enumerate_nu_paths(const LatticePath& nu) {
    auto bound = north_xcoords(nu);
    int n = static_cast<int>(bound.size());
    int m = nu.east_count();
    std::vector<LatticePath> out;
    std::vector<int> xs(static_cast<size_t>(n), 0);
    auto emit = [&]() {
        std::string s;
        int x = 0;
        for (int v : xs) {
            s.append(static_cast<size_t>(v - x), 'E');
            s.push_back('N');
            x = v;
        }
        s.append(static_cast<size_t>(m - x), 'E');
        out.push_back(LatticePath{std::move(s)});
    };
    if (n == 0) {
        out.push_back(nu);
        return out;
    }
    // lex successor over weakly increasing tuples xs with xs[j] <= bound[j];
    // bound is itself weakly increasing, so resets stay feasible
    while (true) {
        emit();
        int j = n - 1;
        while (j >= 0 && xs[static_cast<size_t>(j)] == bound[static_cast<size_t>(j)]) --j;
        if (j < 0) break;
        ++xs[static_cast<size_t>(j)];
        for (int i = j + 1; i < n; ++i) xs[static_cast<size_t>(i)] = xs[static_cast<size_t>(j)];
    }
    return out;
}

} // namespace alttamari
