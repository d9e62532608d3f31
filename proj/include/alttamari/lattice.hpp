#pragma once

// Generic finite-lattice machinery: validated construction from cover
// relations, meet/join tables, semidistributivity, pop-stack operators,
// rowmotion, and orbit decomposition.
//
// Reachability is kept as bitsets over a topological rank space so that
// "unique maximal element of a down-closed set" is a top-bit scan plus a
// subset test. Element ids are the caller's; ranks stay internal.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alttamari {

struct lattice_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FiniteLattice {
public:
    struct Options {
        // When false the semidistributivity verdict is computed lazily on
        // first query instead of at construction (batch runs over families
        // already known to be semidistributive).
        bool check_semidistributive = true;
    };

    FiniteLattice() = default;

    static FiniteLattice from_covers(int n, std::vector<std::pair<int, int>> covers) {
        return from_covers(n, std::move(covers), Options{});
    }

    static FiniteLattice from_covers(int n, std::vector<std::pair<int, int>> covers,
                                     const Options& opt) {
        if (n <= 0) throw lattice_error("lattice needs at least one element");
        FiniteLattice L;
        L.n_ = n;
        L.words_ = (n + 63) / 64;
        L.up_.assign(static_cast<size_t>(n), {});
        L.dn_.assign(static_cast<size_t>(n), {});

        std::sort(covers.begin(), covers.end());
        for (size_t i = 0; i < covers.size(); ++i) {
            auto [u, v] = covers[i];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw lattice_error("cover relation references element out of range");
            if (u == v) throw lattice_error("cover relation is a self-loop");
            if (i > 0 && covers[i] == covers[i - 1])
                throw lattice_error("duplicate cover relation");
            L.up_[static_cast<size_t>(u)].push_back(v);
            L.dn_[static_cast<size_t>(v)].push_back(u);
        }

        L.topo_sort();
        L.build_reachability();
        L.check_reduced(covers);
        L.find_extremes();
        L.build_tables();
        if (opt.check_semidistributive) L.semidistributive_ = L.compute_semidistributive();
        return L;
    }

    int size() const { return n_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::vector<int>& up_covers(int x) const { return up_[check(x)]; }
    const std::vector<int>& down_covers(int x) const { return dn_[check(x)]; }
    int cover_count() const {
        int c = 0;
        for (const auto& v : up_) c += static_cast<int>(v.size());
        return c;
    }
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : up_[static_cast<size_t>(u)]) out.emplace_back(u, v);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool leq(int x, int y) const {
        return test_bit(&down_bits_[row(check(y))], rank_[static_cast<size_t>(check(x))]);
    }

    int meet(int x, int y) const { return meet_[idx(check(x), check(y))]; }
    int join(int x, int y) const { return join_[idx(check(x), check(y))]; }

    bool is_semidistributive() const {
        if (!semidistributive_) semidistributive_ = compute_semidistributive();
        return *semidistributive_;
    }

    // Pop-stack sorting operators: meet (join) of x with all of its lower
    // (upper) covers. Fixes bottom (top) by the empty-meet convention.
    int pop_down(int x) const {
        int p = check(x);
        for (int d : dn_[static_cast<size_t>(x)]) p = meet(p, d);
        return p;
    }
    int pop_up(int x) const {
        int p = check(x);
        for (int d : up_[static_cast<size_t>(x)]) p = join(p, d);
        return p;
    }

    // Row(x) = the maximal element y with pop_down(x) = x /\ y; unique on a
    // semidistributive lattice. The dual map inverts it.
    int rowmotion(int x) const {
        require_semidistributive();
        int p = pop_down(x);
        const int32_t* mrow = &meet_[idx(check(x), 0)];
        int best = -1, best_rank = -1;
        for (int y = 0; y < n_; ++y) {
            if (mrow[y] == p && rank_[static_cast<size_t>(y)] > best_rank) {
                best_rank = rank_[static_cast<size_t>(y)];
                best = y;
            }
        }
        for (int y = 0; y < n_; ++y) {
            if (mrow[y] == p && !leq(y, best))
                throw lattice_error("rowmotion: candidate set has no unique maximal element "
                                    "(lattice is not semidistributive)");
        }
        return best;
    }

    int rowmotion_inverse(int x) const {
        require_semidistributive();
        int p = pop_up(x);
        const int32_t* jrow = &join_[idx(check(x), 0)];
        int best = -1, best_rank = n_;
        for (int y = 0; y < n_; ++y) {
            if (jrow[y] == p && rank_[static_cast<size_t>(y)] < best_rank) {
                best_rank = rank_[static_cast<size_t>(y)];
                best = y;
            }
        }
        for (int y = 0; y < n_; ++y) {
            if (jrow[y] == p && !leq(best, y))
                throw lattice_error("inverse rowmotion: candidate set has no unique minimal element "
                                    "(lattice is not semidistributive)");
        }
        return best;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> up_, dn_;
    std::vector<int> rank_;   // id -> topological position
    std::vector<int> id_at_;  // topological position -> id
    std::vector<uint64_t> down_bits_, up_bits_;  // n_ rows of words_ words, bits in rank space
    std::vector<int32_t> meet_, join_;           // n_ x n_ row-major
    int bottom_ = -1, top_ = -1;
    mutable std::optional<bool> semidistributive_;

    int check(int x) const {
        if (x < 0 || x >= n_) throw std::out_of_range("element id out of range");
        return x;
    }
    size_t row(int id) const { return static_cast<size_t>(id) * static_cast<size_t>(words_); }
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j); }

    static bool test_bit(const uint64_t* w, int b) {
        return (w[b >> 6] >> (b & 63)) & 1ull;
    }
    static void set_bit(uint64_t* w, int b) { w[b >> 6] |= 1ull << (b & 63); }

    void require_semidistributive() const {
        if (!is_semidistributive())
            throw lattice_error("rowmotion requires a semidistributive lattice");
    }

    void topo_sort() {
        rank_.assign(static_cast<size_t>(n_), -1);
        id_at_.clear();
        id_at_.reserve(static_cast<size_t>(n_));
        std::vector<int> indeg(static_cast<size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) indeg[static_cast<size_t>(v)] = static_cast<int>(dn_[static_cast<size_t>(v)].size());
        std::deque<int> q;
        for (int v = 0; v < n_; ++v)
            if (indeg[static_cast<size_t>(v)] == 0) q.push_back(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            rank_[static_cast<size_t>(u)] = static_cast<int>(id_at_.size());
            id_at_.push_back(u);
            for (int v : up_[static_cast<size_t>(u)])
                if (--indeg[static_cast<size_t>(v)] == 0) q.push_back(v);
        }
        if (static_cast<int>(id_at_.size()) != n_)
            throw lattice_error("cover graph has a cycle");
    }

    void build_reachability() {
        down_bits_.assign(static_cast<size_t>(n_) * static_cast<size_t>(words_), 0);
        up_bits_.assign(static_cast<size_t>(n_) * static_cast<size_t>(words_), 0);
        for (int r = 0; r < n_; ++r) {
            int v = id_at_[static_cast<size_t>(r)];
            uint64_t* dv = &down_bits_[row(v)];
            set_bit(dv, r);
            for (int u : dn_[static_cast<size_t>(v)]) {
                const uint64_t* du = &down_bits_[row(u)];
                for (int w = 0; w < words_; ++w) dv[w] |= du[w];
            }
        }
        for (int r = n_ - 1; r >= 0; --r) {
            int v = id_at_[static_cast<size_t>(r)];
            uint64_t* uv = &up_bits_[row(v)];
            set_bit(uv, r);
            for (int u : up_[static_cast<size_t>(v)]) {
                const uint64_t* uu = &up_bits_[row(u)];
                for (int w = 0; w < words_; ++w) uv[w] |= uu[w];
            }
        }
    }

    void check_reduced(const std::vector<std::pair<int, int>>& covers) const {
        for (auto [u, v] : covers) {
            const uint64_t* dv = &down_bits_[row(v)];
            const uint64_t* uu = &up_bits_[row(u)];
            int cnt = 0;
            for (int w = 0; w < words_; ++w) cnt += std::popcount(dv[w] & uu[w]);
            if (cnt != 2)
                throw lattice_error("cover relation " + std::to_string(u) + " -> " + std::to_string(v) +
                                    " is not transitively reduced");
        }
    }

    void find_extremes() {
        int nb = 0, nt = 0;
        for (int v = 0; v < n_; ++v) {
            if (dn_[static_cast<size_t>(v)].empty()) { bottom_ = v; ++nb; }
            if (up_[static_cast<size_t>(v)].empty()) { top_ = v; ++nt; }
        }
        if (nb != 1) throw lattice_error("poset does not have a unique minimum");
        if (nt != 1) throw lattice_error("poset does not have a unique maximum");
    }

    // Unique maximum of down[i] & down[j]: take the top rank bit, then make
    // sure the whole intersection sits below it. Failure means the order is
    // not a lattice.
    void build_tables() {
        meet_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), -1);
        join_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), -1);
        std::vector<uint64_t> tmp(static_cast<size_t>(words_));
        for (int i = 0; i < n_; ++i) {
            const uint64_t* di = &down_bits_[row(i)];
            const uint64_t* ui = &up_bits_[row(i)];
            for (int j = 0; j <= i; ++j) {
                const uint64_t* dj = &down_bits_[row(j)];
                int top_rank = -1;
                for (int w = words_ - 1; w >= 0; --w) {
                    uint64_t x = di[w] & dj[w];
                    tmp[static_cast<size_t>(w)] = x;
                    if (x && top_rank < 0) top_rank = w * 64 + 63 - std::countl_zero(x);
                }
                if (top_rank < 0)
                    throw lattice_error("elements " + std::to_string(i) + ", " + std::to_string(j) +
                                        " have no common lower bound");
                int z = id_at_[static_cast<size_t>(top_rank)];
                const uint64_t* dz = &down_bits_[row(z)];
                for (int w = 0; w < words_; ++w) {
                    if (tmp[static_cast<size_t>(w)] & ~dz[w])
                        throw lattice_error("no unique meet for elements " + std::to_string(i) + ", " +
                                            std::to_string(j));
                }
                meet_[idx(i, j)] = meet_[idx(j, i)] = z;

                const uint64_t* uj = &up_bits_[row(j)];
                int bot_rank = -1;
                for (int w = 0; w < words_; ++w) {
                    uint64_t x = ui[w] & uj[w];
                    tmp[static_cast<size_t>(w)] = x;
                    if (x && bot_rank < 0) bot_rank = w * 64 + std::countr_zero(x);
                }
                if (bot_rank < 0)
                    throw lattice_error("elements " + std::to_string(i) + ", " + std::to_string(j) +
                                        " have no common upper bound");
                z = id_at_[static_cast<size_t>(bot_rank)];
                const uint64_t* uz = &up_bits_[row(z)];
                for (int w = 0; w < words_; ++w) {
                    if (tmp[static_cast<size_t>(w)] & ~uz[w])
                        throw lattice_error("no unique join for elements " + std::to_string(i) + ", " +
                                            std::to_string(j));
                }
                join_[idx(i, j)] = join_[idx(j, i)] = z;
            }
        }
    }

    // Definition check: for every x <= y the set {z | z /\ y = x} needs a
    // unique maximal element and {z | z \/ x = y} a unique minimal one.
    // Bucketing by meet/join rows keeps the whole scan O(n^2).
    bool compute_semidistributive() const {
        std::vector<int> best(static_cast<size_t>(n_), -1);
        std::vector<int> touched;
        touched.reserve(static_cast<size_t>(n_));

        for (int y = 0; y < n_; ++y) {
            const int32_t* mrow = &meet_[idx(y, 0)];
            touched.clear();
            for (int z = 0; z < n_; ++z) {
                int x = mrow[z];
                if (best[static_cast<size_t>(x)] < 0) {
                    best[static_cast<size_t>(x)] = z;
                    touched.push_back(x);
                } else if (rank_[static_cast<size_t>(z)] > rank_[static_cast<size_t>(best[static_cast<size_t>(x)])]) {
                    best[static_cast<size_t>(x)] = z;
                }
            }
            bool ok = true;
            for (int z = 0; z < n_ && ok; ++z)
                ok = leq(z, best[static_cast<size_t>(mrow[z])]);
            for (int x : touched) best[static_cast<size_t>(x)] = -1;
            if (!ok) return false;
        }

        for (int x = 0; x < n_; ++x) {
            const int32_t* jrow = &join_[idx(x, 0)];
            touched.clear();
            for (int z = 0; z < n_; ++z) {
                int y = jrow[z];
                if (best[static_cast<size_t>(y)] < 0) {
                    best[static_cast<size_t>(y)] = z;
                    touched.push_back(y);
                } else if (rank_[static_cast<size_t>(z)] < rank_[static_cast<size_t>(best[static_cast<size_t>(y)])]) {
                    best[static_cast<size_t>(y)] = z;
                }
            }
            bool ok = true;
            for (int z = 0; z < n_ && ok; ++z)
                ok = leq(best[static_cast<size_t>(jrow[z])], z);
            for (int y : touched) best[static_cast<size_t>(y)] = -1;
            if (!ok) return false;
        }
        return true;
    }
};

inline int ddeg(const FiniteLattice& L, int x) {
    return static_cast<int>(L.down_covers(x).size());
}

// Cyclic rowmotion orbits. Each orbit starts at its smallest element id;
// the list is sorted by (size, representative).
struct OrbitDecomposition {
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of;
    std::vector<int> phase_of;
    unsigned long long order = 1;  // or(Row) = lcm of the orbit sizes

    int size_of(int element) const { return static_cast<int>(orbits[static_cast<size_t>(orbit_of[static_cast<size_t>(element)])].size()); }
    std::vector<int> sizes() const {
        std::vector<int> s;
        s.reserve(orbits.size());
        for (const auto& o : orbits) s.push_back(static_cast<int>(o.size()));
        return s;
    }
};

inline OrbitDecomposition orbit_decomposition(const FiniteLattice& L) {
    int n = L.size();
    OrbitDecomposition d;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> orb{i};
        seen[static_cast<size_t>(i)] = 1;
        for (int x = L.rowmotion(i); x != i; x = L.rowmotion(x)) {
            if (seen[static_cast<size_t>(x)])
                throw lattice_error("rowmotion is not a bijection (orbit collision)");
            seen[static_cast<size_t>(x)] = 1;
            orb.push_back(x);
        }
        d.orbits.push_back(std::move(orb));
    }
    std::sort(d.orbits.begin(), d.orbits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a[0] < b[0];
    });
    d.orbit_of.assign(static_cast<size_t>(n), -1);
    d.phase_of.assign(static_cast<size_t>(n), -1);
    for (size_t k = 0; k < d.orbits.size(); ++k) {
        for (size_t p = 0; p < d.orbits[k].size(); ++p) {
            d.orbit_of[static_cast<size_t>(d.orbits[k][p])] = static_cast<int>(k);
            d.phase_of[static_cast<size_t>(d.orbits[k][p])] = static_cast<int>(p);
        }
        d.order = std::lcm(d.order, static_cast<unsigned long long>(d.orbits[k].size()));
    }
    return d;
}

} // namespace alttamari
