#pragma once

// The n-switching property for semidistributive lattices and the A*B star
// composition that glues the rightmost element of each level of A to the
// leftmost element of the same level of B.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "alttamari/lattice.hpp"
#include "alttamari/path.hpp"

namespace alttamari {

struct SwitchEmbedding {
    int levels = 0;            // the n of the n-switching property
    std::vector<Coord> pos;    // planar coordinate per element id
};

struct SwitchCheck {
    bool ok = true;
    std::string reason;
    std::vector<int> rightmost_x;   // x_m per level m = 0..n
    std::vector<int> rightmost_id;
    std::vector<int> leftmost_id;   // element (0, m) per level
};

// Conditions (1)-(4): nonnegative distinct coordinates on levels 0..n, the
// x = 0 column is a chain covering upward, covers move by (0,1) or (m,0),
// and each level is totally ordered by x. The right boundary must also be
// a staircase (x_0 <= ... <= x_n) for the composition to make sense.
inline SwitchCheck check_switching(const FiniteLattice& L, const SwitchEmbedding& emb) {
    SwitchCheck res;
    auto fail = [&](std::string why) {
        res.ok = false;
        res.reason = std::move(why);
        return res;
    };
    int n = emb.levels;
    if (n < 0) return fail("negative level count");
    if (static_cast<int>(emb.pos.size()) != L.size()) return fail("embedding does not cover all elements");

    std::vector<std::vector<int>> by_level(static_cast<size_t>(n) + 1);
    std::vector<int> column0(static_cast<size_t>(n) + 1, -1);
    for (int i = 0; i < L.size(); ++i) {
        Coord c = emb.pos[static_cast<size_t>(i)];
        if (c.x < 0 || c.y < 0) return fail("coordinates must be nonnegative");
        if (c.y > n) return fail("element above level n");
        by_level[static_cast<size_t>(c.y)].push_back(i);
        if (c.x == 0) {
            if (column0[static_cast<size_t>(c.y)] >= 0) return fail("two elements share a coordinate");
            column0[static_cast<size_t>(c.y)] = i;
        }
    }
    for (int m = 0; m <= n; ++m)
        if (column0[static_cast<size_t>(m)] < 0) return fail("missing (0," + std::to_string(m) + ")");
    for (int m = 1; m <= n; ++m) {
        const auto& ups = L.up_covers(column0[static_cast<size_t>(m) - 1]);
        if (std::find(ups.begin(), ups.end(), column0[static_cast<size_t>(m)]) == ups.end())
            return fail("(0," + std::to_string(m - 1) + ") does not cover up to (0," + std::to_string(m) + ")");
    }

    for (int u = 0; u < L.size(); ++u) {
        for (int v : L.up_covers(u)) {
            int dx = emb.pos[static_cast<size_t>(v)].x - emb.pos[static_cast<size_t>(u)].x;
            int dy = emb.pos[static_cast<size_t>(v)].y - emb.pos[static_cast<size_t>(u)].y;
            if (!((dx == 0 && dy == 1) || (dx >= 1 && dy == 0)))
                return fail("cover step is neither (0,1) nor (m,0)");
        }
    }

    res.rightmost_x.assign(static_cast<size_t>(n) + 1, -1);
    res.rightmost_id.assign(static_cast<size_t>(n) + 1, -1);
    res.leftmost_id = column0;
    for (int m = 0; m <= n; ++m) {
        auto& ids = by_level[static_cast<size_t>(m)];
        std::sort(ids.begin(), ids.end(), [&](int i, int j) {
            return emb.pos[static_cast<size_t>(i)].x < emb.pos[static_cast<size_t>(j)].x;
        });
        for (size_t t = 0; t + 1 < ids.size(); ++t) {
            if (emb.pos[static_cast<size_t>(ids[t])].x == emb.pos[static_cast<size_t>(ids[t + 1])].x)
                return fail("two elements share a coordinate");
            // condition (4): same level compares by x, both directions
            if (!L.leq(ids[t], ids[t + 1]) || L.leq(ids[t + 1], ids[t]))
                return fail("level " + std::to_string(m) + " is not ordered by x");
        }
        res.rightmost_id[static_cast<size_t>(m)] = ids.back();
        res.rightmost_x[static_cast<size_t>(m)] = emb.pos[static_cast<size_t>(ids.back())].x;
    }
    for (int m = 1; m <= n; ++m) {
        if (res.rightmost_x[static_cast<size_t>(m) - 1] > res.rightmost_x[static_cast<size_t>(m)])
            return fail("right boundary is not a staircase");
    }
    if (!L.is_semidistributive()) return fail("lattice is not semidistributive");
    return res;
}

struct StarComposite {
    FiniteLattice lattice;
    // per element: which input it came from plus its original coordinate
    struct Tag {
        char side = 'A';
        Coord orig;
        int orig_id = 0;
    };
    std::vector<Tag> tags;
    int n = 0;
};

inline StarComposite star_compose(const FiniteLattice& A, const SwitchEmbedding& embA,
                                  const FiniteLattice& B, const SwitchEmbedding& embB) {
    if (embA.levels != embB.levels)
        throw std::invalid_argument("star_compose: operands have different level counts");
    SwitchCheck ca = check_switching(A, embA);
    if (!ca.ok) throw std::invalid_argument("star_compose: left operand: " + ca.reason);
    SwitchCheck cb = check_switching(B, embB);
    if (!cb.ok) throw std::invalid_argument("star_compose: right operand: " + cb.reason);

    int nA = A.size();
    std::vector<std::pair<int, int>> covers = A.covers();
    for (auto [u, v] : B.covers()) covers.emplace_back(u + nA, v + nA);
    for (int m = 0; m <= embA.levels; ++m)
        covers.emplace_back(ca.rightmost_id[static_cast<size_t>(m)], cb.leftmost_id[static_cast<size_t>(m)] + nA);

    StarComposite out;
    out.n = embA.levels;
    out.lattice = FiniteLattice::from_covers(nA + B.size(), std::move(covers));
    if (!out.lattice.is_semidistributive())
        throw lattice_error("star composition failed to be semidistributive");
    out.tags.reserve(static_cast<size_t>(out.lattice.size()));
    for (int i = 0; i < nA; ++i) out.tags.push_back({'A', embA.pos[static_cast<size_t>(i)], i});
    for (int i = 0; i < B.size(); ++i) out.tags.push_back({'B', embB.pos[static_cast<size_t>(i)], i});
    return out;
}

// C_nx x C_ny grid with its standard embedding (x = 0..nx-1, y = 0..ny-1);
// the building block A_k = C_{a+1} x C_k enters with nx = k, ny = a+1.
inline std::pair<FiniteLattice, SwitchEmbedding> grid_lattice(int nx, int ny) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("grid_lattice needs nx, ny >= 1");
    auto id = [&](int x, int y) { return y * nx + x; };
    std::vector<std::pair<int, int>> covers;
    SwitchEmbedding emb;
    emb.levels = ny - 1;
    emb.pos.resize(static_cast<size_t>(nx) * static_cast<size_t>(ny));
    for (int y = 0; y < ny; ++y) {
        for (int x = 0; x < nx; ++x) {
            emb.pos[static_cast<size_t>(id(x, y))] = Coord{x, y};
            if (x + 1 < nx) covers.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < ny) covers.emplace_back(id(x, y), id(x, y + 1));
        }
    }
    return {FiniteLattice::from_covers(nx * ny, std::move(covers)), std::move(emb)};
}

} // namespace alttamari
