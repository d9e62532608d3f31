#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "alttamari/exports.hpp"
#include "alttamari/families.hpp"
#include "alttamari/lattice.hpp"
#include "alttamari/switching.hpp"
#include "alttamari/verify.hpp"

using namespace alttamari;

namespace {

int label_id(const RowmotionOracle& o, const std::string& name) {
    for (int i = 0; i < 13; ++i)
        if (o.labels[static_cast<size_t>(i)] == name) return i;
    FAIL("unknown label " + name);
    return -1;
}

} // namespace

TEST_CASE("13-element oracle lattice: meets, pops, rowmotion") {
    RowmotionOracle o = rowmotion_oracle();
    const FiniteLattice& L = o.lattice;
    auto id = [&](const std::string& s) { return label_id(o, s); };

    REQUIRE(L.size() == 13);
    REQUIRE(L.is_semidistributive());

    SECTION("worked meet and pop values") {
        REQUIRE(L.meet(id("i"), id("l")) == id("g"));
        REQUIRE(L.pop_down(id("m")) == id("g"));
        REQUIRE(L.pop_down(id("b")) == id("a"));
        REQUIRE(L.pop_down(L.bottom()) == L.bottom());
        REQUIRE(L.pop_up(L.top()) == L.top());
    }

    SECTION("rowmotion sends b to j via the maximal candidate") {
        REQUIRE(L.rowmotion(id("b")) == id("j"));
        REQUIRE(L.rowmotion(id("m")) == id("g"));
    }

    SECTION("the full orbit is the known 13-cycle") {
        std::vector<std::string> trace{"m"};
        int start = id("m");
        for (int x = L.rowmotion(start); x != start; x = L.rowmotion(x))
            trace.push_back(o.labels[static_cast<size_t>(x)]);
        REQUIRE(trace == o.expected_orbit);

        OrbitDecomposition dec = orbit_decomposition(L);
        REQUIRE(dec.orbits.size() == 1);
        REQUIRE(dec.orbits[0].size() == 13);
        REQUIRE(dec.order == 13);
    }
}

TEST_CASE("meet and join basics") {
    auto [L, emb] = grid_lattice(3, 4);
    for (int x = 0; x < L.size(); ++x) {
        REQUIRE(L.meet(x, x) == x);
        REQUIRE(L.join(x, x) == x);
        REQUIRE(L.meet(L.bottom(), x) == L.bottom());
        REQUIRE(L.join(L.top(), x) == L.top());
        for (int y = 0; y < L.size(); ++y) {
            REQUIRE(L.meet(x, y) == L.meet(y, x));
            REQUIRE(L.leq(L.meet(x, y), x));
            REQUIRE(L.leq(x, L.join(x, y)));
        }
    }
}

TEST_CASE("construction rejects broken inputs") {
    SECTION("two maximal elements is not a lattice") {
        REQUIRE_THROWS_AS(FiniteLattice::from_covers(3, {{0, 1}, {0, 2}}), lattice_error);
    }
    SECTION("cycles are rejected") {
        REQUIRE_THROWS_AS(FiniteLattice::from_covers(2, {{0, 1}, {1, 0}}), lattice_error);
    }
    SECTION("non-reduced cover relations are rejected") {
        REQUIRE_THROWS_AS(FiniteLattice::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}), lattice_error);
    }
    SECTION("duplicate covers are rejected") {
        REQUIRE_THROWS_AS(FiniteLattice::from_covers(2, {{0, 1}, {0, 1}}), lattice_error);
    }
    SECTION("diamond M3 fails meets uniqueness only at semidistributivity") {
        FiniteLattice m3 = FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
        REQUIRE_FALSE(m3.is_semidistributive());
        REQUIRE_THROWS_AS(m3.rowmotion(0), lattice_error);
    }
}

TEST_CASE("distributive examples are semidistributive") {
    REQUIRE(grid_lattice(3, 4).first.is_semidistributive());
    REQUIRE(grid_lattice(1, 7).first.is_semidistributive());
}

TEST_CASE("rowmotion on products of chains follows the coordinatewise decrement") {
    for (int a = 1; a <= 8; ++a) {
        for (int b = 1; b <= 8; ++b) {
            auto [L, emb] = grid_lattice(a, b);
            for (int id = 0; id < L.size(); ++id) {
                Coord c = emb.pos[static_cast<size_t>(id)];
                Coord got = emb.pos[static_cast<size_t>(L.rowmotion(id))];
                REQUIRE(got == Coord{(c.x + a - 1) % a, (c.y + b - 1) % b});
            }
        }
    }
}

TEST_CASE("rowmotion is a bijection with the stated inverse") {
    std::vector<FiniteLattice> lattices;
    lattices.push_back(rowmotion_oracle().lattice);
    lattices.push_back(grid_lattice(4, 5).first);
    lattices.push_back(build_hook(3, 4, 2).alt.lattice);
    lattices.push_back(build_two_row(3, 3, 1).alt.lattice);
    for (const auto& L : lattices) {
        for (int x = 0; x < L.size(); ++x) {
            REQUIRE(L.rowmotion_inverse(L.rowmotion(x)) == x);
            REQUIRE(L.rowmotion(L.rowmotion_inverse(x)) == x);
        }
    }
}

TEST_CASE("rowmotion fixes the singleton and lifts bottom to top") {
    FiniteLattice single = FiniteLattice::from_covers(1, {});
    REQUIRE(single.rowmotion(0) == 0);

    auto [L, emb] = grid_lattice(3, 3);
    REQUIRE(L.rowmotion(L.bottom()) == L.top());
}

TEST_CASE("orbit decomposition invariants") {
    SECTION("2x2 grid splits into two 2-cycles") {
        auto [L, emb] = grid_lattice(2, 2);
        OrbitDecomposition dec = orbit_decomposition(L);
        REQUIRE(dec.sizes() == std::vector<int>{2, 2});
        REQUIRE(dec.order == 2);
    }

    SECTION("orbits partition, phases step by one, list is sorted") {
        FiniteLattice L = build_hook(3, 4, 1).alt.lattice;
        OrbitDecomposition dec = orbit_decomposition(L);
        std::set<int> seen;
        for (size_t k = 0; k < dec.orbits.size(); ++k) {
            const auto& orbit = dec.orbits[k];
            REQUIRE(orbit[0] == *std::min_element(orbit.begin(), orbit.end()));
            for (size_t p = 0; p < orbit.size(); ++p) {
                REQUIRE(seen.insert(orbit[p]).second);
                REQUIRE(L.rowmotion(orbit[p]) == orbit[(p + 1) % orbit.size()]);
                REQUIRE(dec.orbit_of[static_cast<size_t>(orbit[p])] == static_cast<int>(k));
                REQUIRE(dec.phase_of[static_cast<size_t>(orbit[p])] == static_cast<int>(p));
            }
        }
        REQUIRE(static_cast<int>(seen.size()) == L.size());
        for (size_t k = 0; k + 1 < dec.orbits.size(); ++k) {
            bool ordered = dec.orbits[k].size() < dec.orbits[k + 1].size() ||
                           (dec.orbits[k].size() == dec.orbits[k + 1].size() &&
                            dec.orbits[k][0] < dec.orbits[k + 1][0]);
            REQUIRE(ordered);
        }
    }

    SECTION("hook (2,2) orbits for both increments match the hand trace") {
        // k = 0: {(0,1),(1,0)} and {(1,1),(0,0),(2,1)} in simplified coordinates
        HookLattice H = build_hook(2, 2, 0);
        OrbitDecomposition dec = orbit_decomposition(H.alt.lattice);
        REQUIRE(dec.sizes() == std::vector<int>{2, 3});
        std::set<std::pair<int, int>> small, big;
        for (int id : dec.orbits[0]) small.insert({H.coords[static_cast<size_t>(id)].s, H.coords[static_cast<size_t>(id)].t});
        for (int id : dec.orbits[1]) big.insert({H.coords[static_cast<size_t>(id)].s, H.coords[static_cast<size_t>(id)].t});
        REQUIRE(small == std::set<std::pair<int, int>>{{0, 1}, {1, 0}});
        REQUIRE(big == std::set<std::pair<int, int>>{{1, 1}, {0, 0}, {2, 1}});

        OrbitDecomposition dec1 = orbit_decomposition(build_hook(2, 2, 1).alt.lattice);
        REQUIRE(dec1.sizes() == std::vector<int>{2, 3});
    }
}

TEST_CASE("exports are deterministic and carry the schema") {
    AltTamariLattice L = build_alt_tamari(parse_path("ENEN"), IncrementVector{1, 0});
    std::vector<std::string> labels;
    for (const auto& p : L.elements) labels.push_back(to_string(p));

    SECTION("dot lists every node and edge bottom-up") {
        std::string dot = to_dot(L.lattice, labels);
        REQUIRE(dot.find("digraph") != std::string::npos);
        REQUIRE(dot.find("rankdir=BT") != std::string::npos);
        for (const auto& lab : labels) REQUIRE(dot.find(lab) != std::string::npos);
        REQUIRE(to_dot(L.lattice, labels) == dot);
    }

    SECTION("orbit json has order, sizes, orbits") {
        OrbitDecomposition dec = orbit_decomposition(L.lattice);
        json j = orbit_json(dec);
        REQUIRE(j["order"].get<unsigned long long>() == dec.order);
        REQUIRE(j["sizes"].size() == dec.orbits.size());
        REQUIRE(j["orbits"].size() == dec.orbits.size());
        long long total = 0;
        for (const auto& o : j["orbits"]) total += static_cast<long long>(o.size());
        REQUIRE(total == L.lattice.size());
    }
}
