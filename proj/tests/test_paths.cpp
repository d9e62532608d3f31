#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "alttamari/rotation.hpp"
#include "alttamari/tamari.hpp"

using namespace alttamari;

namespace {

// classical altitude, independent of the recursive profile: the largest
// number of E steps that can still be appended at a point without crossing nu
int classical_altitude(const LatticePath& nu, Coord pt) {
    auto xs = north_xcoords(nu);
    int n = static_cast<int>(xs.size());
    if (pt.y >= n) return nu.east_count() - pt.x;
    return xs[static_cast<size_t>(pt.y)] - pt.x;
}

// nu-rotation defined straight from the classical altitude
std::vector<LatticePath> classical_rotation_covers(const LatticePath& nu, const LatticePath& mu) {
    auto pts = points_along(mu);
    std::vector<LatticePath> out;
    const std::string& s = mu.steps;
    for (size_t p = 0; p + 1 < s.size(); ++p) {
        if (s[p] != 'E' || s[p + 1] != 'N') continue;
        int target = classical_altitude(nu, pts[p + 1]);
        size_t q = 0;
        for (size_t t = p + 2; t < pts.size(); ++t)
            if (classical_altitude(nu, pts[t]) == target) { q = t; break; }
        REQUIRE(q != 0);
        std::string next = s.substr(0, p) + s.substr(p + 1, q - (p + 1)) + "E" + s.substr(q);
        out.push_back(LatticePath{next});
    }
    return out;
}

LatticePath random_path(std::mt19937_64& rng, int max_n, int max_e) {
    std::uniform_int_distribution<int> dn(0, max_n), de(0, max_e);
    int n = dn(rng), m = de(rng);
    std::string w(static_cast<size_t>(n), 'N');
    w.append(static_cast<size_t>(m), 'E');
    std::shuffle(w.begin(), w.end(), rng);
    return LatticePath{w};
}

} // namespace

TEST_CASE("path parsing and canonical text") {
    REQUIRE(parse_path("EN^2E^2N").steps == "ENNEEN");
    REQUIRE(parse_path("N").steps == "N");
    REQUIRE(parse_path("E^3NE^4N").steps == "EEENEEEEN");
    REQUIRE(parse_path("").steps.empty());

    SECTION("run-length alternate form") {
        REQUIRE(parse_path("(1,0,0,6,0)").steps == parse_path("EN^3E^6N").steps);
        REQUIRE(parse_path("(3,3,0)").steps == "EEENEEEN");
    }

    SECTION("errors") {
        REQUIRE_THROWS_AS(parse_path("ENX"), std::invalid_argument);
        REQUIRE_THROWS_AS(parse_path("E^0N"), std::invalid_argument);
        REQUIRE_THROWS_AS(parse_path("E^"), std::invalid_argument);
        REQUIRE_THROWS_AS(parse_path("(1,0"), std::invalid_argument);
    }

    SECTION("round trip on random paths") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            LatticePath p = random_path(rng, 6, 9);
            REQUIRE(parse_path(to_string(p)) == p);
            REQUIRE(from_run_length(run_length(p)) == p);
        }
    }
}

TEST_CASE("nu-path enumeration") {
    SECTION("count matches a brute-force filter") {
        LatticePath nu = parse_path("EN^2E^2N");
        auto paths = enumerate_nu_paths(nu);
        REQUIRE(paths.size() == 10);

        std::set<std::string> brute;
        std::string word = "EEENNN";
        std::sort(word.begin(), word.end());
        do {
            if (weakly_above(LatticePath{word}, nu)) brute.insert(word);
        } while (std::next_permutation(word.begin(), word.end()));
        std::set<std::string> got;
        for (const auto& p : paths) got.insert(p.steps);
        REQUIRE(got == brute);
    }

    SECTION("top path alone when nu is already on top") {
        REQUIRE(enumerate_nu_paths(parse_path("N^3E^4")).size() == 1);
    }

    SECTION("two-row count matches the pair count") {
        LatticePath nu = parse_path("E^3NE^3N");
        auto paths = enumerate_nu_paths(nu);
        int pairs = 0;
        for (int x1 = 0; x1 <= 3; ++x1)
            for (int x2 = x1; x2 <= 6; ++x2) ++pairs;
        REQUIRE(static_cast<int>(paths.size()) == pairs);
        REQUIRE(paths.size() == 22);
    }

    SECTION("canonical order: ascending tuples, top path first, nu last") {
        LatticePath nu = parse_path("EN^2E^2N");
        auto paths = enumerate_nu_paths(nu);
        REQUIRE(paths.front().steps == "NNNEEE");
        REQUIRE(paths.back() == nu);
        for (size_t i = 0; i + 1 < paths.size(); ++i)
            REQUIRE(north_xcoords(paths[i]) < north_xcoords(paths[i + 1]));
    }

    SECTION("count_nu_paths agrees with enumeration") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 50; ++i) {
            LatticePath nu = random_path(rng, 4, 6);
            REQUIRE(count_nu_paths(nu) == enumerate_nu_paths(nu).size());
        }
    }
}

TEST_CASE("delta-altitude profiles") {
    LatticePath nu = parse_path("EN^2E^2N");
    RunLength rl = run_length(nu);

    SECTION("initial point is 0") {
        for (const auto& mu : enumerate_nu_paths(nu))
            REQUIRE(delta_altitude(nu, dyck_increment(rl), mu).front() == 0);
    }

    SECTION("delta = nu gives the classical altitude shifted by nu_0") {
        IncrementVector full = tamari_increment(rl);
        for (const auto& mu : enumerate_nu_paths(nu)) {
            AltProfile prof = delta_altitude(nu, full, mu);
            auto pts = points_along(mu);
            for (size_t i = 0; i < pts.size(); ++i)
                REQUIRE(prof[i] == classical_altitude(nu, pts[i]) - rl.values[0]);
        }
    }

    SECTION("delta = 0 counts E steps") {
        for (const auto& mu : enumerate_nu_paths(nu)) {
            AltProfile prof = delta_altitude(nu, dyck_increment(rl), mu);
            int easts = 0;
            for (size_t i = 0; i < mu.steps.size(); ++i) {
                if (mu.steps[i] == 'E') ++easts;
                REQUIRE(prof[i + 1] == -easts);
            }
        }
    }

    SECTION("final entry telescopes to sum(delta) - #E for every shape") {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 60; ++i) {
            LatticePath base = random_path(rng, 4, 6);
            RunLength brl = run_length(base);
            IncrementVector d;
            for (int j = 1; j <= brl.north_count(); ++j)
                d.push_back(std::uniform_int_distribution<int>(0, brl.values[static_cast<size_t>(j)])(rng));
            int dsum = 0;
            for (int x : d) dsum += x;
            for (const auto& mu : enumerate_nu_paths(base))
                REQUIRE(delta_altitude(base, d, mu).back() == dsum - base.east_count());
        }
    }

    SECTION("errors propagate") {
        REQUIRE_THROWS_AS(delta_altitude(nu, IncrementVector{9, 0, 0}, nu), std::invalid_argument);
        REQUIRE_THROWS_AS(delta_altitude(nu, dyck_increment(rl), parse_path("E^3N^3")), std::invalid_argument);
    }
}

TEST_CASE("delta-rotation covers") {
    LatticePath nu = parse_path("EN^2E^2N");
    RunLength rl = run_length(nu);

    SECTION("top path has no valley, no covers") {
        REQUIRE(delta_covers(nu, dyck_increment(rl), parse_path("N^3E^3")).empty());
    }

    SECTION("delta = 0 covers are exactly the valley flips") {
        for (const auto& mu : enumerate_nu_paths(nu)) {
            std::set<std::string> flips;
            for (size_t p = 0; p + 1 < mu.steps.size(); ++p) {
                if (mu.steps[p] == 'E' && mu.steps[p + 1] == 'N') {
                    std::string f = mu.steps;
                    std::swap(f[p], f[p + 1]);
                    flips.insert(f);
                }
            }
            std::set<std::string> got;
            for (const auto& c : delta_covers(nu, dyck_increment(rl), mu)) got.insert(c.steps);
            REQUIRE(got == flips);
        }
        // the pinned example: the two valley flips of nu itself
        std::set<std::string> got;
        for (const auto& c : delta_covers(nu, dyck_increment(rl), nu)) got.insert(c.steps);
        REQUIRE(got == std::set<std::string>{"NENEEN", "ENNENE"});
    }

    SECTION("delta = nu covers match the classical rotation") {
        std::mt19937_64 rng(37);
        for (int i = 0; i < 40; ++i) {
            LatticePath base = random_path(rng, 4, 6);
            IncrementVector full = tamari_increment(run_length(base));
            for (const auto& mu : enumerate_nu_paths(base)) {
                auto got = delta_covers(base, full, mu);
                auto want = classical_rotation_covers(base, mu);
                REQUIRE(got.size() == want.size());
                for (size_t t = 0; t < got.size(); ++t) REQUIRE(got[t] == want[t]);
            }
        }
    }
}

TEST_CASE("build_alt_tamari") {
    SECTION("small lattices with known element counts") {
        LatticePath nu = parse_path("EN^2E^2N");
        for (IncrementVector d : {IncrementVector{0, 0, 0}, IncrementVector{0, 1, 0}, IncrementVector{0, 2, 0}}) {
            AltTamariLattice L = build_alt_tamari(nu, d);
            REQUIRE(L.lattice.size() == 10);
            REQUIRE(L.lattice.is_semidistributive());
        }
        REQUIRE(build_alt_tamari(parse_path("N"), IncrementVector{0}).lattice.size() == 1);
        REQUIRE(build_alt_tamari(parse_path("E^3NE^3N"), IncrementVector{2, 0}).lattice.size() == 22);
    }

    SECTION("degenerate paths give singletons") {
        REQUIRE(build_alt_tamari(LatticePath{}, IncrementVector{}).lattice.size() == 1);
        REQUIRE(build_alt_tamari(parse_path("E^4"), IncrementVector{}).lattice.size() == 1);
    }

    SECTION("element guard refuses oversized enumerations") {
        BuildOptions opt;
        opt.max_elements = 5;
        REQUIRE_THROWS_AS(build_alt_tamari(parse_path("EN^2E^2N"), IncrementVector{0, 0, 0}, opt), guard_error);
    }

    SECTION("index_of is the inverse of the element list") {
        AltTamariLattice L = build_alt_tamari(parse_path("EN^2E^2N"), IncrementVector{0, 1, 0});
        for (int i = 0; i < L.lattice.size(); ++i)
            REQUIRE(L.index_of(L.elements[static_cast<size_t>(i)]) == i);
        REQUIRE_THROWS_AS(L.index_of(parse_path("E^3N^3")), std::invalid_argument);
    }
}
