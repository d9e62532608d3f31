#pragma once

// Theorem-verification suites shared by the CLI and the acceptance tests.
// Each case compares engine output against an independent route: a closed
// form, a piecewise formula, a coordinate Hasse predictor, or a brute-force
// scan. Cases run on a worker pool; reports assemble deterministically.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alttamari/closed_forms.hpp"
#include "alttamari/families.hpp"
#include "alttamari/parallel.hpp"
#include "alttamari/stats.hpp"
#include "alttamari/switching.hpp"
#include "alttamari/tamari.hpp"

namespace alttamari {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    int failed_count() const {
        int f = 0;
        for (const auto& c : cases) f += !c.pass;
        return f;
    }
};

// collects the first failing expectation of one verification case
class CaseLog {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond && ok_) {
            ok_ = false;
            detail_ = what;
        }
    }
    bool ok() const { return ok_; }
    const std::string& detail() const { return detail_; }

private:
    bool ok_ = true;
    std::string detail_;
};

namespace detail {

template <typename T>
std::string seq_str(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

inline std::string pairs_str(const std::vector<std::pair<long long, long long>>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << "(" << v[i].first << "," << v[i].second << ")";
    os << "}";
    return os.str();
}

inline SuiteReport run_suite(const std::string& suite,
                             std::vector<std::pair<std::string, std::function<void(CaseLog&)>>> cases,
                             int jobs) {
    SuiteReport rep;
    rep.suite = suite;
    rep.cases.resize(cases.size());
    run_indexed(cases.size(), jobs, [&](size_t i) {
        CaseLog log;
        try {
            cases[i].second(log);
        } catch (const std::exception& e) {
            log.expect(false, std::string("exception: ") + e.what());
        }
        rep.cases[i] = CheckResult{cases[i].first, log.ok(), log.detail()};
    });
    return rep;
}

} // namespace detail

// ---- engine oracle: a 13-element semidistributive lattice whose rowmotion
// is known to be a single 13-cycle ------------------------------------------

struct RowmotionOracle {
    FiniteLattice lattice;
    std::vector<std::string> labels;          // "a".."m" by element id
    std::vector<std::string> expected_orbit;  // the 13-cycle starting at "m"
};

inline RowmotionOracle rowmotion_oracle() {
    const std::vector<Coord> pts = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1},
                                    {3, 1}, {4, 1}, {0, 2}, {1, 2}, {2, 2}, {4, 2}};
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < 13; ++i) {
        for (int j = 0; j < 13; ++j) {
            if (i == j || pts[static_cast<size_t>(j)].x < pts[static_cast<size_t>(i)].x ||
                pts[static_cast<size_t>(j)].y < pts[static_cast<size_t>(i)].y)
                continue;
            bool direct = true;
            for (int r = 0; r < 13 && direct; ++r) {
                if (r == i || r == j) continue;
                const Coord& c = pts[static_cast<size_t>(r)];
                direct = !(pts[static_cast<size_t>(i)].x <= c.x && c.x <= pts[static_cast<size_t>(j)].x &&
                           pts[static_cast<size_t>(i)].y <= c.y && c.y <= pts[static_cast<size_t>(j)].y);
            }
            if (direct) covers.emplace_back(i, j);
        }
    }
    RowmotionOracle o;
    o.lattice = FiniteLattice::from_covers(13, std::move(covers));
    for (int i = 0; i < 13; ++i) o.labels.push_back(std::string(1, static_cast<char>('a' + i)));
    o.expected_orbit = {"m", "g", "b", "j", "i", "h", "c", "k", "e", "d", "l", "f", "a"};
    return o;
}

inline void check_rowmotion_oracle(CaseLog& log) {
    RowmotionOracle o = rowmotion_oracle();
    log.expect(o.lattice.is_semidistributive(), "oracle lattice must be semidistributive");
    int start = 12;  // "m"
    std::vector<std::string> trace{o.labels[static_cast<size_t>(start)]};
    for (int x = o.lattice.rowmotion(start); x != start; x = o.lattice.rowmotion(x)) {
        trace.push_back(o.labels[static_cast<size_t>(x)]);
        if (trace.size() > 13) break;
    }
    log.expect(trace == o.expected_orbit,
               "orbit trace " + detail::seq_str(trace) + " != expected " + detail::seq_str(o.expected_orbit));
}

// ---- hook suite -------------------------------------------------------------

inline void check_grid_rowmotion(CaseLog& log, int a, int b) {
    auto [L, emb] = grid_lattice(a, b);
    log.expect(L.is_semidistributive(), "product of chains must be semidistributive");
    for (int id = 0; id < L.size() && log.ok(); ++id) {
        Coord c = emb.pos[static_cast<size_t>(id)];
        Coord want{(c.x + a - 1) % a, (c.y + b - 1) % b};
        Coord got = emb.pos[static_cast<size_t>(L.rowmotion(id))];
        log.expect(got == want, "grid rowmotion mismatch at (" + std::to_string(c.x) + "," + std::to_string(c.y) + ")");
    }
}

inline void check_hook_case(CaseLog& log, int a, int b, int k) {
    HookLattice H = build_hook(a, b, k);
    const FiniteLattice& L = H.alt.lattice;
    HookPrediction pred = hook_prediction(a, b, k);

    log.expect(L.size() == a * b + 1, "element count != ab+1");
    log.expect(L.is_semidistributive(), "hook lattice must be semidistributive");

    OrbitDecomposition dec = orbit_decomposition(L);
    std::vector<int> sizes = dec.sizes();
    std::sort(sizes.begin(), sizes.end());
    std::vector<int> want_sizes = pred.orbit_sizes;
    std::sort(want_sizes.begin(), want_sizes.end());
    log.expect(sizes == want_sizes,
               "orbit sizes " + detail::seq_str(sizes) + " != predicted " + detail::seq_str(want_sizes));
    log.expect(dec.order == pred.row_order, "rowmotion order != predicted");

    // Hasse shape in simplified coordinates
    std::vector<std::pair<Coord, Coord>> got_cov;
    for (auto [u, v] : L.covers()) got_cov.emplace_back(H.point(u), H.point(v));
    std::sort(got_cov.begin(), got_cov.end());
    log.expect(got_cov == hook_hasse_prediction(a, b, k), "cover graph != predicted Hasse shape");

    // order isomorphism with the componentwise (s,t) order
    for (int i = 0; i < L.size() && log.ok(); ++i) {
        for (int j = 0; j < L.size(); ++j) {
            bool coord_leq = H.coords[static_cast<size_t>(i)].s <= H.coords[static_cast<size_t>(j)].s &&
                             H.coords[static_cast<size_t>(i)].t <= H.coords[static_cast<size_t>(j)].t;
            if (L.leq(i, j) != coord_leq) {
                log.expect(false, "lattice order disagrees with (s,t) order");
                break;
            }
        }
    }

    // edge contraction intertwines rowmotion with the grid formula
    auto contract = [&](int id) {
        Coord c = H.point(id);
        return Coord{std::min(c.x, a - 1), c.y};
    };
    for (int id = 0; id < L.size() && log.ok(); ++id) {
        if (H.point(id) == pred.w) continue;
        Coord lhs = contract(L.rowmotion(id));
        Coord phi = contract(id);
        Coord rhs{(phi.x + a - 1) % a, (phi.y + b - 1) % b};
        log.expect(lhs == rhs, "edge contraction does not intertwine rowmotion");
    }

    // statistic orbit sums
    StatContext ctx{&L, &H.alt.elements, &H.alt.nu};
    StatReport rd = orbit_stat_report(ctx, dec, "ddeg");
    StatReport rp = orbit_stat_report(ctx, dec, "peak");
    StatReport rv = orbit_stat_report(ctx, dec, "val");
    StatReport ra = orbit_stat_report(ctx, dec, "area");
    for (size_t i = 0; i < dec.orbits.size(); ++i) {
        bool extra = static_cast<long long>(dec.orbits[i].size()) == pred.l + 1;
        log.expect(rd.orbit_sums[i] == (extra ? pred.ddeg_o_prime : pred.ddeg_o), "ddeg orbit sum mismatch");
        log.expect(rp.orbit_sums[i] == (extra ? pred.peak_o_prime : pred.peak_o), "peak orbit sum mismatch");
        log.expect(rv.orbit_sums[i] == (extra ? pred.val_o_prime : pred.val_o), "val orbit sum mismatch");
        if (pred.area_o) {
            Rational want = extra ? *pred.area_o_prime : *pred.area_o;
            log.expect(Rational(ra.orbit_sums[i]) == want, "area orbit sum mismatch");
        }
    }
    log.expect(rd.homometric, "ddeg must be homometric");
    log.expect(rp.homometric, "peak must be homometric");
    log.expect(rv.homometric, "val must be homometric");
    if (k == 0 || k == b - 1) log.expect(ra.homometric, "area must be homometric at k = 0 and k = b-1");
}

// The one advertised failure: area is not homometric on the (3,3) hook at
// the middle increment vector. The suite treats detecting it as a pass.
inline void check_area_not_homometric_331(CaseLog& log) {
    HookLattice H = build_hook(3, 3, 1);
    OrbitDecomposition dec = orbit_decomposition(H.alt.lattice);
    StatContext ctx{&H.alt.lattice, &H.alt.elements, &H.alt.nu};
    StatReport ra = orbit_stat_report(ctx, dec, "area");
    log.expect(!ra.homometric, "area unexpectedly homometric on the (3,3) hook at k=1");
}

inline SuiteReport verify_hook(int max_a, int max_b, int jobs = 0) {
    std::vector<std::pair<std::string, std::function<void(CaseLog&)>>> cases;
    cases.emplace_back("rowmotion-oracle-13", [](CaseLog& log) { check_rowmotion_oracle(log); });
    for (int a = 1; a <= max_a; ++a)
        for (int b = 1; b <= max_b; ++b)
            cases.emplace_back("grid-rowmotion " + std::to_string(a) + "x" + std::to_string(b),
                               [a, b](CaseLog& log) { check_grid_rowmotion(log, a, b); });
    for (int a = 1; a <= max_a; ++a) {
        for (int b = 1; b <= max_b; ++b) {
            int kmax = (a == 1) ? 0 : b - 1;
            for (int k = 0; k <= kmax; ++k)
                cases.emplace_back(
                    "hook a=" + std::to_string(a) + " b=" + std::to_string(b) + " k=" + std::to_string(k),
                    [a, b, k](CaseLog& log) { check_hook_case(log, a, b, k); });
        }
    }
    if (max_a >= 3 && max_b >= 3)
        cases.emplace_back("area-non-homometry detected at hook(3,3,1)",
                           [](CaseLog& log) { check_area_not_homometric_331(log); });
    return detail::run_suite("hook", std::move(cases), jobs);
}

// ---- csp suite --------------------------------------------------------------

inline void check_csp_case(CaseLog& log, int a, int b, int k) {
    HookLattice H = build_hook(a, b, k);
    OrbitDecomposition dec = orbit_decomposition(H.alt.lattice);
    HookPrediction pred = hook_prediction(a, b, k);
    CspPolynomial f = hook_csp_polynomial(a, b);
    log.expect(f.at_one() == H.alt.lattice.size(), "f(1) != element count");
    log.expect(dec.order == pred.row_order, "rowmotion order != predicted");
    CspCheck c = csp_verify(dec, f, dec.order);
    std::ostringstream os;
    os << "fixed-point count != f(omega^d) at d=" << c.bad_d << " (error " << c.max_error << ")";
    log.expect(c.ok, os.str());
}

inline SuiteReport verify_csp(int max_a, int max_b, int jobs = 0) {
    std::vector<std::pair<std::string, std::function<void(CaseLog&)>>> cases;
    for (int a = 1; a <= max_a; ++a) {
        for (int b = 1; b <= max_b; ++b) {
            int kmax = (a == 1) ? 0 : b - 1;
            for (int k = 0; k <= kmax; ++k)
                cases.emplace_back(
                    "csp a=" + std::to_string(a) + " b=" + std::to_string(b) + " k=" + std::to_string(k),
                    [a, b, k](CaseLog& log) { check_csp_case(log, a, b, k); });
        }
    }
    return detail::run_suite("csp", std::move(cases), jobs);
}

// ---- two-row suite ----------------------------------------------------------

inline void check_two_row_case(CaseLog& log, int a, int b) {
    TwoRowPrediction pred = two_row_prediction(a, b);
    auto want = pred.expand();
    log.expect(pred.element_count() == static_cast<long long>(a + 1) * (b + 1) + static_cast<long long>(a) * (a + 1) / 2,
               "prediction does not sum to the element count");

    for (int k = 0; k <= b; ++k) {
        TwoRowLattice T = build_two_row(a, b, k);
        const FiniteLattice& L = T.alt.lattice;
        log.expect(L.is_semidistributive(), "two-row lattice must be semidistributive");
        OrbitDecomposition dec = orbit_decomposition(L);

        std::vector<std::pair<long long, long long>> got;
        for (const auto& orbit : dec.orbits) {
            long long ds = 0;
            for (int id : orbit) ds += ddeg(L, id);
            got.emplace_back(static_cast<long long>(orbit.size()), ds);
        }
        std::sort(got.begin(), got.end());
        if (got != want) {
            log.expect(false, "k=" + std::to_string(k) + ": orbit census " + detail::pairs_str(got) +
                                  " != predicted " + detail::pairs_str(want));
            return;
        }

        // Hasse shape in triple coordinates
        std::vector<std::pair<Coord, Coord>> got_cov;
        for (auto [u, v] : L.covers()) got_cov.emplace_back(T.point(u), T.point(v));
        std::sort(got_cov.begin(), got_cov.end());
        log.expect(got_cov == two_row_hasse_prediction(a, b, k),
                   "k=" + std::to_string(k) + ": cover graph != predicted Hasse shape");

        // order isomorphism with the triple order
        for (int i = 0; i < L.size() && log.ok(); ++i) {
            for (int j = 0; j < L.size(); ++j) {
                const auto& ti = T.triples[static_cast<size_t>(i)];
                const auto& tj = T.triples[static_cast<size_t>(j)];
                bool triple_leq = ti.height <= tj.height && ti.u <= tj.u && ti.v <= tj.v;
                if (L.leq(i, j) != triple_leq) {
                    log.expect(false, "k=" + std::to_string(k) + ": lattice order disagrees with triple order");
                    break;
                }
            }
        }

        // the piecewise rowmotion formula, valid on the k = 0 order
        if (k == 0) {
            for (int id = 0; id < L.size() && log.ok(); ++id) {
                Coord c = T.point(id);
                Coord got_xy = T.point(L.rowmotion(id));
                Coord want_xy = two_row_rowmotion_formula(a, b, c.x, c.y);
                log.expect(got_xy == want_xy, "rowmotion formula mismatch at (" + std::to_string(c.x) + "," +
                                                  std::to_string(c.y) + ")");
            }
        }
    }
}

inline void check_congruence_case(CaseLog& log, int a) {
    for (int b = 0; b <= a; ++b) {
        CongruenceSolutions cs = congruence_solution_sets(a, b);
        std::set<std::pair<int, int>> brute;
        int target = a + b - 2;
        for (int x1 = cs.lo; x1 <= cs.hi; ++x1) {
            for (int x2 = x1; x2 <= cs.hi; ++x2) {
                int rem = ((x1 + x2 - target) % (a + 1) + (a + 1)) % (a + 1);
                if (rem == 0) brute.emplace(x1, x2);
            }
        }
        std::set<std::pair<int, int>> closed(cs.combined.begin(), cs.combined.end());
        log.expect(closed.size() == cs.combined.size(), "b=" + std::to_string(b) + ": duplicate solution pairs");
        if (closed != brute) {
            log.expect(false, "b=" + std::to_string(b) + ": closed-form solution set != brute-force scan");
            return;
        }
        if (a + b >= 2) {
            std::vector<long long> from_pairs = two_row_sizes_from_solutions(cs);
            std::vector<long long> want;
            for (const auto& c : two_row_prediction(a, b).classes)
                for (int i = 0; i < c.count; ++i) want.push_back(c.size);
            std::sort(want.begin(), want.end());
            log.expect(from_pairs == want,
                       "b=" + std::to_string(b) + ": orbit sizes from solution pairs != census");
        }
    }
}

inline SuiteReport verify_two_row(int max_a, int max_b, int jobs = 0) {
    std::vector<std::pair<std::string, std::function<void(CaseLog&)>>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            cases.emplace_back("two-row a=" + std::to_string(a) + " b=" + std::to_string(b),
                               [a, b](CaseLog& log) { check_two_row_case(log, a, b); });
    for (int a = 0; a <= 20; ++a)
        cases.emplace_back("congruence solutions a=" + std::to_string(a),
                           [a](CaseLog& log) { check_congruence_case(log, a); });
    if (max_a >= 3 && max_b >= 3)
        cases.emplace_back("area-non-homometry detected at hook(3,3,1)",
                           [](CaseLog& log) { check_area_not_homometric_331(log); });
    return detail::run_suite("two-row", std::move(cases), jobs);
}

// ---- switching suite ----------------------------------------------------------

inline void check_switching_case(CaseLog& log, int a, int b, int k) {
    auto [A, embA] = grid_lattice(k, a + 1);
    TwoRowLattice Bfam = build_two_row(a, b - k, 0);
    const FiniteLattice& B = Bfam.alt.lattice;
    SwitchEmbedding embB;
    embB.levels = a;
    for (int i = 0; i < B.size(); ++i) embB.pos.push_back(Bfam.point(i));

    SwitchCheck sa = check_switching(A, embA);
    SwitchCheck sb = check_switching(B, embB);
    log.expect(sa.ok && embA.levels == a, "grid factor fails the switching check: " + sa.reason);
    log.expect(sb.ok, "two-row factor fails the switching check: " + sb.reason);
    if (!log.ok()) return;

    StarComposite AB = star_compose(A, embA, B, embB);
    StarComposite BA = star_compose(B, embB, A, embA);
    log.expect(AB.lattice.is_semidistributive(), "A*B must be semidistributive");
    log.expect(BA.lattice.is_semidistributive(), "B*A must be semidistributive");

    OrbitDecomposition dab = orbit_decomposition(AB.lattice);
    OrbitDecomposition dba = orbit_decomposition(BA.lattice);

    // orbits contain literally the same elements of the disjoint union, and
    // carry the same ddeg totals, even though ddeg differs pointwise.
    // tags name operands by position, so the composites need opposite side
    // maps to address the same underlying element
    auto key = [](const StarComposite& S, int id, char first, char second) {
        const auto& t = S.tags[static_cast<size_t>(id)];
        return std::make_pair(t.side == 'A' ? first : second, t.orig_id);
    };
    std::map<std::set<std::pair<char, int>>, long long> oab, oba;
    std::map<std::set<std::pair<char, int>>, std::pair<int, int>> boundary_ab;
    for (const auto& orbit : dab.orbits) {
        std::set<std::pair<char, int>> s;
        long long ds = 0;
        int la = 0, lb = 0;
        for (int id : orbit) {
            s.insert(key(AB, id, 'G', 'T'));  // grid first in A*B
            ds += ddeg(AB.lattice, id);
            if (AB.tags[static_cast<size_t>(id)].orig.x == 0) (AB.tags[static_cast<size_t>(id)].side == 'A' ? la : lb)++;
        }
        oab[s] = ds;
        boundary_ab[s] = {la, lb};
    }
    for (const auto& orbit : dba.orbits) {
        std::set<std::pair<char, int>> s;
        long long ds = 0;
        for (int id : orbit) {
            s.insert(key(BA, id, 'T', 'G'));  // two-row first in B*A
            ds += ddeg(BA.lattice, id);
        }
        oba[s] = ds;
    }
    log.expect(oab.size() == oba.size(), "A*B and B*A have different orbit counts");
    for (const auto& [orbit, ds] : oab) {
        auto it = oba.find(orbit);
        if (it == oba.end()) {
            log.expect(false, "an A*B orbit is not a B*A orbit");
            return;
        }
        log.expect(it->second == ds, "per-orbit ddeg sums differ between A*B and B*A");
        auto [la, lb] = boundary_ab[orbit];
        log.expect(la == lb, "orbit meets the two glued boundaries unequally");
    }

    // B*A reproduces the k-th alt 2-row order, A*B the 0-th
    TwoRowLattice Tk = build_two_row(a, b, k);
    std::vector<std::pair<Coord, Coord>> want;
    for (auto [u, v] : Tk.alt.lattice.covers()) want.emplace_back(Tk.point(u), Tk.point(v));
    std::sort(want.begin(), want.end());
    auto ba_coord = [&](int id) {
        const auto& t = BA.tags[static_cast<size_t>(id)];
        if (t.side == 'A') return t.orig;                              // B went first
        return Coord{t.orig.y + (b - k) + 1 + t.orig.x, t.orig.y};     // grid block, shifted past the glue
    };
    std::vector<std::pair<Coord, Coord>> got;
    for (auto [u, v] : BA.lattice.covers()) got.emplace_back(ba_coord(u), ba_coord(v));
    std::sort(got.begin(), got.end());
    log.expect(got == want, "B*A cover graph != T_delta(k)(a,b)");

    TwoRowLattice T0 = build_two_row(a, b, 0);
    want.clear();
    for (auto [u, v] : T0.alt.lattice.covers()) want.emplace_back(T0.point(u), T0.point(v));
    std::sort(want.begin(), want.end());
    auto ab_coord = [&](int id) {
        const auto& t = AB.tags[static_cast<size_t>(id)];
        if (t.side == 'A') return t.orig;
        return Coord{k + t.orig.x, t.orig.y};
    };
    got.clear();
    for (auto [u, v] : AB.lattice.covers()) got.emplace_back(ab_coord(u), ab_coord(v));
    std::sort(got.begin(), got.end());
    log.expect(got == want, "A*B cover graph != T_delta(0)(a,b)");
}

inline SuiteReport verify_switching(int max_a, int max_b, int jobs = 0) {
    std::vector<std::pair<std::string, std::function<void(CaseLog&)>>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 1; b <= max_b; ++b)
            for (int k = 1; k <= b; ++k)
                cases.emplace_back("switch a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                       " k=" + std::to_string(k),
                                   [a, b, k](CaseLog& log) { check_switching_case(log, a, b, k); });
    return detail::run_suite("switching", std::move(cases), jobs);
}

// ---- interval suite -----------------------------------------------------------

inline LatticePath sample_random_nu(std::mt19937_64& rng, int max_n, int max_e) {
    std::uniform_int_distribution<int> dn(1, max_n), de(0, max_e);
    int n = dn(rng), m = de(rng);
    std::string word(static_cast<size_t>(n), 'N');
    word.append(static_cast<size_t>(m), 'E');
    std::shuffle(word.begin(), word.end(), rng);
    return LatticePath{std::move(word)};
}

inline IncrementVector sample_random_increment(std::mt19937_64& rng, const RunLength& nu) {
    IncrementVector d;
    for (int i = 1; i <= nu.north_count(); ++i) {
        std::uniform_int_distribution<int> dd(0, nu.values[static_cast<size_t>(i)]);
        d.push_back(dd(rng));
    }
    return d;
}

// Tam_delta(nu) must be order-isomorphic (as a set of paths) to the interval
// [nu, top] inside the full Tamari order of nu-hat.
inline void check_interval_case(CaseLog& log, const LatticePath& nu, const IncrementVector& delta) {
    BuildOptions opt;
    AltTamariLattice L1 = build_alt_tamari(nu, delta, opt);
    LatticePath hat = nu_hat(run_length(nu), delta);
    AltTamariLattice L2 = build_alt_tamari(hat, tamari_increment(run_length(hat)), opt);
    log.expect(L1.lattice.is_semidistributive(), "alt lattice must be semidistributive");
    log.expect(L2.lattice.is_semidistributive(), "Tamari lattice of nu-hat must be semidistributive");

    int base = L2.index_of(nu);
    std::vector<int> members;
    for (int i = 0; i < L2.lattice.size(); ++i)
        if (L2.lattice.leq(base, i)) members.push_back(i);
    log.expect(members.size() == L1.elements.size(), "interval size != |P(nu)|");
    if (!log.ok()) return;

    std::vector<int> map2(L1.elements.size());
    for (size_t i = 0; i < L1.elements.size(); ++i) {
        int j = L2.index_of(L1.elements[i]);
        map2[i] = j;
        log.expect(L2.lattice.leq(base, j), "a nu-path is missing from the interval");
    }
    for (size_t i = 0; i < L1.elements.size() && log.ok(); ++i) {
        for (size_t j = 0; j < L1.elements.size(); ++j) {
            if (L1.lattice.leq(static_cast<int>(i), static_cast<int>(j)) !=
                L2.lattice.leq(map2[i], map2[j])) {
                log.expect(false, "interval order disagrees with the alt order");
                break;
            }
        }
    }
}

inline SuiteReport verify_interval(int count, unsigned long long seed, long long max_elements, int jobs = 0) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<LatticePath, IncrementVector>> samples;
    while (static_cast<int>(samples.size()) < count) {
        LatticePath nu = sample_random_nu(rng, 6, 8);
        if (count_nu_paths(nu) > static_cast<unsigned long long>(max_elements)) continue;
        samples.emplace_back(nu, sample_random_increment(rng, run_length(nu)));
    }
    std::vector<std::pair<std::string, std::function<void(CaseLog&)>>> cases;
    for (int i = 0; i < count; ++i) {
        const LatticePath nu = samples[static_cast<size_t>(i)].first;
        const IncrementVector delta = samples[static_cast<size_t>(i)].second;
        cases.emplace_back("interval nu=" + to_string(nu) + " delta=" + detail::seq_str(delta),
                           [nu, delta](CaseLog& log) { check_interval_case(log, nu, delta); });
    }
    return detail::run_suite("interval", std::move(cases), jobs);
}

} // namespace alttamari
