// Acceptance suite: the closed-form results are reproduced by exhaustive
// computation at desk scale. One PASS/FAIL line per criterion; exit status
// is nonzero when any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "alttamari/closed_forms.hpp"
#include "alttamari/families.hpp"
#include "alttamari/scan.hpp"
#include "alttamari/stats.hpp"
#include "alttamari/verify.hpp"

namespace at = alttamari;

namespace {

std::atomic<long long> g_lattices_built{0};
std::atomic<long long> g_semidistributive_failures{0};

void note_lattice(const at::FiniteLattice& L) {
    ++g_lattices_built;
    if (!L.is_semidistributive()) ++g_semidistributive_failures;
}

struct Criterion {
    std::string label;
    std::function<void(at::CaseLog&)> run;
};

// 1. hook orbit census, 1 <= a,b <= 7, every increment vector
void hook_census(at::CaseLog& log) {
    for (int a = 1; a <= 7; ++a) {
        for (int b = 1; b <= 7; ++b) {
            for (int k = 0; k <= b - 1; ++k) {
                at::HookLattice H = at::build_hook(a, b, k);
                note_lattice(H.alt.lattice);
                std::vector<int> sizes = at::orbit_decomposition(H.alt.lattice).sizes();
                std::sort(sizes.begin(), sizes.end());
                std::vector<int> want = at::hook_prediction(a, b, k).orbit_sizes;
                std::sort(want.begin(), want.end());
                if (sizes != want) {
                    log.expect(false, "census mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                          " k=" + std::to_string(k));
                    return;
                }
            }
        }
    }
}

// 2. hook cyclic sieving, 1 <= a,b <= 6, |f(omega^d) - fix(d)| < 1e-6
void hook_csp(at::CaseLog& log) {
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            for (int k = 0; k <= b - 1; ++k) {
                at::HookLattice H = at::build_hook(a, b, k);
                note_lattice(H.alt.lattice);
                at::OrbitDecomposition dec = at::orbit_decomposition(H.alt.lattice);
                at::HookPrediction pred = at::hook_prediction(a, b, k);
                log.expect(dec.order == pred.row_order,
                           "rowmotion order mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
                at::CspCheck c = at::csp_verify(dec, at::hook_csp_polynomial(a, b), dec.order, 1e-6);
                if (!c.ok) {
                    log.expect(false, "csp mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                          " k=" + std::to_string(k) + " d=" + std::to_string(c.bad_d));
                    return;
                }
            }
        }
    }
}

// 3. hook statistic orbit sums, 1 <= a,b <= 6, all k; area at k = 0 and
// k = b-1; area homometry must fail at (3,3,1)
void hook_statistics(at::CaseLog& log) {
    for (int a = 1; a <= 6 && log.ok(); ++a) {
        for (int b = 1; b <= 6 && log.ok(); ++b) {
            for (int k = 0; k <= b - 1 && log.ok(); ++k) {
                at::HookLattice H = at::build_hook(a, b, k);
                note_lattice(H.alt.lattice);
                at::OrbitDecomposition dec = at::orbit_decomposition(H.alt.lattice);
                at::HookPrediction pred = at::hook_prediction(a, b, k);
                at::StatContext ctx{&H.alt.lattice, &H.alt.elements, &H.alt.nu};
                at::StatReport rd = at::orbit_stat_report(ctx, dec, "ddeg");
                at::StatReport rp = at::orbit_stat_report(ctx, dec, "peak");
                at::StatReport rv = at::orbit_stat_report(ctx, dec, "val");
                at::StatReport ra = at::orbit_stat_report(ctx, dec, "area");
                std::string where = " at a=" + std::to_string(a) + " b=" + std::to_string(b) + " k=" + std::to_string(k);
                for (size_t i = 0; i < dec.orbits.size(); ++i) {
                    bool extra = static_cast<long long>(dec.orbits[i].size()) == pred.l + 1;
                    log.expect(rd.orbit_sums[i] == (extra ? pred.ddeg_o_prime : pred.ddeg_o), "ddeg sum" + where);
                    log.expect(rp.orbit_sums[i] == (extra ? pred.peak_o_prime : pred.peak_o), "peak sum" + where);
                    log.expect(rv.orbit_sums[i] == (extra ? pred.val_o_prime : pred.val_o), "val sum" + where);
                    if (pred.area_o)
                        log.expect(at::Rational(ra.orbit_sums[i]) == (extra ? *pred.area_o_prime : *pred.area_o),
                                   "area sum" + where);
                }
                log.expect(rd.homometric && rp.homometric && rv.homometric, "homometry verdict" + where);
                if (a == 3 && b == 3 && k == 1)
                    log.expect(!ra.homometric, "area homometry unexpectedly holds at (3,3,1)");
            }
        }
    }
}

// 4. 2-row census and ddeg sums, 0 <= a,b <= 8, all 0 <= k <= b, identical
// across k
void two_row_census(at::CaseLog& log) {
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= 8; ++b) {
            auto want = at::two_row_prediction(a, b).expand();
            for (int k = 0; k <= b; ++k) {
                at::TwoRowLattice T = at::build_two_row(a, b, k);
                note_lattice(T.alt.lattice);
                at::OrbitDecomposition dec = at::orbit_decomposition(T.alt.lattice);
                std::vector<std::pair<long long, long long>> got;
                for (const auto& orbit : dec.orbits) {
                    long long ds = 0;
                    for (int id : orbit) ds += at::ddeg(T.alt.lattice, id);
                    got.emplace_back(static_cast<long long>(orbit.size()), ds);
                }
                std::sort(got.begin(), got.end());
                if (got != want) {
                    log.expect(false, "census mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                          " k=" + std::to_string(k));
                    return;
                }
            }
        }
    }
}

// 5. switching theorem, a,b <= 6, k = 1..b
void switching(at::CaseLog& log) {
    for (int a = 0; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            for (int k = 1; k <= b; ++k) {
                at::CaseLog inner;
                at::check_switching_case(inner, a, b, k);
                g_lattices_built += 2;  // the two star composites, asserted semidistributive inside
                if (!inner.ok()) {
                    log.expect(false, "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                          " k=" + std::to_string(k) + ": " + inner.detail());
                    return;
                }
            }
        }
    }
}

// 6. the 13-element oracle orbit, exact sequence
void engine_oracle(at::CaseLog& log) {
    at::check_rowmotion_oracle(log);
    g_lattices_built += 1;
}

// 7. interval embedding on 20 seeded samples with |P(nu)| <= 2000
void interval_embedding(at::CaseLog& log) {
    at::SuiteReport rep = at::verify_interval(20, 20260810ull, 2000, 0);
    g_lattices_built += 2 * static_cast<long long>(rep.cases.size());
    for (const auto& c : rep.cases) {
        if (!c.pass) {
            log.expect(false, c.name + ": " + c.detail);
            return;
        }
    }
}

// 8. congruence solution sets vs brute force, 0 <= b <= a <= 20
void congruence(at::CaseLog& log) {
    for (int a = 0; a <= 20 && log.ok(); ++a) at::check_congruence_case(log, a);
}

// 9. conjecture scan over every nu with <= 4 N steps and <= 6 E steps
void conjecture_scan(at::CaseLog& log) {
    at::ScanConfig cfg;
    cfg.max_n = 4;
    cfg.max_e = 6;
    cfg.stats = {"ddeg"};
    cfg.jobs = 0;
    at::ScanReport rep = at::run_conjecture_scan(cfg);
    log.expect(rep.skipped == 0, "scan skipped paths unexpectedly");
    for (const auto& e : rep.entries) {
        g_lattices_built += e.delta_count;
        if (!e.consistent) {
            log.expect(false, "counterexample at nu=" + e.nu + ": " + e.witness);
            return;
        }
    }
}

// 10. every lattice constructed above passed the semidistributivity check
void semidistributivity(at::CaseLog& log) {
    log.expect(g_lattices_built > 0, "no lattices were built");
    log.expect(g_semidistributive_failures == 0,
               std::to_string(g_semidistributive_failures.load()) + " lattices failed the check");
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"hook orbit census (a,b <= 7, all k)", hook_census},
        {"hook cyclic sieving (a,b <= 6)", hook_csp},
        {"hook statistic orbit sums (a,b <= 6)", hook_statistics},
        {"2-row census and ddeg sums (a,b <= 8, all k)", two_row_census},
        {"switching theorem (a,b <= 6, k = 1..b)", switching},
        {"13-element rowmotion oracle", engine_oracle},
        {"interval embedding (20 seeded samples)", interval_embedding},
        {"congruence solution sets (0 <= b <= a <= 20)", congruence},
        {"conjecture scan (nu with <= 4 N, <= 6 E steps)", conjecture_scan},
        {"semidistributivity of every constructed lattice", semidistributivity},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        at::CaseLog log;
        try {
            criteria[i].run(log);
        } catch (const std::exception& e) {
            log.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu %-55s %s (%.1fs)\n", i + 1, criteria[i].label.c_str(),
                    log.ok() ? "PASS" : "FAIL", secs);
        if (!log.ok()) {
            std::printf("             %s\n", log.detail().c_str());
            ++failures;
        }
    }
    // scan_one flags non-semidistributive lattices as inconsistent, and the
    // interval/switching cases assert it inline; the counter above covers
    // the lattices this file builds directly.
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
