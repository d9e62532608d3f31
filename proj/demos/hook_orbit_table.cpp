// Builds one alt hook-Tamari lattice, prints its rowmotion orbits and the
// statistic orbit sums next to the closed-form values.

#include <iostream>

#include "alttamari/closed_forms.hpp"
#include "alttamari/families.hpp"
#include "alttamari/stats.hpp"

namespace at = alttamari;

int main(int argc, char** argv) {
    int a = argc > 1 ? std::atoi(argv[1]) : 4;
    int b = argc > 2 ? std::atoi(argv[2]) : 6;
    int k = argc > 3 ? std::atoi(argv[3]) : 2;

    at::HookLattice H = at::build_hook(a, b, k);
    at::HookPrediction pred = at::hook_prediction(a, b, k);
    at::OrbitDecomposition dec = at::orbit_decomposition(H.alt.lattice);

    std::cout << "hook lattice a=" << a << " b=" << b << " k=" << k << ": "
              << H.alt.lattice.size() << " elements, gcd " << pred.g << ", lcm " << pred.l << "\n";
    std::cout << "rowmotion order " << dec.order << " (predicted " << pred.row_order << ")\n\n";

    at::StatContext ctx{&H.alt.lattice, &H.alt.elements, &H.alt.nu};
    at::StatReport rd = at::orbit_stat_report(ctx, dec, "ddeg");

    for (size_t i = 0; i < dec.orbits.size(); ++i) {
        std::cout << "orbit " << i << " (size " << dec.orbits[i].size() << ", ddeg sum "
                  << rd.orbit_sums[i] << "):";
        for (int id : dec.orbits[i]) std::cout << " " << at::to_string(H.alt.elements[id]);
        std::cout << "\n";
    }
    std::cout << "\npredicted ddeg sums: " << pred.ddeg_o << " per generic orbit, "
              << pred.ddeg_o_prime << " on the extra orbit\n";
    return 0;
}
