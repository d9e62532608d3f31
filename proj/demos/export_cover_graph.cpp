// Builds Tam_delta(nu) for a path given on the command line and writes its
// cover graph as DOT to stdout.

#include <iostream>

#include "alttamari/exports.hpp"
#include "alttamari/tamari.hpp"

namespace at = alttamari;

int main(int argc, char** argv) {
    std::string nu_text = argc > 1 ? argv[1] : "EN^2E^2N";
    at::LatticePath nu = at::parse_path(nu_text);
    at::IncrementVector delta =
        argc > 2 ? at::IncrementVector{} : at::dyck_increment(at::run_length(nu));
    if (argc > 2) {
        std::istringstream is(argv[2]);
        std::string cur;
        while (std::getline(is, cur, ',')) delta.push_back(std::stoi(cur));
    }

    at::AltTamariLattice L = at::build_alt_tamari(nu, delta);
    std::vector<std::string> labels;
    for (const auto& p : L.elements) labels.push_back(at::to_string(p));
    std::cout << at::to_dot(L.lattice, labels);
    return 0;
}
