#pragma once

// build_alt_tamari: the alt nu-Tamari lattice on the nu-paths, covers given
// by delta-rotations, lattice axioms verified during construction.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alttamari/lattice.hpp"
#include "alttamari/path.hpp"
#include "alttamari/rotation.hpp"

namespace alttamari {

struct BuildOptions {
    long long max_elements = 50000;  // refuse |P(nu)| above this
    bool check_semidistributive = true;
};

struct AltTamariLattice {
    LatticePath nu;
    IncrementVector delta;
    std::vector<LatticePath> elements;  // canonical order, ids = positions
    FiniteLattice lattice;

    int index_of(const LatticePath& p) const {
        auto key = north_xcoords(p);
        auto it = std::lower_bound(elements.begin(), elements.end(), key,
                                   [](const LatticePath& e, const std::vector<int>& k) {
                                       return north_xcoords(e) < k;
                                   });
        if (it == elements.end() || !(*it == p))
            throw std::invalid_argument("path is not an element of this lattice");
        return static_cast<int>(it - elements.begin());
    }
};

inline AltTamariLattice build_alt_tamari(const LatticePath& nu, const IncrementVector& delta,
                                         const BuildOptions& opt = {}) {
    validate_increment(run_length(nu), delta);
    unsigned long long count = count_nu_paths(nu);
    if (count > static_cast<unsigned long long>(opt.max_elements))
        throw guard_error("|P(nu)| = " + std::to_string(count) + " exceeds the element guard (" +
                          std::to_string(opt.max_elements) + ")");

    AltTamariLattice out;
    out.nu = nu;
    out.delta = delta;
    out.elements = enumerate_nu_paths(nu);

    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < static_cast<int>(out.elements.size()); ++i) {
        for (const auto& up : detail::covers_unchecked(delta, out.elements[static_cast<size_t>(i)]))
            covers.emplace_back(i, out.index_of(up));
    }
    // valleys are processed in path order; downstream the covers are a set
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

    FiniteLattice::Options lopt;
    lopt.check_semidistributive = opt.check_semidistributive;
    out.lattice = FiniteLattice::from_covers(static_cast<int>(out.elements.size()), std::move(covers), lopt);
    return out;
}

} // namespace alttamari
