#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qdec/errors.hpp"

namespace qdec {

// Poisson number-state weights of a coherent state with mean occupation nbar,
// truncated to dim levels. Forward recurrence P_{n+1} = P_n nbar/(n+1) keeps
// the evaluation stable for large nbar. Rejects truncations that drop more
// than eps_trunc of the total weight, reporting the smallest adequate dim.
inline std::vector<double> coherent_distribution(double nbar, std::size_t dim,
                                                 double eps_trunc = 1e-6) {
    if (nbar < 0.0)
        throw config_error("coherent_distribution: nbar must be nonnegative");
    if (dim == 0)
        throw config_error("coherent_distribution: dim must be positive");

    std::vector<double> p(dim);
    double pn = std::exp(-nbar);
    double mass = 0.0;
    for (std::size_t n = 0; n < dim; ++n) {
        p[n] = pn;
        mass += pn;
        pn *= nbar / static_cast<double>(n + 1);
    }
    if (1.0 - mass > eps_trunc) {
        std::size_t d = dim;
        while (1.0 - mass > eps_trunc && d < 1000000) {
            mass += pn;
            pn *= nbar / static_cast<double>(d + 1);
            ++d;
        }
        throw truncation_error("coherent_distribution: truncated tail exceeds tolerance"
                               "; need dim >= " + std::to_string(d), d);
    }
    return p;
}

// All weight on a single number state.
inline std::vector<double> fock_distribution(std::size_t n, std::size_t dim) {
    if (n >= dim)
        throw index_error("fock_distribution: level index outside truncated space");
    std::vector<double> p(dim, 0.0);
    p[n] = 1.0;
    return p;
}

} // namespace qdec
