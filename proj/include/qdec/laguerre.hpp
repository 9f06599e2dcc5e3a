#pragma once

#include <cstddef>

#include "qdec/errors.hpp"

namespace qdec {

// Generalized Laguerre polynomial L_n^alpha(x) via the three-term recurrence
// (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
inline double laguerre(std::size_t n, double alpha, double x) {
    if (n > 1000000)
        throw index_error("laguerre: order too large");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + alpha - x;
    for (std::size_t k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

} // namespace qdec
