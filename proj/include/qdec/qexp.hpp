#pragma once

#include <cmath>
#include <complex>

#include "qdec/errors.hpp"

namespace qdec {

// Deformed exponential: [1 + (1-q) x]^{1/(1-q)}, principal branch,
// continuous limit exp(x) at q = 1.
inline std::complex<double> q_exp(std::complex<double> x, double q) {
    if (x == std::complex<double>(0.0, 0.0)) return {1.0, 0.0};
    if (q == 1.0) return std::exp(x);

    const double p = 1.0 / (1.0 - q);
    const std::complex<double> base = 1.0 + (1.0 - q) * x;

    if (base == std::complex<double>(0.0, 0.0)) {
        if (p < 0.0)
            throw pole_error("q_exp: zero base raised to negative power");
        return {0.0, 0.0};
    }
    if (base.imag() == 0.0 && base.real() < 0.0 && std::rint(p) != p)
        throw branch_cut_error("q_exp: negative real base with non-integer power");

    return std::pow(base, p);
}

inline double q_log(double x, double q) {
    if (q == 1.0) return std::log(x);
    return (std::pow(x, 1.0 - q) - 1.0) / (1.0 - q);
}

} // namespace qdec
