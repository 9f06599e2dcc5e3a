#pragma once

#include <cmath>

#include "qdec/density_matrix.hpp"
#include "qdec/eigensystem.hpp"
#include "qdec/errors.hpp"

namespace qdec {

// Tsallis entropy S_q = (1 - sum_k lambda_k^q)/(q - 1) over the spectrum of
// rho, with 0^q := 0. q = 1 returns the von Neumann limit -sum lambda ln lambda.
// Eigenvalues inside the positivity diagnostic band [-1e-10, 0) are clamped
// to zero; more negative ones indicate an invalid state.
inline double tsallis_entropy(const density_matrix& rho, double q) {
    const energy_decomposition dec = diagonalize(hermitian_operator(rho.mat()));
    double s = 0.0;
    for (double lam : dec.energies) {
        if (lam < -1e-10)
            throw invariant_error("tsallis_entropy: state has a negative eigenvalue");
        if (lam <= 0.0) continue;
        if (q == 1.0)
            s -= lam * std::log(lam);
        else
            s += std::pow(lam, q);
    }
    if (q == 1.0) return s;
    return (1.0 - s) / (q - 1.0);
}

} // namespace qdec
