#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qdec/complex_matrix.hpp"
#include "qdec/density_matrix.hpp"
#include "qdec/errors.hpp"

namespace qdec {

// Spectral data of a Hermitian operator. energies ascending, basis columns
// are the matching orthonormal eigenvectors. This is the frame in which all
// propagators act element-wise.
struct energy_decomposition {
    std::vector<double> energies;   // rad/s
    complex_matrix basis;           // unitary, columns = eigenvectors
    complex_matrix source;          // the operator that was decomposed
};

namespace detail {

// One cyclic Jacobi sweep target: annihilate A_pq with the unitary
//   V = [[c, -s e^{i phi}], [s e^{-i phi}, c]],  phi = arg(A_pq),
// applied as A <- V^dag A V, U <- U V. Quadratic convergence for Hermitian A.
inline void jacobi_rotate(complex_matrix& a, complex_matrix& u,
                          std::size_t p, std::size_t q) {
    const complex beta = a(p, q);
    const double absb = std::abs(beta);
    if (absb == 0.0) return;

    const double tau = (a(p, p).real() - a(q, q).real()) / (2.0 * absb);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const complex eip = beta / absb;           // e^{i phi}
    const complex eim = std::conj(eip);

    const std::size_t d = a.dim();
    for (std::size_t k = 0; k < d; ++k) {      // A <- A V
        const complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + s * eim * akq;
        a(k, q) = -s * eip * akp + c * akq;
    }
    for (std::size_t k = 0; k < d; ++k) {      // A <- V^dag A
        const complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + s * eip * aqk;
        a(q, k) = -s * eim * apk + c * aqk;
    }
    for (std::size_t k = 0; k < d; ++k) {      // U <- U V
        const complex ukp = u(k, p), ukq = u(k, q);
        u(k, p) = c * ukp + s * eim * ukq;
        u(k, q) = -s * eip * ukp + c * ukq;
    }
}

inline double max_offdiag(const complex_matrix& a) {
    double m = 0.0;
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = p + 1; q < a.dim(); ++q)
            m = std::max(m, std::abs(a(p, q)));
    return m;
}

} // namespace detail

inline energy_decomposition diagonalize(const hermitian_operator& h) {
    const std::size_t d = h.dim();
    complex_matrix a = h.mat();
    complex_matrix u = complex_matrix::identity(d);
    const double stop = 1e-15 * std::max(1.0, a.max_abs());

    bool converged = (d < 2);
    for (int sweep = 0; sweep < 60 && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q)
                if (std::abs(a(p, q)) > stop) detail::jacobi_rotate(a, u, p, q);
        converged = detail::max_offdiag(a) <= stop;
    }
    if (!converged)
        throw error(error_category::numeric,
                    "diagonalize: Jacobi iteration did not converge");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    energy_decomposition dec;
    dec.energies.resize(d);
    dec.basis = complex_matrix(d);
    for (std::size_t c = 0; c < d; ++c) {
        dec.energies[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < d; ++r) dec.basis(r, c) = u(r, order[c]);
    }
    dec.source = h.mat();

    const double tol = 1e-10 * std::max(1.0, h.mat().max_abs());
    const complex_matrix gram = dec.basis.adjoint() * dec.basis;
    if (max_abs_diff(gram, complex_matrix::identity(d)) > tol)
        throw error(error_category::numeric,
                    "diagonalize: eigenvector basis lost orthonormality");
    complex_matrix lam(d);
    for (std::size_t i = 0; i < d; ++i) lam(i, i) = dec.energies[i];
    if (max_abs_diff(dec.basis * lam * dec.basis.adjoint(), h.mat()) > tol)
        throw error(error_category::numeric,
                    "diagonalize: spectral reconstruction drifted");
    return dec;
}

// rho in the energy eigenbasis and back.
inline complex_matrix to_eigenbasis(const complex_matrix& rho, const energy_decomposition& dec) {
    return dec.basis.adjoint() * rho * dec.basis;
}

inline complex_matrix from_eigenbasis(const complex_matrix& rho_tilde, const energy_decomposition& dec) {
    return dec.basis * rho_tilde * dec.basis.adjoint();
}

// Smallest eigenvalue of the state. Diagnostic only: values >= -1e-10 count
// as numerically positive.
inline double positivity_defect(const density_matrix& rho) {
    const energy_decomposition dec = diagonalize(hermitian_operator(rho.mat()));
    return dec.energies.front();
}

} // namespace qdec
