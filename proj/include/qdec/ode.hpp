#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qdec/propagators.hpp"

namespace qdec {

namespace detail {

// RK4 for the scalar linear ODE y' = g(t) y.
template <typename G>
complex rk4_step(const G& g, double t, double h, complex y) {
    const complex k1 = g(t) * y;
    const complex k2 = g(t + 0.5 * h) * (y + 0.5 * h * k1);
    const complex k3 = g(t + 0.5 * h) * (y + 0.5 * h * k2);
    const complex k4 = g(t + h) * (y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Integrate y' = g(t) y from t = 0 with y(0) = 1, sampling at the grid
// points, steps never longer than dt_max.
template <typename G>
std::vector<complex> rk4_sample(const G& g, const std::vector<double>& times, double dt_max) {
    std::vector<complex> out;
    out.reserve(times.size());
    complex y = 1.0;
    double t = 0.0;
    for (double target : times) {
        const double span = target - t;
        if (span > 0.0) {
            const auto n = static_cast<std::size_t>(std::ceil(span / dt_max));
            const double h = span / static_cast<double>(n);
            for (std::size_t i = 0; i < n; ++i) y = rk4_step(g, t + i * h, h, y);
            t = target;
        }
        out.push_back(y);
    }
    return out;
}

} // namespace detail

// Direct fixed-step RK4 integration of the q-parametrized evolution law,
// element-wise in the energy eigenbasis:
//   d rho~_mn / dt = [-i omega_mn / (1 + i (q-1) omega_mn t)] rho~_mn.
// Independent cross-check for evolve_qexp (no shared code path beyond the
// eigendecomposition). The denominator never vanishes for q >= 1, real
// omega, t >= 0.
inline evolution_result integrate_generalized_vn(const density_matrix& rho0,
                                                 const hermitian_operator& h, double q,
                                                 const std::vector<double>& times,
                                                 double dt_max) {
    if (!(dt_max > 0.0))
        throw step_size_error("integrate_generalized_vn: dt_max must be positive");
    detail::require_q(q);
    require_increasing(times);

    const energy_decomposition dec = diagonalize(h);
    const std::size_t d = dec.basis.dim();
    const double wmax = omega_max(dec);
    const complex_matrix rt0 = to_eigenbasis(rho0.mat(), dec);

    // Per-(m,n) propagation factors at every grid point.
    std::vector<std::vector<complex>> factors(d * d);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t n = m + 1; n < d; ++n) {
            const double w = dec.energies[m] - dec.energies[n];
            auto g = [w, q](double t) {
                return complex(0.0, -w) / complex(1.0, (q - 1.0) * w * t);
            };
            factors[m * d + n] = detail::rk4_sample(g, times, dt_max);
        }

    const propagator_kind kind = q_exponential_kind{q};
    evolution_result res;
    res.times = times;
    res.kind = kind;
    res.states.reserve(times.size());
    res.validity.reserve(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        complex_matrix rt = rt0;
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t n = m + 1; n < d; ++n) {
                const complex f = factors[m * d + n][i];
                rt(m, n) *= f;
                rt(n, m) *= std::conj(f);
            }
        res.states.emplace_back(from_eigenbasis(rt, dec));
        res.validity.push_back(validity_flag(kind, wmax, times[i]));
    }
    return res;
}

} // namespace qdec
