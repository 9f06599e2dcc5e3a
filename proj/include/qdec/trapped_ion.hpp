#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "qdec/distributions.hpp"
#include "qdec/density_matrix.hpp"
#include "qdec/errors.hpp"
#include "qdec/laguerre.hpp"
#include "qdec/propagators.hpp"
#include "qdec/time_series.hpp"

namespace qdec {

// Blue-sideband drive of a single trapped ion. The carrier coupling is given
// as an ordinary frequency (Hz); everything downstream works in rad/s.
struct ion_config {
    double omega_over_2pi_hz = 5e5;
    double eta = 0.202;      // Lamb-Dicke parameter
    std::size_t dim = 30;    // vibrational Fock truncation
};

inline void validate(const ion_config& cfg) {
    if (!(cfg.omega_over_2pi_hz > 0.0))
        throw config_error("ion_config: carrier frequency must be positive");
    if (!(cfg.eta > 0.0 && cfg.eta < 1.0))
        throw config_error("ion_config: eta must lie in (0, 1)");
    if (cfg.dim < 1)
        throw config_error("ion_config: dim must be at least 1");
}

inline double carrier_omega(const ion_config& cfg) {
    return 2.0 * std::numbers::pi * cfg.omega_over_2pi_hz;  // rad/s
}

// Phenomenological per-level damping gamma_n = gamma0 * (n+1)^exponent.
struct empirical_decay {
    double gamma0_per_s = 11.9e3;
    double exponent = 0.7;
};

inline void validate(const empirical_decay& d) {
    if (d.gamma0_per_s < 0.0)
        throw config_error("empirical_decay: gamma0 must be nonnegative");
}

struct fock_state { std::size_t n0 = 0; };
struct coherent_state { double nbar = 0.0; };
using vibrational_state = std::variant<fock_state, coherent_state>;

inline std::vector<double> initial_distribution(const vibrational_state& state,
                                                std::size_t dim) {
    if (const auto* f = std::get_if<fock_state>(&state))
        return fock_distribution(f->n0, dim);
    return coherent_distribution(std::get<coherent_state>(state).nbar, dim);
}

inline std::string describe(const vibrational_state& state) {
    if (const auto* f = std::get_if<fock_state>(&state))
        return "fock:" + std::to_string(f->n0);
    return "coherent:" + format_double(std::get<coherent_state>(state).nbar);
}

// Effective coupling on the |g,n> <-> |e,n+1> transition:
// Omega_n = Omega e^{-eta^2/2} eta L_n^1(eta^2) / sqrt(n+1), rad/s.
inline double rabi_frequency(std::size_t n, const ion_config& cfg) {
    validate(cfg);
    const double eta2 = cfg.eta * cfg.eta;
    return carrier_omega(cfg) * std::exp(-eta2 / 2.0) * cfg.eta *
           laguerre(n, 1.0, eta2) / std::sqrt(static_cast<double>(n + 1));
}

// Ground-state population with the phenomenological exponential damping:
// P_g(t) = 1/2 [1 + sum_n P_n cos(2 Omega_n t) e^{-gamma_n t}].
inline double pg_empirical(const std::vector<double>& dist, const ion_config& cfg,
                           const empirical_decay& decay, double t) {
    validate(cfg);
    validate(decay);
    if (!(t >= 0.0)) throw config_error("pg_empirical: t must be nonnegative");
    double sum = 0.0;
    for (std::size_t n = 0; n < dist.size(); ++n) {
        if (dist[n] == 0.0) continue;
        const double wn = rabi_frequency(n, cfg);
        const double gn = decay.gamma0_per_s * std::pow(static_cast<double>(n + 1), decay.exponent);
        sum += dist[n] * std::cos(2.0 * wn * t) * std::exp(-gn * t);
    }
    return 0.5 * (1.0 + sum);
}

// Ground-state population with the q-parametrized Gaussian damping, printed
// coefficient gamma_{n,q} = (q-1) Omega_n^2 / 2. The distribution weight P_n
// multiplies each term (see pg_from_propagator for the dynamical cross-check,
// whose Gaussian rate differs by a factor of 4; the compare command surfaces
// that ratio).
inline double pg_qmodel(const std::vector<double>& dist, const ion_config& cfg, double q,
                        double t) {
    validate(cfg);
    if (!(q >= 1.0)) throw config_error("pg_qmodel: q must be >= 1");
    if (!(t >= 0.0)) throw config_error("pg_qmodel: t must be nonnegative");
    double sum = 0.0;
    for (std::size_t n = 0; n < dist.size(); ++n) {
        if (dist[n] == 0.0) continue;
        const double wn = rabi_frequency(n, cfg);
        const double gnq = (q - 1.0) * wn * wn / 2.0;
        sum += dist[n] * std::cos(2.0 * wn * t) * std::exp(-gnq * t * t);
    }
    return 0.5 * (1.0 + sum);
}

// Resonant two-level block on span{|g,n>, |e,n+1>}: H_n = Omega_n sigma_x.
// The dressed states split by 2 Omega_n, which produces the cos(2 Omega_n t)
// population oscillation.
inline hermitian_operator blue_sideband_block(std::size_t n, const ion_config& cfg) {
    const double wn = rabi_frequency(n, cfg);
    complex_matrix m(2);
    m(0, 1) = wn;
    m(1, 0) = wn;
    return hermitian_operator(std::move(m));
}

// Dynamical ground-state population: evolve |g,n><g,n| under each two-level
// block with the chosen propagator and sum the P_n-weighted ground
// populations. Independent of the closed-form pg_qmodel path.
inline time_series pg_from_propagator(const vibrational_state& state, const ion_config& cfg,
                                      const propagator_kind& kind,
                                      const std::vector<double>& times) {
    validate(cfg);
    validate_kind(kind);
    require_increasing(times);
    const std::vector<double> dist = initial_distribution(state, cfg.dim);
    const density_matrix ground = density_matrix::pure({complex(1.0, 0.0), complex(0.0, 0.0)});

    std::vector<double> pg(times.size(), 0.0);
    for (std::size_t n = 0; n < dist.size(); ++n) {
        if (dist[n] == 0.0) continue;
        const energy_decomposition dec = diagonalize(blue_sideband_block(n, cfg));
        for (std::size_t i = 0; i < times.size(); ++i) {
            const density_matrix rho = evolve(ground, dec, kind, times[i]);
            pg[i] += dist[n] * rho(0, 0).real();
        }
    }

    time_series s;
    s.times = times;
    s.channels.emplace_back("pg", std::move(pg));
    s.add_meta("kind", kind_name(kind));
    s.add_meta("init", describe(state));
    return s;
}

} // namespace qdec
