#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qdec/density_matrix.hpp"
#include "qdec/eigensystem.hpp"
#include "qdec/errors.hpp"
#include "qdec/qexp.hpp"

namespace qdec {

// Dynamics selectors. q >= 1 for the two q-variants (q = 1 is the unitary
// limit); tau is Milburn's fundamental time step in seconds.
struct unitary_kind {};
struct q_exponential_kind { double q; };
struct q_short_time_kind { double q; };
struct milburn_kind { double tau; };

using propagator_kind =
    std::variant<unitary_kind, q_exponential_kind, q_short_time_kind, milburn_kind>;

inline void validate_kind(const propagator_kind& kind) {
    if (const auto* k = std::get_if<q_exponential_kind>(&kind)) {
        if (k->q < 1.0) throw config_error("propagator: q must be >= 1 for evolution");
    } else if (const auto* k = std::get_if<q_short_time_kind>(&kind)) {
        if (k->q < 1.0) throw config_error("propagator: q must be >= 1 for evolution");
    } else if (const auto* k = std::get_if<milburn_kind>(&kind)) {
        if (k->tau < 0.0) throw config_error("propagator: tau must be nonnegative");
    }
}

inline std::string kind_name(const propagator_kind& kind) {
    struct v {
        std::string operator()(unitary_kind) const { return "unitary"; }
        std::string operator()(q_exponential_kind) const { return "qexp"; }
        std::string operator()(q_short_time_kind) const { return "qshort"; }
        std::string operator()(milburn_kind) const { return "milburn"; }
    };
    return std::visit(v{}, kind);
}

// Largest transition frequency |omega_mn| (energies are sorted).
inline double omega_max(const energy_decomposition& dec) {
    return dec.energies.back() - dec.energies.front();
}

// Advisory short-time validity: |1-q| * omega_max * t <= 0.2. Kinds without
// a q parameter are always valid.
inline bool validity_flag(const propagator_kind& kind, double omega_mx, double t) {
    double q = 1.0;
    if (const auto* k = std::get_if<q_exponential_kind>(&kind)) q = k->q;
    if (const auto* k = std::get_if<q_short_time_kind>(&kind)) q = k->q;
    return std::abs(1.0 - q) * omega_mx * t <= 0.2;
}

namespace detail {

// Element-wise action in the energy eigenbasis: rho~_mn(t) = f(omega_mn) *
// rho~_mn(0), omega_mn = E_m - E_n. The (n,m) entry gets the conjugate
// factor, so Hermiticity is exact; the diagonal (omega = 0) is untouched,
// so the trace and the energy populations are conserved exactly.
template <typename FactorFn>
density_matrix evolve_elementwise(const density_matrix& rho0,
                                  const energy_decomposition& dec, FactorFn factor) {
    const std::size_t d = rho0.dim();
    if (d != dec.basis.dim())
        throw invariant_error("evolve: state and Hamiltonian dimension mismatch");
    complex_matrix rt = to_eigenbasis(rho0.mat(), dec);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t n = m + 1; n < d; ++n) {
            const complex f = factor(dec.energies[m] - dec.energies[n]);
            rt(m, n) *= f;
            rt(n, m) *= std::conj(f);
        }
    return density_matrix(from_eigenbasis(rt, dec));
}

inline void require_time(double t) {
    if (!(t >= 0.0)) throw config_error("evolve: time must be nonnegative");
}

inline void require_q(double q) {
    if (!(q >= 1.0)) throw config_error("evolve: q must be >= 1");
}

} // namespace detail

inline density_matrix evolve_unitary(const density_matrix& rho0,
                                     const energy_decomposition& dec, double t) {
    detail::require_time(t);
    return detail::evolve_elementwise(rho0, dec, [t](double w) {
        return std::exp(complex(0.0, -w * t));
    });
}

inline density_matrix evolve_qexp(const density_matrix& rho0,
                                  const energy_decomposition& dec, double q, double t) {
    detail::require_time(t);
    detail::require_q(q);
    return detail::evolve_elementwise(rho0, dec, [q, t](double w) {
        return q_exp(complex(0.0, -w * t), q);
    });
}

inline density_matrix evolve_qshort(const density_matrix& rho0,
                                    const energy_decomposition& dec, double q, double t) {
    detail::require_time(t);
    detail::require_q(q);
    return detail::evolve_elementwise(rho0, dec, [q, t](double w) {
        return std::exp(complex(-(q - 1.0) * w * w * t * t / 2.0, -w * t));
    });
}

inline density_matrix evolve_milburn(const density_matrix& rho0,
                                     const energy_decomposition& dec, double tau, double t) {
    detail::require_time(t);
    if (tau < 0.0) throw config_error("evolve: tau must be nonnegative");
    return detail::evolve_elementwise(rho0, dec, [tau, t](double w) {
        return std::exp(complex(-tau * w * w * t / 2.0, -w * t));
    });
}

inline density_matrix evolve_unitary(const density_matrix& rho0,
                                     const hermitian_operator& h, double t) {
    return evolve_unitary(rho0, diagonalize(h), t);
}

inline density_matrix evolve_qexp(const density_matrix& rho0, const hermitian_operator& h,
                                  double q, double t) {
    return evolve_qexp(rho0, diagonalize(h), q, t);
}

inline density_matrix evolve_qshort(const density_matrix& rho0, const hermitian_operator& h,
                                    double q, double t) {
    return evolve_qshort(rho0, diagonalize(h), q, t);
}

inline density_matrix evolve_milburn(const density_matrix& rho0, const hermitian_operator& h,
                                     double tau, double t) {
    return evolve_milburn(rho0, diagonalize(h), tau, t);
}

inline density_matrix evolve(const density_matrix& rho0, const energy_decomposition& dec,
                             const propagator_kind& kind, double t) {
    validate_kind(kind);
    struct v {
        const density_matrix& rho0;
        const energy_decomposition& dec;
        double t;
        density_matrix operator()(unitary_kind) const { return evolve_unitary(rho0, dec, t); }
        density_matrix operator()(q_exponential_kind k) const {
            return evolve_qexp(rho0, dec, k.q, t);
        }
        density_matrix operator()(q_short_time_kind k) const {
            return evolve_qshort(rho0, dec, k.q, t);
        }
        density_matrix operator()(milburn_kind k) const {
            return evolve_milburn(rho0, dec, k.tau, t);
        }
    };
    return std::visit(v{rho0, dec, t}, kind);
}

inline density_matrix evolve(const density_matrix& rho0, const hermitian_operator& h,
                             const propagator_kind& kind, double t) {
    return evolve(rho0, diagonalize(h), kind, t);
}

// Trajectory over a time grid with per-point validity flags.
struct evolution_result {
    std::vector<double> times;          // seconds
    std::vector<density_matrix> states; // aligned with times
    propagator_kind kind;
    std::vector<bool> validity;         // |1-q| omega_max t <= 0.2
};

inline void require_increasing(const std::vector<double>& times) {
    if (times.empty())
        throw config_error("time grid is empty");
    if (!(times.front() >= 0.0))
        throw config_error("time grid must start at t >= 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw config_error("time grid must be strictly increasing");
}

inline evolution_result evolve_grid(const density_matrix& rho0, const hermitian_operator& h,
                                    const propagator_kind& kind,
                                    const std::vector<double>& times) {
    require_increasing(times);
    validate_kind(kind);
    const energy_decomposition dec = diagonalize(h);
    const double wmax = omega_max(dec);
    evolution_result res;
    res.times = times;
    res.kind = kind;
    res.states.reserve(times.size());
    res.validity.reserve(times.size());
    for (double t : times) {
        res.states.push_back(evolve(rho0, dec, kind, t));
        res.validity.push_back(validity_flag(kind, wmax, t));
    }
    return res;
}

// Modulus of the q-propagator factor for transition frequency omega:
// (1 + (q-1)^2 omega^2 t^2)^{-1/(2(q-1))}. Monotone decreasing in t for
// q > 1, omega != 0; q = 1 gives the unitary limit 1.
inline double coherence_envelope(double omega, double q, double t) {
    if (q < 1.0) throw config_error("coherence_envelope: q must be >= 1");
    if (!(t >= 0.0)) throw config_error("coherence_envelope: t must be nonnegative");
    if (q == 1.0) return 1.0;
    const double a = (q - 1.0) * omega * t;
    return std::pow(1.0 + a * a, -0.5 / (q - 1.0));
}

// Argument of the same factor: -arctan((q-1) omega t)/(q-1); tends to
// -omega t as q -> 1.
inline double coherence_phase(double omega, double q, double t) {
    if (q < 1.0) throw config_error("coherence_phase: q must be >= 1");
    if (!(t >= 0.0)) throw config_error("coherence_phase: t must be nonnegative");
    if (q == 1.0) return -omega * t;
    return -std::atan((q - 1.0) * omega * t) / (q - 1.0);
}

// Time at which |1-q| * omega_char * t reaches the given threshold.
inline double validity_horizon(double q, double omega_char, double threshold) {
    if (q == 1.0)
        throw divergent_horizon_error("validity_horizon: infinite at q = 1");
    if (!(omega_char > 0.0))
        throw config_error("validity_horizon: omega_char must be positive");
    if (threshold < 0.0)
        throw config_error("validity_horizon: threshold must be nonnegative");
    return threshold / (std::abs(1.0 - q) * omega_char);
}

} // namespace qdec
