#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "qdec/analysis.hpp"
#include "qdec/errors.hpp"
#include "qdec/propagators.hpp"
#include "qdec/time_series.hpp"
#include "qdec/trapped_ion.hpp"

namespace qdec {

enum class model_kind { empirical, qmodel, unitary, qexp, qshort, milburn };

inline std::string model_name(model_kind m) {
    switch (m) {
        case model_kind::empirical: return "empirical";
        case model_kind::qmodel: return "qmodel";
        case model_kind::unitary: return "unitary";
        case model_kind::qexp: return "qexp";
        case model_kind::qshort: return "qshort";
        case model_kind::milburn: return "milburn";
    }
    return "?";
}

inline model_kind parse_model(const std::string& name) {
    if (name == "empirical") return model_kind::empirical;
    if (name == "qmodel") return model_kind::qmodel;
    if (name == "unitary") return model_kind::unitary;
    if (name == "qexp") return model_kind::qexp;
    if (name == "qshort") return model_kind::qshort;
    if (name == "milburn") return model_kind::milburn;
    throw config_error("unknown model '" + name +
                       "' (expected empirical|qmodel|unitary|qexp|qshort|milburn)");
}

// "fock:N" or "coherent:NBAR".
inline vibrational_state parse_vibrational_state(const std::string& text) {
    const auto sep = text.find(':');
    const std::string tag = text.substr(0, sep);
    const std::string arg = sep == std::string::npos ? "" : text.substr(sep + 1);
    try {
        if (tag == "fock") {
            const long n = arg.empty() ? 0 : std::stol(arg);
            if (n < 0) throw config_error("init: fock level must be nonnegative");
            return fock_state{static_cast<std::size_t>(n)};
        }
        if (tag == "coherent") {
            const double nbar = arg.empty() ? 0.0 : std::stod(arg);
            if (nbar < 0.0) throw config_error("init: nbar must be nonnegative");
            return coherent_state{nbar};
        }
    } catch (const std::logic_error&) {
        throw config_error("init: bad numeric argument in '" + text + "'");
    }
    throw config_error("unknown initial state '" + text + "' (expected fock:N or coherent:NBAR)");
}

inline file_format parse_file_format(const std::string& name) {
    if (name == "csv") return file_format::csv;
    if (name == "json") return file_format::json;
    throw config_error("unknown format '" + name + "' (expected csv|json)");
}

// All quantities in SI here; kHz and microsecond conversion belongs to the
// option parser.
struct run_config {
    model_kind model = model_kind::qmodel;
    ion_config ion;
    vibrational_state init = fock_state{0};
    double q = 1.001;
    empirical_decay decay;
    double tau_s = 0.0;
    double t_max_s = 0.0;  // 0 means: derive from the validity horizon
    std::size_t steps = 2000;
};

inline bool model_uses_q(model_kind m) {
    return m == model_kind::qmodel || m == model_kind::qexp || m == model_kind::qshort;
}

// Advisory boundary used for flags and warnings.
inline constexpr double flag_threshold = 0.2;
// Tighter default for choosing t_max, matching the worked |1-q| Omega t value.
inline constexpr double default_tmax_threshold = 0.17;

inline double resolve_t_max(const run_config& cfg, bool q_relevant) {
    if (cfg.t_max_s > 0.0) return cfg.t_max_s;
    if (cfg.t_max_s < 0.0) throw config_error("t_max must be positive");
    if (!q_relevant || cfg.q == 1.0)
        throw config_error("t_max is required when no finite validity horizon exists");
    return validity_horizon(cfg.q, carrier_omega(cfg.ion), default_tmax_threshold);
}

inline std::vector<double> time_grid(double t_max, std::size_t steps) {
    if (steps < 2) throw config_error("steps must be at least 2");
    if (!(t_max > 0.0)) throw config_error("t_max must be positive");
    std::vector<double> t(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        t[i] = t_max * (static_cast<double>(i) / static_cast<double>(steps));
    return t;
}

struct run_output {
    time_series series;
    double horizon_s = std::numeric_limits<double>::infinity();
    std::vector<double> beyond_horizon;  // grid times past the horizon
};

namespace detail {

template <typename F>
std::vector<double> map_grid(const std::vector<double>& times, F f) {
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(f(t));
    return out;
}

inline void add_horizon_meta(run_output& out, const run_config& cfg, bool q_relevant) {
    time_series& s = out.series;
    if (q_relevant && cfg.q > 1.0) {
        out.horizon_s = validity_horizon(cfg.q, carrier_omega(cfg.ion), flag_threshold);
        for (double t : s.times)
            if (t > out.horizon_s) out.beyond_horizon.push_back(t);
        s.add_meta("validity_horizon_s", format_double(out.horizon_s));
        s.add_meta("points_beyond_horizon", std::to_string(out.beyond_horizon.size()));
    } else {
        s.add_meta("validity_horizon_s", "inf");
    }
}

inline void add_ion_meta(time_series& s, const run_config& cfg) {
    s.add_meta("init", describe(cfg.init));
    s.add_meta("omega_over_2pi_hz", format_double(cfg.ion.omega_over_2pi_hz));
    s.add_meta("eta", format_double(cfg.ion.eta));
    s.add_meta("dim", std::to_string(cfg.ion.dim));
}

inline void add_grid_meta(time_series& s, double t_max, std::size_t steps) {
    s.add_meta("t_max_s", format_double(t_max));
    s.add_meta("steps", std::to_string(steps));
}

} // namespace detail

// figure1: both closed-form curves (phenomenological exponential damping and
// the q-model's Gaussian damping) on one grid. Panel a starts from the
// vibrational vacuum, panel b from a coherent state with nbar = 3.
inline run_output cmd_figure1(char panel, run_config cfg) {
    if (panel == 'a')
        cfg.init = fock_state{0};
    else if (panel == 'b')
        cfg.init = coherent_state{3.0};
    else
        throw config_error("panel must be 'a' or 'b'");
    validate(cfg.ion);
    validate(cfg.decay);
    if (!(cfg.q >= 1.0)) throw config_error("q must be >= 1");

    const double t_max = resolve_t_max(cfg, true);
    const std::vector<double> dist = initial_distribution(cfg.init, cfg.ion.dim);

    run_output out;
    time_series& s = out.series;
    s.times = time_grid(t_max, cfg.steps);
    s.channels.emplace_back("pg_empirical", detail::map_grid(s.times, [&](double t) {
                                return pg_empirical(dist, cfg.ion, cfg.decay, t);
                            }));
    s.channels.emplace_back("pg_qmodel", detail::map_grid(s.times, [&](double t) {
                                return pg_qmodel(dist, cfg.ion, cfg.q, t);
                            }));

    s.add_meta("command", "figure1");
    s.add_meta("panel", std::string(1, panel));
    detail::add_ion_meta(s, cfg);
    s.add_meta("q", format_double(cfg.q));
    s.add_meta("gamma0_per_s", format_double(cfg.decay.gamma0_per_s));
    s.add_meta("exponent", format_double(cfg.decay.exponent));
    detail::add_grid_meta(s, t_max, cfg.steps);
    detail::add_horizon_meta(out, cfg, true);
    return out;
}

// evolve: one model over the grid, channel "pg".
inline run_output cmd_evolve(const run_config& cfg) {
    validate(cfg.ion);
    const bool q_relevant = model_uses_q(cfg.model);
    if (q_relevant && !(cfg.q >= 1.0)) throw config_error("q must be >= 1");
    if (cfg.model == model_kind::empirical) validate(cfg.decay);
    if (cfg.model == model_kind::milburn && cfg.tau_s < 0.0)
        throw config_error("tau must be nonnegative");

    const double t_max = resolve_t_max(cfg, q_relevant);
    const std::vector<double> times = time_grid(t_max, cfg.steps);
    const std::vector<double> dist = initial_distribution(cfg.init, cfg.ion.dim);

    run_output out;
    time_series& s = out.series;
    s.times = times;
    switch (cfg.model) {
        case model_kind::empirical:
            s.channels.emplace_back("pg", detail::map_grid(times, [&](double t) {
                                        return pg_empirical(dist, cfg.ion, cfg.decay, t);
                                    }));
            break;
        case model_kind::qmodel:
            s.channels.emplace_back("pg", detail::map_grid(times, [&](double t) {
                                        return pg_qmodel(dist, cfg.ion, cfg.q, t);
                                    }));
            break;
        case model_kind::unitary:
            s.channels = pg_from_propagator(cfg.init, cfg.ion, unitary_kind{}, times).channels;
            break;
        case model_kind::qexp:
            s.channels =
                pg_from_propagator(cfg.init, cfg.ion, q_exponential_kind{cfg.q}, times).channels;
            break;
        case model_kind::qshort:
            s.channels =
                pg_from_propagator(cfg.init, cfg.ion, q_short_time_kind{cfg.q}, times).channels;
            break;
        case model_kind::milburn:
            s.channels =
                pg_from_propagator(cfg.init, cfg.ion, milburn_kind{cfg.tau_s}, times).channels;
            break;
    }

    s.add_meta("command", "evolve");
    s.add_meta("model", model_name(cfg.model));
    detail::add_ion_meta(s, cfg);
    if (q_relevant) s.add_meta("q", format_double(cfg.q));
    if (cfg.model == model_kind::empirical) {
        s.add_meta("gamma0_per_s", format_double(cfg.decay.gamma0_per_s));
        s.add_meta("exponent", format_double(cfg.decay.exponent));
    }
    if (cfg.model == model_kind::milburn) s.add_meta("tau_s", format_double(cfg.tau_s));
    detail::add_grid_meta(s, t_max, cfg.steps);
    detail::add_horizon_meta(out, cfg, q_relevant);
    return out;
}

struct compare_options {
    std::string channel = "pg";
    std::string channel_b;          // empty: same as channel
    bool fit = false;
    double mode_omega_rad_s = 0.0;  // cosine angular frequency for the fit
};

struct compare_report {
    std::string channel_a, channel_b;
    std::size_t points = 0;
    compare_result diff;
    bool fitted = false;
    fit_decay_result fit_a, fit_b;
};

inline compare_report cmd_compare(const time_series& a, const time_series& b,
                                  const compare_options& opt) {
    compare_report rep;
    rep.channel_a = opt.channel;
    rep.channel_b = opt.channel_b.empty() ? opt.channel : opt.channel_b;
    rep.diff = compare_series(a, b, rep.channel_a, rep.channel_b);
    rep.points = a.times.size();
    if (opt.fit) {
        rep.fitted = true;
        rep.fit_a = fit_decay(a.times, *a.channel(rep.channel_a), opt.mode_omega_rad_s);
        rep.fit_b = fit_decay(b.times, *b.channel(rep.channel_b), opt.mode_omega_rad_s);
    }
    return rep;
}

inline compare_report cmd_compare(const std::string& path_a, const std::string& path_b,
                                  const compare_options& opt) {
    // Read in argument order so a missing first file is the one reported.
    const time_series a = read_series_file(path_a);
    const time_series b = read_series_file(path_b);
    return cmd_compare(a, b, opt);
}

inline void print_report(std::ostream& os, const compare_report& rep, bool color) {
    const char* em = color ? "\033[1m" : "";
    const char* off = color ? "\033[0m" : "";
    os << "channel_a: " << rep.channel_a << "\n";
    os << "channel_b: " << rep.channel_b << "\n";
    os << "points: " << rep.points << "\n";
    os << "rms_difference: " << em << format_double(rep.diff.rms) << off << "\n";
    os << "max_abs_difference: " << em << format_double(rep.diff.max_abs) << off << "\n";
    os << "t_at_max_s: " << format_double(rep.diff.t_at_max) << "\n";
    if (!rep.fitted) return;
    os << "points_used_a: " << rep.fit_a.points_used << "\n";
    os << "exponential_rate_a_per_s: " << format_double(rep.fit_a.exponential_rate) << "\n";
    os << "gaussian_rate_a_per_s2: " << format_double(rep.fit_a.gaussian_rate) << "\n";
    os << "r2_exponential_a: " << format_double(rep.fit_a.r2_exponential) << "\n";
    os << "r2_gaussian_a: " << format_double(rep.fit_a.r2_gaussian) << "\n";
    os << "points_used_b: " << rep.fit_b.points_used << "\n";
    os << "exponential_rate_b_per_s: " << format_double(rep.fit_b.exponential_rate) << "\n";
    os << "gaussian_rate_b_per_s2: " << format_double(rep.fit_b.gaussian_rate) << "\n";
    os << "r2_exponential_b: " << format_double(rep.fit_b.r2_exponential) << "\n";
    os << "r2_gaussian_b: " << format_double(rep.fit_b.r2_gaussian) << "\n";
    os << "exponential_rate_ratio: " << em
       << format_double(rep.fit_a.exponential_rate / rep.fit_b.exponential_rate) << off << "\n";
    os << "gaussian_rate_ratio: " << em
       << format_double(rep.fit_a.gaussian_rate / rep.fit_b.gaussian_rate) << off << "\n";
}

} // namespace qdec
