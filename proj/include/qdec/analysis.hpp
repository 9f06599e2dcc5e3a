#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qdec/errors.hpp"
#include "qdec/time_series.hpp"

namespace qdec {

struct compare_result {
    double rms = 0.0;
    double max_abs = 0.0;
    double t_at_max = 0.0;  // first time of the maximum difference
};

inline compare_result compare_channels(const std::vector<double>& times_a,
                                       const std::vector<double>& values_a,
                                       const std::vector<double>& times_b,
                                       const std::vector<double>& values_b) {
    if (times_a.size() != times_b.size())
        throw grid_mismatch_error("compare: time grids have different lengths");
    for (std::size_t i = 0; i < times_a.size(); ++i)
        if (std::abs(times_a[i] - times_b[i]) > 1e-12)
            throw grid_mismatch_error("compare: time grids differ beyond 1e-12");

    compare_result r;
    double ss = 0.0;
    for (std::size_t i = 0; i < times_a.size(); ++i) {
        const double d = std::abs(values_a[i] - values_b[i]);
        ss += d * d;
        if (d > r.max_abs) {
            r.max_abs = d;
            r.t_at_max = times_a[i];
        }
    }
    r.rms = std::sqrt(ss / static_cast<double>(times_a.size()));
    return r;
}

inline compare_result compare_series(const time_series& a, const time_series& b,
                                     const std::string& channel_a,
                                     const std::string& channel_b) {
    const auto* va = a.channel(channel_a);
    if (!va) throw config_error("compare: first series has no channel '" + channel_a + "'");
    const auto* vb = b.channel(channel_b);
    if (!vb) throw config_error("compare: second series has no channel '" + channel_b + "'");
    return compare_channels(a.times, *va, b.times, *vb);
}

// Envelope decay regression for a single-mode Rabi signal
// y(t) = 1/2 [1 + A cos(omega_mode t) env(t)]. Envelope samples
// env_k = 2 (y_k - 1/2) / cos(omega_mode t_k) are taken where the cosine is
// safely away from its zeros, then ln env is fitted against t (exponential
// law) and against t^2 (Gaussian law). A constant amplitude A is absorbed by
// the intercept. R^2 near 1 identifies the decay law.
struct fit_decay_result {
    double exponential_rate = 0.0;  // per s: env ~ e^{-rate t}
    double gaussian_rate = 0.0;     // per s^2: env ~ e^{-rate t^2}
    double r2_exponential = 0.0;
    double r2_gaussian = 0.0;
    std::size_t points_used = 0;
};

namespace detail {

// Least squares y = a + b x; returns {b, R^2}.
inline std::pair<double, double> linear_fit(const std::vector<double>& x,
                                            const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw invariant_error("fit_decay: degenerate regressor (all abscissae equal)");
    const double b = sxy / sxx;
    double r2 = 1.0;
    if (syy > 0.0) {
        double ssres = 0.0;
        const double a = my - b * mx;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double res = y[i] - (a + b * x[i]);
            ssres += res * res;
        }
        r2 = 1.0 - ssres / syy;
    }
    return {b, r2};
}

} // namespace detail

inline fit_decay_result fit_decay(const std::vector<double>& times,
                                  const std::vector<double>& values, double omega_mode,
                                  double cos_floor = 0.3) {
    if (times.size() != values.size())
        throw invariant_error("fit_decay: times/values length mismatch");
    if (!(omega_mode > 0.0))
        throw config_error("fit_decay: omega_mode must be positive");

    std::vector<double> t, t2, logenv;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double c = std::cos(omega_mode * times[i]);
        if (std::abs(c) < cos_floor) continue;
        const double env = 2.0 * (values[i] - 0.5) / c;
        if (!(env > 0.0)) continue;
        t.push_back(times[i]);
        t2.push_back(times[i] * times[i]);
        logenv.push_back(std::log(env));
    }
    if (t.size() < 3)
        throw invariant_error("fit_decay: fewer than 3 usable envelope samples");

    fit_decay_result r;
    const auto [b_exp, r2_exp] = detail::linear_fit(t, logenv);
    const auto [b_gau, r2_gau] = detail::linear_fit(t2, logenv);
    r.exponential_rate = -b_exp;
    r.gaussian_rate = -b_gau;
    r.r2_exponential = r2_exp;
    r.r2_gaussian = r2_gau;
    r.points_used = t.size();
    return r;
}

} // namespace qdec
