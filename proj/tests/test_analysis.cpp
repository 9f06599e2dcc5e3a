#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <qdec/qdec.hpp>

using qdec::time_series;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

time_series make_series(std::vector<double> times, std::vector<double> pg) {
    time_series s;
    s.times = std::move(times);
    s.channels.emplace_back("pg", std::move(pg));
    return s;
}

// Single-mode damped Rabi signal sampled at the oscillation extrema
// t_k = k pi / omega, where the cosine is exactly +-1.
struct rabi_samples {
    std::vector<double> times;
    std::vector<double> values;
};

rabi_samples extrema_signal(double omega, int points, bool gaussian, double rate) {
    rabi_samples s;
    for (int k = 0; k <= points; ++k) {
        const double t = k * M_PI / omega;
        const double env = gaussian ? std::exp(-rate * t * t) : std::exp(-rate * t);
        s.times.push_back(t);
        s.values.push_back(0.5 * (1.0 + std::cos(omega * t) * env));
    }
    return s;
}

} // namespace

TEST_CASE("comparing a series with itself gives zero", "[analysis]") {
    const auto s = make_series({0.0, 1.0, 2.0}, {0.5, 0.6, 0.7});
    const auto r = qdec::compare_series(s, s, "pg", "pg");
    CHECK(r.rms == 0.0);
    CHECK(r.max_abs == 0.0);
    CHECK(r.t_at_max == 0.0);
}

TEST_CASE("constant offset is reported exactly", "[analysis]") {
    // Dyadic values make every difference exactly 0.125.
    const auto a = make_series({0.0, 1.0, 2.0}, {0.5, 0.25, 0.75});
    const auto b = make_series({0.0, 1.0, 2.0}, {0.625, 0.375, 0.875});
    const auto r = qdec::compare_series(a, b, "pg", "pg");
    CHECK(r.rms == 0.125);
    CHECK(r.max_abs == 0.125);
    CHECK(r.t_at_max == 0.0); // ties resolve to the first occurrence
}

TEST_CASE("largest difference and its first location", "[analysis]") {
    const auto a = make_series({0.0, 1.0, 2.0, 3.0}, {0.0, 0.0, 0.0, 0.0});
    const auto b = make_series({0.0, 1.0, 2.0, 3.0}, {0.1, 0.4, 0.2, 0.4});
    const auto r = qdec::compare_series(a, b, "pg", "pg");
    CHECK_THAT(r.max_abs, WithinRel(0.4, 1e-14));
    CHECK(r.t_at_max == 1.0);
    CHECK_THAT(r.rms, WithinRel(std::sqrt((0.01 + 0.16 + 0.04 + 0.16) / 4.0), 1e-14));
}

TEST_CASE("grid mismatches are rejected", "[analysis]") {
    const auto a = make_series({0.0, 1.0, 2.0}, {0.5, 0.6, 0.7});
    const auto shorter = make_series({0.0, 1.0}, {0.5, 0.6});
    CHECK_THROWS_AS(qdec::compare_series(a, shorter, "pg", "pg"),
                    qdec::grid_mismatch_error);
    const auto offset = make_series({0.0, 1.0 + 2e-12, 2.0}, {0.5, 0.6, 0.7});
    CHECK_THROWS_AS(qdec::compare_series(a, offset, "pg", "pg"),
                    qdec::grid_mismatch_error);
    CHECK_THROWS_AS(qdec::compare_series(a, a, "pg", "nope"), qdec::config_error);
    CHECK_THROWS_AS(qdec::compare_series(a, a, "nope", "pg"), qdec::config_error);
}

TEST_CASE("gaussian decay is identified on an extrema grid", "[analysis]") {
    const double omega = 2.0 * M_PI, rate = 0.11;
    const auto s = extrema_signal(omega, 20, true, rate);
    const auto fit = qdec::fit_decay(s.times, s.values, omega);
    CHECK(fit.points_used == 21);
    CHECK_THAT(fit.gaussian_rate, WithinRel(rate, 1e-10));
    CHECK(fit.r2_gaussian >= 0.999999);
    CHECK(fit.r2_exponential < 0.99);
    CHECK(fit.r2_exponential > 0.8); // t and t^2 are strongly correlated on this grid
}

TEST_CASE("exponential decay is identified on an extrema grid", "[analysis]") {
    const double omega = 2.0 * M_PI, rate = 0.35;
    const auto s = extrema_signal(omega, 20, false, rate);
    const auto fit = qdec::fit_decay(s.times, s.values, omega);
    CHECK(fit.points_used == 21);
    CHECK_THAT(fit.exponential_rate, WithinRel(rate, 1e-10));
    CHECK(fit.r2_exponential >= 0.999999);
    CHECK(fit.r2_gaussian < 0.99);
}

TEST_CASE("samples near cosine zeros are discarded", "[analysis]") {
    const double omega = 2.0 * M_PI;
    std::vector<double> times, values;
    for (int k = 0; k <= 40; ++k) {
        const double t = k * 0.25; // alternates extrema and zeros of cos(2 pi t)
        times.push_back(t);
        values.push_back(0.5 * (1.0 + std::cos(omega * t) * std::exp(-0.2 * t)));
    }
    const auto fit = qdec::fit_decay(times, values, omega);
    CHECK(fit.points_used == 21); // the 20 zero-crossing samples drop out
    CHECK_THAT(fit.exponential_rate, WithinRel(0.2, 1e-9));
}

TEST_CASE("fit tolerates an off-extrema grid", "[analysis]") {
    // Keep the envelope well above the 2(y - 1/2) recovery noise floor so the
    // log-residuals stay at roundoff level.
    const double omega = 2.0 * M_PI, rate = 0.3;
    std::vector<double> times, values;
    const int steps = 2000;
    for (int i = 0; i <= steps; ++i) {
        const double t = 4.0 * double(i) / steps;
        times.push_back(t);
        values.push_back(0.5 * (1.0 + std::cos(omega * t) * std::exp(-rate * t * t)));
    }
    const auto fit = qdec::fit_decay(times, values, omega);
    CHECK(fit.points_used > 1000);
    CHECK_THAT(fit.gaussian_rate, WithinRel(rate, 1e-9));
    CHECK(fit.r2_gaussian > 0.999999999);
}

TEST_CASE("fit input validation", "[analysis]") {
    const double omega = 2.0 * M_PI;
    const auto s = extrema_signal(omega, 20, true, 0.1);
    CHECK_THROWS_AS(qdec::fit_decay(s.times, s.values, 0.0), qdec::config_error);
    CHECK_THROWS_AS(qdec::fit_decay(s.times, s.values, -1.0), qdec::config_error);
    CHECK_THROWS_AS(qdec::fit_decay({0.0, 1.0}, {1.0}, omega), qdec::invariant_error);
    // Only two usable samples: everything else sits on cosine zeros.
    const std::vector<double> t2 = {0.0, 0.25, 0.5, 0.75};
    const std::vector<double> v2 = {1.0, 0.5, 0.1, 0.5};
    CHECK_THROWS_AS(qdec::fit_decay(t2, v2, omega), qdec::invariant_error);
}
