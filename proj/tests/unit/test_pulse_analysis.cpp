#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"

using namespace pulsetrain;
using fixtures::rel_err;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;

TimeSeries synthetic(double depth, double omega_prime, double phase, int per_period, int periods) {
    const double dt = 2.0 * pi / omega_prime / per_period;
    std::vector<double> gains(per_period * periods + 1);
    for (std::size_t i = 0; i < gains.size(); ++i) {
        gains[i] = std::exp(2.0 * depth * std::cos(omega_prime * i * dt + phase));
    }
    return TimeSeries(0.0, 0.0, dt, std::move(gains));
}

}  // namespace

TEST_CASE("closed-form FWHM") {
    const double op = 200997512422.4178054;
    CHECK(rel_err(fwhm_closed_form(ln2, op), 2.0 * pi / (3.0 * op)) < 1e-14);
    // mpmath: (2/Omega') arccos(1 - ln2/(2 * 69.4))
    CHECK(rel_err(fwhm_closed_form(69.4, op), 9.94839928842222157e-13) < 1e-12);
    double previous = INFINITY;
    for (double r = 1.0; r < 1e6; r *= 2.0) {
        const double w = fwhm_closed_form(r, op);
        CHECK(w < previous);
        previous = w;
    }
    CHECK(rel_err(fwhm_closed_form(1e6, op), 2.0 / op * std::sqrt(ln2 / 1e6)) < 1e-6);
    CHECK_THROWS_AS(fwhm_closed_form(0.25 * ln2, op), ShallowModulation);
    CHECK_THROWS_AS(fwhm_closed_form(0.1, op), ShallowModulation);
}

TEST_CASE("analyze_train on synthetic sinusoidal exponents") {
    const double op = 2.009975e11;
    SUBCASE("R = ln 2 gives FWHM of a third of a period") {
        const auto stats = analyze_train(synthetic(ln2, op, 0.3, 512, 4), op);
        CHECK(rel_err(stats.period, 2.0 * pi / op) < 1e-6);
        CHECK(rel_err(stats.fwhm, 2.0 * pi / (3.0 * op)) < 1e-3);
        CHECK(rel_err(stats.depth, ln2) < 1e-6);
        CHECK(rel_err(stats.peak_gain * stats.min_gain, 1.0) < 1e-6);
    }
    SUBCASE("deep modulation") {
        for (double phase : {0.0, 0.1, 1.234, 2.9}) {
            const auto stats = analyze_train(synthetic(69.4, op, phase, 512, 3), op);
            CHECK(rel_err(stats.period, 2.0 * pi / op) < 1e-6);
            CHECK(rel_err(stats.fwhm, fwhm_closed_form(69.4, op)) < 0.01);
            CHECK(rel_err(stats.peak_gain * stats.min_gain, 1.0) < 1e-6);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(analyze_train(synthetic(0.1, op, 0.0, 128, 3), op), ShallowModulation);
        CHECK_THROWS_AS(analyze_train(synthetic(2.0, op, 0.0, 32, 8), op), UnderSampled);
        CHECK_THROWS_AS(analyze_train(synthetic(2.0, op, 0.0, 128, 1), op), UnderSampled);
        std::vector<double> flat(10000, 1.0);
        CHECK_THROWS_AS(analyze_train(TimeSeries(0.0, 0.0, 1e-14, flat), op), ShallowModulation);
        CHECK_THROWS_AS(TimeSeries(0.0, 0.0, 1e-14, {1.0, 0.0}), InvalidArgument);
        CHECK_THROWS_AS(TimeSeries(0.0, 0.0, 0.0, {1.0}), InvalidArgument);
        CHECK_THROWS_AS(TimeSeries(0.0, 0.0, 1e-14, {}), InvalidArgument);
    }
}

TEST_CASE("closed loop with the modulation module") {
    const auto model = fixtures::model(fixtures::train_density);
    const double op = model.omega_prime();
    const double z = pi * cgs.c / op;
    const double period = model.temporal_period();
    // mpmath: 2 pi / Omega'
    CHECK(rel_err(period, 3.126001526812331603e-11) < 1e-14);

    for (int per_period : {512, 1024}) {
        const auto series = sample_gain_series(model, z, z / cgs.c, period / per_period, 4 * per_period + 1);
        const auto stats = analyze_train(series, op);
        CHECK(rel_err(stats.period, period) < 1e-6);
        CHECK(rel_err(stats.depth, model.depth(z)) < 1e-6);
        CHECK(rel_err(stats.fwhm, fwhm_closed_form(model.depth(z), op)) < 0.01);
        CHECK(rel_err(stats.peak_gain * stats.min_gain, 1.0) < 1e-6);
        CHECK(rel_err(stats.fwhm, 9.948090337235639e-13) < 0.01);
    }

    SUBCASE("off-grid start and incommensurate sampling") {
        const auto series = sample_gain_series(model, z, z / cgs.c + 0.37 * period, period / 700.3, 3000);
        const auto stats = analyze_train(series, op);
        CHECK(rel_err(stats.period, period) < 1e-6);
        CHECK(rel_err(stats.peak_gain * stats.min_gain, 1.0) < 1e-6);
    }
}

TEST_CASE("spectrum") {
    const auto model = fixtures::model(fixtures::train_density);
    const double op = model.omega_prime();
    const double period = model.temporal_period();
    const double z = pi * cgs.c / op;

    SUBCASE("unmodulated carrier") {
        const auto flat = sample_envelope_series(model, 0.0, 0.0, period / 256, 512);
        const auto lines = spectrum(flat, op);
        double total = 0.0;
        for (const auto& l : lines) {
            total += l.power;
            if (l.order != 0) CHECK(l.power < 1e-28);
        }
        CHECK(rel_err(total, 1.0) < 1e-12);
    }
    SUBCASE("deep modulation spreads over many sidebands") {
        const std::size_t n = 2048;
        const auto series = sample_envelope_series(model, z, z / cgs.c, period / 1024, n);
        const auto lines = spectrum(series, op);

        double mean_power = 0.0;
        for (const auto& v : series.values()) mean_power += std::norm(v);
        mean_power /= static_cast<double>(n);
        double total = 0.0;
        int above = 0;
        const SidebandLine* strongest = &lines.front();
        for (const auto& l : lines) {
            total += l.power;
            if (l.relative_power > 1e-6) {
                ++above;
                CHECK(std::abs(l.centroid - l.order * op) <= 2.0 * pi / (n * series.dt()));
            }
            if (l.power > strongest->power) strongest = &l;
        }
        CHECK(rel_err(total, mean_power) < 1e-9);
        CHECK(above >= 50);
        CHECK(above == 56);  // independent numpy FFT of the same envelope
        // G is dominated by the e^{-i Omega' t} harmonic of size ~ R, so power
        // piles up on the blue side near m ~ R.
        CHECK(strongest->order > 50);
        CHECK(strongest->order < 90);
    }
    SUBCASE("non-commensurate window") {
        const auto series = sample_envelope_series(model, z, z / cgs.c, period / 256, 300);
        CHECK_THROWS_AS(spectrum(series, op), NonCommensurate);
    }
    SUBCASE("Parseval on an arbitrary signal") {
        std::vector<complex> values(777);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] = {std::sin(0.1 * i * i), std::cos(0.37 * i) + 0.2};
        const double dt = period / 777.0;
        const auto lines = spectrum(ComplexSeries(0.0, dt, values), op);
        double mean_power = 0.0;
        for (const auto& v : values) mean_power += std::norm(v);
        mean_power /= 777.0;
        double total = 0.0;
        for (const auto& l : lines) total += l.power;
        CHECK(rel_err(total, mean_power) < 1e-9);
    }
}
