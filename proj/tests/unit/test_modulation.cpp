#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace pulsetrain;
using fixtures::rel_err;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("sideband brackets") {
    SUBCASE("exact fractions at zero detuning") {
        const auto ens = fixtures::ensemble();
        const double rabi = 1e10;
        const PumpField pump(ens, 0.0, rabi);
        const auto b = sideband_brackets(pump, pump.omega_p() - 2.0 * rabi, pump.omega_prime());
        CHECK(b.b1 == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
        CHECK(b.b2 == doctest::Approx(1.5).epsilon(1e-14));
    }
    SUBCASE("documented parameters") {
        const auto pump = fixtures::pump();
        const auto b = sideband_brackets(pump, fixtures::probe().omega(), pump.omega_prime());
        CHECK(rel_err(b.b1, 2.474137621735655981) < 1e-13);
        CHECK(rel_err(b.b2, 200.4937435233100693) < 1e-13);
    }
    SUBCASE("poles") {
        const auto pump = fixtures::pump();
        const double op = pump.omega_prime();
        const auto expect_pole = [&](double offset, Pole which) {
            try {
                sideband_brackets(pump, pump.omega_p() - offset, op);
                FAIL("expected ResonancePole");
            } catch (const ResonancePole& e) {
                CHECK(e.pole() == which);
            }
        };
        expect_pole(op, Pole::upper_rabi);
        expect_pole(-op, Pole::lower_rabi);
        expect_pole(0.0, Pole::rayleigh);
        expect_pole(9e5, Pole::rayleigh);
        CHECK_NOTHROW(sideband_brackets(pump, pump.omega_p() - 9e5, op, 1e5));
    }
}

TEST_CASE("exponent at the sweep-figure point") {
    const auto model = fixtures::model();
    const double op = model.omega_prime();
    const double z = pi * cgs.c / op;
    const auto g = model.exponent(z, pi / op);
    // mpmath: K = 5.8709635386875, Re G = 2 alpha beta K (b2 - b1)
    CHECK(rel_err(g.k_scale, 5.870963538687499082) < 1e-13);
    CHECK(rel_err(g.g.real(), 231.3476903142337425) < 1e-12);

    const auto sample = model.field_sample(z, pi / op);
    CHECK(rel_err(sample.intensity_gain, std::exp(2.0 * 231.3476903142337425)) < 1e-10);
}

TEST_CASE("exponent matches the long-double reference on a grid") {
    const auto model = fixtures::model();
    const auto ref = fixtures::reference_params();
    const double op = model.omega_prime();
    for (int iz = 0; iz < 16; ++iz) {
        for (int it = 0; it < 16; ++it) {
            const double z = iz * 0.37 * cgs.c / op;
            const double t = z / cgs.c + it * 0.41 / op;
            const auto got = model.exponent(z, t).g;
            const auto want = reference::exponent(ref, z, t);
            const double err = std::abs(got - std::complex<double>(want));
            CHECK(err <= 1e-11 * (1.0 + std::abs(got)));
        }
    }
}

TEST_CASE("boundary and trivial states") {
    const auto model = fixtures::model();
    const double op = model.omega_prime();
    for (int k = 0; k < 1024; ++k) {
        const double t = k * 0.05 / op;
        const auto g = model.exponent(0.0, t);
        CHECK(g.g == complex(0.0, 0.0));
        CHECK(g.depth == 0.0);
        const auto s = model.field_sample(0.0, t);
        CHECK(s.amplitude == complex(1.0, 0.0));
        CHECK(s.intensity_gain == 1.0);
    }

    const auto ground = fixtures::model(fixtures::sweep_density, fixtures::offset, SuperpositionState(1.0, 0.0));
    const auto upper = fixtures::model(fixtures::sweep_density, fixtures::offset, SuperpositionState(0.0, 1.0));
    for (double z : {0.1, 1.0, 7.3}) {
        const double t = z / cgs.c + 3.1 / op;
        CHECK(std::abs(ground.exponent(z, t).g) == 0.0);
        const auto s = upper.field_sample(z, t);
        CHECK(s.intensity_gain == 1.0);
        const double advance = upper.probe().omega() * upper.dispersion().excess() * z / cgs.c;
        CHECK(rel_err(s.phase, advance) < 1e-14);
        CHECK(upper.dispersion().excess() < 0.0);  // |beta|^2 = 1 inverts the population term
    }
}

TEST_CASE("periodicity, antiperiodicity and zero mean") {
    const auto model = fixtures::model();
    const double op = model.omega_prime();
    const double period = model.temporal_period();
    const double length = model.spatial_period();
    for (int iz = 0; iz < 64; ++iz) {
        const double z = (iz + 0.5) * length / 64.0 * 1.7;
        double mean = 0.0;
        constexpr int samples = 256;
        for (int it = 0; it < samples; ++it) {
            const double t = it * period / samples;
            const complex g = model.exponent(z, t).g;
            const complex half = model.exponent(z, t + pi / op).g;
            CHECK(std::abs(half + g) < 1e-9 * (1.0 + std::abs(g)));
            const complex full = model.exponent(z, t + period).g;
            CHECK(std::abs(full - g) < 1e-9 * (1.0 + std::abs(g)));
            mean += g.real();
        }
        CHECK(std::abs(mean / samples) < 1e-9);
        CHECK(std::abs(model.depth(z + length) - model.depth(z)) < 1e-9 * (1.0 + model.depth(z)));
    }
}

TEST_CASE("real part is a sinusoid of amplitude R") {
    const auto model = fixtures::model(fixtures::train_density);
    const double op = model.omega_prime();
    for (double z : {0.05, 0.3, 0.5 * model.spatial_period(), 0.81}) {
        const auto h = model.harmonics(z);
        const complex sum = h.red + std::conj(h.blue);
        for (int k = 0; k < 32; ++k) {
            const double t = k * 0.3 / op;
            const double direct = model.exponent(z, t).g.real();
            const double sinus = std::abs(sum) * std::cos(op * t + std::arg(sum));
            CHECK(std::abs(direct - sinus) < 1e-10 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("depth at the pulse-train figure point") {
    const auto model = fixtures::model(fixtures::train_density);
    const double z = pi * cgs.c / model.omega_prime();
    CHECK(rel_err(model.depth(z), 69.40430709427012274) < 1e-12);
    const double alpha = std::sqrt(0.99);
    const double closed = model.k_scale() * alpha * 0.1 * 2.0 * std::abs(model.brackets().b1 - model.brackets().b2);
    CHECK(rel_err(model.depth(z), closed) < 1e-13);
    CHECK(modulation_depth(fixtures::ensemble(fixtures::train_density), fixtures::pump(), fixtures::state(),
                           fixtures::probe(), 0.0) == 0.0);
}

TEST_CASE("Jensen bound and geometric-mean unity") {
    const auto model = fixtures::model(fixtures::train_density);
    const double op = model.omega_prime();
    for (double z : {0.01, 0.2, 0.46857584, 0.9}) {
        const double r = model.depth(z);
        double mean = 0.0;
        double max_log = -INFINITY;
        double min_log = INFINITY;
        constexpr int samples = 4096;
        for (int k = 0; k < samples; ++k) {
            const double t = z / cgs.c + k * model.temporal_period() / samples;
            const double lg = 2.0 * model.exponent(z, t).g.real();
            mean += std::exp(lg - 2.0 * r);
            max_log = std::max(max_log, lg);
            min_log = std::min(min_log, lg);
        }
        mean = std::exp(2.0 * r) * mean / samples;
        CHECK(mean >= 1.0);
        // Peak and trough of a zero-mean sinusoid: exact extrema are +-2R.
        CHECK(std::abs(max_log - 2.0 * r) < 2.0 * r * 1e-6 + 1e-12);
        CHECK(std::abs(min_log + 2.0 * r) < 2.0 * r * 1e-6 + 1e-12);
        (void)op;
    }
}

TEST_CASE("linearity in density and in the coherence") {
    const auto a = fixtures::model(fixtures::sweep_density);
    const auto b = fixtures::model(2.0 * fixtures::sweep_density);
    const double op = a.omega_prime();
    for (int k = 0; k < 20; ++k) {
        const double z = 0.11 * k;
        const double t = z / cgs.c + 0.7 * k / op;
        const complex ga = a.exponent(z, t).g;
        const complex gb = b.exponent(z, t).g;
        CHECK(std::abs(gb - 2.0 * ga) < 1e-12 * (1.0 + std::abs(gb)));
    }
    // |alpha beta| scales G when the phase of conj(alpha) beta is fixed.
    const SuperpositionState weak(std::sqrt(1.0 - 0.0025), 0.05);
    const auto c = fixtures::model(fixtures::sweep_density, fixtures::offset, weak);
    const double scale = std::sqrt(1.0 - 0.0025) * 0.05 / (std::sqrt(0.99) * 0.1);
    const double z = 0.4;
    const double t = z / cgs.c + 1.3 / op;
    CHECK(std::abs(c.exponent(z, t).g - scale * a.exponent(z, t).g) < 1e-12 * std::abs(a.exponent(z, t).g));
}

TEST_CASE("field sample contracts") {
    const auto model = fixtures::model();
    const double op = model.omega_prime();
    const double z = pi * cgs.c / op;
    // t = z/c exactly at the wavefront
    CHECK_NOTHROW(model.field_sample(z, pi / op));
    CHECK_THROWS_AS(model.field_sample(z, 0.9 * pi / op), CausalityViolation);
    CHECK_THROWS_AS(model.field_sample(-1.0, 1.0), InvalidArgument);

    const auto s = model.field_sample(0.3, 0.3 / cgs.c + 2.2 / op);
    const complex g = model.exponent(0.3, 0.3 / cgs.c + 2.2 / op).g;
    CHECK(rel_err(s.intensity_gain, std::exp(2.0 * g.real())) < 1e-12);
    CHECK(rel_err(std::norm(s.amplitude), s.intensity_gain) < 1e-12);
    CHECK(rel_err(s.phase, g.imag() + model.probe().omega() * model.dispersion().excess() * 0.3 / cgs.c) < 1e-14);

    const ProbeModulation scaled(fixtures::ensemble(), fixtures::pump(), fixtures::state(),
                                 ProbeField::below_pump(fixtures::pump(), fixtures::offset, 2.5));
    CHECK(scaled.field_sample(0.0, 0.0).amplitude == complex(2.5, 0.0));

    CHECK_THROWS_AS(fixtures::model(fixtures::sweep_density, op), ResonancePole);
    CHECK_THROWS_AS(fixtures::model(fixtures::sweep_density, 0.0), ResonancePole);
}

TEST_CASE("free functions match the model") {
    const double op = fixtures::pump().omega_prime();
    const double z = 0.5;
    const double t = z / cgs.c + 1.0 / op;
    const auto model = fixtures::model();
    const auto a = exponent(fixtures::ensemble(), fixtures::pump(), fixtures::state(), fixtures::probe(), z, t);
    CHECK(a.g == model.exponent(z, t).g);
    const auto s = field_sample(fixtures::ensemble(), fixtures::pump(), fixtures::state(), fixtures::probe(), z, t);
    CHECK(s.intensity_gain == model.field_sample(z, t).intensity_gain);
}
