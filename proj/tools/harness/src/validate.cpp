#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "pulsetrain/harness/commands.hpp"

namespace pulsetrain::harness {

using nlohmann::json;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;

// Pulse-train parameter set: the sweep defaults at rho = 6e14 cm^-3.
constexpr double train_density = 6.0e14;
// Published estimate of the individual pulse width for that parameter set.
constexpr double nominal_pulse_width = 250e-15;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::string error_name(const Error& e) {
    if (dynamic_cast<const ResonancePole*>(&e)) return "ResonancePole";
    if (dynamic_cast<const StepTooCoarse*>(&e)) return "StepTooCoarse";
    if (dynamic_cast<const GridTooCoarse*>(&e)) return "GridTooCoarse";
    if (dynamic_cast<const ShallowModulation*>(&e)) return "ShallowModulation";
    if (dynamic_cast<const UnderSampled*>(&e)) return "UnderSampled";
    if (dynamic_cast<const CausalityViolation*>(&e)) return "CausalityViolation";
    if (dynamic_cast<const DegenerateDressing*>(&e)) return "DegenerateDressing";
    if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
    return "Error";
}

Check make(std::string name, bool ok, std::string detail, json measured = json::object()) {
    return {std::move(name), ok ? Check::Status::pass : Check::Status::fail, std::move(detail), std::move(measured)};
}

Check skipped(std::string name, std::string why) { return {std::move(name), Check::Status::skip, std::move(why), {}}; }

class Suite {
public:
    explicit Suite(const RunConfig& config) : config_(config) {}

    void run(const std::string& name, const std::function<Check()>& body) {
        try {
            report_.checks.push_back(body());
        } catch (const Error& e) {
            report_.checks.push_back(make(name, false, error_name(e) + ": " + e.what()));
        }
    }

    ValidationReport finish() { return std::move(report_); }

    ProbeModulation model() const {
        return ProbeModulation(config_.ensemble(), config_.pump(), config_.state(), config_.probe(), config_.guard);
    }

    ProbeModulation train_model() const {
        RunConfig c;
        c.density = train_density;
        return ProbeModulation(c.ensemble(), c.pump(), c.state(), c.probe(), c.guard);
    }

    const RunConfig& config() const { return config_; }

private:
    const RunConfig& config_;
    ValidationReport report_;
};

double oracle_error(const ProbeModulation& model, double z, double t_entry, std::size_t steps_per_period) {
    const auto coefs = derive_coefficients(model);
    const double periods = z / model.spatial_period();
    const auto steps = static_cast<std::size_t>(std::ceil(static_cast<double>(steps_per_period) * periods - 1e-9));
    const complex numeric = integrate_characteristic(coefs, z, t_entry, std::max<std::size_t>(steps, 1));
    const complex closed = model.log_envelope(z, t_entry + z / cgs.c);
    return std::abs(numeric - closed) / (1.0 + std::abs(closed));
}

TimeSeries train_series(const ProbeModulation& model, double z, double t0, std::size_t per_period, double periods) {
    const double dt = model.temporal_period() / static_cast<double>(per_period);
    const auto n = static_cast<std::size_t>(std::llround(periods * static_cast<double>(per_period))) + 1;
    return sample_gain_series(model, z, t0, dt, n);
}

}  // namespace

bool ValidationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Check::Status::fail; });
}

json ValidationReport::to_json() const {
    json list = json::array();
    for (const auto& c : checks) {
        const char* status = c.status == Check::Status::pass ? "pass" : c.status == Check::Status::fail ? "fail" : "skip";
        list.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}, {"measured", c.measured}});
    }
    return {{"passed", passed()}, {"seconds", seconds}, {"checks", list}};
}

ValidationReport validate(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Suite suite(config);

    suite.run("boundary_identity", [&] {
        const auto model = suite.model();
        double worst = 0.0;
        for (int k = 0; k < 1024; ++k) {
            const double t = k * model.temporal_period() / 1024.0;
            worst = std::max(worst, std::abs(model.field_sample(0.0, t).amplitude / model.probe().amplitude() - 1.0));
        }
        return make("boundary_identity", worst < 1e-12, "max |F(0,t) - 1| over 1024 samples < 1e-12",
                    {{"max_deviation", worst}});
    });

    suite.run("antiperiodicity", [&] {
        const auto model = suite.model();
        const double op = model.omega_prime();
        double worst = 0.0;
        for (int iz = 0; iz < 64; ++iz) {
            const double z = iz * model.spatial_period() / 64.0;
            for (int it = 0; it < 64; ++it) {
                const double t = z / cgs.c + it * model.temporal_period() / 64.0;
                const complex g = model.exponent(z, t).g;
                const complex h = model.exponent(z, t + pi / op).g;
                worst = std::max(worst, std::abs(g + h) / (1.0 + std::abs(g)));
            }
        }
        return make("antiperiodicity", worst < 1e-9, "|G(z,t+pi/W') + G(z,t)| / (1+|G|) < 1e-9 on a 64x64 grid",
                    {{"max_relative", worst}});
    });

    suite.run("sweep_mirror", [&] {
        const auto rows = sweep_frequency(suite.config());
        double worst = 0.0;
        std::size_t poles = 0;
        for (const auto& r : rows) {
            if (r.pole) {
                ++poles;
                continue;
            }
            worst = std::max(worst, std::abs(r.re_g_dashed + r.re_g_solid) / std::max(std::abs(r.re_g_solid), 1e-300));
        }
        const bool any = poles < rows.size();
        return make("sweep_mirror", any && worst < 1e-9, "dashed = -solid row-wise within 1e-9 relative",
                    {{"max_relative", worst}, {"rows", rows.size()}, {"pole_rows", poles}});
    });

    const double config_depth = [&] {
        try {
            return suite.model().depth(config.z_cm());
        } catch (const Error&) {
            return 0.0;
        }
    }();
    const bool modulated = config_depth > 0.25 * ln2;

    suite.run("temporal_period", [&] {
        if (!modulated) return skipped("temporal_period", "no pulse train at this z (R <= ln2/4)");
        const auto model = suite.model();
        const auto series = train_series(model, config.z_cm(), config.start_time(),
                                         std::max<std::size_t>(config.samples_per_period, 512), std::max(config.periods, 3.0));
        const auto stats = analyze_train(series, model.omega_prime());
        const double want = model.temporal_period();
        return make("temporal_period", rel_err(stats.period, want) < 1e-6, "measured period = 2 pi / Omega' to 1e-6",
                    {{"measured_s", stats.period}, {"expected_s", want}});
    });

    suite.run("spatial_period", [&] {
        const auto model = suite.model();
        const double length = model.spatial_period();
        // Along the characteristic entering at t = 0 the gain is periodic in z.
        const std::size_t per_period = 512;
        const double dz = length / per_period;
        std::vector<double> gains(4 * per_period + 1);
        for (std::size_t i = 0; i < gains.size(); ++i) {
            const double z = static_cast<double>(i) * dz;
            gains[i] = model.field_sample(z, z / cgs.c).intensity_gain;
        }
        const TimeSeries along(0.0, 0.0, dz / cgs.c, std::move(gains));
        PulseTrainStats stats{};
        try {
            stats = analyze_train(along, model.omega_prime());
        } catch (const ShallowModulation&) {
            return skipped("spatial_period", "gain along the characteristic is too shallow to locate peaks");
        }
        const double measured = stats.period * cgs.c;
        return make("spatial_period", rel_err(measured, length) < 1e-6, "measured spatial period = 2 pi c / Omega' to 1e-6",
                    {{"measured_cm", measured}, {"expected_cm", length}});
    });

    suite.run("zero_mean_exponent", [&] {
        const auto model = suite.model();
        const double z = config.z_cm();
        double mean = 0.0;
        for (int k = 0; k < 1024; ++k) mean += model.exponent(z, k * model.temporal_period() / 1024.0).g.real();
        mean /= 1024.0;
        return make("zero_mean_exponent", std::abs(mean) < 1e-9, "period mean of Re G < 1e-9", {{"mean", mean}});
    });

    suite.run("jensen_bound", [&] {
        const auto model = suite.model();
        const double z = config.z_cm();
        double mean = 0.0;
        for (int k = 0; k < 1024; ++k) {
            mean += std::exp(2.0 * model.exponent(z, k * model.temporal_period() / 1024.0).g.real());
        }
        mean /= 1024.0;
        const bool ok = config_depth > 0.0 ? mean >= 1.0 : std::abs(mean - 1.0) < 1e-12;
        return make("jensen_bound", ok, "period-averaged intensity gain >= 1 (= 1 iff R = 0)",
                    {{"mean_gain", mean}, {"depth", config_depth}});
    });

    suite.run("geometric_mean_unity", [&] {
        if (!modulated) return skipped("geometric_mean_unity", "no pulse train at this z (R <= ln2/4)");
        const auto model = suite.model();
        const auto stats = analyze_train(train_series(model, config.z_cm(), config.start_time(), 512, 4.0),
                                         model.omega_prime());
        const double product = stats.peak_gain * stats.min_gain;
        return make("geometric_mean_unity", std::abs(product - 1.0) < 1e-6, "peak_gain * min_gain = 1 within 1e-6",
                    {{"product", product}});
    });

    suite.run("oracle_agreement", [&] {
        std::vector<ProbeModulation> models{suite.model(), suite.train_model()};
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (models.size() < 22) {
            const double density = std::pow(10.0, 12.0 + 3.0 * unit(rng));
            const double rabi = std::pow(10.0, 9.0 + 2.0 * unit(rng));
            const double delta = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::pow(10.0, 9.5 + 2.0 * unit(rng));
            const double op = std::hypot(delta, rabi);
            const double offset = (unit(rng) - 0.5) * 4.0 * op;
            const double margin = std::max(1e-2 * op, 10.0 * config.guard);
            if (std::abs(offset) < margin || std::abs(std::abs(offset) - op) < margin) continue;
            const double pop = unit(rng);
            const SuperpositionState s(std::polar(std::sqrt(pop), 2.0 * pi * unit(rng)),
                                       std::polar(std::sqrt(1.0 - pop), 2.0 * pi * unit(rng)));
            const auto ens = AtomEnsemble::from_dipole_squared(config.omega0, config.dipole_squared, density);
            const PumpField pump(ens, delta, rabi);
            models.emplace_back(ens, pump, s, ProbeField::below_pump(pump, offset), config.guard);
        }
        double worst = 0.0;
        for (const auto& model : models) {
            const double length = model.spatial_period();
            for (double z : {0.25 * length, 0.5 * length, length}) {
                worst = std::max(worst, oracle_error(model, z, 0.0, config.steps_per_period));
            }
        }
        return make("oracle_agreement", worst < 1e-6,
                    "characteristic RK4 vs closed form, |d lnA| / (1+|lnA|) < 1e-6 at L/4, L/2, L for 22 parameter sets",
                    {{"max_relative", worst}, {"parameter_sets", models.size()}});
    });

    suite.run("oracle_convergence", [&] {
        const auto model = suite.train_model();
        const auto coefs = derive_coefficients(model);
        const double z = 0.37 * model.spatial_period();
        const complex closed = model.log_envelope(z, z / cgs.c);
        std::vector<double> errs;
        for (std::size_t steps : {400u, 800u, 1600u}) {
            errs.push_back(std::abs(integrate_characteristic(coefs, z, 0.0, steps) - closed));
        }
        const double p1 = std::log2(errs[0] / errs[1]);
        const double p2 = std::log2(errs[1] / errs[2]);
        const bool ok = std::abs(p1 - 4.0) < 0.5 && std::abs(p2 - 4.0) < 0.5;
        return make("oracle_convergence", ok, "observed RK4 order per step doubling within 4 +- 0.5",
                    {{"orders", {p1, p2}}, {"errors", errs}});
    });

    suite.run("residual_convergence", [&] {
        const auto model = suite.train_model();
        const auto coefs = derive_coefficients(model);
        std::vector<double> res;
        for (std::size_t n : {128u, 256u, 512u}) {
            const auto grid = sample_log_field_grid(model, 0.0, model.spatial_period() / n, n + 1, 0.0,
                                                    model.temporal_period() / n, n + 1);
            res.push_back(residual_check(grid, coefs));
        }
        const double r1 = res[0] / res[1];
        const double r2 = res[1] / res[2];
        const bool ok = res[1] < 1e-4 && std::abs(r1 - 4.0) < 0.4 && std::abs(r2 - 4.0) < 0.4;
        return make("residual_convergence", ok, "centred-difference residual < 1e-4 at 256/period, ratio ~ 4 per halving",
                    {{"residuals", res}, {"ratios", {r1, r2}}});
    });

    suite.run("pulse_train_reproduction", [&] {
        const auto model = suite.train_model();
        const double z = pi * cgs.c / model.omega_prime();
        const auto stats = analyze_train(train_series(model, z, z / cgs.c, 1024, 4.0), model.omega_prime());
        const double closed = fwhm_closed_form(model.depth(z), model.omega_prime());
        const bool ok = rel_err(stats.period, model.temporal_period()) < 1e-6 &&
                        rel_err(stats.period, 3.1261e-11) < 1e-4 && std::abs(stats.depth - 69.4) < 0.05 &&
                        rel_err(stats.fwhm, closed) < 0.01 && rel_err(stats.fwhm, 9.94e-13) < 1e-3;
        return make("pulse_train_reproduction", ok,
                    "rho = 6e14, theta = pi: period 31.26 ps, R ~ 69.4, FWHM ~ 9.94e-13 s",
                    {{"period_s", stats.period},
                     {"depth", stats.depth},
                     {"fwhm_s", stats.fwhm},
                     {"fwhm_closed_form_s", closed},
                     {"peak_gain", stats.peak_gain}});
    });

    suite.run("nominal_pulse_width", [&] {
        const auto model = suite.train_model();
        const double z = pi * cgs.c / model.omega_prime();
        const double fwhm = fwhm_closed_form(model.depth(z), model.omega_prime());
        const double ratio = fwhm / nominal_pulse_width;
        return make("nominal_pulse_width", ratio > 2.0,
                    "the nominal 250 fs pulse width is NOT reproduced at theta = pi (z is not fixed by that estimate); "
                    "derived FWHM is " + format_double(fwhm) + " s",
                    {{"derived_fwhm_s", fwhm}, {"nominal_fwhm_s", nominal_pulse_width}, {"ratio", ratio}});
    });

    suite.run("index_balanced_and_vacuum", [&] {
        const auto ens = config.ensemble();
        const auto pump = config.pump();
        const double w = config.probe().omega();
        const SuperpositionState balanced(std::sqrt(0.5), std::sqrt(0.5));
        const double n_bal = refractive_index(ens, pump, balanced, w, config.guard).n0;
        const double n_vac = refractive_index(ens.with_density(0.0), pump, config.state(), w, config.guard).n0;
        return make("index_balanced_and_vacuum", n_bal == 1.0 && n_vac == 1.0, "n0 = 1 exactly for |a| = |b| and rho = 0",
                    {{"n0_balanced", n_bal}, {"n0_vacuum", n_vac}});
    });

    suite.run("index_linearity", [&] {
        const auto ens = config.ensemble();
        const auto pump = config.pump();
        const double w = config.probe().omega();
        const auto base = refractive_index(ens, pump, config.state(), w, config.guard);
        const auto doubled = refractive_index(ens.with_density(2.0 * ens.density()), pump, config.state(), w, config.guard);
        const SuperpositionState swapped(config.beta, config.alpha);
        const auto flipped = refractive_index(ens, pump, swapped, w, config.guard);
        const double lin = base.excess() == 0.0 ? std::abs(doubled.excess()) : rel_err(doubled.excess(), 2.0 * base.excess());
        const double anti = base.excess() == 0.0 ? std::abs(flipped.excess()) : rel_err(-flipped.excess(), base.excess());
        return make("index_linearity", lin < 1e-12 && anti < 1e-12,
                    "n0 - 1 linear in rho and odd in |a|^2 - |b|^2 to 1e-12",
                    {{"n0_minus_1", base.excess()}, {"linearity_error", lin}, {"antisymmetry_error", anti}});
    });

    suite.run("beyond_dipole_nonsaturating", [&] {
        if (config.detuning >= 0.0) {
            return skipped("beyond_dipole_nonsaturating", "monotone growth in Omega holds for Delta < 0 only");
        }
        const auto ens = config.ensemble();
        double previous = 0.0;
        bool increasing = true;
        for (int k = 0; k <= 40; ++k) {
            const double rabi = config.rabi * std::pow(10.0, -2.0 + k / 10.0);
            const double f = beyond_dipole_fraction(ens, PumpField(ens, config.detuning, rabi));
            if (k > 0 && !(f > previous)) increasing = false;
            previous = f;
        }
        const double at_config = beyond_dipole_fraction(ens, config.pump());
        return make("beyond_dipole_nonsaturating", increasing,
                    "beyond-dipole fraction strictly increasing over Omega/100 .. 100 Omega",
                    {{"fraction", at_config}});
    });

    ValidationReport report = suite.finish();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace pulsetrain::harness
