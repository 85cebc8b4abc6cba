#include "pulsetrain/harness/commands.hpp"

#include <cmath>
#include <numbers>

namespace pulsetrain::harness {

using nlohmann::json;

namespace {

constexpr double pi = std::numbers::pi;

std::string pole_cell(const std::optional<Pole>& pole) {
    return pole ? std::string("POLE:") + pole_tag(*pole) : std::string("none");
}

}  // namespace

const char* pole_tag(Pole pole) noexcept {
    switch (pole) {
        case Pole::rayleigh:
            return "rayleigh";
        case Pole::lower_rabi:
            return "lower_rabi";
        case Pole::upper_rabi:
            return "upper_rabi";
    }
    return "unknown";
}

std::vector<SweepRow> sweep_frequency(const RunConfig& config) {
    const AtomEnsemble ensemble = config.ensemble();
    const PumpField pump = config.pump();
    const SuperpositionState state = config.state();
    const double op = pump.omega_prime();
    const double z = config.z_cm();

    std::vector<SweepRow> rows;
    for (double offset : config.offsets.values()) {
        SweepRow row{offset, NAN, NAN, std::nullopt};
        try {
            const ProbeModulation model(ensemble, pump, state, config.probe_at(offset), config.guard);
            row.re_g_solid = model.exponent(z, pi / op).g.real();
            row.re_g_dashed = model.exponent(z, 2.0 * pi / op).g.real();
        } catch (const ResonancePole& e) {
            row.pole = e.pole();
        }
        rows.push_back(row);
    }
    return rows;
}

CsvTable sweep_table(const std::vector<SweepRow>& rows) {
    CsvTable t{{"delta[rad/s]", "re_g_solid[1]", "re_g_dashed[1]", "pole"}, {}};
    for (const auto& r : rows) {
        t.rows.push_back({format_double(r.offset), format_double(r.re_g_solid), format_double(r.re_g_dashed),
                          pole_cell(r.pole)});
    }
    return t;
}

EvolveResult evolve(const RunConfig& config) {
    if (config.periods < 3.0) throw ConfigError("evolve needs time.periods >= 3");
    const ProbeModulation model(config.ensemble(), config.pump(), config.state(), config.probe(), config.guard);
    const double z = config.z_cm();
    const double dt = model.temporal_period() / static_cast<double>(config.samples_per_period);
    const auto count = static_cast<std::size_t>(
        std::llround(config.periods * static_cast<double>(config.samples_per_period))) + 1;

    EvolveResult result{sample_gain_series(model, z, config.start_time(), dt, count), model.omega_prime(),
                        model.depth(z), std::nullopt, {}};
    try {
        result.stats = analyze_train(result.series, model.omega_prime());
    } catch (const ShallowModulation& e) {
        result.stats_error = std::string("ShallowModulation: ") + e.what();
    } catch (const UnderSampled& e) {
        result.stats_error = std::string("UnderSampled: ") + e.what();
    }
    return result;
}

CsvTable evolve_table(const EvolveResult& result) {
    CsvTable t{{"t[s]", "intensity_gain[1]", "log_gain[1]"}, {}};
    const TimeSeries& s = result.series;
    for (std::size_t i = 0; i < s.size(); ++i) {
        t.rows.push_back({format_double(s.time(i)), format_double(s.gains()[i]), format_double(std::log(s.gains()[i]))});
    }
    return t;
}

json pulse_stats_json(const PulseTrainStats& stats) {
    return {{"period_s", stats.period},       {"fwhm_s", stats.fwhm},       {"peak_gain", stats.peak_gain},
            {"min_gain", stats.min_gain},     {"depth", stats.depth}};
}

json stats_json(const EvolveResult& result) {
    json doc;
    doc["z_cm"] = result.series.z();
    doc["omega_prime"] = result.omega_prime;
    doc["expected"] = {{"period_s", 2.0 * pi / result.omega_prime}, {"depth", result.depth}};
    if (result.depth > 0.25 * std::numbers::ln2) {
        doc["expected"]["fwhm_s"] = fwhm_closed_form(result.depth, result.omega_prime);
    }
    if (result.stats) {
        doc["stats"] = pulse_stats_json(*result.stats);
    } else {
        doc["stats"] = {{"error", result.stats_error}};
    }
    return doc;
}

std::vector<DispersionRow> dispersion_scan(const RunConfig& config) {
    const AtomEnsemble ensemble = config.ensemble();
    const SuperpositionState state = config.state();
    std::vector<DispersionRow> rows;

    const auto evaluate = [&](const PumpField& pump, double offset) {
        const double omega = pump.omega_p() - offset;
        DispersionRow row{omega, offset, pump.rabi(), std::nullopt, NAN, std::nullopt};
        try {
            row.index = refractive_index(ensemble, pump, state, omega, config.guard);
        } catch (const ResonancePole& e) {
            row.pole = e.pole();
        }
        if (ensemble.dipole_squared() > 0.0) row.beyond_dipole_fraction = beyond_dipole_fraction(ensemble, pump);
        rows.push_back(row);
    };

    if (config.rabi_ladder) {
        for (double rabi : config.rabi_ladder->values()) evaluate(PumpField(ensemble, config.detuning, rabi), config.probe_offset);
    } else {
        const PumpField pump = config.pump();
        for (double offset : config.offsets.values()) evaluate(pump, offset);
    }
    return rows;
}

CsvTable dispersion_table(const std::vector<DispersionRow>& rows) {
    CsvTable t{{"omega[rad/s]", "delta[rad/s]", "rabi[rad/s]", "n0[1]", "n0_minus_1[1]", "dipole_part[1]",
                "beyond_dipole_part[1]", "beyond_dipole_fraction[1]", "pole"},
               {}};
    for (const auto& r : rows) {
        const DispersionResult d = r.index.value_or(DispersionResult{NAN, NAN, NAN});
        t.rows.push_back({format_double(r.omega), format_double(r.offset), format_double(r.rabi), format_double(d.n0),
                          format_double(d.excess()), format_double(d.dipole_part), format_double(d.beyond_dipole_part),
                          format_double(r.beyond_dipole_fraction), pole_cell(r.pole)});
    }
    return t;
}

TimeSeries series_from_table(const CsvTable& table) {
    const std::size_t tc = table.column("t[");
    const std::size_t gc = table.column("intensity_gain[");
    if (table.rows.size() < 2) throw ConfigError("gain series needs at least two rows");
    std::vector<double> gains;
    gains.reserve(table.rows.size());
    for (const auto& row : table.rows) gains.push_back(parse_double(row[gc]));
    const double t0 = parse_double(table.rows.front()[tc]);
    const double t1 = parse_double(table.rows.back()[tc]);
    const double dt = (t1 - t0) / static_cast<double>(table.rows.size() - 1);
    return TimeSeries(0.0, t0, dt, std::move(gains));
}

}  // namespace pulsetrain::harness
