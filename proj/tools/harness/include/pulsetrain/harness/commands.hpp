#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pulsetrain/harness/config.hpp"
#include "pulsetrain/harness/csv.hpp"

namespace pulsetrain::harness {

/// Re G at t = pi/Omega' (solid) and t = 2 pi/Omega' (dashed) for fixed z.
struct SweepRow {
    double offset;  // omega_p - omega
    double re_g_solid;
    double re_g_dashed;
    std::optional<Pole> pole;
};

std::vector<SweepRow> sweep_frequency(const RunConfig& config);
CsvTable sweep_table(const std::vector<SweepRow>& rows);

struct EvolveResult {
    TimeSeries series;
    double omega_prime;
    double depth;  // closed-form R(z)
    std::optional<PulseTrainStats> stats;
    std::string stats_error;  // set when the train could not be analysed
};

/// Gain time series at fixed z starting at config.start_time(). Needs >= 3 periods.
EvolveResult evolve(const RunConfig& config);
CsvTable evolve_table(const EvolveResult& result);
nlohmann::json stats_json(const EvolveResult& result);

struct DispersionRow {
    double omega;
    double offset;
    double rabi;
    std::optional<DispersionResult> index;
    double beyond_dipole_fraction;
    std::optional<Pole> pole;
};

/// Index over the offset grid, or over config.rabi_ladder at the probe offset when set.
std::vector<DispersionRow> dispersion_scan(const RunConfig& config);
CsvTable dispersion_table(const std::vector<DispersionRow>& rows);

/// Reads a gain series written by evolve_table.
TimeSeries series_from_table(const CsvTable& table);
nlohmann::json pulse_stats_json(const PulseTrainStats& stats);

struct Check {
    std::string name;
    enum class Status { pass, fail, skip } status;
    std::string detail;
    nlohmann::json measured;
};

struct ValidationReport {
    std::vector<Check> checks;
    double seconds = 0.0;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// Runs the invariant suite against `config` plus the fixed pulse-train
/// parameter set. Errors raised by a check are reported as its failure.
ValidationReport validate(const RunConfig& config);

const char* pole_tag(Pole pole) noexcept;

}  // namespace pulsetrain::harness
