#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pulsetrain/pulsetrain.hpp"

namespace pulsetrain::harness {

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Inclusive range sampled at `count` points, linearly or geometrically.
struct Range {
    double min;
    double max;
    std::size_t count;
    bool geometric = false;

    std::vector<double> values() const;
};

/// Run configuration. Frequencies in rad/s, lengths in cm, |d|^2 in CGS.
/// Defaults reproduce the frequency-sweep parameter set.
struct RunConfig {
    // ensemble
    double omega0 = 1.0e15;
    double dipole_squared = 2.0e-34;
    double density = 2.0e15;
    // pump
    double detuning = -2.0e11;
    double rabi = 2.0e10;
    // state
    complex alpha = 0.99498743710661997;  // sqrt(0.99)
    complex beta = 0.1;
    // probe
    double probe_offset = 2.0e9;  // omega_p - omega
    double probe_amplitude = 1.0;
    // grids
    Range offsets{-6.0e11, 6.0e11, 1201};
    std::optional<Range> rabi_ladder;  // dispersion-scan over Omega instead of offsets
    std::optional<double> z;           // cm; when unset z = theta c / Omega'
    double theta = 3.14159265358979323846;
    double periods = 4.0;
    std::size_t samples_per_period = 512;
    std::optional<double> t_start;  // s; when unset the wavefront arrival z/c
    // numerics
    double guard = default_guard;
    std::size_t steps_per_period = 1000;  // characteristic RK4 steps per spatial period
    // outputs
    std::string csv_path;
    std::string json_path;

    AtomEnsemble ensemble() const;
    PumpField pump() const;
    SuperpositionState state() const;
    ProbeField probe() const;
    ProbeField probe_at(double offset) const;

    double omega_prime() const;
    double z_cm() const;
    double start_time() const;
};

/// Parses and validates a configuration. Missing keys keep their defaults;
/// unknown keys are rejected.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

/// Throws ConfigError if the value types cannot be built or a grid is empty or non-finite.
void validate_config(const RunConfig& config);

}  // namespace pulsetrain::harness
