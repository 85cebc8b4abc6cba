#pragma once

#include <cmath>
#include <numbers>

#include "pulsetrain/pulsetrain.hpp"
#include "reference.hpp"

namespace fixtures {

using namespace pulsetrain;

// Parameter set of the frequency-sweep figure; the pulse-train figure
// lowers the density to 6e14.
inline constexpr double omega0 = 1.0e15;
inline constexpr double dipole_sq = 2.0e-34;
inline constexpr double sweep_density = 2.0e15;
inline constexpr double train_density = 6.0e14;
inline constexpr double detuning = -2.0e11;
inline constexpr double rabi = 2.0e10;
inline constexpr double offset = 2.0e9;

inline AtomEnsemble ensemble(double density = sweep_density) {
    return AtomEnsemble::from_dipole_squared(omega0, dipole_sq, density);
}

inline PumpField pump(double rabi_value = rabi, double detuning_value = detuning) {
    return PumpField(ensemble(), detuning_value, rabi_value);
}

inline SuperpositionState state() { return SuperpositionState(std::sqrt(0.99), 0.1); }

inline ProbeField probe(double offset_value = offset) { return ProbeField::below_pump(pump(), offset_value); }

inline ProbeModulation model(double density = sweep_density, double offset_value = offset,
                             SuperpositionState s = state()) {
    return ProbeModulation(ensemble(density), pump(), s, probe(offset_value));
}

inline reference::Params reference_params(double density = sweep_density, double offset_value = offset) {
    return {omega0, dipole_sq, density, detuning, rabi, offset_value, std::sqrt(0.99L), 0.1L};
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace fixtures
