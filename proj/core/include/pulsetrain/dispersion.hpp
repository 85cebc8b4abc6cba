#pragma once

#include "pulsetrain/dressed.hpp"

namespace pulsetrain {

/// Ordinary refractive index of the dressed gas, split into the
/// dipole-approximation part (d^2 omega0^2 terms) and the A.A part
/// (e^2/m)(Omega^2/Omega') that survives beyond the dipole approximation.
struct DispersionResult {
    double n0;
    double dipole_part;
    double beyond_dipole_part;

    /// n0 - 1 without the cancellation of subtracting 1 from n0.
    double excess() const noexcept { return dipole_part + beyond_dipole_part; }
};

/// Lossless index n0(omega) for a probe at `probe_omega`. The model has poles
/// at omega = omega_p +- Omega'; throws ResonancePole inside `guard` of either.
DispersionResult refractive_index(const AtomEnsemble& ensemble, const PumpField& pump,
                                  const SuperpositionState& state, double probe_omega,
                                  double guard = default_guard);

/// Ratio of the beyond-dipole numerator (e^2/m)(Omega^2/Omega') to the dipole
/// numerator d^2 omega0^2 (Omega' - Delta)^2 / (hbar Omega'^2) of the first
/// resonant term. Zero when Omega = 0. Throws ZeroDipole when d = 0.
double beyond_dipole_fraction(const AtomEnsemble& ensemble, const PumpField& pump);

}  // namespace pulsetrain
