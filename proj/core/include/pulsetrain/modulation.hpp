#pragma once

// Probe modulation by the red and blue sideband currents of a superposition
// of dressed states. The envelope is A0 F(z, t) with
//
//   F = exp(G),  G = K (f1 - f2),  K = 2 pi rho d^2 omega0^2 Omega / (hbar omega Omega'^3)
//   f1 = conj(alpha) beta (1 - e^{-i Omega' z/c}) e^{+i Omega' t} b1
//   f2 = alpha conj(beta) (1 - e^{+i Omega' z/c}) e^{-i Omega' t} b2
//
// z is the coordinate n.r along the probe direction. Writing
// G = c1 e^{i Omega' t} + c2 e^{-i Omega' t}, the real part is the zero-mean
// sinusoid Re[(c1 + conj(c2)) e^{i Omega' t}] of amplitude R = |c1 + conj(c2)|.

#include "pulsetrain/dispersion.hpp"
#include "pulsetrain/dressed.hpp"

namespace pulsetrain {

struct SidebandBrackets {
    double b1;  // red sideband, multiplies f1
    double b2;  // blue sideband, multiplies f2
};

/// Harmonic coefficients of G at fixed z.
struct Harmonics {
    complex red;   // c1, coefficient of e^{+i Omega' t}
    complex blue;  // c2, coefficient of e^{-i Omega' t}

    double depth() const noexcept;
};

struct ModulationExponent {
    complex g;
    double k_scale;
    double depth;
};

struct FieldSample {
    double z;
    double t;
    complex amplitude;      // A0 F
    double intensity_gain;  // |F|^2
    double phase;           // Im G + omega (n0 - 1) z / c, relative to the vacuum carrier
};

/// b1, b2 for a probe at `probe_omega`. Throws ResonancePole if
/// omega_p - omega or omega_p - omega -+ Omega' lies inside the guard band.
SidebandBrackets sideband_brackets(const PumpField& pump, double probe_omega, double omega_prime,
                                   double guard = default_guard);

/// Closed-form probe solution for one fixed medium/probe configuration.
/// Construction performs every pole check, so evaluation afterwards only
/// validates its own (z, t) arguments.
class ProbeModulation {
public:
    ProbeModulation(const AtomEnsemble& ensemble, const PumpField& pump, const SuperpositionState& state,
                    const ProbeField& probe, double guard = default_guard);

    const AtomEnsemble& ensemble() const noexcept { return ensemble_; }
    const PumpField& pump() const noexcept { return pump_; }
    const SuperpositionState& state() const noexcept { return state_; }
    const ProbeField& probe() const noexcept { return probe_; }
    double guard() const noexcept { return guard_; }

    double omega_prime() const noexcept { return pump_.omega_prime(); }
    double k_scale() const noexcept { return k_scale_; }
    const SidebandBrackets& brackets() const noexcept { return brackets_; }
    const DispersionResult& dispersion() const noexcept { return dispersion_; }

    /// 2 pi / Omega'
    double temporal_period() const noexcept;
    /// 2 pi c / Omega'
    double spatial_period() const noexcept;

    Harmonics harmonics(double z) const;
    ModulationExponent exponent(double z, double t) const;
    double depth(double z) const { return harmonics(z).depth(); }

    /// Requires t >= z/c; throws CausalityViolation otherwise.
    FieldSample field_sample(double z, double t) const;

    /// ln(F e^{i omega (n0 - 1) z / c}) = G + i omega (n0 - 1) z / c.
    complex log_envelope(double z, double t) const;

private:
    AtomEnsemble ensemble_;
    PumpField pump_;
    SuperpositionState state_;
    ProbeField probe_;
    double guard_;
    SidebandBrackets brackets_;
    DispersionResult dispersion_;
    double k_scale_;
};

ModulationExponent exponent(const AtomEnsemble& ensemble, const PumpField& pump, const SuperpositionState& state,
                            const ProbeField& probe, double z, double t, double guard = default_guard);

FieldSample field_sample(const AtomEnsemble& ensemble, const PumpField& pump, const SuperpositionState& state,
                         const ProbeField& probe, double z, double t, double guard = default_guard);

/// R(z) = |c1 + conj(c2)|, so that Re G(z, t) = R cos(Omega' t + psi).
double modulation_depth(const AtomEnsemble& ensemble, const PumpField& pump, const SuperpositionState& state,
                        const ProbeField& probe, double z, double guard = default_guard);

}  // namespace pulsetrain
