#pragma once

// Two-level atoms dressed by a far-detuned monochromatic pump.
//
// Units are Gaussian-CGS throughout. Every frequency (detuning, Rabi
// frequency, transition, pump and probe frequencies) is an angular
// frequency in rad/s and enters the formulas without 2*pi factors.

#include <array>
#include <complex>

#include "pulsetrain/errors.hpp"

namespace pulsetrain {

using complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

struct PhysicalConstants {
    double c;     // cm/s
    double hbar;  // erg s
    double e;     // esu
    double m;     // g (electron)
};

inline constexpr PhysicalConstants cgs{
    2.99792458e10,
    1.054571817e-27,
    4.80320471e-10,
    9.1093837015e-28,
};

/// Default half-width of the exclusion band around resonance poles (rad/s).
inline constexpr double default_guard = 1.0e6;

/// Gas of identical two-level atoms.
class AtomEnsemble {
public:
    /// @param omega0 transition frequency (rad/s), > 0
    /// @param dipole dipole matrix element d (esu cm), >= 0
    /// @param density number density rho (cm^-3), >= 0
    AtomEnsemble(double omega0, double dipole, double density);

    /// Builds the ensemble from |d|^2 directly, as quoted in CGSE tables.
    static AtomEnsemble from_dipole_squared(double omega0, double dipole_squared, double density);

    double omega0() const noexcept { return omega0_; }
    double dipole() const noexcept;
    double dipole_squared() const noexcept { return dipole_sq_; }
    double density() const noexcept { return density_; }

    AtomEnsemble with_density(double density) const;

private:
    struct squared_tag {};
    AtomEnsemble(squared_tag, double omega0, double dipole_sq, double density);

    double omega0_;
    double dipole_sq_;
    double density_;
};

/// Omega' together with the two cancellation-free combinations Omega' -+ Delta.
struct RabiSplit {
    double omega_prime;
    double minus;  // Omega' - Delta
    double plus;   // Omega' + Delta
};

RabiSplit split_rabi(double detuning, double rabi);

/// Pump dressing the ensemble. The detuning is tied to the ensemble's
/// transition frequency: omega_p = omega0 + Delta.
class PumpField {
public:
    PumpField(const AtomEnsemble& ensemble, double detuning, double rabi);

    /// Checked form for callers holding an explicit pump frequency; throws
    /// InvalidArgument if omega_p - omega0 disagrees with `detuning`.
    static PumpField with_frequency(const AtomEnsemble& ensemble, double omega_p, double rabi,
                                    double detuning);

    double omega_p() const noexcept { return omega_p_; }
    double rabi() const noexcept { return rabi_; }
    double detuning() const noexcept { return detuning_; }
    const RabiSplit& split() const noexcept { return split_; }
    double omega_prime() const noexcept { return split_.omega_prime; }

    PumpField with_rabi(const AtomEnsemble& ensemble, double rabi) const;

private:
    double omega_p_;
    double rabi_;
    double detuning_;
    RabiSplit split_;
};

struct StarkShifts {
    double plus;
    double minus;
};

struct Normalization {
    double plus;
    double minus;
};

struct DressedParams {
    double omega_prime;
    double lambda_plus;
    double lambda_minus;
    double n_plus;
    double n_minus;
};

/// Omega' = sqrt(Delta^2 + Omega^2). Throws DegenerateDressing when both vanish.
double generalized_rabi(double detuning, double rabi);

/// lambda+- = -Delta/2 +- Omega'/2, the high-frequency Stark shifts.
StarkShifts stark_shifts(double detuning, double rabi);

/// N+- = Omega / sqrt(2 Omega' (Omega' -+ Delta)). Throws ZeroRabi for Omega = 0.
Normalization normalization_coeffs(double detuning, double rabi);

DressedParams dress(double detuning, double rabi);

/// Probability amplitudes of the two dressed states.
class SuperpositionState {
public:
    /// Throws InvalidArgument unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
    SuperpositionState(complex alpha, complex beta);

    complex alpha() const noexcept { return alpha_; }
    complex beta() const noexcept { return beta_; }

    /// |alpha|^2 - |beta|^2
    double population_difference() const noexcept;

private:
    complex alpha_;
    complex beta_;
};

/// Weak monochromatic probe wave.
class ProbeField {
public:
    explicit ProbeField(double omega, double amplitude = 1.0, Vec3 direction = {0.0, 0.0, 1.0});

    /// Probe detuned below the pump by `offset` = omega_p - omega.
    static ProbeField below_pump(const PumpField& pump, double offset, double amplitude = 1.0);

    double omega() const noexcept { return omega_; }
    double amplitude() const noexcept { return amplitude_; }
    const Vec3& direction() const noexcept { return direction_; }

    /// n.r, the coordinate along the propagation direction (cm).
    double path_coordinate(const Vec3& r) const noexcept;

private:
    double omega_;
    double amplitude_;
    Vec3 direction_;
};

}  // namespace pulsetrain
