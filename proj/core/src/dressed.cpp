#include "pulsetrain/dressed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pulsetrain {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

const char* to_string(Pole pole) noexcept {
    switch (pole) {
        case Pole::rayleigh:
            return "omega_p - omega";
        case Pole::lower_rabi:
            return "omega_p - omega + Omega'";
        case Pole::upper_rabi:
            return "omega_p - omega - Omega'";
    }
    return "unknown";
}

ResonancePole::ResonancePole(Pole pole, double denominator, double guard)
    : Error(std::string("resonance pole: |") + to_string(pole) + "| = " +
            std::to_string(std::abs(denominator)) + " rad/s is inside guard band " +
            std::to_string(guard) + " rad/s"),
      pole_(pole),
      denominator_(denominator),
      guard_(guard) {}

AtomEnsemble::AtomEnsemble(double omega0, double dipole, double density)
    : AtomEnsemble(squared_tag{}, omega0, dipole * dipole, density) {
    if (!finite(dipole) || dipole < 0.0) throw InvalidArgument("dipole moment must be finite and >= 0");
}

AtomEnsemble AtomEnsemble::from_dipole_squared(double omega0, double dipole_squared, double density) {
    return AtomEnsemble(squared_tag{}, omega0, dipole_squared, density);
}

AtomEnsemble::AtomEnsemble(squared_tag, double omega0, double dipole_sq, double density)
    : omega0_(omega0), dipole_sq_(dipole_sq), density_(density) {
    if (!finite(omega0) || omega0 <= 0.0) throw InvalidArgument("transition frequency must be > 0");
    if (!finite(dipole_sq) || dipole_sq < 0.0) throw InvalidArgument("|d|^2 must be finite and >= 0");
    if (!finite(density) || density < 0.0) throw InvalidArgument("number density must be finite and >= 0");
}

double AtomEnsemble::dipole() const noexcept { return std::sqrt(dipole_sq_); }

AtomEnsemble AtomEnsemble::with_density(double density) const {
    return AtomEnsemble(squared_tag{}, omega0_, dipole_sq_, density);
}

RabiSplit split_rabi(double detuning, double rabi) {
    const double omega_prime = generalized_rabi(detuning, rabi);
    // Omega' - |Delta| = Omega^2 / (Omega' + |Delta|) without cancellation.
    const double large = omega_prime + std::abs(detuning);
    const double small = rabi * rabi / large;
    if (detuning >= 0.0) return {omega_prime, small, large};
    return {omega_prime, large, small};
}

PumpField::PumpField(const AtomEnsemble& ensemble, double detuning, double rabi)
    : omega_p_(ensemble.omega0() + detuning),
      rabi_(rabi),
      detuning_(detuning),
      split_(split_rabi(detuning, rabi)) {
    if (!(omega_p_ > 0.0)) throw InvalidArgument("pump frequency omega0 + Delta must be > 0");
}

PumpField PumpField::with_frequency(const AtomEnsemble& ensemble, double omega_p, double rabi,
                                    double detuning) {
    const double mismatch = omega_p - ensemble.omega0() - detuning;
    const double scale = std::max(std::abs(omega_p), std::abs(ensemble.omega0()));
    if (!(std::abs(mismatch) <= 4.0 * std::numeric_limits<double>::epsilon() * scale)) {
        throw InvalidArgument("detuning does not equal omega_p - omega0");
    }
    return PumpField(ensemble, detuning, rabi);
}

PumpField PumpField::with_rabi(const AtomEnsemble& ensemble, double rabi) const {
    return PumpField(ensemble, detuning_, rabi);
}

double generalized_rabi(double detuning, double rabi) {
    if (!finite(detuning) || !finite(rabi)) throw InvalidArgument("detuning and Rabi frequency must be finite");
    if (rabi < 0.0) throw InvalidArgument("Rabi frequency must be >= 0");
    if (detuning == 0.0 && rabi == 0.0) throw DegenerateDressing("Delta = Omega = 0: dressed states undefined");
    return std::hypot(detuning, rabi);
}

StarkShifts stark_shifts(double detuning, double rabi) {
    const RabiSplit s = split_rabi(detuning, rabi);
    return {0.5 * s.minus, -0.5 * s.plus};
}

Normalization normalization_coeffs(double detuning, double rabi) {
    const RabiSplit s = split_rabi(detuning, rabi);
    if (rabi == 0.0) throw ZeroRabi("Omega = 0: normalization of dressed states undefined");
    return {rabi / std::sqrt(2.0 * s.omega_prime * s.minus), rabi / std::sqrt(2.0 * s.omega_prime * s.plus)};
}

DressedParams dress(double detuning, double rabi) {
    const StarkShifts shifts = stark_shifts(detuning, rabi);
    const Normalization norm = normalization_coeffs(detuning, rabi);
    return {generalized_rabi(detuning, rabi), shifts.plus, shifts.minus, norm.plus, norm.minus};
}

SuperpositionState::SuperpositionState(complex alpha, complex beta) : alpha_(alpha), beta_(beta) {
    const double total = std::norm(alpha) + std::norm(beta);
    if (!finite(total) || std::abs(total - 1.0) > 1e-12) {
        throw InvalidArgument("superposition state must satisfy |alpha|^2 + |beta|^2 = 1");
    }
}

double SuperpositionState::population_difference() const noexcept {
    return std::norm(alpha_) - std::norm(beta_);
}

ProbeField::ProbeField(double omega, double amplitude, Vec3 direction)
    : omega_(omega), amplitude_(amplitude), direction_(direction) {
    if (!finite(omega) || omega <= 0.0) throw InvalidArgument("probe frequency must be > 0");
    if (!finite(amplitude)) throw InvalidArgument("probe amplitude must be finite");
    const double norm = std::hypot(direction[0], direction[1], direction[2]);
    if (std::abs(norm - 1.0) > 1e-12) throw InvalidArgument("probe direction must be a unit vector");
}

ProbeField ProbeField::below_pump(const PumpField& pump, double offset, double amplitude) {
    return ProbeField(pump.omega_p() - offset, amplitude);
}

double ProbeField::path_coordinate(const Vec3& r) const noexcept {
    return direction_[0] * r[0] + direction_[1] * r[1] + direction_[2] * r[2];
}

}  // namespace pulsetrain
