#include "pulsetrain/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "poles.hpp"

namespace pulsetrain {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_coordinate(double z) {
    if (!std::isfinite(z) || z < 0.0) throw InvalidArgument("propagation coordinate z must be finite and >= 0");
}

void check_time(double t) {
    if (!std::isfinite(t)) throw InvalidArgument("time must be finite");
}

}  // namespace

double Harmonics::depth() const noexcept { return std::abs(red + std::conj(blue)); }

SidebandBrackets sideband_brackets(const PumpField& pump, double probe_omega, double omega_prime, double guard) {
    detail::check_guard(guard);
    if (!std::isfinite(probe_omega) || probe_omega <= 0.0) throw InvalidArgument("probe frequency must be > 0");
    if (!(omega_prime > 0.0)) throw InvalidArgument("Omega' must be > 0");

    const double offset = pump.omega_p() - probe_omega;
    const double scale = std::max(pump.omega_p(), probe_omega);
    const double rayleigh = detail::checked_denominator(Pole::rayleigh, offset, guard, scale);
    const double lower = detail::checked_denominator(Pole::lower_rabi, offset + omega_prime, guard, scale);
    const double upper = detail::checked_denominator(Pole::upper_rabi, offset - omega_prime, guard, scale);

    const double delta = pump.detuning();
    return {
        (omega_prime + delta) / rayleigh + (omega_prime - delta) / lower,
        (omega_prime - delta) / rayleigh + (omega_prime + delta) / upper,
    };
}

ProbeModulation::ProbeModulation(const AtomEnsemble& ensemble, const PumpField& pump,
                                 const SuperpositionState& state, const ProbeField& probe, double guard)
    : ensemble_(ensemble),
      pump_(pump),
      state_(state),
      probe_(probe),
      guard_(guard),
      brackets_(sideband_brackets(pump, probe.omega(), pump.omega_prime(), guard)),
      dispersion_(refractive_index(ensemble, pump, state, probe.omega(), guard)) {
    const double op = pump.omega_prime();
    k_scale_ = two_pi * ensemble.density() * ensemble.dipole_squared() * ensemble.omega0() * ensemble.omega0() /
               (cgs.hbar * probe.omega()) * pump.rabi() / (op * op * op);
}

double ProbeModulation::temporal_period() const noexcept { return two_pi / omega_prime(); }

double ProbeModulation::spatial_period() const noexcept { return two_pi * cgs.c / omega_prime(); }

Harmonics ProbeModulation::harmonics(double z) const {
    check_coordinate(z);
    const double half = 0.5 * omega_prime() * z / cgs.c;
    // 1 - e^{-i theta} = 2i sin(theta/2) e^{-i theta/2}; exact zero at z = 0.
    const complex one_minus_lag = complex(0.0, 2.0 * std::sin(half)) * std::polar(1.0, -half);
    const complex one_minus_lead = std::conj(one_minus_lag);

    const complex alpha = state_.alpha();
    const complex beta = state_.beta();
    return {
        k_scale_ * brackets_.b1 * std::conj(alpha) * beta * one_minus_lag,
        -k_scale_ * brackets_.b2 * alpha * std::conj(beta) * one_minus_lead,
    };
}

ModulationExponent ProbeModulation::exponent(double z, double t) const {
    check_time(t);
    const Harmonics h = harmonics(z);
    const complex rotor = std::polar(1.0, omega_prime() * t);
    return {h.red * rotor + h.blue * std::conj(rotor), k_scale_, h.depth()};
}

FieldSample ProbeModulation::field_sample(double z, double t) const {
    check_coordinate(z);
    check_time(t);
    const double retarded = z / cgs.c;
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), retarded);
    if (t - retarded < -slack) {
        throw CausalityViolation("field requested before the wavefront arrives (t < z/c)");
    }
    const complex g = exponent(z, t).g;
    FieldSample sample{};
    sample.z = z;
    sample.t = t;
    sample.amplitude = probe_.amplitude() * std::exp(g);
    sample.intensity_gain = std::exp(2.0 * g.real());
    sample.phase = g.imag() + probe_.omega() * dispersion_.excess() * z / cgs.c;
    return sample;
}

complex ProbeModulation::log_envelope(double z, double t) const {
    const complex g = exponent(z, t).g;
    return {g.real(), g.imag() + probe_.omega() * dispersion_.excess() * z / cgs.c};
}

ModulationExponent exponent(const AtomEnsemble& ensemble, const PumpField& pump, const SuperpositionState& state,
                            const ProbeField& probe, double z, double t, double guard) {
    return ProbeModulation(ensemble, pump, state, probe, guard).exponent(z, t);
}

FieldSample field_sample(const AtomEnsemble& ensemble, const PumpField& pump, const SuperpositionState& state,
                         const ProbeField& probe, double z, double t, double guard) {
    return ProbeModulation(ensemble, pump, state, probe, guard).field_sample(z, t);
}

double modulation_depth(const AtomEnsemble& ensemble, const PumpField& pump, const SuperpositionState& state,
                        const ProbeField& probe, double z, double guard) {
    return ProbeModulation(ensemble, pump, state, probe, guard).depth(z);
}

}  // namespace pulsetrain
