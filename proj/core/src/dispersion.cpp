#include "pulsetrain/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "poles.hpp"

namespace pulsetrain {

namespace {

// d^2 omega0^2 (Omega' -+ Delta)^2 / (hbar Omega'^2)
double dipole_numerator(const AtomEnsemble& ensemble, double omega_prime, double split) {
    const double ratio = split / omega_prime;
    return ensemble.dipole_squared() * ensemble.omega0() * ensemble.omega0() * ratio * ratio / cgs.hbar;
}

// (e^2/m) Omega^2 / Omega'
double beyond_dipole_numerator(const PumpField& pump) {
    return cgs.e * cgs.e / cgs.m * pump.rabi() * pump.rabi() / pump.omega_prime();
}

}  // namespace

DispersionResult refractive_index(const AtomEnsemble& ensemble, const PumpField& pump,
                                  const SuperpositionState& state, double probe_omega, double guard) {
    detail::check_guard(guard);
    if (!std::isfinite(probe_omega) || probe_omega <= 0.0) throw InvalidArgument("probe frequency must be > 0");

    const RabiSplit& s = pump.split();
    const double offset = pump.omega_p() - probe_omega;
    const double scale = std::max(pump.omega_p(), probe_omega);
    const double lower = detail::checked_denominator(Pole::lower_rabi, offset + s.omega_prime, guard, scale);
    const double upper = detail::checked_denominator(Pole::upper_rabi, offset - s.omega_prime, guard, scale);

    const double prefactor = std::numbers::pi * ensemble.density() / (2.0 * probe_omega * probe_omega) *
                             state.population_difference();

    const double dipole = dipole_numerator(ensemble, s.omega_prime, s.minus) / lower -
                          dipole_numerator(ensemble, s.omega_prime, s.plus) / upper;
    const double beyond = beyond_dipole_numerator(pump) * (1.0 / lower - 1.0 / upper);

    DispersionResult result{};
    result.dipole_part = prefactor * dipole;
    result.beyond_dipole_part = prefactor * beyond;
    result.n0 = 1.0 + result.excess();
    return result;
}

double beyond_dipole_fraction(const AtomEnsemble& ensemble, const PumpField& pump) {
    if (ensemble.dipole_squared() == 0.0) throw ZeroDipole("beyond-dipole fraction undefined for d = 0");
    if (pump.rabi() == 0.0) return 0.0;
    const RabiSplit& s = pump.split();
    return beyond_dipole_numerator(pump) / dipole_numerator(ensemble, s.omega_prime, s.minus);
}

}  // namespace pulsetrain
