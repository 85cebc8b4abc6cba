#pragma once

// Numerical cross-check of the closed-form probe solution. Along the
// characteristic z = c (t - t_entry) the reduced wave equation
//
//   (d/dz + c^-1 d/dt) ln A = i (D + ls e^{i Omega' t} + rs e^{-i Omega' t})
//
// becomes an ODE in z, integrated here with classical RK4. The coefficients
// are the constants for which the closed form satisfies that equation:
//
//   D  = omega (n0 - 1) / c
//   ls = (Omega'/c) K conj(alpha) beta b1
//   rs = (Omega'/c) K alpha conj(beta) b2

#include <cstddef>
#include <vector>

#include "pulsetrain/dressed.hpp"
#include "pulsetrain/modulation.hpp"

namespace pulsetrain {

struct RweCoefficients {
    double d_coef;  // cm^-1
    complex ls;     // cm^-1, multiplies e^{+i Omega' t}
    complex rs;     // cm^-1, multiplies e^{-i Omega' t}
    double omega_prime;
};

inline constexpr double min_steps_per_period = 1000.0;
inline constexpr double min_grid_points_per_period = 128.0;

RweCoefficients derive_coefficients(const ProbeModulation& model);

RweCoefficients derive_coefficients(const AtomEnsemble& ensemble, const PumpField& pump,
                                    const SuperpositionState& state, const ProbeField& probe,
                                    double guard = default_guard);

/// Right-hand side i (D + ls e^{i Omega' t} + rs e^{-i Omega' t}).
complex rwe_rate(const RweCoefficients& coefs, double t);

/// ln A(z_end) - ln A(0) along the characteristic entering the medium at
/// t_entry. Needs at least 1000 steps per spatial period 2 pi c / Omega'
/// traversed; throws StepTooCoarse otherwise.
complex integrate_characteristic(const RweCoefficients& coefs, double z_end, double t_entry, std::size_t steps);

/// ln A sampled on a uniform (z, t) grid, row-major in z.
struct FieldGrid {
    double z0;
    double dz;
    std::size_t nz;
    double t0;
    double dt;
    std::size_t nt;
    std::vector<complex> log_amplitude;

    complex at(std::size_t iz, std::size_t it) const { return log_amplitude[iz * nt + it]; }
};

FieldGrid sample_log_field_grid(const ProbeModulation& model, double z0, double dz, std::size_t nz, double t0,
                                double dt, std::size_t nt);

/// Max over interior points of |(d_z + c^-1 d_t) ln A - rate| using centred
/// differences, divided by the max |rate| (absolute when every rate vanishes).
/// Throws GridTooCoarse below 128 points per period in either direction.
double residual_check(const FieldGrid& grid, const RweCoefficients& coefs);

}  // namespace pulsetrain
