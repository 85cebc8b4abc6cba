#pragma once

// Test-only reference evaluations written directly from the closed-form
// expressions in long double, without the library's cancellation-free
// rewrites or harmonic decomposition. Used as an independent second route.

#include <cmath>
#include <complex>
#include <numbers>

namespace reference {

using real = long double;
using cplx = std::complex<real>;

inline constexpr real c = 2.99792458e10L;
inline constexpr real hbar = 1.054571817e-27L;
inline constexpr real e = 4.80320471e-10L;
inline constexpr real m = 9.1093837015e-28L;

struct Params {
    real omega0;
    real dipole_sq;
    real density;
    real detuning;
    real rabi;
    real offset;  // omega_p - omega
    cplx alpha;
    cplx beta;
};

inline real omega_prime(const Params& p) { return std::sqrt(p.detuning * p.detuning + p.rabi * p.rabi); }
inline real omega_p(const Params& p) { return p.omega0 + p.detuning; }
inline real probe_omega(const Params& p) { return omega_p(p) - p.offset; }

inline real index_excess(const Params& p) {
    const real op = omega_prime(p);
    const real w = probe_omega(p);
    const real pop = std::norm(p.alpha) - std::norm(p.beta);
    const real a = p.dipole_sq * p.omega0 * p.omega0 * (op - p.detuning) * (op - p.detuning) / (hbar * op * op);
    const real b = p.dipole_sq * p.omega0 * p.omega0 * (op + p.detuning) * (op + p.detuning) / (hbar * op * op);
    const real beyond = e * e / m * p.rabi * p.rabi / op;
    return std::numbers::pi_v<real> * p.density / (2 * w * w) * pop *
           ((a + beyond) / (p.offset + op) - (b + beyond) / (p.offset - op));
}

inline real beyond_part(const Params& p) {
    const real op = omega_prime(p);
    const real w = probe_omega(p);
    const real pop = std::norm(p.alpha) - std::norm(p.beta);
    const real beyond = e * e / m * p.rabi * p.rabi / op;
    return std::numbers::pi_v<real> * p.density / (2 * w * w) * pop * (beyond / (p.offset + op) - beyond / (p.offset - op));
}

inline cplx exponent(const Params& p, real z, real t) {
    const real op = omega_prime(p);
    const real w = probe_omega(p);
    const real k = 2 * std::numbers::pi_v<real> * p.density * p.dipole_sq * p.omega0 * p.omega0 * p.rabi /
                   (hbar * w * op * op * op);
    const real b1 = (op + p.detuning) / p.offset + (op - p.detuning) / (p.offset + op);
    const real b2 = (op - p.detuning) / p.offset + (op + p.detuning) / (p.offset - op);
    const cplx i(0, 1);
    const cplx f1 = std::conj(p.alpha) * p.beta * (real(1) - std::exp(-i * op * z / c)) * std::exp(i * op * t) * b1;
    const cplx f2 = p.alpha * std::conj(p.beta) * (real(1) - std::exp(i * op * z / c)) * std::exp(-i * op * t) * b2;
    return k * (f1 - f2);
}

}  // namespace reference
