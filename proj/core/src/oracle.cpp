#include "pulsetrain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace pulsetrain {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

template <class Rhs>
complex rk4_step(const Rhs& rhs, double z, complex y, double h) {
    const complex k1 = rhs(z, y);
    const complex k2 = rhs(z + 0.5 * h, y + 0.5 * h * k1);
    const complex k3 = rhs(z + 0.5 * h, y + 0.5 * h * k2);
    const complex k4 = rhs(z + h, y + h * k3);
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

RweCoefficients derive_coefficients(const ProbeModulation& model) {
    const double op = model.omega_prime();
    const double scale = op / cgs.c * model.k_scale();
    const complex alpha = model.state().alpha();
    const complex beta = model.state().beta();
    return {
        model.probe().omega() * model.dispersion().excess() / cgs.c,
        scale * model.brackets().b1 * std::conj(alpha) * beta,
        scale * model.brackets().b2 * alpha * std::conj(beta),
        op,
    };
}

RweCoefficients derive_coefficients(const AtomEnsemble& ensemble, const PumpField& pump,
                                    const SuperpositionState& state, const ProbeField& probe, double guard) {
    return derive_coefficients(ProbeModulation(ensemble, pump, state, probe, guard));
}

complex rwe_rate(const RweCoefficients& coefs, double t) {
    const complex rotor = std::polar(1.0, coefs.omega_prime * t);
    return complex(0.0, 1.0) * (coefs.d_coef + coefs.ls * rotor + coefs.rs * std::conj(rotor));
}

complex integrate_characteristic(const RweCoefficients& coefs, double z_end, double t_entry, std::size_t steps) {
    if (!std::isfinite(z_end) || z_end < 0.0) throw InvalidArgument("z_end must be finite and >= 0");
    if (!(coefs.omega_prime > 0.0)) throw InvalidArgument("Omega' must be > 0");
    if (z_end == 0.0) return {0.0, 0.0};

    const double periods = z_end * coefs.omega_prime / (two_pi * cgs.c);
    const double required = std::max(1.0, std::ceil(min_steps_per_period * periods - 1e-9));
    if (static_cast<double>(steps) < required) {
        throw StepTooCoarse("integrate_characteristic needs at least " + std::to_string(static_cast<long long>(required)) +
                            " steps, got " + std::to_string(steps));
    }

    const auto rhs = [&](double z, complex) { return rwe_rate(coefs, t_entry + z / cgs.c); };
    const double h = z_end / static_cast<double>(steps);
    complex y{0.0, 0.0};
    for (std::size_t i = 0; i < steps; ++i) {
        y = rk4_step(rhs, static_cast<double>(i) * h, y, h);
    }
    return y;
}

FieldGrid sample_log_field_grid(const ProbeModulation& model, double z0, double dz, std::size_t nz, double t0,
                                double dt, std::size_t nt) {
    FieldGrid grid{z0, dz, nz, t0, dt, nt, std::vector<complex>(nz * nt)};
    for (std::size_t iz = 0; iz < nz; ++iz) {
        const double z = z0 + static_cast<double>(iz) * dz;
        for (std::size_t it = 0; it < nt; ++it) {
            grid.log_amplitude[iz * nt + it] = model.log_envelope(z, t0 + static_cast<double>(it) * dt);
        }
    }
    return grid;
}

double residual_check(const FieldGrid& grid, const RweCoefficients& coefs) {
    if (grid.nz < 3 || grid.nt < 3) throw GridTooCoarse("residual check needs at least 3x3 grid points");
    if (grid.log_amplitude.size() != grid.nz * grid.nt) throw InvalidArgument("grid size does not match nz * nt");
    if (!(grid.dz > 0.0) || !(grid.dt > 0.0)) throw InvalidArgument("grid spacings must be > 0");
    if (!(coefs.omega_prime > 0.0)) throw InvalidArgument("Omega' must be > 0");

    const double per_period_t = two_pi / coefs.omega_prime / grid.dt;
    const double per_period_z = two_pi * cgs.c / coefs.omega_prime / grid.dz;
    const double needed = min_grid_points_per_period * (1.0 - 1e-9);
    if (per_period_t < needed || per_period_z < needed) {
        throw GridTooCoarse("residual check needs at least 128 points per period in z and t");
    }

    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t iz = 1; iz + 1 < grid.nz; ++iz) {
        for (std::size_t it = 1; it + 1 < grid.nt; ++it) {
            const complex dz = (grid.at(iz + 1, it) - grid.at(iz - 1, it)) / (2.0 * grid.dz);
            const complex dt = (grid.at(iz, it + 1) - grid.at(iz, it - 1)) / (2.0 * grid.dt * cgs.c);
            const complex rate = rwe_rate(coefs, grid.t0 + static_cast<double>(it) * grid.dt);
            worst = std::max(worst, std::abs(dz + dt - rate));
            scale = std::max(scale, std::abs(rate));
        }
    }
    return scale > 0.0 ? worst / scale : worst;
}

}  // namespace pulsetrain
