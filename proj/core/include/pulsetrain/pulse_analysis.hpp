#pragma once

#include <cstddef>
#include <vector>

#include "pulsetrain/dressed.hpp"
#include "pulsetrain/modulation.hpp"

namespace pulsetrain {

/// Intensity gain |F|^2 sampled uniformly in time at fixed z.
class TimeSeries {
public:
    TimeSeries(double z, double t0, double dt, std::vector<double> gains);

    double z() const noexcept { return z_; }
    double t0() const noexcept { return t0_; }
    double dt() const noexcept { return dt_; }
    const std::vector<double>& gains() const noexcept { return gains_; }
    std::size_t size() const noexcept { return gains_.size(); }
    double time(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }

private:
    double z_;
    double t0_;
    double dt_;
    std::vector<double> gains_;
};

/// Complex envelope samples A0 F(z, t) on a uniform time grid.
class ComplexSeries {
public:
    ComplexSeries(double t0, double dt, std::vector<complex> values);

    double t0() const noexcept { return t0_; }
    double dt() const noexcept { return dt_; }
    const std::vector<complex>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    double t0_;
    double dt_;
    std::vector<complex> values_;
};

struct PulseTrainStats {
    double period;
    double fwhm;
    double peak_gain;
    double min_gain;
    double depth;  // R = ln(peak_gain / min_gain) / 4
};

/// Minimum sampling accepted by analyze_train.
inline constexpr double min_samples_per_period = 64.0;

/// Pulse statistics of a gain series. Peaks are samples strictly above the
/// previous sample and not below the next one (a tie resolves to the
/// earliest sample), refined by parabolic interpolation of ln(gain). The
/// period is the least-squares spacing of the refined peaks; FWHM is measured
/// at half of the tallest peak with crossings interpolated in ln(gain).
///
/// Throws UnderSampled below 64 samples per 2 pi / Omega' or for a span
/// shorter than two periods, and ShallowModulation when half of the maximum
/// does not drop below the minimum (R <= ln 2 / 4 for a sinusoidal exponent).
PulseTrainStats analyze_train(const TimeSeries& series, double omega_prime);

/// (2 / Omega') arccos(1 - ln 2 / (2R)), the exact FWHM of exp(2R cos(Omega' t)).
double fwhm_closed_form(double depth, double omega_prime);

struct SidebandLine {
    int order;              // m: optical offset m Omega' from the carrier
    double power;           // mean power carried by the line
    double relative_power;  // power / total power
    double centroid;        // power-weighted optical offset of the line (rad/s)
};

/// Rectangular-window DFT of the envelope binned into lines at m Omega'.
/// Uses the e^{-i omega t} carrier convention: an envelope component
/// e^{-i m Omega' t} lands on line m (blue side for m > 0). The line powers
/// sum to the time-domain mean of |A|^2.
///
/// Throws NonCommensurate unless the window n*dt is an integer number of
/// periods 2 pi / Omega' to within half a sample.
std::vector<SidebandLine> spectrum(const ComplexSeries& series, double omega_prime);

TimeSeries sample_gain_series(const ProbeModulation& model, double z, double t0, double dt, std::size_t count);

ComplexSeries sample_envelope_series(const ProbeModulation& model, double z, double t0, double dt,
                                     std::size_t count);

}  // namespace pulsetrain
