#include "pulsetrain/pulse_analysis.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

namespace pulsetrain {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Extremum {
    std::size_t index;
    double time;
    double value;  // ln gain at the refined position
};

// Vertex of the parabola through (-1, left), (0, centre), (1, right).
Extremum refine(std::size_t i, double left, double centre, double right, const TimeSeries& series) {
    const double curvature = left - 2.0 * centre + right;
    double shift = 0.0;
    double value = centre;
    if (curvature != 0.0) {
        shift = 0.5 * (left - right) / curvature;
        shift = std::clamp(shift, -0.5, 0.5);
        value = centre - 0.25 * (left - right) * shift;
    }
    return {i, series.time(i) + shift * series.dt(), value};
}

double least_squares_spacing(const std::vector<Extremum>& peaks) {
    const double n = static_cast<double>(peaks.size());
    const double mean_k = 0.5 * (n - 1.0);
    double mean_t = 0.0;
    for (const auto& p : peaks) mean_t += p.time;
    mean_t /= n;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < peaks.size(); ++k) {
        const double dk = static_cast<double>(k) - mean_k;
        num += dk * (peaks[k].time - mean_t);
        den += dk * dk;
    }
    return num / den;
}

// FFTW planning is not thread-safe; execution on a private plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

TimeSeries::TimeSeries(double z, double t0, double dt, std::vector<double> gains)
    : z_(z), t0_(t0), dt_(dt), gains_(std::move(gains)) {
    if (!std::isfinite(dt) || dt <= 0.0) throw InvalidArgument("time series spacing must be > 0");
    if (!std::isfinite(t0) || !std::isfinite(z)) throw InvalidArgument("time series origin must be finite");
    if (gains_.empty()) throw InvalidArgument("time series must be non-empty");
    for (double g : gains_) {
        if (!(g > 0.0) || !std::isfinite(g)) throw InvalidArgument("intensity gains must be finite and > 0");
    }
}

ComplexSeries::ComplexSeries(double t0, double dt, std::vector<complex> values)
    : t0_(t0), dt_(dt), values_(std::move(values)) {
    if (!std::isfinite(dt) || dt <= 0.0) throw InvalidArgument("series spacing must be > 0");
    if (values_.empty()) throw InvalidArgument("series must be non-empty");
}

PulseTrainStats analyze_train(const TimeSeries& series, double omega_prime) {
    if (!(omega_prime > 0.0)) throw InvalidArgument("Omega' must be > 0");
    const double period = two_pi / omega_prime;
    if (period / series.dt() < min_samples_per_period * (1.0 - 1e-9)) {
        throw UnderSampled("fewer than 64 samples per modulation period");
    }
    const std::size_t n = series.size();
    const double span = static_cast<double>(n - 1) * series.dt();
    if (span < 2.0 * period * (1.0 - 1e-9)) throw UnderSampled("series spans fewer than two modulation periods");

    std::vector<double> lg(n);
    std::transform(series.gains().begin(), series.gains().end(), lg.begin(), [](double g) { return std::log(g); });

    const auto [min_it, max_it] = std::minmax_element(lg.begin(), lg.end());
    const double sample_max = *max_it;
    const double sample_min = *min_it;
    if (!(sample_max - sample_min > std::numbers::ln2)) {
        throw ShallowModulation("half-maximum level does not separate the peaks");
    }

    std::vector<Extremum> peaks;
    std::vector<Extremum> troughs;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (lg[i] > lg[i - 1] && lg[i] >= lg[i + 1] && lg[i] > sample_max - std::numbers::ln2) {
            peaks.push_back(refine(i, lg[i - 1], lg[i], lg[i + 1], series));
        }
        if (lg[i] < lg[i - 1] && lg[i] <= lg[i + 1]) {
            troughs.push_back(refine(i, lg[i - 1], lg[i], lg[i + 1], series));
        }
    }
    if (peaks.size() < 2) throw UnderSampled("fewer than two interior pulses in the series");

    PulseTrainStats stats{};
    stats.period = least_squares_spacing(peaks);

    double peak_log = sample_max;
    for (const auto& p : peaks) peak_log = std::max(peak_log, p.value);
    double min_log = sample_min;
    for (const auto& t : troughs) min_log = std::min(min_log, t.value);
    stats.peak_gain = std::exp(peak_log);
    stats.min_gain = std::exp(min_log);
    stats.depth = 0.25 * (peak_log - min_log);

    // Tallest pulse first, earliest among equals.
    std::vector<Extremum> order = peaks;
    std::stable_sort(order.begin(), order.end(), [](const Extremum& a, const Extremum& b) { return a.value > b.value; });

    for (const auto& p : order) {
        const double level = p.value - std::numbers::ln2;
        std::size_t left = p.index;
        while (left > 0 && lg[left] >= level) --left;
        std::size_t right = p.index;
        while (right + 1 < n && lg[right] >= level) ++right;
        if (lg[left] >= level || lg[right] >= level) continue;  // pulse runs off the series

        const double t_left = series.time(left) + series.dt() * (level - lg[left]) / (lg[left + 1] - lg[left]);
        const double t_right =
            series.time(right - 1) + series.dt() * (lg[right - 1] - level) / (lg[right - 1] - lg[right]);
        stats.fwhm = t_right - t_left;
        return stats;
    }
    throw UnderSampled("no pulse is fully contained in the series");
}

double fwhm_closed_form(double depth, double omega_prime) {
    if (!(omega_prime > 0.0)) throw InvalidArgument("Omega' must be > 0");
    if (!(depth > 0.25 * std::numbers::ln2)) throw ShallowModulation("depth R <= ln 2 / 4: pulses do not separate");
    return 2.0 / omega_prime * std::acos(1.0 - std::numbers::ln2 / (2.0 * depth));
}

std::vector<SidebandLine> spectrum(const ComplexSeries& series, double omega_prime) {
    if (!(omega_prime > 0.0)) throw InvalidArgument("Omega' must be > 0");
    const std::size_t n = series.size();
    const double period = two_pi / omega_prime;
    const double window = static_cast<double>(n) * series.dt();
    const double periods = std::round(window / period);
    if (periods < 1.0 || std::abs(window - periods * period) > 0.5 * series.dt()) {
        throw NonCommensurate("window is not an integer number of modulation periods");
    }

    std::vector<complex> in(series.values());
    std::vector<complex> out(n);
    {
        auto* in_ptr = reinterpret_cast<fftw_complex*>(in.data());
        auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
        fftw_plan plan = nullptr;
        {
            std::lock_guard lock(planner_mutex());
            plan = fftw_plan_dft_1d(static_cast<int>(n), in_ptr, out_ptr, FFTW_FORWARD, FFTW_ESTIMATE);
        }
        fftw_execute(plan);
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    const double bin = two_pi / window;
    const double norm = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    std::map<int, SidebandLine> lines;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double signed_k = k <= n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
        const double offset = -signed_k * bin;  // envelope e^{+i nu t} sits at optical offset -nu
        const int order = static_cast<int>(std::lround(offset / omega_prime));
        const double power = std::norm(out[k]) * norm;
        auto& line = lines.try_emplace(order, SidebandLine{order, 0.0, 0.0, 0.0}).first->second;
        line.power += power;
        line.centroid += power * offset;
        total += power;
    }

    std::vector<SidebandLine> result;
    result.reserve(lines.size());
    for (auto& [order, line] : lines) {
        line.centroid = line.power > 0.0 ? line.centroid / line.power : order * omega_prime;
        line.relative_power = total > 0.0 ? line.power / total : 0.0;
        result.push_back(line);
    }
    return result;
}

TimeSeries sample_gain_series(const ProbeModulation& model, double z, double t0, double dt, std::size_t count) {
    std::vector<double> gains(count);
    for (std::size_t i = 0; i < count; ++i) {
        gains[i] = model.field_sample(z, t0 + static_cast<double>(i) * dt).intensity_gain;
    }
    return TimeSeries(z, t0, dt, std::move(gains));
}

ComplexSeries sample_envelope_series(const ProbeModulation& model, double z, double t0, double dt,
                                     std::size_t count) {
    std::vector<complex> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = model.field_sample(z, t0 + static_cast<double>(i) * dt).amplitude;
    }
    return ComplexSeries(t0, dt, std::move(values));
}

}  // namespace pulsetrain
