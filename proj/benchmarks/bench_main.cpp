#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "pulsetrain/harness/commands.hpp"

using namespace pulsetrain;
using namespace pulsetrain::harness;

namespace {

ProbeModulation default_model() {
    const RunConfig cfg;
    return ProbeModulation(cfg.ensemble(), cfg.pump(), cfg.state(), cfg.probe(), cfg.guard);
}

void BM_Exponent(benchmark::State& state) {
    const auto model = default_model();
    const double z = 0.5 * model.spatial_period();
    double t = z / cgs.c;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.exponent(z, t));
        t += 1e-15;
    }
}
BENCHMARK(BM_Exponent);

void BM_SweepFrequency(benchmark::State& state) {
    RunConfig cfg;
    cfg.offsets.count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_frequency(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepFrequency)->Arg(1201)->Arg(12001);

void BM_IntegrateCharacteristic(benchmark::State& state) {
    const auto model = default_model();
    const auto coefs = derive_coefficients(model);
    const auto steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(integrate_characteristic(coefs, model.spatial_period(), 0.0, steps));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateCharacteristic)->Arg(1000)->Arg(10000);

void BM_Spectrum(benchmark::State& state) {
    const auto model = default_model();
    const auto per = static_cast<std::size_t>(state.range(0));
    const double z = std::numbers::pi * cgs.c / model.omega_prime();
    const auto series = sample_envelope_series(model, z, z / cgs.c, model.temporal_period() / per, 4 * per);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(series, model.omega_prime()));
}
BENCHMARK(BM_Spectrum)->Arg(512)->Arg(4096);

void BM_Validate(benchmark::State& state) {
    const RunConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(validate(cfg));
}
BENCHMARK(BM_Validate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
