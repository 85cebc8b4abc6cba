#include "pulsetrain/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace pulsetrain::harness {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw ConfigError("unknown key '" + where + "." + key + "'");
    }
}

double number(const json& obj, const char* key, double fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError("'" + where + "." + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError("'" + where + "." + key + "' must be finite");
    return x;
}

std::size_t count(const json& obj, const char* key, std::size_t fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ConfigError("'" + where + "." + key + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

complex amplitude(const json& obj, const char* key, complex fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ConfigError(std::string("'state.") + key + "' must be a number or [re, im]");
}

Range range(const json& obj, const std::string& where, Range fallback) {
    reject_unknown(obj, where, {"min", "max", "count", "geometric"});
    Range r = fallback;
    r.min = number(obj, "min", fallback.min, where);
    r.max = number(obj, "max", fallback.max, where);
    r.count = count(obj, "count", fallback.count, where);
    if (obj.contains("geometric")) r.geometric = obj.at("geometric").get<bool>();
    return r;
}

json range_json(const Range& r) {
    return {{"min", r.min}, {"max", r.max}, {"count", r.count}, {"geometric", r.geometric}};
}

json amplitude_json(complex a) {
    if (a.imag() == 0.0) return a.real();
    return json::array({a.real(), a.imag()});
}

void check_range(const Range& r, const std::string& where) {
    if (!std::isfinite(r.min) || !std::isfinite(r.max)) throw ConfigError(where + ": range must be finite");
    if (r.count == 0) throw ConfigError(where + ": grid must be non-empty");
    if (r.count > 1 && !(r.max > r.min)) throw ConfigError(where + ": max must exceed min");
    if (r.geometric && !(r.min > 0.0)) throw ConfigError(where + ": geometric range needs min > 0");
}

}  // namespace

std::vector<double> Range::values() const {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = min;
        return out;
    }
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / last;
        out[i] = geometric ? min * std::pow(max / min, f) : min + (max - min) * f;
    }
    out.back() = max;
    return out;
}

AtomEnsemble RunConfig::ensemble() const { return AtomEnsemble::from_dipole_squared(omega0, dipole_squared, density); }

PumpField RunConfig::pump() const { return PumpField(ensemble(), detuning, rabi); }

SuperpositionState RunConfig::state() const { return SuperpositionState(alpha, beta); }

ProbeField RunConfig::probe() const { return probe_at(probe_offset); }

ProbeField RunConfig::probe_at(double offset) const { return ProbeField::below_pump(pump(), offset, probe_amplitude); }

double RunConfig::omega_prime() const { return generalized_rabi(detuning, rabi); }

double RunConfig::z_cm() const { return z ? *z : theta * cgs.c / omega_prime(); }

double RunConfig::start_time() const { return t_start ? *t_start : z_cm() / cgs.c; }

RunConfig parse_config(const json& doc) {
    RunConfig cfg;
    reject_unknown(doc, "config",
                   {"ensemble", "pump", "state", "probe", "sweep", "dispersion", "propagation", "time", "guard",
                    "oracle", "output"});

    if (doc.contains("ensemble")) {
        const json& e = doc.at("ensemble");
        reject_unknown(e, "ensemble", {"omega0", "dipole_squared", "density"});
        cfg.omega0 = number(e, "omega0", cfg.omega0, "ensemble");
        cfg.dipole_squared = number(e, "dipole_squared", cfg.dipole_squared, "ensemble");
        cfg.density = number(e, "density", cfg.density, "ensemble");
    }
    if (doc.contains("pump")) {
        const json& p = doc.at("pump");
        reject_unknown(p, "pump", {"detuning", "rabi"});
        cfg.detuning = number(p, "detuning", cfg.detuning, "pump");
        cfg.rabi = number(p, "rabi", cfg.rabi, "pump");
    }
    if (doc.contains("state")) {
        const json& s = doc.at("state");
        reject_unknown(s, "state", {"alpha", "beta"});
        cfg.alpha = amplitude(s, "alpha", cfg.alpha);
        cfg.beta = amplitude(s, "beta", cfg.beta);
    }
    if (doc.contains("probe")) {
        const json& p = doc.at("probe");
        reject_unknown(p, "probe", {"offset", "amplitude"});
        cfg.probe_offset = number(p, "offset", cfg.probe_offset, "probe");
        cfg.probe_amplitude = number(p, "amplitude", cfg.probe_amplitude, "probe");
    }
    if (doc.contains("sweep")) cfg.offsets = range(doc.at("sweep"), "sweep", cfg.offsets);
    if (doc.contains("dispersion")) {
        const json& d = doc.at("dispersion");
        reject_unknown(d, "dispersion", {"rabi_ladder"});
        if (d.contains("rabi_ladder")) {
            cfg.rabi_ladder = range(d.at("rabi_ladder"), "dispersion.rabi_ladder", Range{1e8, 1e12, 41, true});
        }
    }
    if (doc.contains("propagation")) {
        const json& p = doc.at("propagation");
        reject_unknown(p, "propagation", {"z", "theta"});
        if (p.contains("z") && p.contains("theta")) throw ConfigError("give either propagation.z or propagation.theta");
        if (p.contains("z")) cfg.z = number(p, "z", 0.0, "propagation");
        cfg.theta = number(p, "theta", cfg.theta, "propagation");
    }
    if (doc.contains("time")) {
        const json& t = doc.at("time");
        reject_unknown(t, "time", {"periods", "samples_per_period", "start"});
        cfg.periods = number(t, "periods", cfg.periods, "time");
        cfg.samples_per_period = count(t, "samples_per_period", cfg.samples_per_period, "time");
        if (t.contains("start")) cfg.t_start = number(t, "start", 0.0, "time");
    }
    cfg.guard = number(doc, "guard", cfg.guard, "config");
    if (doc.contains("oracle")) {
        const json& o = doc.at("oracle");
        reject_unknown(o, "oracle", {"steps_per_period"});
        cfg.steps_per_period = count(o, "steps_per_period", cfg.steps_per_period, "oracle");
    }
    if (doc.contains("output")) {
        const json& o = doc.at("output");
        reject_unknown(o, "output", {"csv", "json"});
        if (o.contains("csv")) cfg.csv_path = o.at("csv").get<std::string>();
        if (o.contains("json")) cfg.json_path = o.at("json").get<std::string>();
    }

    validate_config(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in, nullptr, true, true);
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    try {
        return parse_config(doc);
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
}

json to_json(const RunConfig& c) {
    json doc = {
        {"ensemble", {{"omega0", c.omega0}, {"dipole_squared", c.dipole_squared}, {"density", c.density}}},
        {"pump", {{"detuning", c.detuning}, {"rabi", c.rabi}}},
        {"state", {{"alpha", amplitude_json(c.alpha)}, {"beta", amplitude_json(c.beta)}}},
        {"probe", {{"offset", c.probe_offset}, {"amplitude", c.probe_amplitude}}},
        {"sweep", range_json(c.offsets)},
        {"time", {{"periods", c.periods}, {"samples_per_period", c.samples_per_period}}},
        {"guard", c.guard},
        {"oracle", {{"steps_per_period", c.steps_per_period}}},
    };
    doc["propagation"] = c.z ? json{{"z", *c.z}} : json{{"theta", c.theta}};
    if (c.t_start) doc["time"]["start"] = *c.t_start;
    if (c.rabi_ladder) doc["dispersion"] = {{"rabi_ladder", range_json(*c.rabi_ladder)}};
    if (!c.csv_path.empty() || !c.json_path.empty()) doc["output"] = {{"csv", c.csv_path}, {"json", c.json_path}};
    return doc;
}

void validate_config(const RunConfig& c) {
    try {
        (void)c.probe();
        (void)c.state();
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    if (!(c.guard >= 0.0)) throw ConfigError("guard must be >= 0");
    check_range(c.offsets, "sweep");
    if (c.rabi_ladder) {
        check_range(*c.rabi_ladder, "dispersion.rabi_ladder");
        if (c.rabi_ladder->min < 0.0) throw ConfigError("dispersion.rabi_ladder: Rabi frequencies must be >= 0");
    }
    if (c.z && *c.z < 0.0) throw ConfigError("propagation.z must be >= 0");
    if (!std::isfinite(c.z_cm()) || c.z_cm() < 0.0) throw ConfigError("propagation.theta must give z >= 0");
    if (!(c.periods > 0.0)) throw ConfigError("time.periods must be > 0");
    if (c.t_start && *c.t_start < c.z_cm() / cgs.c) throw ConfigError("time.start precedes the wavefront arrival z/c");
}

}  // namespace pulsetrain::harness
