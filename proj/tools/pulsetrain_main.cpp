#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pulsetrain/harness/commands.hpp"

using namespace pulsetrain;
using namespace pulsetrain::harness;
using nlohmann::json;

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::optional<double> guard;
    std::optional<std::size_t> steps;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("-c,--config", opts.config_path, "JSON run configuration (defaults when omitted)");
    cmd->add_option("-o,--out", opts.out_path, "output file (stdout when omitted)");
    cmd->add_option("--guard", opts.guard, "half-width of the resonance exclusion band (rad/s)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--steps", opts.steps, "characteristic RK4 steps per spatial period")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "table format")->check(CLI::IsMember({"csv", "json"}));
}

RunConfig resolve(const CommonOptions& opts) {
    RunConfig cfg = opts.config_path.empty() ? RunConfig{} : load_config(opts.config_path);
    if (opts.guard) cfg.guard = *opts.guard;
    if (opts.steps) cfg.steps_per_period = *opts.steps;
    if (!opts.out_path.empty()) cfg.csv_path = opts.out_path;
    validate_config(cfg);
    return cfg;
}

json table_json(const CsvTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < table.header.size(); ++i) {
            try {
                obj[table.header[i]] = parse_double(row[i]);
            } catch (const std::exception&) {
                obj[table.header[i]] = row[i];
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

// Returns true when the table went to a file.
bool emit(const CsvTable& table, const std::string& path, const std::string& format) {
    std::ofstream file;
    if (!path.empty()) {
        file.open(path, std::ios::binary);
        if (!file) throw Error("cannot open output file '" + path + "'");
    }
    std::ostream& out = path.empty() ? std::cout : file;
    if (format == "json") {
        out << table_json(table).dump(2) << '\n';
    } else {
        write_csv(out, table);
    }
    return !path.empty();
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + path + "'");
    file << doc.dump(2) << '\n';
}

const char* status_label(Check::Status s) {
    switch (s) {
        case Check::Status::pass:
            return "[PASS]";
        case Check::Status::fail:
            return "[FAIL]";
        case Check::Status::skip:
            return "[SKIP]";
    }
    return "[????]";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pulse trains of a probe wave in a medium of pump-dressed two-level atoms"};
    app.require_subcommand(1);

    CommonOptions sweep_opts, evolve_opts, disp_opts, stats_opts, validate_opts;
    std::string stats_input;
    std::string validate_json;

    auto* sweep = app.add_subcommand("sweep-frequency", "Re G versus probe offset at t = pi/W' and 2 pi/W'");
    add_common(sweep, sweep_opts);
    auto* evolve_cmd = app.add_subcommand("evolve", "intensity gain time series at fixed z, with pulse statistics");
    add_common(evolve_cmd, evolve_opts);
    auto* disp = app.add_subcommand("dispersion-scan", "static refractive index over offsets or a Rabi ladder");
    add_common(disp, disp_opts);
    auto* stats = app.add_subcommand("pulse-stats", "pulse statistics of a gain series written by evolve");
    add_common(stats, stats_opts);
    stats->add_option("-i,--input", stats_input, "evolve CSV")->required()->check(CLI::ExistingFile);
    auto* val = app.add_subcommand("validate", "run the invariant and oracle checks");
    add_common(val, validate_opts);
    val->add_option("--json", validate_json, "write the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            const auto cfg = resolve(sweep_opts);
            emit(sweep_table(sweep_frequency(cfg)), cfg.csv_path, sweep_opts.format);
        } else if (*evolve_cmd) {
            const auto cfg = resolve(evolve_opts);
            const auto result = evolve(cfg);
            const bool to_file = emit(evolve_table(result), cfg.csv_path, evolve_opts.format);
            const json doc = stats_json(result);
            if (!cfg.json_path.empty()) write_json_file(cfg.json_path, doc);
            (to_file ? std::cout : std::cerr) << doc.dump(2) << '\n';
        } else if (*disp) {
            const auto cfg = resolve(disp_opts);
            emit(dispersion_table(dispersion_scan(cfg)), cfg.csv_path, disp_opts.format);
        } else if (*stats) {
            const auto cfg = resolve(stats_opts);
            std::ifstream in(stats_input, std::ios::binary);
            const auto series = series_from_table(read_csv(in));
            const json doc = pulse_stats_json(analyze_train(series, cfg.omega_prime()));
            if (stats_opts.out_path.empty()) {
                std::cout << doc.dump(2) << '\n';
            } else {
                write_json_file(stats_opts.out_path, doc);
            }
        } else if (*val) {
            const auto cfg = resolve(validate_opts);
            const auto report = validate(cfg);
            for (const auto& c : report.checks) {
                std::cout << status_label(c.status) << ' ' << c.name << ": " << c.detail;
                if (!c.measured.empty()) std::cout << "  " << c.measured.dump();
                std::cout << '\n';
            }
            std::cout << (report.passed() ? "validation passed" : "validation FAILED") << " in " << report.seconds
                      << " s\n";
            const std::string path = !validate_json.empty() ? validate_json : cfg.json_path;
            if (!path.empty()) write_json_file(path, report.to_json());
            return report.passed() ? 0 : 1;
        }
    } catch (const ResonancePole& e) {
        std::cerr << "error: ResonancePole (" << pole_tag(e.pole()) << "): " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
