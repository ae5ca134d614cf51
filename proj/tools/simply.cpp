#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "simply/commands.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::string out_dir;
    std::string format;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long long trials = -1;
};

simply::RunConfig make_config(const Overrides& o) {
    simply::RunConfig cfg = o.config_path.empty() ? simply::RunConfig{}
                                                  : simply::parse_config_file(o.config_path);
    if (o.seed_set) cfg.master_seed = o.seed;
    if (o.trials >= 0) cfg.trials = static_cast<std::size_t>(o.trials);
    if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
    if (!o.format.empty()) {
        if (o.format == "csv")
            cfg.format = simply::OutputFormat::csv;
        else if (o.format == "json")
            cfg.format = simply::OutputFormat::json;
        else
            throw simply::config_error("--format must be csv or json");
    }
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIMPLY logic gate simulator for perpendicular STT-MTJ devices"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the shared options after the subcommand too

    Overrides o;
    app.add_option("--config", o.config_path, "configuration file (sectioned key = value)");
    app.add_option("--seed", o.seed, "master seed override")->each([&](const std::string&) {
        o.seed_set = true;
    });
    app.add_option("--trials", o.trials, "Monte Carlo trials override");
    app.add_option("--out", o.out_dir, "output directory override");
    app.add_option("--format", o.format, "output format: csv or json");

    const std::map<std::string, std::pair<std::string, void (*)(const simply::RunConfig&)>>
        commands{
            {"characterize",
             {"device characteristics vs temperature and bias", simply::cmd_characterize}},
            {"read", {"READ campaign distributions and margins", simply::cmd_read}},
            {"gate", {"per-combination error and energy report", simply::cmd_gate}},
            {"sweep", {"design-space sweeps over (R_G, V_READ, V_SET)", simply::cmd_sweep}},
            {"temperature", {"temperature study with constant and PTAT V_REF",
                             simply::cmd_temperature}},
            {"calibrate", {"fit model constants to the reference anchors",
                           simply::cmd_calibrate}},
        };

    void (*selected)(const simply::RunConfig&) = nullptr;
    for (const auto& [name, entry] : commands) {
        auto* sub = app.add_subcommand(name, entry.first);
        auto handler = entry.second;
        sub->callback([&selected, handler] { selected = handler; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        selected(make_config(o));
    } catch (const simply::config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const simply::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const simply::calibration_error& e) {
        std::fprintf(stderr, "error (constant %s): %s\n", e.constant.c_str(), e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
