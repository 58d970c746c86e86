// ri_cli.cpp — Command-line runner for repeated-interaction experiments

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ri/errors.hpp"
#include "ri/experiment.hpp"
#include "ri/metrics.hpp"

namespace {

using ri::experiment::ExperimentConfig;
using ri::experiment::json;

struct Overrides {
    std::string config_path;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<long long> stride;
    std::optional<long long> max_steps;
    std::optional<double> epsilon;
    std::string metric;
    std::string emit_config;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "JSON experiment config");
    cmd->add_option("--out", o.out, "Output file for CSV/JSON data");
    cmd->add_option("--seed", o.seed, "Seed for random initial states and coupling draws");
    cmd->add_option("--stride", o.stride, "Keep every k-th trajectory state");
    cmd->add_option("--max-steps", o.max_steps, "Step cap for the convergence search");
    cmd->add_option("--epsilon", o.epsilon, "Convergence threshold");
    cmd->add_option("--metric", o.metric, "Distance measure")->check(CLI::IsMember({"trace", "infidelity"}));
    cmd->add_option("--emit-config", o.emit_config, "Write the effective config as JSON and exit");
}

ExperimentConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ri::ValidationError("config", "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ri::ValidationError("config", std::string("invalid JSON: ") + e.what());
    }
    return ri::experiment::config_from_json(j);
}

void apply(ExperimentConfig& c, const Overrides& o) {
    if (!o.out.empty()) c.output_path = o.out;
    if (o.seed) {
        c.protocol.seed = *o.seed;
        if (c.initial_state.seed) c.initial_state.seed = *o.seed;
    }
    if (o.stride) c.stride = *o.stride;
    if (o.max_steps) c.max_steps = *o.max_steps;
    if (o.epsilon) c.epsilons = {*o.epsilon};
    if (!o.metric.empty()) c.metrics = {ri::metrics::metric_from_string(o.metric)};
    ri::experiment::validate(c);
}

int report_error(int code, const json& error) {
    std::cerr << error.dump() << '\n';
    return code;
}

int execute(ExperimentConfig c, const Overrides& o) {
    apply(c, o);
    if (!o.emit_config.empty()) {
        std::ofstream f(o.emit_config);
        if (!f) throw ri::ValidationError("emit-config", "cannot open " + o.emit_config);
        f << ri::experiment::to_json(c).dump(2) << '\n';
        std::cout << "wrote config " << o.emit_config << '\n';
        return 0;
    }
    const auto result = ri::experiment::run(c);
    std::cout << result.summary << '\n';
    if (result.error) return report_error(result.exit_code, *result.error);
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Repeated-interaction qubit relaxation: simulation, steady states, energetics and runtime"};
    app.require_subcommand(1);

    Overrides o;
    std::string preset_id;
    bool list_presets = false;
    std::optional<ri::experiment::Kind> kind;

    for (auto k : {ri::experiment::Kind::simulate, ri::experiment::Kind::steady, ri::experiment::Kind::resources,
                   ri::experiment::Kind::thermalize, ri::experiment::Kind::sweep}) {
        auto* cmd = app.add_subcommand(std::string(ri::experiment::to_string(k)),
                                       "Run a " + std::string(ri::experiment::to_string(k)) + " experiment");
        add_common(cmd, o);
        cmd->callback([&kind, k] { kind = k; });
    }
    auto* preset_cmd = app.add_subcommand("preset", "Run a named preset");
    preset_cmd->add_option("id", preset_id, "Preset id (fig2 ... fig11)");
    preset_cmd->add_flag("--list", list_presets, "List preset ids");
    add_common(preset_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ri::experiment::kExitValidation;
    }

    try {
        if (preset_cmd->parsed()) {
            if (list_presets) {
                for (const auto& id : ri::experiment::preset_ids()) std::cout << id << '\n';
                return 0;
            }
            if (preset_id.empty()) throw ri::ValidationError("preset", "missing preset id");
            if (!o.config_path.empty()) throw ri::ValidationError("config", "preset does not take --config");
            return execute(ri::experiment::preset(preset_id), o);
        }
        ExperimentConfig c;
        if (!o.config_path.empty()) {
            c = load(o.config_path);
            if (c.kind != *kind) {
                throw ri::ValidationError("kind", "config kind '" + std::string(ri::experiment::to_string(c.kind))
                                                      + "' does not match the subcommand");
            }
        } else {
            c.kind = *kind;
            if (c.kind == ri::experiment::Kind::thermalize) c.initial_state = ri::experiment::InitialState::per_run();
        }
        return execute(c, o);
    } catch (const ri::ValidationError& e) {
        return report_error(ri::experiment::kExitValidation,
                            json{{"error", "validation"}, {"field", e.field()}, {"message", e.what()}});
    } catch (const ri::Error& e) {
        return report_error(1, json{{"error", "internal"}, {"message", e.what()}});
    }
}
