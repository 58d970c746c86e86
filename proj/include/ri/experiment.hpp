// experiment.hpp — Experiment configuration, figure presets and the run dispatcher

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ri/metrics.hpp"
#include "ri/model.hpp"
#include "ri/protocols.hpp"

namespace ri::experiment {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class Kind { simulate, steady, resources, thermalize, sweep };

std::string_view to_string(Kind k);
Kind kind_from_string(std::string_view name); // throws ValidationError

// One sweep axis over an RIParams field: explicit values, or `points` samples
// from min to max on a linear or logarithmic scale.
struct GridAxis {
    std::string name;
    std::vector<double> values; // used when non-empty
    double min{0.0};
    double max{0.0};
    long long points{0};
    bool log_scale{false};

    std::vector<double> samples() const;
    bool operator==(const GridAxis&) const = default;
};

// An explicit state, "random(N)" (a fixed state drawn from seed N) or "random"
// (a fresh state per protocol run; thermalize only).
struct InitialState {
    std::optional<QubitState> state;
    std::optional<std::uint64_t> seed;

    static InitialState fixed(const QubitState& s) { return {s, std::nullopt}; }
    static InitialState random(std::uint64_t seed) { return {std::nullopt, seed}; }
    static InitialState per_run() { return {std::nullopt, std::nullopt}; }
    bool is_per_run() const { return !state && !seed; }
    QubitState resolve() const; // throws ValidationError for per-run
    bool operator==(const InitialState&) const = default;
};

struct ExperimentConfig {
    int schema_version{kSchemaVersion};
    Kind kind{Kind::simulate};
    RIParams params{1.0, 2.0, 2.0, 1.0, 0.0, 1.0, 0.01}; // non-degenerate reference set
    InitialState initial_state{InitialState::fixed(QubitState{0.5, {0.0, 0.0}})};
    long long n_steps{1000};
    long long stride{1};
    bool with_ledger{true};
    std::vector<double> epsilons{0.05};
    std::vector<metrics::Metric> metrics{metrics::Metric::trace_distance};
    long long max_steps{metrics::kDefaultStepCap};
    std::vector<GridAxis> sweep_axes;
    protocols::ProtocolConfig protocol{};
    long long seeds{1};
    double threshold{protocols::kDefaultThermalizationThreshold};
    std::string output_path;
    std::string preset;
    std::vector<std::string> notes; // provenance of every preset value

    bool operator==(const ExperimentConfig&) const = default;
};

// Throws ValidationError naming the offending field.
void validate(const ExperimentConfig& config);

json to_json(const ExperimentConfig& config);
// Parses and validates; unknown fields are rejected.
ExperimentConfig config_from_json(const json& j);

std::vector<std::string> preset_ids();
ExperimentConfig preset(std::string_view id); // throws ValidationError for unknown ids

struct RunResult {
    int exit_code{0};
    std::string summary;  // one line for stdout
    std::optional<json> error;
    std::optional<json> report; // side summary, written next to output_path
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNonConvergence = 3;
inline constexpr int kExitDegenerate = 4;

// Runs the configured pipeline, writing data to config.output_path when set.
// Sweep rows are emitted in row-major order over the axes, then epsilon, then metric.
RunResult run(const ExperimentConfig& config);

// Same, with the primary data written to `out` instead of output_path.
RunResult run(const ExperimentConfig& config, std::ostream& out);

} // namespace ri::experiment
