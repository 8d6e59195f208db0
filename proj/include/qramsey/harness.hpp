#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qramsey/coloring.hpp"
#include "qramsey/ground.hpp"
#include "qramsey/space.hpp"

namespace qramsey {

inline constexpr const char* kToolName = "qramsey";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Task { verify_setmap, color, witness, extract, dense_check, mod_colors };

std::string task_name(Task task);
Task parse_task(const std::string& name);

// One experiment. Serializes to a single JSON document; the CLI builds it
// from flags, optionally on top of a --config file.
struct ExperimentConfig {
    Task task = Task::verify_setmap;
    std::uint32_t n = 0;
    GroundDescriptor ground;
    SpaceDescriptor space;

    std::uint64_t steps = 8;           // K: chain length / extraction steps
    std::uint32_t l = 2;               // mod-colors classes
    std::uint64_t budget = 1'000'000;  // scan budget per search
    IndexFilter filter;
    std::string mode = "exhaustive";   // verify-setmap: exhaustive | sample
    std::uint64_t sample_count = 1000;
    std::uint64_t sample_seed = 0;
    std::uint64_t prefix = 50;         // dense-check
    std::vector<Rational> eps_grid;
    std::optional<std::vector<OrdinalIndex>> indices;  // color: tuple by position
    std::optional<std::vector<Point>> points;          // color: tuple by value

    std::string out;    // report path, empty = stdout summary only
    std::string trace;  // color: JSONL step trace path

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);

    // Cross-module checks; throws std::invalid_argument naming the field.
    void validate() const;
};

struct RunReport {
    nlohmann::json config_echo;
    nlohmann::json payload;
    double elapsed_seconds = 0;
    int status = 0;  // 0 iff zero violations/failures
    std::string summary;

    nlohmann::json to_json() const;
};

// Dispatches the config to the owning module, writes the report to
// config.out when set, and returns it. Identical configs produce identical
// payloads; wall-clock timing lives outside the payload.
RunReport run(const ExperimentConfig& config);

// Thrown on unusable command lines; carries the exit status for main().
struct CliError : std::runtime_error {
    explicit CliError(const std::string& what, int exit_code = 2)
        : std::runtime_error(what), code(exit_code) {}
    int code;
};

// Parses `qramsey <task> [flags]`. Never touches the process environment, so
// tests can drive it directly. Throws CliError for unknown tasks or flags and
// for unparsable values; --help raises CliError with code 0 after printing.
ExperimentConfig parse_cli(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

}  // namespace qramsey
