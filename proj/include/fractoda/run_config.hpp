#pragma once

// Flat key=value run configuration shared by the CLI subcommands.
// Recognized keys: a, b, c1, c2, c3, q, k, m, h, N, epsilon, controlled,
// out.  '#' starts a comment line; duplicate or unknown keys are errors.
// Serialization uses at most 12 significant digits, which round-trips
// losslessly through binary doubles.

#include <iosfwd>
#include <set>
#include <string>

#include "fractoda/types.hpp"

namespace fractoda {

struct RunConfig {
    ParamSet params{};
    Equilibrium target{};
    IntegratorConfig integ{};
    bool controlled = true;
    std::string out = "trajectory.csv";

    bool operator==(const RunConfig&) const = default;
};

struct ParsedConfig {
    RunConfig config;
    std::set<std::string> keys;  // keys actually present in the source

    [[nodiscard]] bool has(const std::string& key) const { return keys.count(key) != 0; }
};

/// Parses the key=value format.  Throws ConfigError with a line reference
/// on malformed input, unknown keys or duplicates.
ParsedConfig parse_run_config(std::istream& in);
ParsedConfig parse_run_config_text(const std::string& text);
ParsedConfig load_run_config(const std::string& path);

/// Canonical serialization: fixed key order, 12 significant digits.
std::string serialize_run_config(const RunConfig& cfg);

/// Formats one double with at most 12 significant digits.
std::string format_g12(double v);

}  // namespace fractoda
