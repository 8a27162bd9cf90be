#pragma once

#include "qwcf/protocol.hpp"
#include "qwcf/solver.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace qwcf {

struct ConfigError : Error { using Error::Error; };

// Shared configuration for the command-line tool. Every field has a default;
// a JSON config file may set any subset, and command-line flags override the
// file. Unknown keys are rejected rather than ignored.
struct RunConfig {
    double x = 1.0 - 1.0 / std::sqrt(2.0);
    std::optional<double> y;          // default: the fair choice for x
    std::optional<double> z;          // honest/cheat default: abort-free choice
    LossBudget losses{};              // honest / cheat commands
    LinkModel link{};                 // solve command
    double detector_eff = 1.0;        // solve / sweep, both parties
    std::vector<double> distances_km; // sweep
    int truncation = 6;               // photon-number cap for simulations
    std::string format = "table";     // csv | json | table
    std::string out = "-";            // "-" writes to stdout
    bool oracle = false;              // cross-check closed forms numerically
};

// Throws ConfigError on malformed JSON, unknown keys, wrong types, or
// out-of-range values.
RunConfig parse_config(const std::string& json_text);

// Inverse of parse_config: parse_config(serialize_config(c)) reproduces c,
// and serializing again yields the identical string.
std::string serialize_config(const RunConfig& config);

} // namespace qwcf
