#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitile/rational.hpp"

namespace orbitile {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupportedCase = 3;
inline constexpr int kExitNonClosing = 4;

// Fully resolved run configuration. Flags override config-file entries; every
// effective value is echoed into the report header for provenance.
struct RunConfig {
    std::string command;  // classify | tile | geodesics | pipeline
    std::optional<int> case_id;
    long param = 0;   // family parameter p (or pi/alpha); 0 = family default
    long param2 = 0;  // second family parameter when present
    std::vector<Rational> angles;
    std::string curvature = "all";  // pos | flat | all
    unsigned seed = 0;
    int m = 0;
    int n_max = 20;
    std::string format = "json";  // json | csv
    std::string out_path;         // empty = stdout
    std::string plot_out;
};

int cmd_classify(const RunConfig& config);
int cmd_tile(const RunConfig& config);
int cmd_geodesics(const RunConfig& config);
int cmd_pipeline(const RunConfig& config);

// Parse argv and dispatch; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace orbitile
