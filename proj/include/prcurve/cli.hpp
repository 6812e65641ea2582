// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "prcurve/synth.hpp"

namespace prc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;  // bad arguments or malformed input text
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

// Parameters shared by the curves / rescale / simulate commands; each
// command reads the subset it needs.
struct RunConfig {
  std::filesystem::path input;
  std::vector<double> ratios{1.0};
  double from_r = 1.0;
  double to_r = 0.1;
  double r0 = 1.0;
  double beta = 1.0;
  std::uint64_t seed = 1;
  double grid_lo = 0.05;
  double grid_hi = 0.95;
  int grid_count = 181;
  long long n_pos = 5000;
  long long n_neg = 5000;
  TrainConfig train;
  std::filesystem::path out_dir = ".";
};

// Parses "lo:hi:count" into the grid fields.
void parse_grid_spec(const std::string& text, RunConfig& config);

void cmd_curves(const RunConfig& config);
void cmd_rescale(const RunConfig& config);
void cmd_simulate(const RunConfig& config);

// Full argv entry point; maps exceptions to the exit codes above.
int run(int argc, const char* const* argv);

}  // namespace prc::cli
