#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tbc/experiments/controlled.hpp"
#include "tbc/experiments/public_datasets.hpp"
#include "tbc/experiments/tree_analysis.hpp"

namespace tbc::experiments {

/// Library version baked into every report.
std::string library_version();

// Every writer creates `dir` if needed and returns the files it wrote.
//
// report.json holds the config echo, notes and all scores, and is a pure
// function of the inputs, so repeated runs give identical bytes. Wall-clock
// times go to timings.json and report.md only.

std::string controlled_report_json(const ControlledResult& result);
std::string controlled_report_markdown(const ControlledResult& result);
/// report.json, report.md, timings.json, predictions.csv, train.csv,
/// test.csv and, when TBC ran, tbc_loss.csv.
std::vector<std::filesystem::path> write_controlled(const ControlledResult& result, const std::filesystem::path& dir);

struct SizeSweepResult {
  SizeSweepConfig config;
  std::vector<SizePoint> points;
};

struct PruneSweepResult {
  std::uint64_t seed = 0;
  bool fast = false;
  std::size_t train_rows = 0;
  std::vector<PrunePoint> points;
};

std::string size_sweep_json(const SizeSweepResult& result);
std::string prune_sweep_json(const PruneSweepResult& result);
/// fig2_size.csv (combinations,node_count), report.json, report.md.
std::vector<std::filesystem::path> write_size_sweep(const SizeSweepResult& result, const std::filesystem::path& dir);
/// fig2_prune.csv (max_depth,train_accuracy; unlimited depth is "inf"), report.json, report.md.
std::vector<std::filesystem::path> write_prune_sweep(const PruneSweepResult& result,
                                                     const std::filesystem::path& dir);

std::string public_report_json(const PublicResult& result);
std::string public_report_markdown(const PublicResult& result);
/// report.json, report.md, timings.json, predictions.csv.
std::vector<std::filesystem::path> write_public(const PublicResult& result, const std::filesystem::path& dir);

}  // namespace tbc::experiments
