#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "lipatrol/engine.hpp"

namespace lipatrol {

// Sweep definition mirrored by the JSON grid config file.
struct ExperimentGrid {
  std::vector<int> group_sizes{1, 2, 4, 6};
  double li_low = 0.5;
  double li_high = 0.95;
  std::vector<bool> comm_options{false, true};
  std::vector<int> shift_options{0, 1, 3};
  int repetitions = 10;
  std::uint64_t base_trial_seed = 1000;
  std::uint64_t env_seed = 42;
  int horizon = 1300;
  std::shared_ptr<const GridMap> map;  // bundled default map when null
  bool emit_timeseries = true;
};

// Low-LI counts for one group size: homogeneous ends, the 50/50 mixture, and
// the two single-minority mixes, in descending low count.
std::vector<int> compositions_for(int group_size);

// "xLyH" labels; homogeneous groups collapse to "xL" / "yH".
std::string composition_label(int n_low, int n_high);

struct TrialSpec {
  std::size_t index = 0;  // position in enumeration order
  int n_robots = 0;
  int n_low = 0;
  std::string composition;
  bool comm = false;
  int shifts = 0;
  int repetition = 0;
  TrialConfig config;
};

struct TrialRecord {
  TrialSpec spec;
  TrialResult result;
};

// Every (N, composition, comm, shifts, repetition) combination, in that nested
// order. Each trial gets trial_seed = base_trial_seed + splitmix64(index);
// env_seed is shared by all.
std::vector<TrialSpec> expand_grid(const ExperimentGrid& grid);

// Executes all trials over `parallelism` workers. Record order and contents
// are independent of worker count. Throws ExperimentFailure carrying the
// completed records if any trial fails.
struct ExperimentFailure : std::runtime_error {
  ExperimentFailure(const std::string& what, std::vector<std::size_t> failed)
      : std::runtime_error(what), failed_indices(std::move(failed)) {}
  std::vector<std::size_t> failed_indices;
};

std::vector<TrialRecord> run_experiment(
    const ExperimentGrid& grid, int parallelism,
    const std::function<void(std::size_t done, std::size_t total)>& progress = {});

// CSV with the exact header:
// n_robots,composition,comm,shifts,repetition,env_seed,trial_seed,
// total_reward,scan_count,rescans_unrewarding,collision_delays
void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records);

std::string records_csv(const std::vector<TrialRecord>& records);

// Per-trial cumulative reward file name: <composition>_<comm>_<shifts>_<rep>.csv
std::string timeseries_filename(const TrialSpec& spec);
std::string timeseries_csv(const TrialResult& result);

}  // namespace lipatrol
