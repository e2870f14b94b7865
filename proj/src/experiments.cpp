#include "lipatrol/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "lipatrol/default_map.hpp"

namespace lipatrol {

std::vector<int> compositions_for(int group_size) {
  if (group_size < 1)
    throw std::invalid_argument("compositions_for: group size must be >= 1");
  std::set<int, std::greater<int>> lows{group_size, 0};
  if (group_size >= 2) {
    lows.insert(group_size - 1);  // single high-LI minority
    lows.insert(1);               // single low-LI minority
    if (group_size % 2 == 0) lows.insert(group_size / 2);
  }
  return {lows.begin(), lows.end()};
}

std::string composition_label(int n_low, int n_high) {
  if (n_low > 0 && n_high > 0)
    return std::to_string(n_low) + "L" + std::to_string(n_high) + "H";
  if (n_low > 0) return std::to_string(n_low) + "L";
  return std::to_string(n_high) + "H";
}

std::vector<TrialSpec> expand_grid(const ExperimentGrid& grid) {
  if (grid.group_sizes.empty())
    throw std::invalid_argument("expand_grid: group_sizes is empty");
  if (grid.repetitions < 1)
    throw std::invalid_argument("expand_grid: repetitions must be >= 1");

  const std::shared_ptr<const GridMap> map = grid.map ? grid.map : default_office_map();

  std::vector<TrialSpec> specs;
  std::size_t index = 0;
  for (int n : grid.group_sizes) {
    for (int n_low : compositions_for(n)) {
      for (bool comm : grid.comm_options) {
        for (int shifts : grid.shift_options) {
          for (int rep = 0; rep < grid.repetitions; ++rep) {
            TrialSpec spec;
            spec.index = index;
            spec.n_robots = n;
            spec.n_low = n_low;
            spec.composition = composition_label(n_low, n - n_low);
            spec.comm = comm;
            spec.shifts = shifts;
            spec.repetition = rep;

            TrialConfig& cfg = spec.config;
            cfg.env_seed = grid.env_seed;
            cfg.trial_seed = grid.base_trial_seed + splitmix64(index);
            cfg.n_robots = n;
            cfg.li_values.assign(n, grid.li_high);
            std::fill_n(cfg.li_values.begin(), n_low, grid.li_low);
            cfg.comm_enabled = comm;
            cfg.n_shifts = shifts;
            cfg.horizon = grid.horizon;
            cfg.map = map;

            specs.push_back(std::move(spec));
            ++index;
          }
        }
      }
    }
  }
  return specs;
}

std::vector<TrialRecord> run_experiment(
    const ExperimentGrid& grid, int parallelism,
    const std::function<void(std::size_t, std::size_t)>& progress) {
  std::vector<TrialSpec> specs = expand_grid(grid);
  const std::size_t total = specs.size();
  const int workers = std::max(1, std::min<int>(parallelism, static_cast<int>(total)));

  std::vector<TrialRecord> records(total);
  std::vector<std::uint8_t> failed(total, 0);
  std::vector<std::string> errors(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      records[i].spec = specs[i];
      try {
        records[i].result = run_trial(specs[i].config);
      } catch (const std::exception& e) {
        failed[i] = 1;
        errors[i] = e.what();
      }
      const std::size_t n_done = done.fetch_add(1) + 1;
      if (progress) progress(n_done, total);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<std::size_t> failures;
  for (std::size_t i = 0; i < total; ++i)
    if (failed[i]) failures.push_back(i);
  if (!failures.empty()) {
    // Keep the successful records available to the caller for partial flush.
    std::erase_if(records, [&](const TrialRecord& r) { return failed[r.spec.index]; });
    ExperimentFailure err("experiment: trial " + std::to_string(failures.front()) +
                              " failed: " + errors[failures.front()],
                          failures);
    throw err;
  }
  return records;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "n_robots,composition,comm,shifts,repetition,env_seed,trial_seed,"
         "total_reward,scan_count,rescans_unrewarding,collision_delays\n";
  for (const TrialRecord& rec : records) {
    const TrialSpec& s = rec.spec;
    const TrialResult& r = rec.result;
    out << s.n_robots << ',' << s.composition << ',' << (s.comm ? "on" : "off")
        << ',' << s.shifts << ',' << s.repetition << ',' << s.config.env_seed
        << ',' << s.config.trial_seed << ',' << r.total_reward << ','
        << r.scan_count << ',' << r.rescans_of_unrewarding << ','
        << r.collision_delays << '\n';
  }
}

std::string records_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_records_csv(out, records);
  return out.str();
}

std::string timeseries_filename(const TrialSpec& spec) {
  return spec.composition + "_" + (spec.comm ? "on" : "off") + "_" +
         std::to_string(spec.shifts) + "_" + std::to_string(spec.repetition) +
         ".csv";
}

std::string timeseries_csv(const TrialResult& result) {
  std::ostringstream out;
  out << "step,cumulative_reward\n";
  for (std::size_t t = 0; t < result.reward_timeseries.size(); ++t)
    out << t << ',' << result.reward_timeseries[t] << '\n';
  return out.str();
}

}  // namespace lipatrol
