// Command-line front end: simulate one trial, sweep an experiment grid,
// analyze a results CSV, or plot results as SVG.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lipatrol/csvio.hpp"
#include "lipatrol/default_map.hpp"
#include "lipatrol/engine.hpp"
#include "lipatrol/experiments.hpp"
#include "lipatrol/log.hpp"
#include "lipatrol/stats.hpp"
#include "lipatrol/svgplot.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace lipatrol;

namespace {

constexpr const char* kVersion = "0.1.0";

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

void ensure_writable_dir(const fs::path& dir) {
  fs::create_directories(dir);
  const fs::path probe = dir / ".write_probe";
  std::ofstream out(probe);
  if (!out) throw std::runtime_error("output directory is not writable: " + dir.string());
  out.close();
  fs::remove(probe);
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const json& resolved, const std::vector<std::string>& artifacts,
                    double duration_seconds) {
  json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = command;
  manifest["config"] = resolved;
  manifest["artifacts"] = artifacts;
  manifest["duration_seconds"] = duration_seconds;
  write_text_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
}

std::shared_ptr<const GridMap> load_map(const std::string& path) {
  if (path.empty()) return default_office_map();
  return std::make_shared<const GridMap>(parse_map(read_text_file(path)));
}

std::vector<double> parse_li_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size())
      throw CLI::ValidationError("--li", "not a number: '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw CLI::ValidationError("--li", "empty list");
  return values;
}

// xLyH when every value is one of the canonical levels, else the raw list.
std::string li_composition_label(const std::vector<double>& li_values) {
  int lows = 0, highs = 0;
  for (double v : li_values) {
    if (v == 0.5) ++lows;
    else if (v == 0.95) ++highs;
  }
  if (lows + highs == static_cast<int>(li_values.size()))
    return composition_label(lows, highs);
  std::ostringstream out;
  for (std::size_t i = 0; i < li_values.size(); ++i)
    out << (i ? ";" : "") << li_values[i];
  return out.str();
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string map_path;
  int robots = 1;
  std::string li_csv = "0.5";
  bool comm = false;
  int shifts = 0;
  int steps = 1300;
  std::uint64_t seed = 1;
  std::uint64_t env_seed = 42;
  std::string out_dir = "out";
};

int cmd_simulate(const SimulateArgs& args) {
  Stopwatch watch;
  const std::vector<double> li_values = parse_li_list(args.li_csv);
  if (static_cast<int>(li_values.size()) != args.robots)
    throw CLI::ValidationError(
        "--li", "got " + std::to_string(li_values.size()) + " values for " +
                    std::to_string(args.robots) + " robots");

  TrialConfig cfg;
  cfg.map = load_map(args.map_path);
  cfg.n_robots = args.robots;
  cfg.li_values = li_values;
  cfg.comm_enabled = args.comm;
  cfg.n_shifts = args.shifts;
  cfg.horizon = args.steps;
  cfg.trial_seed = args.seed;
  cfg.env_seed = args.env_seed;
  cfg.record_events = true;

  const fs::path out_dir = args.out_dir;
  ensure_writable_dir(out_dir);

  LIP_INFO("simulate: %d robot(s), %d steps, comm %s, %d shift(s)", args.robots,
           args.steps, args.comm ? "on" : "off", args.shifts);
  const TrialResult result = run_trial(cfg);

  TrialRecord record;
  record.spec.n_robots = args.robots;
  record.spec.composition = li_composition_label(li_values);
  record.spec.comm = args.comm;
  record.spec.shifts = args.shifts;
  record.spec.repetition = 0;
  record.spec.config = cfg;
  record.result = result;
  write_text_file((out_dir / "result.csv").string(), records_csv({record}));
  write_text_file((out_dir / "events.csv").string(), event_log_csv(result.events));

  json resolved = {{"map", args.map_path.empty() ? "<bundled>" : args.map_path},
                   {"robots", args.robots},
                   {"li", li_values},
                   {"comm", args.comm},
                   {"shifts", args.shifts},
                   {"steps", args.steps},
                   {"seed", args.seed},
                   {"env_seed", args.env_seed}};
  write_manifest(out_dir, "simulate", resolved, {"result.csv", "events.csv"},
                 watch.seconds());
  LIP_INFO("simulate: total reward %lld over %d steps",
           static_cast<long long>(result.total_reward), args.steps);
  return 0;
}

// --------------------------------------------------------------- experiment

ExperimentGrid grid_from_json(const json& doc, std::string* map_path_out) {
  static const std::set<std::string> known = {
      "group_sizes", "li_low",          "li_high", "comm_options",
      "shift_options", "repetitions",   "base_trial_seed", "env_seed",
      "horizon",     "map",             "emit_timeseries"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known.contains(key))
      throw std::runtime_error("grid config: unknown key '" + key + "'");
  }

  ExperimentGrid grid;
  if (doc.contains("group_sizes"))
    grid.group_sizes = doc["group_sizes"].get<std::vector<int>>();
  if (doc.contains("li_low")) grid.li_low = doc["li_low"].get<double>();
  if (doc.contains("li_high")) grid.li_high = doc["li_high"].get<double>();
  if (doc.contains("comm_options")) {
    grid.comm_options.clear();
    for (const auto& opt : doc["comm_options"]) {
      const std::string s = opt.get<std::string>();
      if (s != "on" && s != "off")
        throw std::runtime_error("grid config: comm_options entries must be on/off");
      grid.comm_options.push_back(s == "on");
    }
  }
  if (doc.contains("shift_options"))
    grid.shift_options = doc["shift_options"].get<std::vector<int>>();
  if (doc.contains("repetitions")) grid.repetitions = doc["repetitions"].get<int>();
  if (doc.contains("base_trial_seed"))
    grid.base_trial_seed = doc["base_trial_seed"].get<std::uint64_t>();
  if (doc.contains("env_seed")) grid.env_seed = doc["env_seed"].get<std::uint64_t>();
  if (doc.contains("horizon")) grid.horizon = doc["horizon"].get<int>();
  if (doc.contains("map")) {
    *map_path_out = doc["map"].get<std::string>();
    grid.map = load_map(*map_path_out);
  }
  if (doc.contains("emit_timeseries"))
    grid.emit_timeseries = doc["emit_timeseries"].get<bool>();
  return grid;
}

// Tukey reports per (comm, shifts, N) panel, compositions as groups.
std::vector<std::string> write_panel_reports(const fs::path& out_dir,
                                             const std::vector<TrialRecord>& records,
                                             double alpha) {
  std::map<std::tuple<bool, int, int>, std::map<std::string, GroupSamples>> panels;
  std::map<std::tuple<bool, int, int>, std::vector<std::string>> panel_order;
  for (const TrialRecord& rec : records) {
    const auto key = std::make_tuple(rec.spec.comm, rec.spec.shifts, rec.spec.n_robots);
    auto& groups = panels[key];
    if (!groups.contains(rec.spec.composition)) {
      groups[rec.spec.composition].label = rec.spec.composition;
      panel_order[key].push_back(rec.spec.composition);
    }
    groups[rec.spec.composition].values.push_back(
        static_cast<double>(rec.result.total_reward));
  }

  std::vector<std::string> artifacts;
  for (const auto& [key, groups] : panels) {
    const auto& [comm, shifts, n_robots] = key;
    std::vector<GroupSamples> ordered;
    for (const std::string& label : panel_order[key]) {
      const GroupSamples& g = groups.at(label);
      if (g.values.size() >= 2) ordered.push_back(g);
    }
    if (ordered.size() < 2) continue;  // nothing to compare in this panel

    const TukeyReport report = tukey_hsd(ordered, alpha);
    const std::string stem = std::string("tukey_") + (comm ? "on" : "off") +
                             "_shifts" + std::to_string(shifts) + "_n" +
                             std::to_string(n_robots);
    write_text_file((out_dir / (stem + ".csv")).string(), tukey_report_csv(report));
    std::ostringstream summary;
    summary << "panel: comm=" << (comm ? "on" : "off") << " shifts=" << shifts
            << " robots=" << n_robots << "\n"
            << tukey_report_text(report);
    write_text_file((out_dir / (stem + ".txt")).string(), summary.str());
    artifacts.push_back(stem + ".csv");
  }
  return artifacts;
}

struct ExperimentArgs {
  std::string grid_path;
  int jobs = 0;
  std::string out_dir = "out";
  bool force = false;
};

int cmd_experiment(const ExperimentArgs& args) {
  Stopwatch watch;
  json doc = json::object();
  if (!args.grid_path.empty()) doc = json::parse(read_text_file(args.grid_path));
  std::string map_path;
  const ExperimentGrid grid = grid_from_json(doc, &map_path);

  const fs::path out_dir = args.out_dir;
  if (fs::exists(out_dir / "results.csv") && !args.force)
    throw std::runtime_error("refusing to overwrite " +
                             (out_dir / "results.csv").string() +
                             " (use --force)");
  ensure_writable_dir(out_dir);
  if (grid.emit_timeseries) ensure_writable_dir(out_dir / "timeseries");

  const int jobs = args.jobs > 0
                       ? args.jobs
                       : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t total = expand_grid(grid).size();
  LIP_INFO("experiment: %zu trials on %d worker(s)", total, jobs);

  std::vector<TrialRecord> records;
  try {
    std::atomic<std::size_t> last_logged{0};
    records = run_experiment(grid, jobs, [&](std::size_t done, std::size_t n) {
      if (done == n || done - last_logged >= 100) {
        last_logged = done;
        LIP_DEBUG("experiment: %zu/%zu trials done", done, n);
      }
    });
  } catch (const ExperimentFailure& failure) {
    // Flush what we have and leave a resume manifest behind.
    json resume;
    resume["failed_indices"] = failure.failed_indices;
    resume["total"] = total;
    write_text_file((out_dir / "resume_manifest.json").string(),
                    resume.dump(2) + "\n");
    LIP_ERROR("experiment: %zu trial(s) failed; partial results flushed",
              failure.failed_indices.size());
    throw;
  }

  std::vector<std::string> artifacts = {"results.csv"};
  write_text_file((out_dir / "results.csv").string(), records_csv(records));
  if (grid.emit_timeseries) {
    for (const TrialRecord& rec : records)
      write_text_file((out_dir / "timeseries" / timeseries_filename(rec.spec)).string(),
                      timeseries_csv(rec.result));
    artifacts.push_back("timeseries/");
  }
  const auto report_files = write_panel_reports(out_dir, records, 0.05);
  artifacts.insert(artifacts.end(), report_files.begin(), report_files.end());

  json resolved = {{"grid", args.grid_path.empty() ? "<defaults>" : args.grid_path},
                   {"jobs", jobs},
                   {"trials", total},
                   {"map", map_path.empty() ? "<bundled>" : map_path}};
  write_manifest(out_dir, "experiment", resolved, artifacts, watch.seconds());
  LIP_INFO("experiment: %zu trials finished in %.1fs", total, watch.seconds());
  return 0;
}

// -------------------------------------------------------------------- stats

struct StatsArgs {
  std::string in_csv;
  std::string groupby = "composition";
  double alpha = 0.05;
  std::string out_dir = "out";
};

int cmd_stats(const StatsArgs& args) {
  Stopwatch watch;
  const CsvTable table = read_csv_file(args.in_csv);
  if (table.rows.empty()) throw std::runtime_error("stats: no data rows in " + args.in_csv);
  const std::size_t group_col = table.column(args.groupby);
  const std::size_t value_col = table.column("total_reward");

  std::vector<GroupSamples> groups;
  std::map<std::string, std::size_t> index_of;
  for (const auto& row : table.rows) {
    const std::string& label = row[group_col];
    if (!index_of.contains(label)) {
      index_of[label] = groups.size();
      groups.push_back({label, {}});
    }
    groups[index_of[label]].values.push_back(std::stod(row[value_col]));
  }
  std::erase_if(groups, [](const GroupSamples& g) { return g.values.size() < 2; });
  if (groups.size() < 2)
    throw std::runtime_error("stats: need at least two groups with two samples each");

  const TukeyReport report = tukey_hsd(groups, args.alpha);
  const fs::path out_dir = args.out_dir;
  ensure_writable_dir(out_dir);
  write_text_file((out_dir / "report.csv").string(), tukey_report_csv(report));

  std::ostringstream summary;
  summary << "groups by " << args.groupby << ":\n";
  for (const GroupSamples& g : groups) {
    const GroupSummary s = summarize(g);
    summary << "  " << s.label << ": n=" << s.n << " mean=" << s.mean
            << " sd=" << s.sd << "\n";
  }
  summary << tukey_report_text(report);
  write_text_file((out_dir / "summary.txt").string(), summary.str());

  json resolved = {{"in", args.in_csv}, {"groupby", args.groupby}, {"alpha", args.alpha}};
  write_manifest(out_dir, "stats", resolved, {"report.csv", "summary.txt"},
                 watch.seconds());
  if (log_enabled(LogLevel::kInfo)) std::fputs(summary.str().c_str(), stderr);
  return 0;
}

// --------------------------------------------------------------------- plot

struct PlotArgs {
  std::string in_dir;
  std::string out_dir = "out";
};

struct RowView {
  int n_robots;
  std::string composition;
  std::string comm;
  int shifts;
  int repetition;
  double total_reward;
};

int cmd_plot(const PlotArgs& args) {
  Stopwatch watch;
  const fs::path in_dir = args.in_dir;
  const CsvTable table = read_csv_file((in_dir / "results.csv").string());
  if (table.rows.empty())
    throw std::runtime_error("plot: results.csv has no data rows");

  const std::size_t c_n = table.column("n_robots");
  const std::size_t c_comp = table.column("composition");
  const std::size_t c_comm = table.column("comm");
  const std::size_t c_shifts = table.column("shifts");
  const std::size_t c_rep = table.column("repetition");
  const std::size_t c_reward = table.column("total_reward");

  std::vector<RowView> rows;
  rows.reserve(table.rows.size());
  for (const auto& r : table.rows)
    rows.push_back({std::stoi(r[c_n]), r[c_comp], r[c_comm], std::stoi(r[c_shifts]),
                    std::stoi(r[c_rep]), std::stod(r[c_reward])});

  const fs::path out_dir = args.out_dir;
  ensure_writable_dir(out_dir);
  std::vector<std::string> artifacts;

  // (a) box/strip summary per (comm, shifts) cell, one box per composition
  std::vector<std::pair<std::string, int>> cells;
  for (const RowView& r : rows) {
    const auto cell = std::make_pair(r.comm, r.shifts);
    if (std::find(cells.begin(), cells.end(), cell) == cells.end())
      cells.push_back(cell);
  }
  for (const auto& [comm, shifts] : cells) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<double>> samples;
    for (const RowView& r : rows) {
      if (r.comm != comm || r.shifts != shifts) continue;
      if (!samples.contains(r.composition)) order.push_back(r.composition);
      samples[r.composition].push_back(r.total_reward);
    }
    std::vector<BoxSeries> boxes;
    for (const std::string& label : order)
      boxes.push_back(box_stats(label, samples[label]));
    const std::string name = "reward_box_" + comm + "_shifts" +
                             std::to_string(shifts) + ".svg";
    write_text_file((out_dir / name).string(),
                    render_box_chart("total reward by composition (comm " + comm +
                                         ", " + std::to_string(shifts) + " shifts)",
                                     "total reward", boxes));
    artifacts.push_back(name);
  }

  // (b) mean +/- sd cumulative reward curves per (comm, shifts, N) cell
  const fs::path ts_dir = in_dir / "timeseries";
  if (!fs::exists(ts_dir)) {
    LIP_ERROR("plot: %s missing; skipping timeseries plots", ts_dir.string().c_str());
  } else {
    std::set<std::tuple<std::string, int, int>> panel_keys;
    for (const RowView& r : rows) panel_keys.insert({r.comm, r.shifts, r.n_robots});
    for (const auto& [comm, shifts, n_robots] : panel_keys) {
      std::vector<std::string> order;
      std::map<std::string, std::vector<std::vector<double>>> curves;
      for (const RowView& r : rows) {
        if (r.comm != comm || r.shifts != shifts || r.n_robots != n_robots) continue;
        TrialSpec spec;
        spec.composition = r.composition;
        spec.comm = comm == "on";
        spec.shifts = shifts;
        spec.repetition = r.repetition;
        const fs::path file = ts_dir / timeseries_filename(spec);
        if (!fs::exists(file)) continue;
        const CsvTable ts = read_csv_file(file.string());
        std::vector<double> curve;
        curve.reserve(ts.rows.size());
        for (const auto& row : ts.rows) curve.push_back(std::stod(row[1]));
        if (!curves.contains(r.composition)) order.push_back(r.composition);
        curves[r.composition].push_back(std::move(curve));
      }
      if (order.empty()) continue;

      std::vector<CurveSeries> series;
      for (const std::string& label : order) {
        const auto& reps = curves[label];
        const std::size_t len = reps.front().size();
        CurveSeries s;
        s.label = label;
        for (std::size_t t = 0; t < len; ++t) {
          double sum = 0.0;
          for (const auto& rep : reps) sum += rep[t];
          const double mean = sum / static_cast<double>(reps.size());
          double ss = 0.0;
          for (const auto& rep : reps) ss += (rep[t] - mean) * (rep[t] - mean);
          const double sd =
              reps.size() > 1 ? std::sqrt(ss / static_cast<double>(reps.size() - 1))
                              : 0.0;
          s.xs.push_back(static_cast<double>(t));
          s.ys.push_back(mean);
          s.lo.push_back(mean - sd);
          s.hi.push_back(mean + sd);
        }
        series.push_back(std::move(s));
      }
      const std::string name = "reward_time_" + comm + "_shifts" +
                               std::to_string(shifts) + "_n" +
                               std::to_string(n_robots) + ".svg";
      write_text_file(
          (out_dir / name).string(),
          render_curve_chart("cumulative reward, " + std::to_string(n_robots) +
                                 " robots (comm " + comm + ", " +
                                 std::to_string(shifts) + " shifts)",
                             "step", "cumulative reward", series));
      artifacts.push_back(name);
    }
  }

  json resolved = {{"in", args.in_dir}};
  write_manifest(out_dir, "plot", resolved, artifacts, watch.seconds());
  LIP_INFO("plot: wrote %zu chart(s)", artifacts.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latent-inhibition multi-robot patrol simulator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run one seeded trial");
  simulate->add_option("--map", sim.map_path, "map file (bundled office map if omitted)");
  simulate->add_option("--robots", sim.robots, "robot count")->check(CLI::PositiveNumber);
  simulate->add_option("--li", sim.li_csv, "comma-separated LI value per robot");
  simulate->add_flag("--comm,!--no-comm", sim.comm, "shared belief store");
  simulate->add_option("--shifts", sim.shifts, "environment shift count")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--steps", sim.steps, "horizon in steps")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "trial seed");
  simulate->add_option("--env-seed", sim.env_seed, "environment seed");
  simulate->add_option("--out", sim.out_dir, "output directory");

  ExperimentArgs exp;
  CLI::App* experiment = app.add_subcommand("experiment", "run a full sweep");
  experiment->add_option("--grid", exp.grid_path, "grid config JSON (defaults if omitted)")
      ->check(CLI::ExistingFile);
  experiment->add_option("--jobs", exp.jobs, "worker threads (hardware default)");
  experiment->add_option("--out", exp.out_dir, "output directory");
  experiment->add_flag("--force", exp.force, "overwrite existing results");

  StatsArgs st;
  CLI::App* stats = app.add_subcommand("stats", "Tukey HSD over a results CSV");
  stats->add_option("--in", st.in_csv, "results CSV")->required()->check(CLI::ExistingFile);
  stats->add_option("--groupby", st.groupby, "grouping column (default composition)");
  stats->add_option("--alpha", st.alpha, "significance level")
      ->check(CLI::Range(0.0, 1.0));
  stats->add_option("--out", st.out_dir, "output directory");

  PlotArgs pl;
  CLI::App* plot = app.add_subcommand("plot", "render SVG charts from results");
  plot->add_option("--in", pl.in_dir, "experiment output directory")->required();
  plot->add_option("--out", pl.out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return cmd_simulate(sim);
    if (experiment->parsed()) return cmd_experiment(exp);
    if (stats->parsed()) return cmd_stats(st);
    if (plot->parsed()) return cmd_plot(pl);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    LIP_ERROR("error: %s", e.what());
    return 1;
  }
  return 0;
}
