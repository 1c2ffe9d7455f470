// Copyright 2026 the ccpark authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "ccpark/io.hpp"
#include "ccpark/planner.hpp"
#include "ccpark/tracking.hpp"
#include "svg_render.hpp"

namespace fs = std::filesystem;
using namespace ccpark;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNoPath = 2;

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<double> tmax;
  std::optional<long> iters;
  std::optional<double> tau;
  std::string out_dir{"."};
};

void apply_overrides(Scenario & scn, const CommonFlags & flags)
{
  if (flags.seed) {
    scn.seed = *flags.seed;
  }
  if (flags.tmax && flags.iters) {
    throw ScenarioError("--tmax and --iters are mutually exclusive");
  }
  if (flags.tmax) {
    scn.planner.t_max = *flags.tmax;
    scn.planner.iter_max.reset();
  }
  if (flags.iters) {
    scn.planner.iter_max = *flags.iters;
    scn.planner.t_max.reset();
  }
  if (flags.tau) {
    scn.planner.tau = *flags.tau;
  }
  scn.planner.validate();
}

PlanOptions parse_variant(const std::string & name)
{
  PlanOptions opt;
  if (name == "min_cost_tree" || name.empty()) {
    opt.variant = PlanVariant::MinCostTree;
  } else if (name.rfind("fixed_l_tree", 0) == 0) {
    opt.variant = PlanVariant::FixedLTree;
    const auto colon = name.find(':');
    opt.fixed_l = colon == std::string::npos ? 0.0 : std::stod(name.substr(colon + 1));
  } else if (name == "discontinuous_tree") {
    opt.variant = PlanVariant::DiscontinuousTree;
  } else if (name == "no_tree_baseline") {
    opt.variant = PlanVariant::NoTreeBaseline;
  } else {
    throw ScenarioError("unknown variant: " + name);
  }
  return opt;
}

std::string variant_label(const PlanOptions & opt)
{
  if (opt.variant == PlanVariant::FixedLTree) {
    std::ostringstream os;
    os << "fixed_l_tree:" << opt.fixed_l;
    return os.str();
  }
  return variant_name(opt.variant);
}

void write_plan_artifacts(const fs::path & dir, const Scenario & scn, const PlanResult & result,
                          bool svg)
{
  fs::create_directories(dir);
  if (result.found()) {
    write_file((dir / "path.csv").string(), path_to_csv(*result.best_path));
  }
  write_file((dir / "history.csv").string(), history_to_csv(result));
  write_file((dir / "stats.txt").string(), stats_to_text(result, scn));
  write_file((dir / "tree.csv").string(), target_tree_to_csv(result.target_tree));
  if (svg) {
    RenderInputs in;
    in.scenario = &scn;
    const TreeDump dump = tree_dump_from_csv(target_tree_to_csv(result.target_tree));
    in.tree = &dump;
    SampledPath sp;
    if (result.found()) {
      sp = sampled_path_from_csv(path_to_csv(*result.best_path));
      in.path = &sp;
    }
    write_file((dir / "plan.svg").string(), render_svg(in));
  }
}

int cmd_plan(const std::string & scenario_file, const CommonFlags & flags,
             const std::string & variant, bool svg)
{
  Scenario scn = load_scenario_file(scenario_file);
  apply_overrides(scn, flags);
  const PlanOptions opt = parse_variant(variant);
  const PlanResult result = plan(scn, opt);
  write_plan_artifacts(flags.out_dir, scn, result, svg);
  if (!result.found()) {
    std::cerr << "no path found within the budget\n";
    return kExitNoPath;
  }
  std::cout << "path length " << result.best_total_length << " m, " << result.q_soln.size()
            << " reached goals, " << result.stats.nodes << " nodes\n";
  return kExitOk;
}

struct Accumulator {
  std::vector<double> values;
  void add(double v) { values.push_back(v); }
  double mean() const
  {
    if (values.empty()) {
      return 0.0;
    }
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  }
  double sd() const
  {
    if (values.size() < 2) {
      return 0.0;
    }
    const double m = mean();
    double acc = 0.0;
    for (double v : values) {
      acc += (v - m) * (v - m);
    }
    return std::sqrt(acc / static_cast<double>(values.size() - 1));
  }
};

int cmd_bench(const std::vector<std::string> & scenario_files, const CommonFlags & flags,
              const std::vector<std::string> & variants, int runs)
{
  fs::create_directories(flags.out_dir);
  std::ostringstream csv;
  csv << "scenario,variant,runs,successes,success_rate,len_mean,len_sd,t_tfs_ms_mean,t_tfs_ms_sd,"
         "t_ttfp_ms_mean,t_ttfp_ms_sd,t_total_ms_mean\n";
  std::ostringstream table;
  table << "# machine: " << std::thread::hardware_concurrency() << " hardware threads\n";
  table << "# runs per variant: " << runs << "\n";

  for (const auto & file : scenario_files) {
    Scenario base = load_scenario_file(file);
    apply_overrides(base, flags);
    const std::string scen_name = fs::path(file).stem().string();
    table << "\nscenario " << scen_name << "\n";
    char header[160];
    std::snprintf(header, sizeof(header), "%-24s %9s %16s %14s %16s %12s\n", "variant",
                  "success%", "length [m]", "t_tfs [ms]", "t_ttfp [ms]", "t_total[ms]");
    table << header;
    for (const auto & vname : variants) {
      const PlanOptions opt = parse_variant(vname);
      int successes = 0;
      Accumulator len, tfs, ttfp, total;
      for (int run = 0; run < runs; ++run) {
        Scenario scn = base;
        scn.seed = (flags.seed ? *flags.seed : base.seed) + static_cast<std::uint64_t>(run);
        PlanResult result;
        try {
          result = plan(scn, opt);
        } catch (const InfeasibleSpot & e) {
          continue;  // recorded as a failed run
        }
        if (result.found()) {
          ++successes;
          len.add(result.best_total_length);
          tfs.add(result.stats.t_tfs_s * 1000.0);
          ttfp.add(result.stats.t_ttfp_s * 1000.0);
          total.add(result.stats.t_total_s * 1000.0);
        }
      }
      const double rate = 100.0 * successes / std::max(runs, 1);
      csv << scen_name << "," << vname << "," << runs << "," << successes << "," << rate << ","
          << len.mean() << "," << len.sd() << "," << tfs.mean() << "," << tfs.sd() << ","
          << ttfp.mean() << "," << ttfp.sd() << "," << total.mean() << "\n";
      char row[200];
      std::snprintf(row, sizeof(row), "%-24s %9.1f %9.1f ± %4.1f %8.0f ± %3.0f %10.0f ± %5.0f %12.0f\n",
                    vname.c_str(), rate, len.mean(), len.sd(), tfs.mean(), tfs.sd(), ttfp.mean(),
                    ttfp.sd(), total.mean());
      table << row;
    }
  }
  write_file((fs::path(flags.out_dir) / "bench.csv").string(), csv.str());
  write_file((fs::path(flags.out_dir) / "bench.txt").string(), table.str());
  std::cout << table.str();
  return kExitOk;
}

int cmd_simulate(const std::string & scenario_file, const CommonFlags & flags,
                 const std::string & path_csv, bool compare_discontinuous, int repeat)
{
  Scenario scn = load_scenario_file(scenario_file);
  apply_overrides(scn, flags);
  fs::create_directories(flags.out_dir);
  const SimConfig sim;

  if (!path_csv.empty()) {
    // Simulate a prerecorded path; the CSV carries no portion tags, so the
    // approach speed cap applies throughout.
    const SampledPath sp = sampled_path_from_csv(read_file(path_csv));
    Path path;
    for (std::size_t i = 0; i + 1 < sp.rows.size(); ++i) {
      const auto & a = sp.rows[i];
      const auto & b = sp.rows[i + 1];
      const double ds = b.s - a.s;
      if (ds <= 1.0e-12) {
        continue;
      }
      const double dk = (b.pose.kappa - a.pose.kappa) / ds;
      PathSegment seg = make_clothoid(a.pose, a.pose.kappa, dk, ds, a.direction);
      path.append(seg);
    }
    const TrackingReport report = simulate_tracking(path, scn, sim);
    write_file((fs::path(flags.out_dir) / "tracking.csv").string(), tracking_to_csv(report));
    write_file((fs::path(flags.out_dir) / "tracking_summary.txt").string(),
               tracking_summary(report));
    std::cout << tracking_summary(report);
    return kExitOk;
  }

  std::ostringstream summary;
  Accumulator cont_ori, cont_lat, cont_cross, disc_ori, disc_lat, disc_cross;
  int cont_better_ori = 0;
  int planned = 0;
  for (int r = 0; r < repeat; ++r) {
    Scenario run_scn = scn;
    run_scn.seed = scn.seed + static_cast<std::uint64_t>(r);
    const PlanResult cont = plan(run_scn);
    if (!cont.found()) {
      summary << "run " << r << ": no continuous path found\n";
      continue;
    }
    const TrackingReport cont_rep = simulate_tracking(*cont.best_path, run_scn, sim);
    const std::string tag = "run" + std::to_string(r);
    write_file((fs::path(flags.out_dir) / ("tracking_" + tag + ".csv")).string(),
               tracking_to_csv(cont_rep));
    cont_ori.add(cont_rep.orientation_alignment_error);
    cont_lat.add(cont_rep.lateral_alignment_error);
    cont_cross.add(cont_rep.mean_cross_track);
    ++planned;

    if (compare_discontinuous) {
      const PlanResult disc = plan_discontinuous_variant(run_scn);
      if (!disc.found()) {
        summary << "run " << r << ": no discontinuous path found\n";
        continue;
      }
      const TrackingReport disc_rep = simulate_tracking(*disc.best_path, run_scn, sim);
      write_file((fs::path(flags.out_dir) / ("tracking_" + tag + "_discontinuous.csv")).string(),
                 tracking_to_csv(disc_rep));
      disc_ori.add(disc_rep.orientation_alignment_error);
      disc_lat.add(disc_rep.lateral_alignment_error);
      disc_cross.add(disc_rep.mean_cross_track);
      if (cont_rep.orientation_alignment_error < disc_rep.orientation_alignment_error) {
        ++cont_better_ori;
      }
    }
  }
  summary << "runs " << planned << "\n";
  summary << "continuous orientation_error_rad mean " << cont_ori.mean() << "\n";
  summary << "continuous lateral_error_m mean " << cont_lat.mean() << "\n";
  summary << "continuous cross_track_m mean " << cont_cross.mean() << "\n";
  if (compare_discontinuous) {
    summary << "discontinuous orientation_error_rad mean " << disc_ori.mean() << "\n";
    summary << "discontinuous lateral_error_m mean " << disc_lat.mean() << "\n";
    summary << "discontinuous cross_track_m mean " << disc_cross.mean() << "\n";
    summary << "continuous_better_orientation " << cont_better_ori << "/" << planned << "\n";
  }
  write_file((fs::path(flags.out_dir) / "simulate_summary.txt").string(), summary.str());
  std::cout << summary.str();
  return kExitOk;
}

int cmd_render(const std::string & scenario_file, const CommonFlags & flags,
               const std::string & tree_csv, const std::string & path_csv,
               const std::string & out_file)
{
  const Scenario scn = load_scenario_file(scenario_file);
  RenderInputs in;
  in.scenario = &scn;
  TreeDump dump;
  SampledPath sp;
  if (!tree_csv.empty()) {
    dump = tree_dump_from_csv(read_file(tree_csv));
    in.tree = &dump;
  }
  if (!path_csv.empty()) {
    sp = sampled_path_from_csv(read_file(path_csv));
    in.path = &sp;
  }
  fs::path out = out_file.empty() ? fs::path(flags.out_dir) / "scene.svg" : fs::path(out_file);
  if (out.has_parent_path()) {
    fs::create_directories(out.parent_path());
  }
  write_file(out.string(), render_svg(in));
  std::cout << "wrote " << out.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"continuous-curvature parking path planner"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string scenario_file;
  std::string variant = "min_cost_tree";
  std::vector<std::string> scenario_files;
  std::vector<std::string> variants{"min_cost_tree"};
  std::string path_csv;
  std::string tree_csv;
  std::string out_file;
  bool svg = false;
  bool compare_discontinuous = false;
  int repeat = 1;
  int runs = 1;

  auto add_common = [&flags](CLI::App * cmd) {
    cmd->add_option("--seed", flags.seed, "base random seed");
    cmd->add_option("--tmax", flags.tmax, "wall-clock sampling budget, seconds");
    cmd->add_option("--iters", flags.iters, "iteration budget (deterministic mode)");
    cmd->add_option("--tau", flags.tau, "target-tree sample bias in [0,1]");
    cmd->add_option("--out", flags.out_dir, "output directory");
  };

  CLI::App * plan_cmd = app.add_subcommand("plan", "plan a single scenario");
  plan_cmd->add_option("scenario", scenario_file, "scenario file")->required();
  plan_cmd->add_option("--variant", variant,
                       "min_cost_tree | fixed_l_tree[:l] | discontinuous_tree | no_tree_baseline");
  plan_cmd->add_flag("--svg", svg, "also write plan.svg");
  add_common(plan_cmd);

  CLI::App * bench_cmd = app.add_subcommand("bench", "benchmark sweep over seeds and variants");
  bench_cmd->add_option("scenarios", scenario_files, "scenario files")->required();
  bench_cmd->add_option("--variants", variants, "planner variants")->delimiter(',');
  bench_cmd->add_option("--runs", runs, "runs per variant");
  add_common(bench_cmd);

  CLI::App * sim_cmd = app.add_subcommand("simulate", "tracking simulation");
  sim_cmd->add_option("scenario", scenario_file, "scenario file")->required();
  sim_cmd->add_option("--path", path_csv, "prerecorded path CSV (skips planning)");
  sim_cmd->add_flag("--compare-discontinuous", compare_discontinuous,
                    "also plan and track the discontinuous-tree variant");
  sim_cmd->add_option("--repeat", repeat, "number of seeded repetitions");
  add_common(sim_cmd);

  CLI::App * render_cmd = app.add_subcommand("render", "render scenario/tree/path to SVG");
  render_cmd->add_option("scenario", scenario_file, "scenario file")->required();
  render_cmd->add_option("--tree", tree_csv, "target-tree dump CSV");
  render_cmd->add_option("--path", path_csv, "path CSV");
  render_cmd->add_option("--svg-out", out_file, "output SVG file");
  add_common(render_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(plan_cmd)) {
      return cmd_plan(scenario_file, flags, variant, svg);
    }
    if (app.got_subcommand(bench_cmd)) {
      return cmd_bench(scenario_files, flags, variants, runs);
    }
    if (app.got_subcommand(sim_cmd)) {
      return cmd_simulate(scenario_file, flags, path_csv, compare_discontinuous, repeat);
    }
    if (app.got_subcommand(render_cmd)) {
      return cmd_render(scenario_file, flags, tree_csv, path_csv, out_file);
    }
  } catch (const InfeasibleSpot & e) {
    std::cerr << "infeasible spot: " << e.what() << "\n";
    return kExitNoPath;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
