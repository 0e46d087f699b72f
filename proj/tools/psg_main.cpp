// psg: projected subgradient runs, bound tables and schedule checks.

#include "psg/experiment.hpp"
#include "psg/version.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

// Opens `path` for writing, or falls back to stdout when empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) {
        throw std::invalid_argument("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool is_stdout() const { return !file_.is_open(); }

 private:
  std::ofstream file_;
};

// Fills every option of `cmd` that the command line left unset from a
// key=value file; keys are long option names without the leading dashes.
void apply_config_file(CLI::App& cmd, const std::string& path) {
  const auto items = CLI::ConfigINI().from_file(path);
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") {
      continue;
    }
    if (!item.parents.empty()) {
      throw std::invalid_argument("config file: sections are not supported (" + item.fullname() + ")");
    }
    CLI::Option* option = cmd.get_option_no_throw("--" + item.name);
    if (option == nullptr || item.name == "config") {
      throw std::invalid_argument("config file: unknown key '" + item.name + "'");
    }
    if (option->count() > 0) {
      continue;
    }
    option->add_result(item.inputs);
    option->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projected subgradient method with weighted ergodic averaging"};
  app.set_version_flag("--version", std::string(psg::kVersion));
  app.require_subcommand(1);

  psg::ExperimentConfig config;
  std::string out_path;
  std::string summary_path;
  auto* run = app.add_subcommand("run", "Run the method and write a CSV trace");
  std::string config_path;
  run->add_option("--config", config_path, "key=value file; command-line flags take precedence");
  run->add_option("--problem", config.problem, "l1-distance | linf-distance | pwl-max | l1-regression")
      ->capture_default_str();
  run->add_option("--n", config.n, "Dimension")->capture_default_str();
  run->add_option("--m", config.m, "Pieces for pwl-max (0: 2n+2)")->capture_default_str();
  run->add_option("--rows", config.rows, "Rows for l1-regression (0: 2n)")->capture_default_str();
  run->add_option("--seed", config.seed, "Instance seed")->capture_default_str();
  run->add_option("--set", config.set, "box | ball | simplex")->capture_default_str();
  run->add_option("--lo", config.lo, "Box lower bound")->capture_default_str();
  run->add_option("--hi", config.hi, "Box upper bound")->capture_default_str();
  run->add_option("--radius", config.radius, "Ball radius")->capture_default_str();
  run->add_option("--scale", config.scale, "Simplex scale")->capture_default_str();
  run->add_option("--f-star", config.f_star, "Optimal value for pwl-max")->capture_default_str();
  run->add_option("--schedule", config.schedule, "sqrt-decay | constant | custom")
      ->capture_default_str();
  run->add_option("--schedule-file", config.schedule_file, "Step sizes, one per line");
  run->add_option("--horizon", config.horizon, "Number of iterations")->capture_default_str();
  run->add_option("--k", config.ks, "Averaging exponent (repeatable)")->delimiter(',');
  run->add_flag("--check-invariants", config.check_invariants,
                "Check the per-step descent inequality against x*");
  run->add_option("--stride", config.stride, "auto | all | N")->capture_default_str();
  run->add_option("--start", config.start, "origin | random | x1,x2,...")->capture_default_str();
  run->add_option("--out", out_path, "Trace CSV path (default stdout)");
  run->add_option("--summary", summary_path, "Summary path (default stdout, stderr when the trace is on stdout)");

  double R = 1.0;
  double L = 1.0;
  std::vector<std::int64_t> t_grid = {10, 100, 1000, 10000, 100000, 1000000};
  std::string table_path;
  auto* compare = app.add_subcommand("compare-bounds", "Tabulate the closed-form rates for the sqrt-decay schedule");
  compare->add_option("--R", R, "Radius constant")->capture_default_str();
  compare->add_option("--L", L, "Lipschitz constant")->capture_default_str();
  compare->add_option("--t-grid", t_grid, "Iteration counts")->delimiter(',');
  compare->add_option("--out", table_path, "Table CSV path (default stdout)");

  std::string schedule_path;
  std::optional<std::int64_t> schedule_horizon;
  auto* check = app.add_subcommand("validate-schedule", "Check a step-size file is positive and non-increasing");
  check->add_option("--file", schedule_path, "Schedule file")->required();
  check->add_option("--horizon", schedule_horizon, "Steps to check (default: file length)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return psg::kExitUsage;
  }

  try {
    if (*run) {
      if (!config_path.empty()) {
        apply_config_file(*run, config_path);
      }
      Output trace_out(out_path);
      std::ostream* summary = trace_out.is_stdout() ? &std::cerr : &std::cout;
      std::ofstream summary_file;
      if (!summary_path.empty()) {
        summary_file.open(summary_path);
        if (!summary_file) {
          throw std::invalid_argument("cannot open summary file: " + summary_path);
        }
        summary = &summary_file;
      }
      // Build the trace in memory so a failed run leaves no partial CSV body.
      std::ostringstream csv;
      const int status = psg::run_experiment(config, csv, *summary);
      trace_out.stream() << csv.str();
      return status;
    }
    if (*compare) {
      const auto rows = psg::compare_bounds(R, L, t_grid);
      Output table(table_path);
      psg::write_bound_comparison_csv(table.stream(), R, L, rows);
      return psg::kExitOk;
    }
    if (*check) {
      return psg::validate_schedule_file(schedule_path, schedule_horizon, std::cout);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return psg::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return psg::kExitUsage;
  }
  return psg::kExitUsage;
}
