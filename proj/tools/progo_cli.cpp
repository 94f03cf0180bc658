// Command-line front end: run experiments, summarize and reshape trajectory
// CSVs, and run the numerical validation battery.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "progo/harness.hpp"

namespace {

int cmd_run(const std::string& config_path, std::uint64_t seed, bool seed_set,
            std::size_t jobs, const std::string& out, bool out_set) {
  progo::ExperimentConfig cfg = progo::parse_config_file(config_path);
  if (seed_set) cfg.base_seed = seed;
  if (out_set) cfg.output_path = out;
  return progo::run_experiment(cfg, jobs, std::cerr);
}

int cmd_summarize(const std::string& csv_path, const std::string& out,
                  bool out_set) {
  const auto summary = progo::summarize_file(csv_path);
  progo::print_summary(summary, std::cout);
  if (out_set) progo::write_summary_csv(summary, out);
  return progo::kExitOk;
}

int cmd_plotdata(const std::string& csv_path, const std::string& out_dir) {
  const auto rows = progo::read_trajectory_csv_file(csv_path);
  return progo::write_plot_data(rows, out_dir, std::cerr);
}

int cmd_validate(const std::string& level) {
  const auto lvl = level == "full" ? progo::ValidateLevel::kFull
                                   : progo::ValidateLevel::kFast;
  return progo::run_validation(lvl, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ProGO: probabilistic global optimization toolkit"};
  app.require_subcommand(1);

  std::string config_path, csv_path, out_path, level = "fast";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  auto* run = app.add_subcommand("run", "Run a configured experiment");
  run->add_option("--config", config_path, "experiment config file")
      ->required();
  auto* seed_opt = run->add_option("--seed", seed, "base seed override");
  run->add_option("--jobs", jobs, "max concurrent runs")->default_val(1);
  auto* run_out_opt = run->add_option("--out", out_path, "output CSV override");

  auto* summarize =
      app.add_subcommand("summarize", "Per-method summary of a trajectory CSV");
  summarize->add_option("csv", csv_path, "trajectory or summary CSV")
      ->required();
  auto* sum_out_opt =
      summarize->add_option("--out", out_path, "also write summary CSV here");

  auto* plotdata = app.add_subcommand(
      "plotdata", "Write per-method mean/stderr curves for plotting");
  plotdata->add_option("csv", csv_path, "trajectory CSV")->required();
  plotdata->add_option("--out", out_path, "output directory")->required();

  auto* validate =
      app.add_subcommand("validate", "Run the numerical validation checks");
  validate->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return progo::kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(config_path, seed, seed_opt->count() > 0, jobs, out_path,
                     run_out_opt->count() > 0);
    }
    if (summarize->parsed()) {
      return cmd_summarize(csv_path, out_path, sum_out_opt->count() > 0);
    }
    if (plotdata->parsed()) return cmd_plotdata(csv_path, out_path);
    if (validate->parsed()) return cmd_validate(level);
  } catch (const progo::config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return progo::kExitUsage;
  } catch (const progo::csv_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return progo::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return progo::kExitRunFailure;
  }
  return progo::kExitUsage;
}
