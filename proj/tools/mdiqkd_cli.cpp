// Command-line front end: single-point evaluation, grid sweeps to CSV, and
// the built-in consistency suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "mdiqkd/config.hpp"
#include "mdiqkd/csv.hpp"
#include "mdiqkd/sweep.hpp"
#include "mdiqkd/validation.hpp"
#include "mdiqkd/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitSuiteFailure = 3;

struct PointOptions {
  double n_th = 0.0;
  double sigma_theta = 0.0;
  double length_km = 0.0;
  double alpha = 0.2;
  double f = 1.0;
  std::string arm_split = "symmetric";
  std::string format = "human";
};

int run_point(const PointOptions& opt) {
  const mdiqkd::ArmSplit split = mdiqkd::parse_arm_split(opt.arm_split);
  double length = opt.length_km;
  if (!split.symmetric) {
    const double total = split.a_km + split.b_km;
    if (length != 0.0 && std::abs(length - total) > 1e-9) {
      throw mdiqkd::ConfigError("arm_split", "--L must equal a+b when both are given");
    }
    length = total;
  }
  const mdiqkd::SweepPoint point =
      mdiqkd::evaluate_point(length, opt.n_th, opt.sigma_theta, opt.alpha, opt.f, split);
  if (opt.format == "csv") {
    std::cout << mdiqkd::csv_header() << "\n" << mdiqkd::format_row_csv(point) << "\n";
  } else {
    std::cout << mdiqkd::format_point_human(point);
  }
  return kExitOk;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_path,
                  bool pivot) {
  const mdiqkd::SweepConfig config = mdiqkd::load_sweep_config(config_path);
  const mdiqkd::SweepResult result = mdiqkd::run_sweep(config);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw mdiqkd::IoError("cannot write output file: " + out_path);
  }
  if (pivot) {
    mdiqkd::write_pivot_csv(out, result);
  } else {
    mdiqkd::write_csv(out, result);
  }
  out.flush();
  if (!out) {
    throw mdiqkd::IoError("failed while writing output file: " + out_path);
  }

  std::cout << "wrote " << result.rows.size() << " rows to " << out_path << "\n";
  std::cout << "cutoff distances (raw rate sign change, km):\n";
  const double l_max = *std::max_element(config.distances_km.begin(),
                                         config.distances_km.end());
  for (double n : config.n_th_values) {
    for (double s : config.sigma_theta_values) {
      std::cout << "  n_th=" << mdiqkd::format_double(n)
                << " sigma=" << mdiqkd::format_double(s) << ": ";
      if (l_max <= 0.0) {
        std::cout << "n/a (single zero-length grid)\n";
        continue;
      }
      const auto cutoff =
          mdiqkd::find_cutoff_distance(n, s, config.alpha_db_per_km, config.f, l_max);
      if (cutoff) {
        std::cout << mdiqkd::format_double(*cutoff) << "\n";
      } else {
        std::cout << "none within " << mdiqkd::format_double(l_max) << "\n";
      }
    }
  }
  return kExitOk;
}

int run_validate() {
  const auto suites = mdiqkd::run_validation_suites();
  bool all_passed = true;
  for (const auto& suite : suites) {
    std::printf("%-22s %s   max dev %.3g (tol %.0e)  %s\n", suite.name.c_str(),
                suite.passed ? "PASS" : "FAIL", suite.max_deviation, suite.tolerance,
                suite.detail.c_str());
    all_passed = all_passed && suite.passed;
  }
  std::printf("--- definitional-sum cross-checks (reported, not asserted) ---\n");
  for (const auto& line : mdiqkd::definitional_gap_report()) {
    std::printf("%s\n", line.c_str());
  }
  return all_passed ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MDI-QKD secret-key-rate simulator over thermal-loss and "
               "phase-noise fiber channels"};
  app.set_version_flag("--version", mdiqkd::kVersion);
  app.require_subcommand(1);

  PointOptions point_options;
  CLI::App* point = app.add_subcommand("point", "evaluate a single link configuration");
  point->add_option("--nth", point_options.n_th, "mean thermal photon number");
  point->add_option("--sigma", point_options.sigma_theta, "phase-noise std dev [rad]");
  point->add_option("--L", point_options.length_km, "total transmission distance [km]");
  point->add_option("--alpha", point_options.alpha, "attenuation [dB/km]")
      ->default_val(0.2);
  point->add_option("--f", point_options.f, "error-correction efficiency")
      ->default_val(1.0);
  point->add_option("--arm-split", point_options.arm_split,
                    "symmetric | a=KM,b=KM");
  point->add_option("--format", point_options.format, "csv | human")
      ->check(CLI::IsMember({"csv", "human"}));

  std::string config_path;
  std::string out_path;
  bool pivot = false;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter grid to CSV");
  sweep->add_option("--config", config_path, "key=value sweep configuration file")
      ->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_flag("--pivot", pivot, "one skr_clamped column per (n_th, sigma) curve");

  CLI::App* validate = app.add_subcommand("validate", "run the consistency suites");

  try {
    app.parse(argc, argv);
    if (point->parsed()) {
      return run_point(point_options);
    }
    if (sweep->parsed()) {
      return run_sweep_cmd(config_path, out_path, pivot);
    }
    if (validate->parsed()) {
      return run_validate();
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      return app.exit(e);
    }
    app.exit(e);
    return kExitValidation;
  } catch (const mdiqkd::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const mdiqkd::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
