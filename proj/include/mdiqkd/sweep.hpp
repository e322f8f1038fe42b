#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdiqkd/channel.hpp"
#include "mdiqkd/metrics.hpp"

namespace mdiqkd {

/// Configuration error carrying the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// How a total transmission distance L maps onto the two arms.
struct ArmSplit {
  bool symmetric = true;  // each arm = L/2
  double a_km = 0.0;      // explicit arm lengths, used when !symmetric
  double b_km = 0.0;
};

struct SweepConfig {
  std::vector<double> distances_km;
  std::vector<double> n_th_values;
  std::vector<double> sigma_theta_values;
  double alpha_db_per_km = 0.2;
  double f = 1.0;
  ArmSplit arm_split;

  std::size_t grid_size() const {
    return distances_km.size() * n_th_values.size() * sigma_theta_values.size();
  }

  // Throws ConfigError naming the offending key.
  void validate() const;

  // The shipped sweep grid: L in [0, 300] km step 1, n_th in
  // {0, 0.001, 0.01, 0.05, 0.1}, sigma_theta in {0, 0.1, 0.2, 0.3}.
  static SweepConfig figure_defaults();
};

/// One fully evaluated grid point.
struct SweepPoint {
  double length_km = 0.0;
  double n_th = 0.0;
  double sigma_theta = 0.0;
  NoiseFigures arm_a;
  NoiseFigures arm_b;
  MetricsRecord metrics;
};

struct SweepResult {
  std::vector<SweepPoint> rows;  // lexicographic: L outer, n_th, sigma inner
  SweepConfig config;
  std::string arm_convention;
  std::string version;
  bool default_grid = false;  // rows reconstruct the shipped default grid
};

// Evaluates a single grid point.  Arm transmissivities below 1e-12 are
// rejected (std::domain_error) rather than limit-handled.
SweepPoint evaluate_point(double length_km, double n_th, double sigma_theta,
                          double alpha_db_per_km, double f,
                          const ArmSplit& split = {});

// Grid evaluation, one row per point.  run_sweep distributes rows over
// OpenMP threads; run_sweep_serial is the reference implementation kept for
// testing.  Both produce identical rows in identical order.
SweepResult run_sweep(const SweepConfig& config);
SweepResult run_sweep_serial(const SweepConfig& config);

// Maximum distance with positive secret key rate, located by bisection on
// the sign of the raw (unclamped) rate to within 0.01 km.  Returns nullopt
// if the rate stays positive on [0, l_max]; returns 0 if it is already
// non-positive at L = 0.
std::optional<double> find_cutoff_distance(double n_th, double sigma_theta,
                                           double alpha_db_per_km, double f,
                                           double l_max);

}  // namespace mdiqkd
