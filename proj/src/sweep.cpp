#include "mdiqkd/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "mdiqkd/version.hpp"

namespace mdiqkd {

namespace {

constexpr double kMinEta = 1e-12;  // sweeps cap L instead of limit-handling eta = 0

void check_values(const std::vector<double>& values, const char* key,
                  bool allow_empty = false) {
  if (values.empty() && !allow_empty) {
    throw ConfigError(key, "list must not be empty");
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ConfigError(key, "values must be finite and non-negative");
    }
  }
}

double arm_length_a(double length_km, const ArmSplit& split) {
  return split.symmetric ? length_km / 2.0 : split.a_km;
}

double arm_length_b(double length_km, const ArmSplit& split) {
  return split.symmetric ? length_km / 2.0 : split.b_km;
}

struct Grid {
  const SweepConfig& config;

  std::size_t size() const { return config.grid_size(); }

  SweepPoint evaluate(std::size_t flat) const {
    const std::size_t n_sigma = config.sigma_theta_values.size();
    const std::size_t n_th = config.n_th_values.size();
    const std::size_t i_sigma = flat % n_sigma;
    const std::size_t i_n = (flat / n_sigma) % n_th;
    const std::size_t i_l = flat / (n_sigma * n_th);
    return evaluate_point(config.distances_km[i_l], config.n_th_values[i_n],
                          config.sigma_theta_values[i_sigma],
                          config.alpha_db_per_km, config.f, config.arm_split);
  }
};

SweepResult make_shell(const SweepConfig& config) {
  SweepResult result;
  result.config = config;
  result.rows.resize(config.grid_size());
  result.arm_convention = config.arm_split.symmetric
                              ? "symmetric (arm_a = arm_b = L/2)"
                              : "explicit per-arm lengths";
  result.version = kVersion;
  const SweepConfig defaults = SweepConfig::figure_defaults();
  result.default_grid = config.distances_km == defaults.distances_km &&
                        config.n_th_values == defaults.n_th_values &&
                        config.sigma_theta_values == defaults.sigma_theta_values;
  return result;
}

}  // namespace

void SweepConfig::validate() const {
  check_values(distances_km, "distances_km");
  check_values(n_th_values, "n_th_values");
  check_values(sigma_theta_values, "sigma_theta_values");
  if (!std::isfinite(alpha_db_per_km) || alpha_db_per_km < 0.0) {
    throw ConfigError("alpha_db_per_km", "must be finite and non-negative");
  }
  if (!std::isfinite(f) || f < 1.0) {
    throw ConfigError("f", "error-correction efficiency must be >= 1");
  }
  double max_arm = 0.0;
  if (arm_split.symmetric) {
    for (double l : distances_km) {
      max_arm = std::max(max_arm, l / 2.0);
    }
  } else {
    if (!std::isfinite(arm_split.a_km) || arm_split.a_km < 0.0 ||
        !std::isfinite(arm_split.b_km) || arm_split.b_km < 0.0) {
      throw ConfigError("arm_split", "arm lengths must be finite and non-negative");
    }
    const double total = arm_split.a_km + arm_split.b_km;
    if (distances_km.size() != 1 || std::abs(distances_km[0] - total) > 1e-9) {
      throw ConfigError("arm_split",
                        "explicit arm lengths require distances_km to hold the "
                        "single value a+b");
    }
    max_arm = std::max(arm_split.a_km, arm_split.b_km);
  }
  if (transmissivity(max_arm, alpha_db_per_km) < kMinEta) {
    throw ConfigError("distances_km",
                      "distance too large: arm transmissivity falls below 1e-12");
  }
}

SweepConfig SweepConfig::figure_defaults() {
  SweepConfig config;
  config.distances_km.reserve(301);
  for (int l = 0; l <= 300; ++l) {
    config.distances_km.push_back(static_cast<double>(l));
  }
  config.n_th_values = {0.0, 0.001, 0.01, 0.05, 0.1};
  config.sigma_theta_values = {0.0, 0.1, 0.2, 0.3};
  return config;
}

SweepPoint evaluate_point(double length_km, double n_th, double sigma_theta,
                          double alpha_db_per_km, double f, const ArmSplit& split) {
  SweepPoint point;
  point.length_km = length_km;
  point.n_th = n_th;
  point.sigma_theta = sigma_theta;

  ChannelParams arm_a{n_th, sigma_theta, arm_length_a(length_km, split),
                      alpha_db_per_km};
  ChannelParams arm_b{n_th, sigma_theta, arm_length_b(length_km, split),
                      alpha_db_per_km};
  if (transmissivity(arm_a.length_km, alpha_db_per_km) < kMinEta ||
      transmissivity(arm_b.length_km, alpha_db_per_km) < kMinEta) {
    throw std::domain_error("arm transmissivity below 1e-12; shorten the link");
  }
  point.arm_a = noise_figures(arm_a);
  point.arm_b = noise_figures(arm_b);
  point.metrics = secret_key_rate(point.arm_a, point.arm_b, ErrorCorrectionConfig{f});
  return point;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  SweepResult result = make_shell(config);
  const Grid grid{config};
  const std::int64_t total = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    result.rows[static_cast<std::size_t>(i)] = grid.evaluate(static_cast<std::size_t>(i));
  }
  return result;
}

SweepResult run_sweep_serial(const SweepConfig& config) {
  config.validate();
  SweepResult result = make_shell(config);
  const Grid grid{config};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    result.rows[i] = grid.evaluate(i);
  }
  return result;
}

std::optional<double> find_cutoff_distance(double n_th, double sigma_theta,
                                           double alpha_db_per_km, double f,
                                           double l_max) {
  if (!(l_max > 0.0) || !std::isfinite(l_max)) {
    throw std::domain_error("l_max must be positive and finite");
  }
  const auto rate = [&](double l) {
    return evaluate_point(l, n_th, sigma_theta, alpha_db_per_km, f).metrics.skr;
  };
  if (rate(0.0) <= 0.0) {
    return 0.0;
  }
  if (rate(l_max) > 0.0) {
    return std::nullopt;
  }
  double lo = 0.0;  // rate > 0
  double hi = l_max;  // rate <= 0
  for (int iter = 0; iter < 60 && hi - lo > 0.01; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (rate(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace mdiqkd
