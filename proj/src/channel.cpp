#include "mdiqkd/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdiqkd {

namespace {

void require_finite_nonnegative(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::domain_error(std::string(name) + " must be finite and non-negative");
  }
}

}  // namespace

void ChannelParams::validate() const {
  require_finite_nonnegative(n_th, "n_th");
  require_finite_nonnegative(sigma_theta, "sigma_theta");
  require_finite_nonnegative(length_km, "length_km");
  require_finite_nonnegative(alpha_db_per_km, "alpha_db_per_km");
}

double transmissivity(double length_km, double alpha_db_per_km) {
  require_finite_nonnegative(length_km, "length_km");
  require_finite_nonnegative(alpha_db_per_km, "alpha_db_per_km");
  return std::pow(10.0, -alpha_db_per_km * length_km / 10.0);
}

double depolarizing_lambda(double n_th, double eta) {
  require_finite_nonnegative(n_th, "n_th");
  if (!(eta > 0.0) || eta > 1.0) {
    throw std::domain_error("eta must lie in (0, 1]");
  }
  const double mixing = 2.0 * n_th * (1.0 + n_th) * (1.0 - eta) * (1.0 - eta);
  return mixing / (eta + mixing);
}

double success_probability(double n_th, double eta) {
  require_finite_nonnegative(n_th, "n_th");
  if (!(eta > 0.0) || eta > 1.0) {
    throw std::domain_error("eta must lie in (0, 1]");
  }
  const double mixing = 2.0 * n_th * (1.0 + n_th) * (1.0 - eta) * (1.0 - eta);
  // gamma = 1 + N - N*eta, written so eta = 1 gives exactly 1
  const double gamma = 1.0 + n_th * (1.0 - eta);
  const double gamma2 = gamma * gamma;
  return (eta + mixing) / (gamma2 * gamma2);
}

double dephasing_r2(double sigma_theta) {
  require_finite_nonnegative(sigma_theta, "sigma_theta");
  return std::exp(-sigma_theta * sigma_theta);
}

double wrapped_normal_pdf(double theta, double sigma_theta) {
  if (!std::isfinite(theta)) {
    throw std::domain_error("theta must be finite");
  }
  if (!std::isfinite(sigma_theta) || !(sigma_theta > 0.0)) {
    // sigma = 0 is a point mass at theta = 0 and has no density
    throw std::domain_error("sigma_theta must be positive");
  }
  constexpr int kMaxImages = 64;
  constexpr double kTermCutoff = 1e-15;
  const double two_pi = 2.0 * std::numbers::pi;
  const double inv_2s2 = 1.0 / (2.0 * sigma_theta * sigma_theta);
  const double norm = 1.0 / (sigma_theta * std::sqrt(two_pi));

  double sum = std::exp(-theta * theta * inv_2s2);
  for (int k = 1; k <= kMaxImages; ++k) {
    const double up = theta + two_pi * k;
    const double down = theta - two_pi * k;
    const double term = std::exp(-up * up * inv_2s2) + std::exp(-down * down * inv_2s2);
    if (norm * term < kTermCutoff) {
      break;
    }
    sum += term;
  }
  return norm * sum;
}

NoiseFigures noise_figures(const ChannelParams& params) {
  params.validate();
  NoiseFigures figures;
  figures.eta = transmissivity(params.length_km, params.alpha_db_per_km);
  figures.lambda = depolarizing_lambda(params.n_th, figures.eta);
  figures.p_s = success_probability(params.n_th, figures.eta);
  figures.r2 = dephasing_r2(params.sigma_theta);
  return figures;
}

}  // namespace mdiqkd
