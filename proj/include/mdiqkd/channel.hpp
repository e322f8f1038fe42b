#pragma once

namespace mdiqkd {

/// Physical knobs of one fiber arm.
struct ChannelParams {
  double n_th = 0.0;             // mean thermal photon number of the environment
  double sigma_theta = 0.0;      // phase-noise standard deviation [rad]
  double length_km = 0.0;        // arm length [km]
  double alpha_db_per_km = 0.2;  // fiber attenuation coefficient [dB/km]

  // Throws std::domain_error if any field is negative or non-finite.
  void validate() const;
};

/// Derived per-arm noise quantities.
struct NoiseFigures {
  double eta = 1.0;     // transmissivity, (0, 1]
  double lambda = 0.0;  // depolarization parameter, [0, 1)
  double p_s = 1.0;     // single-photon success probability, (0, 1]
  double r2 = 1.0;      // coherence factor r^2 = exp(-sigma^2), (0, 1]
};

// Fraction of optical power surviving length_km of fiber: 10^(-alpha*L/10).
double transmissivity(double length_km, double alpha_db_per_km);

// Depolarization parameter of the thermal-loss channel,
//   2N(1+N)(1-eta)^2 / (eta + 2N(1+N)(1-eta)^2).
// eta = 0 is rejected (the expression degenerates to 0/0 at n_th = 0).
double depolarizing_lambda(double n_th, double eta);

// Probability that a single photon survives the lossy thermal channel,
//   (eta + 2N(1+N)(1-eta)^2) / gamma^4  with  gamma = 1 + N(1-eta).
double success_probability(double n_th, double eta);

// Coherence factor applied to density-matrix off-diagonals: exp(-sigma^2).
double dephasing_r2(double sigma_theta);

// Density of the wrapped normal distribution on [-pi, pi].  The image sum
// is truncated adaptively once the next term drops below 1e-15; sigma = 0
// (a delta distribution, no density) is rejected.
double wrapped_normal_pdf(double theta, double sigma_theta);

// Bundles all four derived quantities for one arm.
NoiseFigures noise_figures(const ChannelParams& params);

}  // namespace mdiqkd
