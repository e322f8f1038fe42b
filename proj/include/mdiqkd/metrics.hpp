#pragma once

#include "mdiqkd/channel.hpp"
#include "mdiqkd/quantum.hpp"

namespace mdiqkd {

struct ErrorCorrectionConfig {
  double f = 1.0;  // error-correction efficiency, >= 1

  void validate() const;  // throws std::domain_error
};

/// One fully evaluated link: gains, error rates, and the secret key rate,
/// plus the same aggregates recomputed from the per-input projection
/// probabilities.  The two routes are reported side by side and are not
/// reconciled; see README for the known gaps.
struct MetricsRecord {
  double q_z = 0.0;          // Z-basis total gain
  double q_z_11 = 0.0;       // Z-basis effective key gain
  double e_z = 0.0;          // Z-basis error rate
  double e_x_11 = 0.0;       // X-basis error rate
  double skr = 0.0;          // secret key rate (may be negative)
  double skr_clamped = 0.0;  // max(skr, 0)

  // Definitional-sum recomputations from projection probabilities.
  double q_z_xcheck = 0.0;
  double q_z_11_xcheck = 0.0;
  double e_z_xcheck = 0.0;
};

// Closed-form projection probability for one input pair and Bell state.
double closed_form_projection(InputPair pair, Bell bell, double lambda_a,
                              double lambda_b, double r2);

// Z-basis total gain: (1 + lambda_a*lambda_b) * p_s_a * p_s_b.
double q_z(double lambda_a, double lambda_b, double p_s_a, double p_s_b);

// Same quantity from the definitional average over Z-basis projections:
//   (p_s_a*p_s_b/2) * (P+HH + P+VV + P+HV + P-HV + P+VH + P-VH).
double q_z_from_projections(double lambda_a, double lambda_b, double p_s_a,
                            double p_s_b);

// Z-basis effective key gain: (2 - lambda_a - lambda_b + lambda_a*lambda_b) * p_s_a * p_s_b.
double q_z_11(double lambda_a, double lambda_b, double p_s_a, double p_s_b);

// Definitional sum (p_s_a*p_s_b/2) * (P+HV + P-HV + P+VH + P-VH).
double q_z_11_from_projections(double lambda_a, double lambda_b, double p_s_a,
                               double p_s_b);

// Z-basis error rate: (lambda_a + lambda_b - lambda_a*lambda_b) / (2*(1 + lambda_a*lambda_b)).
double e_z(double lambda_a, double lambda_b);

// Definitional ratio (P+HH + P+VV) / (P+HH + P+VV + P+HV + P-HV + P+VH + P-VH).
double e_z_from_projections(double lambda_a, double lambda_b);

// X-basis error rate: (1 - (1-lambda_a)(1-lambda_b)*r2^2) / 2.
double e_x_11(double lambda_a, double lambda_b, double r2);

// Definitional ratio (P-DD + P+DA) / (P+DD + P-DD + P+DA + P-DA); agrees with
// e_x_11 identically, unlike the Z-basis pair above.
double e_x_11_from_projections(double lambda_a, double lambda_b, double r2);

// -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0 by explicit branch.
double binary_entropy(double x);

// Devetak-Winter rate for one link,
//   R = p_s_a*p_s_b * [ (2-la-lb+la*lb)(1 - H(e_x)) - (1+la*lb) f H(e_z) ],
// with e_x built from the per-arm coherence product r2_a*r2_b.  Fills all
// MetricsRecord fields, including the definitional cross-checks.
MetricsRecord secret_key_rate(const NoiseFigures& arm_a, const NoiseFigures& arm_b,
                              const ErrorCorrectionConfig& ec = {});

}  // namespace mdiqkd
