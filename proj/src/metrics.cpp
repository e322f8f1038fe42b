#include "mdiqkd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdiqkd {

void ErrorCorrectionConfig::validate() const {
  if (!std::isfinite(f) || f < 1.0) {
    throw std::domain_error("error-correction efficiency f must be >= 1");
  }
}

double closed_form_projection(InputPair pair, Bell bell, double lambda_a,
                              double lambda_b, double r2) {
  const double flip = lambda_a + lambda_b - lambda_a * lambda_b;
  const double keep = 2.0 - (lambda_a + lambda_b) + lambda_a * lambda_b;
  const double coherence = (1.0 - lambda_a) * (1.0 - lambda_b) * r2 * r2;
  switch (pair) {
    case InputPair::HH:
    case InputPair::VV:
      return flip / 4.0;
    case InputPair::HV:
    case InputPair::VH:
      return keep / 4.0;
    case InputPair::DD:
    case InputPair::AA:
      return bell == Bell::PsiPlus ? (1.0 + coherence) / 4.0
                                   : (1.0 - coherence) / 4.0;
    case InputPair::DA:
    case InputPair::AD:
      return bell == Bell::PsiPlus ? (1.0 - coherence) / 4.0
                                   : (1.0 + coherence) / 4.0;
  }
  throw std::domain_error("unknown input pair");
}

double q_z(double lambda_a, double lambda_b, double p_s_a, double p_s_b) {
  return (1.0 + lambda_a * lambda_b) * (p_s_a * p_s_b);
}

double q_z_from_projections(double lambda_a, double lambda_b, double p_s_a,
                            double p_s_b) {
  const auto p = [&](InputPair pair, Bell bell) {
    return closed_form_projection(pair, bell, lambda_a, lambda_b, 1.0);
  };
  const double sum = p(InputPair::HH, Bell::PsiPlus) + p(InputPair::VV, Bell::PsiPlus) +
                     p(InputPair::HV, Bell::PsiPlus) + p(InputPair::HV, Bell::PsiMinus) +
                     p(InputPair::VH, Bell::PsiPlus) + p(InputPair::VH, Bell::PsiMinus);
  return 0.5 * (p_s_a * p_s_b) * sum;
}

double q_z_11(double lambda_a, double lambda_b, double p_s_a, double p_s_b) {
  return (2.0 - (lambda_a + lambda_b) + lambda_a * lambda_b) * (p_s_a * p_s_b);
}

double q_z_11_from_projections(double lambda_a, double lambda_b, double p_s_a,
                               double p_s_b) {
  const auto p = [&](InputPair pair, Bell bell) {
    return closed_form_projection(pair, bell, lambda_a, lambda_b, 1.0);
  };
  const double sum = p(InputPair::HV, Bell::PsiPlus) + p(InputPair::HV, Bell::PsiMinus) +
                     p(InputPair::VH, Bell::PsiPlus) + p(InputPair::VH, Bell::PsiMinus);
  return 0.5 * sum * (p_s_a * p_s_b);
}

double e_z(double lambda_a, double lambda_b) {
  return (lambda_a + lambda_b - lambda_a * lambda_b) /
         (2.0 * (1.0 + lambda_a * lambda_b));
}

double e_z_from_projections(double lambda_a, double lambda_b) {
  const auto p = [&](InputPair pair, Bell bell) {
    return closed_form_projection(pair, bell, lambda_a, lambda_b, 1.0);
  };
  const double bad = p(InputPair::HH, Bell::PsiPlus) + p(InputPair::VV, Bell::PsiPlus);
  const double all = bad + p(InputPair::HV, Bell::PsiPlus) +
                     p(InputPair::HV, Bell::PsiMinus) + p(InputPair::VH, Bell::PsiPlus) +
                     p(InputPair::VH, Bell::PsiMinus);
  return bad / all;
}

double e_x_11(double lambda_a, double lambda_b, double r2) {
  return (1.0 - (1.0 - lambda_a) * (1.0 - lambda_b) * r2 * r2) / 2.0;
}

double e_x_11_from_projections(double lambda_a, double lambda_b, double r2) {
  const auto p = [&](InputPair pair, Bell bell) {
    return closed_form_projection(pair, bell, lambda_a, lambda_b, r2);
  };
  const double bad = p(InputPair::DD, Bell::PsiMinus) + p(InputPair::DA, Bell::PsiPlus);
  const double all = p(InputPair::DD, Bell::PsiPlus) + p(InputPair::DD, Bell::PsiMinus) +
                     p(InputPair::DA, Bell::PsiPlus) + p(InputPair::DA, Bell::PsiMinus);
  return bad / all;
}

double binary_entropy(double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw std::domain_error("binary_entropy expects x in [0, 1]");
  }
  if (x == 0.0 || x == 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

MetricsRecord secret_key_rate(const NoiseFigures& arm_a, const NoiseFigures& arm_b,
                              const ErrorCorrectionConfig& ec) {
  ec.validate();
  const double la = arm_a.lambda;
  const double lb = arm_b.lambda;
  const double gain = arm_a.p_s * arm_b.p_s;
  const double coherence4 = arm_a.r2 * arm_b.r2;  // r^4 for equal arms

  MetricsRecord m;
  m.q_z = q_z(la, lb, arm_a.p_s, arm_b.p_s);
  m.q_z_11 = q_z_11(la, lb, arm_a.p_s, arm_b.p_s);
  m.e_z = e_z(la, lb);
  m.e_x_11 = (1.0 - (1.0 - la) * (1.0 - lb) * coherence4) / 2.0;
  m.skr = gain * ((2.0 - (la + lb) + la * lb) * (1.0 - binary_entropy(m.e_x_11)) -
                  (1.0 + la * lb) * ec.f * binary_entropy(m.e_z));
  m.skr_clamped = std::max(m.skr, 0.0);
  m.q_z_xcheck = q_z_from_projections(la, lb, arm_a.p_s, arm_b.p_s);
  m.q_z_11_xcheck = q_z_11_from_projections(la, lb, arm_a.p_s, arm_b.p_s);
  m.e_z_xcheck = e_z_from_projections(la, lb);
  return m;
}

}  // namespace mdiqkd
