#include "mdiqkd/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "mdiqkd/channel.hpp"
#include "mdiqkd/metrics.hpp"
#include "mdiqkd/quadrature.hpp"
#include "mdiqkd/quantum.hpp"

namespace mdiqkd {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) {
    values[i] = lo + (hi - lo) * i / (count - 1);
  }
  return values;
}

std::string describe_worst(const char* what, double value) {
  std::ostringstream out;
  out << what << " " << value;
  return out.str();
}

// Random mixed state G G^dagger / tr(G G^dagger).
DensityMatrix random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<Complex, 4> g;
  for (auto& entry : g) {
    entry = Complex(normal(rng), normal(rng));
  }
  DensityMatrix rho(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rho(i, j) = g[2 * i] * std::conj(g[2 * j]) + g[2 * i + 1] * std::conj(g[2 * j + 1]);
    }
  }
  const double norm = rho.trace().real();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rho(i, j) /= norm;
    }
  }
  return rho;
}

}  // namespace

SuiteResult check_projection_table() {
  SuiteResult result;
  result.name = "projection-table";
  result.tolerance = 1e-12;
  const auto lambdas = linspace(0.0, 1.0, 10);
  const auto sigmas = linspace(0.0, 1.0, 10);
  double worst = 0.0;
  std::string worst_case = "none";
  for (double la : lambdas) {
    for (double lb : lambdas) {
      for (double sigma : sigmas) {
        const double r2 = dephasing_r2(sigma);
        const ProjectionTable table = projection_table(la, lb, r2);
        for (InputPair pair : kInputPairs) {
          for (Bell bell : {Bell::PsiPlus, Bell::PsiMinus}) {
            const double direct = table.value(pair, bell);
            const double closed = closed_form_projection(pair, bell, la, lb, r2);
            const double dev = std::abs(direct - closed);
            if (dev > worst) {
              worst = dev;
              worst_case = std::string(to_string(pair)) +
                           (bell == Bell::PsiPlus ? "/psi+" : "/psi-");
            }
          }
        }
      }
    }
  }
  result.max_deviation = worst;
  result.detail = "10x10x10 grid, worst at " + worst_case;
  result.passed = worst <= result.tolerance;
  return result;
}

SuiteResult check_dephasing_quadrature() {
  SuiteResult result;
  result.name = "dephasing-quadrature";
  result.tolerance = 1e-9;
  double worst = 0.0;
  double worst_imag = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double sigma = 0.05 * k;
    const auto mean_phase = integrate_panels(
        [sigma](double theta) {
          return wrapped_normal_pdf(theta, sigma) * std::polar(1.0, theta);
        },
        -kPi, kPi, panels_for_sigma(sigma));
    const double expected = std::exp(-0.5 * sigma * sigma);
    worst = std::max(worst, std::abs(mean_phase.real() - expected));
    worst = std::max(worst,
                     std::abs(mean_phase.real() * mean_phase.real() - dephasing_r2(sigma)));
    worst_imag = std::max(worst_imag, std::abs(mean_phase.imag()));
  }
  result.max_deviation = worst;
  result.detail = describe_worst("20 sigma in (0,1], max |imag|", worst_imag);
  result.passed = worst <= result.tolerance && worst_imag <= 1e-12;
  return result;
}

SuiteResult check_thermal_chain() {
  SuiteResult result;
  result.name = "thermal-chain";
  result.tolerance = 1e-12;
  const auto n_values = linspace(0.0, 1.0, 100);
  const auto etas = linspace(0.01, 1.0, 100);
  const std::array states = {prepare(Polarization::H), prepare(Polarization::V),
                             prepare(Polarization::D)};
  double worst = 0.0;
  double worst_n = 0.0;
  double worst_eta = 0.0;
  for (double n : n_values) {
    for (double eta : etas) {
      // unnormalized thermal-loss output, coefficients as printed
      const double gamma = 1.0 + n - n * eta;
      const double gamma4 = gamma * gamma * gamma * gamma;
      const double pass = eta / gamma4;
      const double mix = n * (1.0 + n) * (1.0 - eta) * (1.0 - eta) / gamma4;

      const double lambda = depolarizing_lambda(n, eta);
      const double p_s = success_probability(n, eta);

      for (const DensityMatrix& rho : states) {
        DensityMatrix raw(2);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            raw(i, j) = pass * rho(i, j) + (i == j ? mix : 0.0);
          }
        }
        const double trace = raw.trace().real();
        const DensityMatrix expected = apply_combined_channel(rho, lambda, 1.0);
        double dev = std::abs(trace - p_s);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            dev = std::max(dev, std::abs(raw(i, j) / trace - expected(i, j)));
          }
        }
        if (dev > worst) {
          worst = dev;
          worst_n = n;
          worst_eta = eta;
        }
      }
    }
  }
  result.max_deviation = worst;
  {
    std::ostringstream detail;
    detail << "100x100 (n_th, eta) grid, H/V/D inputs, worst at n_th=" << worst_n
           << " eta=" << worst_eta;
    result.detail = detail.str();
  }
  result.passed = worst <= result.tolerance;
  return result;
}

SuiteResult check_kraus_agreement() {
  SuiteResult result;
  result.name = "kraus-vs-direct";
  result.tolerance = 1e-9;
  constexpr int kTrials = 1000;
  std::mt19937_64 rng(0x6d6469716b64ULL);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  // draws happen up front so the parallel loop stays deterministic
  struct Trial {
    DensityMatrix rho{2};
    double lambda = 0.0;
    double sigma = 0.0;
  };
  std::vector<Trial> trials(kTrials);
  for (auto& trial : trials) {
    trial.rho = random_state(rng);
    trial.lambda = uniform(rng);
    trial.sigma = 0.05 + 1.15 * uniform(rng);
  }

  std::vector<double> deviations(kTrials, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < kTrials; ++t) {
    const auto& trial = trials[t];
    const DensityMatrix direct = apply_combined_channel(
        trial.rho, trial.lambda, dephasing_r2(trial.sigma));
    const DensityMatrix kraus =
        apply_channel_kraus_path(trial.rho, trial.lambda, trial.sigma);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        deviations[t] = std::max(deviations[t], std::abs(direct(i, j) - kraus(i, j)));
      }
    }
  }
  int worst_trial = 0;
  for (int t = 1; t < kTrials; ++t) {
    if (deviations[t] > deviations[worst_trial]) {
      worst_trial = t;
    }
  }
  result.max_deviation = deviations[worst_trial];
  {
    std::ostringstream detail;
    detail << "1000 seeded random (rho, lambda, sigma) triples, worst at lambda="
           << trials[worst_trial].lambda << " sigma=" << trials[worst_trial].sigma;
    result.detail = detail.str();
  }
  result.passed = result.max_deviation <= result.tolerance;
  return result;
}

SuiteResult check_e_x_dual_path() {
  SuiteResult result;
  result.name = "e_x-dual-path";
  result.tolerance = 1e-12;
  const auto lambdas = linspace(0.0, 1.0, 10);
  const auto sigmas = linspace(0.0, 1.0, 10);
  double worst = 0.0;
  for (double la : lambdas) {
    for (double lb : lambdas) {
      for (double sigma : sigmas) {
        const double r2 = dephasing_r2(sigma);
        worst = std::max(worst, std::abs(e_x_11(la, lb, r2) -
                                         e_x_11_from_projections(la, lb, r2)));
      }
    }
  }
  result.max_deviation = worst;
  result.detail = "10x10x10 grid";
  result.passed = worst <= result.tolerance;
  return result;
}

std::vector<SuiteResult> run_validation_suites() {
  return {check_thermal_chain(), check_dephasing_quadrature(),
          check_projection_table(), check_kraus_agreement(),
          check_e_x_dual_path()};
}

std::vector<std::string> definitional_gap_report() {
  std::vector<std::string> lines;
  const auto line = [&lines](const char* label, double closed, double summed) {
    std::ostringstream out;
    out << label << ": closed form " << closed << ", projection sum " << summed
        << ", gap " << closed - summed;
    lines.push_back(out.str());
  };
  line("q_z at lambda_a=lambda_b=1, p_s=1", q_z(1, 1, 1, 1),
       q_z_from_projections(1, 1, 1, 1));
  line("q_z_11 at lambda_a=lambda_b=0, p_s=1", q_z_11(0, 0, 1, 1),
       q_z_11_from_projections(0, 0, 1, 1));
  line("e_z at lambda_a=lambda_b=1", e_z(1, 1), e_z_from_projections(1, 1));

  // grid-wide magnitudes, for the record
  double worst_qz = 0.0;
  double worst_qz11 = 0.0;
  double worst_ez = 0.0;
  const auto lambdas = linspace(0.0, 1.0, 20);
  for (double la : lambdas) {
    for (double lb : lambdas) {
      worst_qz = std::max(worst_qz,
                          std::abs(q_z(la, lb, 1, 1) - q_z_from_projections(la, lb, 1, 1)));
      worst_qz11 = std::max(worst_qz11, std::abs(q_z_11(la, lb, 1, 1) -
                                                 q_z_11_from_projections(la, lb, 1, 1)));
      worst_ez = std::max(worst_ez, std::abs(e_z(la, lb) - e_z_from_projections(la, lb)));
    }
  }
  std::ostringstream out;
  out << "grid max |gap| (20x20 lambdas, p_s=1): q_z " << worst_qz << ", q_z_11 "
      << worst_qz11 << ", e_z " << worst_ez;
  lines.push_back(out.str());
  return lines;
}

}  // namespace mdiqkd
