#include "mdiqkd/quantum.hpp"

#include <cmath>
#include <stdexcept>

#include "mdiqkd/channel.hpp"
#include "mdiqkd/quadrature.hpp"

namespace mdiqkd {

namespace {

void require_fraction(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

void require_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw std::domain_error("channel maps act on single-qubit states");
  }
}

using M2 = std::array<Complex, 4>;  // row-major 2x2

M2 as_m2(const DensityMatrix& rho) {
  return {rho(0, 0), rho(0, 1), rho(1, 0), rho(1, 1)};
}

// u rho u^dagger for a 2x2 unitary u.
M2 conjugate(const M2& u, const M2& rho) {
  // t = u * rho
  const M2 t = {u[0] * rho[0] + u[1] * rho[2], u[0] * rho[1] + u[1] * rho[3],
                u[2] * rho[0] + u[3] * rho[2], u[2] * rho[1] + u[3] * rho[3]};
  // t * u^dagger
  return {t[0] * std::conj(u[0]) + t[1] * std::conj(u[1]),
          t[0] * std::conj(u[2]) + t[1] * std::conj(u[3]),
          t[2] * std::conj(u[0]) + t[3] * std::conj(u[1]),
          t[2] * std::conj(u[2]) + t[3] * std::conj(u[3])};
}

// One polarization mode picks up a wrapped-normal phase; average the
// conjugated state over the distribution by quadrature.
M2 phase_average(const M2& rho, double sigma_theta, int mode) {
  constexpr double kPi = 3.14159265358979323846;
  M2 acc = {Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0)};
  const int panels = panels_for_sigma(sigma_theta);
  for_each_gauss_node(-kPi, kPi, panels, [&](double theta, double weight) {
    const Complex phase = std::polar(1.0, theta);
    const M2 u = mode == 0 ? M2{phase, Complex(0.0), Complex(0.0), Complex(1.0)}
                           : M2{Complex(1.0), Complex(0.0), Complex(0.0), phase};
    const M2 rotated = conjugate(u, rho);
    const double density = weight * wrapped_normal_pdf(theta, sigma_theta);
    for (int i = 0; i < 4; ++i) {
      acc[i] += density * rotated[i];
    }
  });
  return acc;
}

}  // namespace

DensityMatrix apply_combined_channel(const DensityMatrix& rho, double lambda,
                                     double r2) {
  require_qubit(rho);
  require_fraction(lambda, "lambda");
  require_fraction(r2, "r2");
  DensityMatrix out(2);
  out(0, 0) = (1.0 - lambda) * rho(0, 0) + lambda / 2.0;
  out(1, 1) = (1.0 - lambda) * rho(1, 1) + lambda / 2.0;
  out(0, 1) = (1.0 - lambda) * r2 * rho(0, 1);
  out(1, 0) = (1.0 - lambda) * r2 * rho(1, 0);
  return out;
}

DensityMatrix apply_channel_kraus_path(const DensityMatrix& rho, double lambda,
                                       double sigma_theta) {
  require_qubit(rho);
  require_fraction(lambda, "lambda");
  if (!std::isfinite(sigma_theta) || sigma_theta < 0.0) {
    throw std::domain_error("sigma_theta must be finite and non-negative");
  }

  const M2 x = {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)};
  const M2 y = {Complex(0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0)};
  const M2 z = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)};

  const M2 in = as_m2(rho);
  const M2 xs = conjugate(x, in);
  const M2 ys = conjugate(y, in);
  const M2 zs = conjugate(z, in);

  M2 state;
  for (int i = 0; i < 4; ++i) {
    state[i] = (1.0 - 0.75 * lambda) * in[i] + 0.25 * lambda * (xs[i] + ys[i] + zs[i]);
  }

  if (sigma_theta > 0.0) {
    state = phase_average(state, sigma_theta, 0);
    state = phase_average(state, sigma_theta, 1);
  }

  DensityMatrix out(2);
  out(0, 0) = state[0];
  out(0, 1) = state[1];
  out(1, 0) = state[2];
  out(1, 1) = state[3];
  return out;
}

const char* to_string(InputPair pair) {
  switch (pair) {
    case InputPair::HH: return "HH";
    case InputPair::VV: return "VV";
    case InputPair::HV: return "HV";
    case InputPair::VH: return "VH";
    case InputPair::DD: return "DD";
    case InputPair::AA: return "AA";
    case InputPair::DA: return "DA";
    case InputPair::AD: return "AD";
  }
  throw std::domain_error("unknown input pair");
}

std::pair<Polarization, Polarization> polarizations(InputPair pair) {
  switch (pair) {
    case InputPair::HH: return {Polarization::H, Polarization::H};
    case InputPair::VV: return {Polarization::V, Polarization::V};
    case InputPair::HV: return {Polarization::H, Polarization::V};
    case InputPair::VH: return {Polarization::V, Polarization::H};
    case InputPair::DD: return {Polarization::D, Polarization::D};
    case InputPair::AA: return {Polarization::A, Polarization::A};
    case InputPair::DA: return {Polarization::D, Polarization::A};
    case InputPair::AD: return {Polarization::A, Polarization::D};
  }
  throw std::domain_error("unknown input pair");
}

ProjectionTable projection_table(double lambda_a, double lambda_b, double r2) {
  ProjectionTable table;
  for (InputPair pair : kInputPairs) {
    const auto [pol_a, pol_b] = polarizations(pair);
    const DensityMatrix arm_a = apply_combined_channel(prepare(pol_a), lambda_a, r2);
    const DensityMatrix arm_b = apply_combined_channel(prepare(pol_b), lambda_b, r2);
    const DensityMatrix joint = tensor(arm_a, arm_b);
    for (Bell bell : {Bell::PsiPlus, Bell::PsiMinus}) {
      table.values[ProjectionTable::index(pair, bell)] = project_bell(joint, bell);
    }
  }
  return table;
}

}  // namespace mdiqkd
