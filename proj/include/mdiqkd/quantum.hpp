#pragma once

#include <array>
#include <utility>

#include "mdiqkd/density_matrix.hpp"

namespace mdiqkd {

// Combined depolarizing + dephasing map on a single-qubit state:
//   rho -> (1 - lambda) * [rho with off-diagonals scaled by r2] + (lambda/2) * I
DensityMatrix apply_combined_channel(const DensityMatrix& rho, double lambda,
                                     double r2);

// Independent evaluation path for the same channel: depolarization as the
// uniform Pauli mixture (identity with weight 1 - 3*lambda/4, each of X, Y, Z
// with weight lambda/4) and dephasing as numerical phase averaging against
// wrapped_normal_pdf, one quadrature pass per polarization mode.  Agrees with
// apply_combined_channel elementwise to ~1e-12 at quadrature resolution.
DensityMatrix apply_channel_kraus_path(const DensityMatrix& rho, double lambda,
                                       double sigma_theta);

/// The eight two-photon input combinations tracked by the protocol.
enum class InputPair { HH, VV, HV, VH, DD, AA, DA, AD };

inline constexpr std::array<InputPair, 8> kInputPairs = {
    InputPair::HH, InputPair::VV, InputPair::HV, InputPair::VH,
    InputPair::DD, InputPair::AA, InputPair::DA, InputPair::AD};

const char* to_string(InputPair pair);
std::pair<Polarization, Polarization> polarizations(InputPair pair);

/// All 16 Bell-projection probabilities (8 input pairs x 2 Bell states).
struct ProjectionTable {
  std::array<double, 16> values{};

  static std::size_t index(InputPair pair, Bell bell) {
    return 2 * static_cast<std::size_t>(pair) +
           (bell == Bell::PsiMinus ? 1 : 0);
  }
  double value(InputPair pair, Bell bell) const { return values[index(pair, bell)]; }
};

// Projection probabilities computed through the density-matrix pipeline
// (prepare -> apply_combined_channel -> tensor -> project_bell), with the
// same coherence factor r2 on both arms.
ProjectionTable projection_table(double lambda_a, double lambda_b, double r2);

}  // namespace mdiqkd
