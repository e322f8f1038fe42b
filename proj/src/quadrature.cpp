#include "mdiqkd/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mdiqkd {

int panels_for_sigma(double sigma_theta) {
  if (!(sigma_theta > 0.0)) {
    return 16;
  }
  const double width = 2.0 * std::numbers::pi;
  const int wanted = static_cast<int>(std::ceil(width / (0.5 * sigma_theta)));
  return std::clamp(wanted, 16, 4096);
}

}  // namespace mdiqkd
