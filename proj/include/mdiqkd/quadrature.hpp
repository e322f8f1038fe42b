#pragma once

#include <boost/math/quadrature/gauss.hpp>

namespace mdiqkd {

// Number of panels that resolves a wrapped-normal peak of width sigma on
// [-pi, pi]: panel width <= sigma/2, at least 16 panels (480 nodes).
int panels_for_sigma(double sigma_theta);

// Calls fn(x, w) for every node of a composite 30-point Gauss-Legendre rule
// on [a, b] split into `panels` equal panels.
template <typename Fn>
void for_each_gauss_node(double a, double b, int panels, Fn&& fn) {
  using rule = boost::math::quadrature::gauss<double, 30>;
  // boost stores the non-negative half of the symmetric node set
  const auto& xs = rule::abscissa();
  const auto& ws = rule::weights();
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double scale = 0.5 * h;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      fn(mid - scale * xs[i], scale * ws[i]);
      fn(mid + scale * xs[i], scale * ws[i]);
    }
  }
}

// Composite Gauss-Legendre integral of a scalar-valued integrand.
template <typename F>
auto integrate_panels(F&& f, double a, double b, int panels) {
  decltype(f(a)) acc{};
  for_each_gauss_node(a, b, panels, [&](double x, double w) { acc += w * f(x); });
  return acc;
}

}  // namespace mdiqkd
