#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "mdiqkd/channel.hpp"
#include "mdiqkd/quadrature.hpp"

using namespace mdiqkd;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("transmissivity follows the exponential attenuation model") {
  CHECK(transmissivity(0.0, 0.2) == 1.0);
  CHECK(std::abs(transmissivity(50.0, 0.2) - 0.1) < 1e-15);
  CHECK(std::abs(transmissivity(100.0, 0.2) - 0.01) < 1e-16);

  double previous = 1.0;
  for (int l = 1; l <= 400; ++l) {
    const double eta = transmissivity(l, 0.2);
    CHECK(eta < previous);
    previous = eta;
  }

  CHECK_THROWS_AS(transmissivity(-1.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(transmissivity(10.0, -0.2), std::domain_error);
}

TEST_CASE("depolarizing_lambda closed form and limits") {
  CHECK(depolarizing_lambda(0.0, 0.5) == 0.0);
  CHECK(depolarizing_lambda(0.1, 1.0) == 0.0);
  // frozen from normalizing the unnormalized channel output at these parameters
  CHECK(std::abs(depolarizing_lambda(0.1, 0.5) - 0.0990990990990991) < 1e-15);

  CHECK_THROWS_AS(depolarizing_lambda(0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(depolarizing_lambda(0.1, 1.5), std::domain_error);
  CHECK_THROWS_AS(depolarizing_lambda(-0.1, 0.5), std::domain_error);
}

TEST_CASE("depolarizing_lambda is monotone in both arguments") {
  for (int i = 0; i < 100; ++i) {
    const double eta = 0.01 + 0.98 * i / 99.0;
    double previous = -1.0;
    for (int j = 0; j < 100; ++j) {
      const double n = 0.001 + j / 99.0;
      const double lambda = depolarizing_lambda(n, eta);
      if (eta < 1.0) {
        CHECK(lambda > previous);
      }
      previous = lambda;
    }
  }
  for (int j = 1; j < 100; ++j) {
    const double n = j / 99.0;
    double previous = 2.0;
    for (int i = 0; i < 100; ++i) {
      const double eta = 0.01 + 0.99 * i / 99.0;
      const double lambda = depolarizing_lambda(n, eta);
      CHECK(lambda < previous);
      previous = lambda;
    }
  }
}

TEST_CASE("success_probability identities and frozen value") {
  for (double eta : {0.001, 0.1, 0.31622776601683794, 0.5, 1.0}) {
    CHECK(success_probability(0.0, eta) == eta);
  }
  CHECK(success_probability(0.1, 1.0) == 1.0);
  // frozen from the trace of the unnormalized channel output
  CHECK(std::abs(success_probability(0.1, 0.5) - 0.45659987350949450) < 1e-15);

  CHECK_THROWS_AS(success_probability(0.1, 0.0), std::domain_error);
}

TEST_CASE("dephasing_r2 closed form") {
  CHECK(dephasing_r2(0.0) == 1.0);
  CHECK(std::abs(dephasing_r2(0.3) - 0.91393118527122819) < 1e-15);
  CHECK(std::abs(dephasing_r2(1.0) - 0.36787944117144233) < 1e-15);

  double previous = 2.0;
  for (int i = 0; i <= 50; ++i) {
    const double r2 = dephasing_r2(0.05 * i);
    CHECK(r2 < previous);
    previous = r2;
  }
  CHECK_THROWS_AS(dephasing_r2(-0.1), std::domain_error);
}

TEST_CASE("wrapped normal density normalizes and is symmetric") {
  CHECK_THROWS_AS(wrapped_normal_pdf(0.0, 0.0), std::domain_error);

  for (double sigma = 0.05; sigma <= 2.0 + 1e-12; sigma += 0.05) {
    const double total = integrate_panels(
        [sigma](double theta) { return wrapped_normal_pdf(theta, sigma); }, -kPi,
        kPi, panels_for_sigma(sigma));
    CHECK(std::abs(total - 1.0) < 1e-10);
  }

  CHECK(wrapped_normal_pdf(1.0, 0.5) == wrapped_normal_pdf(-1.0, 0.5));
  CHECK(wrapped_normal_pdf(2.5, 1.3) == wrapped_normal_pdf(-2.5, 1.3));
}

TEST_CASE("mean resultant of the wrapped normal matches exp(-sigma^2/2)") {
  // quadrature route, independent of the closed form it certifies
  const auto resultant = [](double sigma) {
    return integrate_panels(
        [sigma](double theta) {
          return wrapped_normal_pdf(theta, sigma) * std::polar(1.0, theta);
        },
        -kPi, kPi, panels_for_sigma(sigma));
  };

  const auto at_03 = resultant(0.3);
  CHECK(std::abs(at_03.real() - 0.95599748183309991) < 1e-9);  // exp(-0.045)
  CHECK(std::abs(at_03.imag()) < 1e-12);

  for (double sigma = 0.05; sigma <= 1.0 + 1e-12; sigma += 0.05) {
    const auto r = resultant(sigma);
    CHECK(std::abs(r.real() - std::exp(-0.5 * sigma * sigma)) < 1e-9);
    CHECK(std::abs(r.imag()) < 1e-12);
    CHECK(std::abs(r.real() * r.real() - dephasing_r2(sigma)) < 1e-9);
  }
}

TEST_CASE("derived figures stay in their ranges, lambda vanishes only without mixing") {
  for (int i = 0; i <= 40; ++i) {
    const double n = 0.125 * i;  // up to 5 thermal photons
    for (int j = 1; j <= 40; ++j) {
      const double eta = j / 40.0;
      const double lambda = depolarizing_lambda(n, eta);
      const double p_s = success_probability(n, eta);
      CHECK(lambda >= 0.0);
      CHECK(lambda < 1.0);
      CHECK(p_s > 0.0);
      CHECK(p_s <= 1.0);
      CHECK((lambda == 0.0) == (n == 0.0 || eta == 1.0));
    }
  }
  CHECK(dephasing_r2(0.0) == 1.0);
  for (double sigma : {1e-8, 0.01, 0.5, 3.0}) {
    CHECK(dephasing_r2(sigma) < 1.0);
  }
}

TEST_CASE("noise_figures bundles the per-arm quantities") {
  const NoiseFigures ideal = noise_figures({0.0, 0.0, 0.0, 0.2});
  CHECK(ideal.eta == 1.0);
  CHECK(ideal.lambda == 0.0);
  CHECK(ideal.p_s == 1.0);
  CHECK(ideal.r2 == 1.0);

  const NoiseFigures loss_only = noise_figures({0.0, 0.0, 50.0, 0.2});
  CHECK(std::abs(loss_only.eta - 0.1) < 1e-15);
  CHECK(loss_only.lambda == 0.0);
  CHECK(loss_only.p_s == loss_only.eta);
  CHECK(loss_only.r2 == 1.0);

  // frozen composite case, arm length 100 km
  const NoiseFigures noisy = noise_figures({0.01, 0.1, 100.0, 0.2});
  CHECK(std::abs(noisy.eta - 0.01) < 1e-16);
  CHECK(std::abs(noisy.lambda - 0.66440723242685252) < 1e-14);
  CHECK(std::abs(noisy.p_s - 0.028646655049605533) < 1e-15);
  CHECK(std::abs(noisy.r2 - 0.99004983374916805) < 1e-15);

  CHECK_THROWS_AS(noise_figures({-0.1, 0.0, 0.0, 0.2}), std::domain_error);
  CHECK_THROWS_AS(noise_figures({0.0, -1.0, 0.0, 0.2}), std::domain_error);
}
