#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "mdiqkd/channel.hpp"
#include "mdiqkd/metrics.hpp"
#include "mdiqkd/quantum.hpp"

using namespace mdiqkd;

namespace {

NoiseFigures figures_for(double n_th, double sigma, double arm_km) {
  return noise_figures({n_th, sigma, arm_km, 0.2});
}

}  // namespace

TEST_CASE("closed-form projections at the table anchors") {
  CHECK(closed_form_projection(InputPair::HH, Bell::PsiPlus, 0, 0, 1) == 0.0);
  CHECK(closed_form_projection(InputPair::HV, Bell::PsiPlus, 0, 0, 1) == 0.5);
  CHECK(closed_form_projection(InputPair::DD, Bell::PsiPlus, 0, 0, 1) == 0.5);
  CHECK(closed_form_projection(InputPair::AD, Bell::PsiMinus, 0, 0, 1) == 0.5);

  const double r2 = std::exp(-0.09);
  const ProjectionTable table = projection_table(0.2, 0.1, r2);
  CHECK(std::abs(closed_form_projection(InputPair::DD, Bell::PsiPlus, 0.2, 0.1, r2) -
                 table.value(InputPair::DD, Bell::PsiPlus)) < 1e-12);
}

TEST_CASE("Z-basis gains, printed forms and definitional sums") {
  CHECK(q_z(0, 0, 1, 1) == 1.0);
  CHECK(std::abs(q_z(0, 0, 0.1, 0.1) - 0.01) < 1e-15);
  CHECK(q_z(1, 1, 1, 1) == 2.0);

  CHECK(q_z_from_projections(0, 0, 1, 1) == 1.0);
  CHECK(q_z_from_projections(1, 1, 1, 1) == 0.75);
  CHECK(std::abs(q_z_from_projections(0.2, 0.1, 1, 1) - 0.93) < 1e-12);

  CHECK(q_z_11(0, 0, 1, 1) == 2.0);
  CHECK(q_z_11(1, 1, 1, 1) == 1.0);
  // the definitional sum carries an explicit 1/2: a factor-2 gap by design
  CHECK(q_z_11_from_projections(0, 0, 1, 1) == 1.0);
}

TEST_CASE("Z-basis error rate, both routes") {
  CHECK(e_z(0, 0) == 0.0);
  CHECK(e_z(1, 1) == 0.25);
  CHECK(std::abs(e_z_from_projections(1, 1) - 1.0 / 3.0) < 1e-15);
  CHECK(e_z_from_projections(0, 0) == 0.0);
}

TEST_CASE("X-basis error rate and its definitional ratio agree") {
  CHECK(e_x_11(0, 0, 1) == 0.0);
  CHECK(e_x_11(1, 0.3, 0.7) == 0.5);
  CHECK(e_x_11(0.4, 1, 0.2) == 0.5);
  // frozen: (1 - exp(-0.18)) / 2 at r2 = exp(-0.09)
  CHECK(std::abs(e_x_11(0, 0, std::exp(-0.09)) - 0.082364894294363989) < 1e-15);

  for (double la : {0.0, 0.2, 0.7, 1.0}) {
    for (double lb : {0.0, 0.1, 0.9}) {
      for (double r2 : {1.0, 0.8, 0.3}) {
        CHECK(std::abs(e_x_11(la, lb, r2) - e_x_11_from_projections(la, lb, r2)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(std::abs(binary_entropy(0.11) - 0.49991595816452800) < 1e-12);
  CHECK(binary_entropy(0.3) == binary_entropy(0.7));

  CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.01), std::domain_error);
}

TEST_CASE("secret key rate at forced points") {
  const NoiseFigures ideal{1.0, 0.0, 1.0, 1.0};
  const MetricsRecord m = secret_key_rate(ideal, ideal);
  CHECK(m.skr == 2.0);
  CHECK(m.skr_clamped == 2.0);
  CHECK(m.q_z == 1.0);
  CHECK(m.q_z_11 == 2.0);
  CHECK(m.e_z == 0.0);
  CHECK(m.e_x_11 == 0.0);

  const NoiseFigures lossy{0.1, 0.0, 0.1, 1.0};
  const MetricsRecord loss = secret_key_rate(lossy, lossy);
  CHECK(loss.skr == 2.0 * (0.1 * 0.1));
  CHECK(std::abs(loss.skr - 0.02) < 1e-15);

  CHECK_THROWS_AS(secret_key_rate(ideal, ideal, ErrorCorrectionConfig{0.9}),
                  std::domain_error);
}

TEST_CASE("secret key rate pipeline point, frozen end to end") {
  // total L = 100 km, symmetric arms of 50 km
  const NoiseFigures arm = figures_for(0.01, 0.1, 50.0);
  const MetricsRecord m = secret_key_rate(arm, arm);
  CHECK(std::abs(m.q_z - 0.012852751307592725) < 1e-12);
  CHECK(std::abs(m.q_z_11 - 0.021911860334636976) < 1e-12);
  CHECK(std::abs(m.e_z - 0.12819230181129674) < 1e-12);
  CHECK(std::abs(m.e_x_11 - 0.13803901587191149) < 1e-12);
  CHECK(std::abs(m.skr - 0.0021225129710876465) < 1e-12);
  CHECK(std::abs(m.q_z_xcheck - 0.011779742054682721) < 1e-12);
  CHECK(std::abs(m.q_z_11_xcheck - 0.010955930167318488) < 1e-12);
  CHECK(std::abs(m.e_z_xcheck - 0.069934628749935011) < 1e-12);
}

TEST_CASE("rate never exceeds the effective gain") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const NoiseFigures a{1.0, uniform(rng), 0.05 + 0.95 * uniform(rng),
                         std::exp(-uniform(rng))};
    const NoiseFigures b{1.0, uniform(rng), 0.05 + 0.95 * uniform(rng),
                         std::exp(-uniform(rng))};
    const MetricsRecord m = secret_key_rate(a, b);
    CHECK(m.skr <= m.q_z_11 + 1e-15);
    if (m.e_z > 0.0 || m.e_x_11 > 0.0) {
      CHECK(m.skr < m.q_z_11);
    }
  }

  const NoiseFigures clean{1.0, 0.0, 0.4, 1.0};
  const MetricsRecord m = secret_key_rate(clean, clean);
  CHECK(m.skr == m.q_z_11);
}

TEST_CASE("metrics are symmetric under arm swap") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const NoiseFigures a{1.0, uniform(rng), 0.05 + 0.95 * uniform(rng),
                         std::exp(-uniform(rng))};
    const NoiseFigures b{1.0, uniform(rng), 0.05 + 0.95 * uniform(rng),
                         std::exp(-uniform(rng))};
    const MetricsRecord ab = secret_key_rate(a, b);
    const MetricsRecord ba = secret_key_rate(b, a);
    CHECK(ab.q_z == ba.q_z);
    CHECK(ab.q_z_11 == ba.q_z_11);
    CHECK(ab.e_z == ba.e_z);
    CHECK(ab.e_x_11 == ba.e_x_11);
    CHECK(ab.skr == ba.skr);
    CHECK(ab.q_z_xcheck == ba.q_z_xcheck);
    CHECK(ab.q_z_11_xcheck == ba.q_z_11_xcheck);
    CHECK(ab.e_z_xcheck == ba.e_z_xcheck);
  }
}

TEST_CASE("dephasing moves only the X-basis error") {
  double previous_skr = 1e300;
  double last_ex = -1.0;
  MetricsRecord reference{};
  bool first = true;
  for (double sigma : {0.0, 0.05, 0.1, 0.2, 0.3, 0.6, 1.0}) {
    const NoiseFigures arm = figures_for(0.02, sigma, 30.0);
    const MetricsRecord m = secret_key_rate(arm, arm);
    if (first) {
      reference = m;
      first = false;
    } else {
      CHECK(m.q_z == reference.q_z);
      CHECK(m.q_z_11 == reference.q_z_11);
      CHECK(m.e_z == reference.e_z);
      CHECK(m.e_x_11 > last_ex);
    }
    last_ex = m.e_x_11;
    CHECK(m.skr < previous_skr);
    previous_skr = m.skr;
  }
}

TEST_CASE("clamped rate is monotone in thermal noise on a fine grid") {
  for (double sigma : {0.0, 0.2}) {
    for (double total_km : {0.0, 40.0, 120.0, 240.0}) {
      double previous = 1e300;
      for (int i = 0; i <= 100; ++i) {
        const double n_th = 0.001 * i;
        const NoiseFigures arm = figures_for(n_th, sigma, total_km / 2.0);
        const MetricsRecord m = secret_key_rate(arm, arm);
        CHECK(m.skr_clamped <= previous);
        previous = m.skr_clamped;
      }
    }
  }
}
