#include "mdiqkd/csv.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace mdiqkd {

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::array<double, 19> row_values(const SweepPoint& p) {
  const MetricsRecord& m = p.metrics;
  return {p.length_km,   p.n_th,        p.sigma_theta, p.arm_a.eta,
          p.arm_b.eta,   p.arm_a.lambda, p.arm_b.lambda, p.arm_a.p_s,
          p.arm_b.p_s,   p.arm_a.r2,    m.q_z,         m.q_z_11,
          m.e_z,         m.e_x_11,      m.skr,         m.skr_clamped,
          m.q_z_xcheck,  m.q_z_11_xcheck, m.e_z_xcheck};
}

std::string csv_header() {
  std::string header;
  for (std::size_t i = 0; i < kOutputColumns.size(); ++i) {
    if (i != 0) {
      header += ',';
    }
    header += kOutputColumns[i];
  }
  return header;
}

std::string format_row_csv(const SweepPoint& p) {
  const auto values = row_values(p);
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      row += ',';
    }
    row += format_double(values[i]);
  }
  return row;
}

namespace {

void write_metadata(std::ostream& os, const SweepResult& result) {
  os << "# mdi-qkd-sim " << result.version << "\n";
  os << "# arm_split: " << result.arm_convention << "\n";
  os << "# alpha_db_per_km: " << format_double(result.config.alpha_db_per_km) << "\n";
  os << "# f: " << format_double(result.config.f) << "\n";
  os << "# grid: " << result.config.distances_km.size() << " distances x "
     << result.config.n_th_values.size() << " n_th x "
     << result.config.sigma_theta_values.size() << " sigma_theta = "
     << result.rows.size() << " rows\n";
  if (result.default_grid) {
    os << "# grid_note: figures preset; the covered noise ranges are pinned, "
          "the 1 km distance spacing is a density choice\n";
  }
}

}  // namespace

void write_csv(std::ostream& os, const SweepResult& result) {
  write_metadata(os, result);
  os << csv_header() << "\n";
  for (const SweepPoint& p : result.rows) {
    os << format_row_csv(p) << "\n";
  }
}

void write_pivot_csv(std::ostream& os, const SweepResult& result) {
  write_metadata(os, result);
  const auto& n_values = result.config.n_th_values;
  const auto& s_values = result.config.sigma_theta_values;
  const std::size_t curves = n_values.size() * s_values.size();

  os << "L_km";
  for (double n : n_values) {
    for (double s : s_values) {
      os << ",skr_nth" << format_double(n) << "_sigma" << format_double(s);
    }
  }
  os << "\n";
  for (std::size_t il = 0; il < result.config.distances_km.size(); ++il) {
    os << format_double(result.config.distances_km[il]);
    for (std::size_t c = 0; c < curves; ++c) {
      os << ',' << format_double(result.rows[il * curves + c].metrics.skr_clamped);
    }
    os << "\n";
  }
}

std::string format_point_human(const SweepPoint& p) {
  const auto values = row_values(p);
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::string name = kOutputColumns[i];
    name.resize(14, ' ');
    out << name << format_double(values[i]) << "\n";
  }
  return out.str();
}

}  // namespace mdiqkd
