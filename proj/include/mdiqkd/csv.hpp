#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "mdiqkd/sweep.hpp"

namespace mdiqkd {

// Fixed column order shared by the CSV writer and the `point` command.
inline constexpr std::array<const char*, 19> kOutputColumns = {
    "L_km",   "n_th",   "sigma_theta", "eta_a",       "eta_b",
    "lambda_a", "lambda_b", "p_s_a",   "p_s_b",       "r2",
    "q_z",    "q_z_11", "e_z",         "e_x_11",      "skr",
    "skr_clamped", "q_z_xcheck", "q_z_11_xcheck", "e_z_xcheck"};

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

// Column values of one row, in kOutputColumns order.
std::array<double, 19> row_values(const SweepPoint& p);

std::string csv_header();
std::string format_row_csv(const SweepPoint& p);

// Comment metadata, header, and one line per row.
void write_csv(std::ostream& os, const SweepResult& result);

// One row per distance, one skr_clamped column per (n_th, sigma_theta) curve.
void write_pivot_csv(std::ostream& os, const SweepResult& result);

// Aligned key-value rendering for the `point` command.
std::string format_point_human(const SweepPoint& p);

}  // namespace mdiqkd
