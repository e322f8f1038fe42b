#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "mdiqkd/sweep.hpp"

namespace mdiqkd {

/// Filesystem failure (unreadable config, unwritable output).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses the flat key=value sweep configuration format:
//   distances_km=0:300:1
//   n_th_values=0,0.001,0.01,0.05,0.1
//   sigma_theta_values=0,0.1,0.2,0.3
//   alpha_db_per_km=0.2
//   f=1.0
//   arm_split=symmetric            (or a=KM,b=KM)
// List entries are comma-separated; each entry may be a scalar or an
// inclusive start:stop:step range.  Blank lines and #-comments are ignored;
// unknown or duplicate keys are errors.  The returned config is validated.
SweepConfig parse_sweep_config_text(const std::string& text);

// Reads and parses a config file; throws IoError if unreadable.
SweepConfig load_sweep_config(const std::filesystem::path& path);

// Parses an --arm-split flag value: "symmetric" or "a=KM,b=KM".
ArmSplit parse_arm_split(const std::string& text);

}  // namespace mdiqkd
