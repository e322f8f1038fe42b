#include "mdiqkd/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

namespace mdiqkd {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view token, const std::string& key) {
  token = trim(token);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw ConfigError(key, "invalid number '" + std::string(token) + "'");
  }
  return value;
}

// Expands "start:stop:step" inclusively; plain numbers pass through.
void expand_token(std::string_view token, const std::string& key,
                  std::vector<double>& out) {
  const std::size_t first = token.find(':');
  if (first == std::string_view::npos) {
    out.push_back(parse_number(token, key));
    return;
  }
  const std::size_t second = token.find(':', first + 1);
  if (second == std::string_view::npos || token.find(':', second + 1) != std::string_view::npos) {
    throw ConfigError(key, "range must be start:stop:step");
  }
  const double start = parse_number(token.substr(0, first), key);
  const double stop = parse_number(token.substr(first + 1, second - first - 1), key);
  const double step = parse_number(token.substr(second + 1), key);
  if (!(step > 0.0)) {
    throw ConfigError(key, "range step must be positive");
  }
  if (stop < start) {
    throw ConfigError(key, "range stop must be >= start");
  }
  const auto count = static_cast<std::size_t>(
      std::floor((stop - start) / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    out.push_back(start + static_cast<double>(i) * step);
  }
}

std::vector<double> parse_list(std::string_view text, const std::string& key) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    if (!trim(token).empty()) {
      expand_token(trim(token), key, values);
    }
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return values;
}

}  // namespace

ArmSplit parse_arm_split(const std::string& text) {
  const std::string_view v = trim(text);
  if (v == "symmetric") {
    return {};
  }
  // expected form: a=KM,b=KM
  ArmSplit split;
  split.symmetric = false;
  const std::size_t comma = v.find(',');
  if (comma == std::string_view::npos) {
    throw ConfigError("arm_split", "expected 'symmetric' or 'a=KM,b=KM'");
  }
  const std::string_view first = trim(v.substr(0, comma));
  const std::string_view second = trim(v.substr(comma + 1));
  if (!first.starts_with("a=") || !second.starts_with("b=")) {
    throw ConfigError("arm_split", "expected 'symmetric' or 'a=KM,b=KM'");
  }
  split.a_km = parse_number(first.substr(2), "arm_split");
  split.b_km = parse_number(second.substr(2), "arm_split");
  return split;
}

SweepConfig parse_sweep_config_text(const std::string& text) {
  SweepConfig config;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') {
      continue;
    }
    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(stripped), "expected key=value");
    }
    const std::string key{trim(stripped.substr(0, eq))};
    const std::string value{trim(stripped.substr(eq + 1))};
    if (!seen.insert(key).second) {
      throw ConfigError(key, "duplicate key");
    }
    if (key == "distances_km") {
      config.distances_km = parse_list(value, key);
    } else if (key == "n_th_values") {
      config.n_th_values = parse_list(value, key);
    } else if (key == "sigma_theta_values") {
      config.sigma_theta_values = parse_list(value, key);
    } else if (key == "alpha_db_per_km") {
      config.alpha_db_per_km = parse_number(value, key);
    } else if (key == "f") {
      config.f = parse_number(value, key);
    } else if (key == "arm_split") {
      config.arm_split = parse_arm_split(value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  config.validate();
  return config;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_config_text(buffer.str());
}

}  // namespace mdiqkd
