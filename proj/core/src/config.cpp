/*
   Copyright 2026 The cyclestab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cyclestab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace cyclestab {

const Config& default_config() {
  static const Config cfg{};
  return cfg;
}

namespace {

double to_double(const std::string& v, const std::string& key) {
  std::size_t pos = 0;
  double x = std::stod(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("config: bad number for " + key);
  return x;
}

int to_int(const std::string& v, const std::string& key) {
  std::size_t pos = 0;
  int x = std::stoi(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("config: bad integer for " + key);
  return x;
}

void require_positive(double x, const std::string& key) {
  if (!(x > 0.0)) throw std::invalid_argument("config: " + key + " must be > 0");
}

}  // namespace

void apply_config_entry(Config& cfg, const std::string& key, const std::string& value) {
  if (key == "strictness_tolerance") {
    cfg.strictness_tolerance = to_double(value, key);
    require_positive(cfg.strictness_tolerance, key);
  } else if (key == "omission_tolerance") {
    cfg.omission_tolerance = to_double(value, key);
    require_positive(cfg.omission_tolerance, key);
  } else if (key == "cluster_radius") {
    cfg.cluster_radius = to_double(value, key);
    require_positive(cfg.cluster_radius, key);
  } else if (key == "root_residual_tol") {
    cfg.root_residual_tol = to_double(value, key);
    require_positive(cfg.root_residual_tol, key);
  } else if (key == "root_max_iterations") {
    cfg.root_max_iterations = to_int(value, key);
  } else if (key == "winding_initial_samples") {
    cfg.winding_initial_samples = to_int(value, key);
  } else if (key == "winding_max_samples") {
    cfg.winding_max_samples = to_int(value, key);
  } else if (key == "cross_check_margin") {
    cfg.cross_check_margin = to_double(value, key);
    require_positive(cfg.cross_check_margin, key);
  } else if (key == "convergence_tolerance") {
    cfg.convergence_tolerance = to_double(value, key);
    require_positive(cfg.convergence_tolerance, key);
  } else if (key == "escape_radius") {
    cfg.escape_radius = to_double(value, key);
    require_positive(cfg.escape_radius, key);
  } else if (key == "max_order") {
    cfg.max_order = to_int(value, key);
  } else if (key == "boundary_probes") {
    cfg.boundary_probes = to_int(value, key);
  } else if (key == "interior_probes") {
    cfg.interior_probes = to_int(value, key);
  } else if (key == "ray_samples") {
    cfg.ray_samples = to_int(value, key);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

Config parse_config(std::istream& in, Config base) {
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value, got '" + line + "'");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      s = (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    apply_config_entry(base, key, value);
  }
  return base;
}

Config config_from_env(Config base) {
  const char* path = std::getenv("CYCLESTAB_CONFIG");
  if (path == nullptr || *path == '\0') return base;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("config: cannot open ") + path);
  return parse_config(in, base);
}

}  // namespace cyclestab
