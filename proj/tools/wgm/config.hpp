#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wgm/cavity.hpp"

namespace wgm::cli {

enum class Engine { asym, modal, fd };
const char* to_string(Engine e);

struct FdSettings {
  int N = 4000;
  double r_max = 0.0;      // 0: 3R
  double pml_start = 0.0;  // 0: 2R
  double theta = 0.5;
};

struct RunConfig {
  nlohmann::json profile_doc;
  std::optional<IndexProfile> profile;
  std::vector<int> polarizations{1};
  std::vector<int> m_values;
  std::vector<int> j_values{0};
  std::vector<Engine> engines{Engine::asym};
  int asym_order = 0;  // 0: engine default
  FdSettings fd;
  // modes
  Engine mode_engine = Engine::asym;
  int mode_points = 2000;
  double mode_r_max = 0.0;  // 0: 2R
  // convergence
  std::vector<int> orders;
  Engine oracle = Engine::modal;
  std::string out_dir = ".";

  bool has(Engine e) const;
};

// Throws Error(ConfigError) naming the offending field.
RunConfig parse_config(const nlohmann::json& doc);
// Parse errors report line and column.
RunConfig load_config(const std::string& path);

}  // namespace wgm::cli
