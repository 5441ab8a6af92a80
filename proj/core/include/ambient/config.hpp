#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ambient/simulate.hpp"

namespace ambient {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * Strict parse of a scenario document: sections [profile], [bias], [noise],
 * [initial_truth], [initial_observer] with key = value lines ('#' or ';'
 * comments, vectors space-separated). Unknown keys, missing required keys
 * and invalid values are all collected into one ConfigError. Only h and
 * t_end have defaults (1e-3 and 15.0).
 */
Scenario parse_scenario(const std::string& text);

/// Shipped presets: se3-figure1, se3-figure1-noiseless, se3-zero-error,
/// so3-demo. Throws ConfigError for unknown names.
Scenario preset_scenario(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace ambient
