#include "ambient/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

namespace ambient {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parsed document: (section, key) -> raw value, section "" for top level.
using Document = std::map<std::pair<std::string, std::string>, std::string>;

Document tokenize(const std::string& text, std::vector<std::string>& problems) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        problems.push_back("line " + std::to_string(lineno) + ": malformed section header");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      problems.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      problems.push_back("line " + std::to_string(lineno) + ": empty key");
      continue;
    }
    if (!doc.emplace(std::make_pair(section, key), value).second) {
      problems.push_back("duplicate key '" + key + "' in section [" + section + "]");
    }
  }
  return doc;
}

std::string where(const std::string& section, const std::string& key) {
  return section.empty() ? key : "[" + section + "] " + key;
}

class Reader {
 public:
  Reader(Document doc, std::vector<std::string>& problems)
      : doc_(std::move(doc)), problems_(problems) {}

  std::optional<std::string> take(const std::string& section, const std::string& key) {
    const auto it = doc_.find({section, key});
    if (it == doc_.end()) return std::nullopt;
    std::string value = it->second;
    doc_.erase(it);
    return value;
  }

  std::optional<std::string> require(const std::string& section, const std::string& key) {
    auto value = take(section, key);
    if (!value) problems_.push_back("missing required key " + where(section, key));
    return value;
  }

  double number(const std::string& section, const std::string& key, double fallback,
                bool required) {
    auto raw = required ? require(section, key) : take(section, key);
    if (!raw) return fallback;
    char* end = nullptr;
    const double v = std::strtod(raw->c_str(), &end);
    if (end == raw->c_str() || *end != '\0') {
      problems_.push_back("value of " + where(section, key) + " is not a number: '" + *raw + "'");
      return fallback;
    }
    return v;
  }

  std::uint64_t integer(const std::string& section, const std::string& key) {
    auto raw = require(section, key);
    if (!raw) return 0;
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(raw->c_str(), &end, 10);
    if (end == raw->c_str() || *end != '\0') {
      problems_.push_back("value of " + where(section, key) +
                          " is not an unsigned integer: '" + *raw + "'");
      return 0;
    }
    return v;
  }

  bool boolean(const std::string& section, const std::string& key) {
    auto raw = require(section, key);
    if (!raw) return false;
    if (*raw == "true") return true;
    if (*raw == "false") return false;
    problems_.push_back("value of " + where(section, key) + " must be true or false");
    return false;
  }

  Eigen::Vector3d vector3(const std::string& section, const std::string& key) {
    Eigen::Vector3d out = Eigen::Vector3d::Zero();
    auto raw = require(section, key);
    if (!raw) return out;
    std::istringstream in(*raw);
    double v;
    int count = 0;
    while (in >> v) {
      if (count < 3) out(count) = v;
      ++count;
    }
    if (count != 3 || !in.eof()) {
      problems_.push_back("value of " + where(section, key) + " must be three numbers");
    }
    return out;
  }

  std::optional<std::string> text(const std::string& section, const std::string& key) {
    return require(section, key);
  }

  void report_unknown() {
    for (const auto& [loc, value] : doc_) {
      (void)value;
      problems_.push_back("unknown key " + where(loc.first, loc.second));
    }
  }

 private:
  Document doc_;
  std::vector<std::string>& problems_;
};

}  // namespace

Scenario parse_scenario(const std::string& text) {
  std::vector<std::string> problems;
  Reader reader(tokenize(text, problems), problems);

  Scenario s;
  s.label = "custom";
  s.group = reader.text("", "group").value_or("SE3");
  const bool se3 = s.group == "SE3";
  if (!se3 && s.group != "SO3") {
    problems.push_back("group must be SE3 or SO3, got '" + s.group + "'");
  }
  s.t_end = reader.number("", "t_end", 15.0, false);
  s.h = reader.number("", "h", 1e-3, false);
  s.sample_dt = reader.number("", "sample_dt", 0.0, false);
  s.gains.k1 = reader.number("", "k1", 0.0, true);
  s.gains.k2 = reader.number("", "k2", 0.0, true);

  s.profile = reader.text("profile", "name").value_or("zero");
  if (s.profile == "constant") {
    s.profile_omega = reader.vector3("profile", "omega");
    if (se3) s.profile_v = reader.vector3("profile", "v");
  }

  s.bias_omega = reader.vector3("bias", "omega");
  if (se3) s.bias_v = reader.vector3("bias", "v");

  s.noise.sigma = reader.number("noise", "sigma", 0.0, true);
  s.noise.seed = reader.integer("noise", "seed");
  s.noise.enabled = reader.boolean("noise", "enabled");

  s.initial_truth.rotvec = reader.vector3("initial_truth", "rotvec");
  if (se3) s.initial_truth.translation = reader.vector3("initial_truth", "translation");

  s.initial_observer.rotvec = reader.vector3("initial_observer", "rotvec");
  if (se3) s.initial_observer.translation = reader.vector3("initial_observer", "translation");
  s.observer_bias_omega = reader.vector3("initial_observer", "bias_omega");
  if (se3) s.observer_bias_v = reader.vector3("initial_observer", "bias_v");

  reader.report_unknown();

  if (problems.empty()) {
    // Physical validity (gain positivity, step layout, profile/group match).
    try {
      validate(s);
    } catch (const std::invalid_argument& e) {
      problems.push_back(e.what());
    }
  }
  if (!problems.empty()) {
    std::string msg = "scenario rejected:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
  return s;
}

namespace {

Scenario figure1_base() {
  Scenario s;
  s.label = "se3-figure1";
  s.group = "SE3";
  s.t_end = 15.0;
  s.h = 1e-3;
  s.sample_dt = 1e-3;
  s.gains = {2.0, 10.0};
  s.profile = "se3-figure";
  s.bias_omega = {-10.0, 15.0, 8.0};
  s.bias_v = {2.0, 8.0, 5.0};
  s.noise = {0.1, 1, true};
  s.initial_truth.rotvec = Eigen::Vector3d::Zero();
  s.initial_truth.translation = {0.0, 0.0, 1.0};
  s.initial_observer.rotvec = {0.0, 0.0, -std::numbers::pi / 10.0};
  s.initial_observer.translation = Eigen::Vector3d::Zero();
  return s;
}

}  // namespace

Scenario preset_scenario(const std::string& name) {
  if (name == "se3-figure1") return figure1_base();
  if (name == "se3-figure1-noiseless") {
    Scenario s = figure1_base();
    s.label = name;
    s.noise.sigma = 0.0;
    s.noise.enabled = false;
    return s;
  }
  if (name == "se3-zero-error") {
    Scenario s = figure1_base();
    s.label = name;
    s.noise.sigma = 0.0;
    s.noise.enabled = false;
    s.initial_observer = s.initial_truth;
    s.observer_bias_omega = s.bias_omega;
    s.observer_bias_v = s.bias_v;
    return s;
  }
  if (name == "so3-demo") {
    Scenario s;
    s.label = name;
    s.group = "SO3";
    s.t_end = 15.0;
    s.h = 1e-3;
    s.sample_dt = 1e-3;
    s.gains = {2.0, 10.0};
    s.profile = "so3-figure";
    s.bias_omega = {-10.0, 15.0, 8.0};
    s.noise = {0.0, 1, false};
    s.initial_truth.rotvec = Eigen::Vector3d::Zero();
    s.initial_observer.rotvec = {0.0, 0.0, -std::numbers::pi / 10.0};
    return s;
  }
  throw ConfigError("unknown preset '" + name + "'; available: se3-figure1, "
                    "se3-figure1-noiseless, se3-zero-error, so3-demo");
}

std::vector<std::string> preset_names() {
  return {"se3-figure1", "se3-figure1-noiseless", "se3-zero-error", "so3-demo"};
}

}  // namespace ambient
