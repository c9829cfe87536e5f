#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ppcf/geometry.hpp"
#include "ppcf/solver.hpp"

namespace ppcf::cli {

/// Bad configuration: unknown key, malformed value, conflicting settings or
/// parameters rejected by the solver.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BenchmarkKind { Circle, Ellipse };

struct EmitFlags {
  bool fields = false;
  bool contours = true;
  bool errors = true;
  friend bool operator==(const EmitFlags&, const EmitFlags&) = default;
};

struct ExperimentSpec {
  GameConfig game;
  BenchmarkKind benchmark = BenchmarkKind::Circle;
  double radius = 1.0;  // R0 of the circle benchmark
  std::string out_dir = "out";
  EmitFlags emit;
  // Step indices to dump fields/contours for; empty means first and last.
  std::vector<std::size_t> snapshots;
  std::optional<Box> eval_box;
};

using Setting = std::pair<std::string, std::string>;

/// Applies one key=value setting. Throws ConfigError.
void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value);

/// Applies settings in order. Within one batch "scale" excludes "alpha1"/"alpha2"
/// and "r0" excludes "ds".
void apply_settings(ExperimentSpec& spec, const std::vector<Setting>& settings);

/// Parses key=value lines; '#' starts a comment, blank lines are ignored.
std::vector<Setting> parse_settings(const std::string& text);

ExperimentSpec parse_config(const std::string& text, ExperimentSpec base = {});
ExperimentSpec load_config_file(const std::string& path, ExperimentSpec base = {});

/// Canonical key=value form; parse_config(serialize(s)) reproduces s.
std::string serialize(const ExperimentSpec& spec);

Box parse_box(const std::string& text);

}  // namespace ppcf::cli
