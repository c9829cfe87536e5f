#include "experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ppcf::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  return parts;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("'" + key + "' expects a number, got '" + text + "'");
  }
  return v;
}

std::size_t to_size(const std::string& key, const std::string& text) {
  std::size_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("'" + key + "' expects a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::string num(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

}  // namespace

Box parse_box(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw ConfigError("box expects 'x0,y0,x1,y1', got '" + text + "'");
  const double x0 = to_double("box", parts[0]);
  const double y0 = to_double("box", parts[1]);
  const double x1 = to_double("box", parts[2]);
  const double y1 = to_double("box", parts[3]);
  if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("box '" + text + "' is empty");
  return Box{{x0, y0}, {x1, y1}};
}

void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  GameConfig& g = spec.game;
  if (key == "gamma") {
    g.gamma = to_double(key, value);
  } else if (key == "epsilon") {
    g.epsilon = to_double(key, value);
  } else if (key == "scale") {
    g.alpha = ScaleAlpha{to_double(key, value)};
  } else if (key == "alpha1" || key == "alpha2") {
    ExplicitAlpha e{kUnset, kUnset};
    if (const auto* current = std::get_if<ExplicitAlpha>(&g.alpha)) e = *current;
    (key == "alpha1" ? e.alpha1 : e.alpha2) = to_double(key, value);
    g.alpha = e;
  } else if (key == "h") {
    g.h = to_double(key, value);
  } else if (key == "l0") {
    g.l0 = to_size(key, value);
  } else if (key == "r0") {
    g.controls = CellCount{to_size(key, value)};
  } else if (key == "ds") {
    g.controls = StepSize{to_double(key, value)};
  } else if (key == "horizon_T") {
    g.horizon = to_double(key, value);
  } else if (key == "domain") {
    g.domain = parse_box(value);
  } else if (key == "domain_min_x") {
    g.domain.lo.x = to_double(key, value);
  } else if (key == "domain_min_y") {
    g.domain.lo.y = to_double(key, value);
  } else if (key == "domain_max_x") {
    g.domain.hi.x = to_double(key, value);
  } else if (key == "domain_max_y") {
    g.domain.hi.y = to_double(key, value);
  } else if (key == "outside") {
    if (value == "analytic") {
      g.outside = OutsideKind::Analytic;
    } else if (value == "clamp") {
      g.outside = OutsideKind::Clamp;
    } else {
      throw ConfigError("'outside' expects analytic or clamp, got '" + value + "'");
    }
  } else if (key == "level") {
    g.contour_level = to_double(key, value);
  } else if (key == "threads") {
    g.threads = static_cast<unsigned>(to_size(key, value));
  } else if (key == "benchmark") {
    if (value == "circle") {
      spec.benchmark = BenchmarkKind::Circle;
    } else if (value == "ellipse") {
      spec.benchmark = BenchmarkKind::Ellipse;
    } else {
      throw ConfigError("'benchmark' expects circle or ellipse, got '" + value + "'");
    }
  } else if (key == "radius") {
    spec.radius = to_double(key, value);
  } else if (key == "out") {
    if (value.empty()) throw ConfigError("'out' must not be empty");
    spec.out_dir = value;
  } else if (key == "emit") {
    EmitFlags flags{false, false, false};
    if (value != "none") {
      for (const std::string& item : split(value, ',')) {
        if (item == "fields") {
          flags.fields = true;
        } else if (item == "contours") {
          flags.contours = true;
        } else if (item == "errors") {
          flags.errors = true;
        } else {
          throw ConfigError("'emit' accepts fields, contours, errors or none; got '" + item + "'");
        }
      }
    }
    spec.emit = flags;
  } else if (key == "snapshots") {
    spec.snapshots.clear();
    if (!value.empty()) {
      for (const std::string& item : split(value, ',')) spec.snapshots.push_back(to_size(key, item));
    }
  } else if (key == "eval_box") {
    if (value == "none" || value.empty()) {
      spec.eval_box.reset();
    } else {
      spec.eval_box = parse_box(value);
    }
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

void apply_settings(ExperimentSpec& spec, const std::vector<Setting>& settings) {
  bool has_scale = false;
  bool has_alpha = false;
  bool has_r0 = false;
  bool has_ds = false;
  for (const auto& [key, value] : settings) {
    has_scale |= key == "scale";
    has_alpha |= key == "alpha1" || key == "alpha2";
    has_r0 |= key == "r0";
    has_ds |= key == "ds";
  }
  if (has_scale && has_alpha) throw ConfigError("give either scale or alpha1/alpha2, not both");
  if (has_r0 && has_ds) throw ConfigError("give either r0 or ds, not both");

  for (const auto& [key, value] : settings) apply_setting(spec, key, value);

  if (const auto* e = std::get_if<ExplicitAlpha>(&spec.game.alpha)) {
    if (std::isnan(e->alpha1) || std::isnan(e->alpha2)) {
      throw ConfigError("alpha1 and alpha2 must be given together");
    }
  }
  const Box& d = spec.game.domain;
  if (!(d.hi.x > d.lo.x) || !(d.hi.y > d.lo.y)) throw ConfigError("domain box is empty");
}

std::vector<Setting> parse_settings(const std::string& text) {
  std::vector<Setting> settings;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    settings.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return settings;
}

ExperimentSpec parse_config(const std::string& text, ExperimentSpec base) {
  apply_settings(base, parse_settings(text));
  return base;
}

ExperimentSpec load_config_file(const std::string& path, ExperimentSpec base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

std::string serialize(const ExperimentSpec& spec) {
  const GameConfig& g = spec.game;
  std::ostringstream out;
  out << "benchmark=" << (spec.benchmark == BenchmarkKind::Circle ? "circle" : "ellipse") << '\n';
  out << "radius=" << num(spec.radius) << '\n';
  out << "gamma=" << num(g.gamma) << '\n';
  out << "epsilon=" << num(g.epsilon) << '\n';
  if (const auto* s = std::get_if<ScaleAlpha>(&g.alpha)) {
    out << "scale=" << num(s->scale) << '\n';
  } else {
    const auto& e = std::get<ExplicitAlpha>(g.alpha);
    out << "alpha1=" << num(e.alpha1) << '\n' << "alpha2=" << num(e.alpha2) << '\n';
  }
  out << "h=" << num(g.h) << '\n';
  out << "l0=" << g.l0 << '\n';
  if (const auto* c = std::get_if<CellCount>(&g.controls)) {
    out << "r0=" << c->r0 << '\n';
  } else {
    out << "ds=" << num(std::get<StepSize>(g.controls).ds) << '\n';
  }
  out << "horizon_T=" << num(g.horizon) << '\n';
  out << "domain_min_x=" << num(g.domain.lo.x) << '\n';
  out << "domain_min_y=" << num(g.domain.lo.y) << '\n';
  out << "domain_max_x=" << num(g.domain.hi.x) << '\n';
  out << "domain_max_y=" << num(g.domain.hi.y) << '\n';
  out << "outside=" << (g.outside == OutsideKind::Analytic ? "analytic" : "clamp") << '\n';
  out << "level=" << num(g.contour_level) << '\n';
  out << "threads=" << g.threads << '\n';
  out << "out=" << spec.out_dir << '\n';

  std::string emit;
  for (auto [on, name] : {std::pair{spec.emit.fields, "fields"}, {spec.emit.contours, "contours"},
                          {spec.emit.errors, "errors"}}) {
    if (!on) continue;
    if (!emit.empty()) emit += ',';
    emit += name;
  }
  out << "emit=" << (emit.empty() ? "none" : emit) << '\n';

  out << "snapshots=";
  for (std::size_t k = 0; k < spec.snapshots.size(); ++k) {
    out << (k ? "," : "") << spec.snapshots[k];
  }
  out << '\n';
  if (spec.eval_box) {
    const Box& b = *spec.eval_box;
    out << "eval_box=" << num(b.lo.x) << ',' << num(b.lo.y) << ',' << num(b.hi.x) << ','
        << num(b.hi.y) << '\n';
  } else {
    out << "eval_box=none\n";
  }
  return out.str();
}

}  // namespace ppcf::cli
