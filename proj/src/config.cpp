#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "esfp/harness.hpp"

namespace esfp {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError("'" + std::string(key) + "': not a number: '" + std::string(text) + "'");
  }
  return value;
}

template <class Int>
Int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("'" + std::string(key) + "': not an integer: '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError("'" + std::string(key) + "': expected true|false, got '" + std::string(text) + "'");
}

Vector3 parse_vector(std::string_view key, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string parts[3];
  std::string extra;
  if (!(in >> parts[0] >> parts[1] >> parts[2]) || (in >> extra)) {
    throw ConfigError("'" + std::string(key) + "': expected three numbers");
  }
  return {parse_double(key, parts[0]), parse_double(key, parts[1]), parse_double(key, parts[2])};
}

NuMode parse_nu_mode(std::string_view text) {
  if (text == "variable") return NuMode::variable_nu();
  constexpr std::string_view prefix = "fixed(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    const double v = parse_double("nu_mode", text.substr(prefix.size(), text.size() - prefix.size() - 1));
    return NuMode::fixed(v);
  }
  throw ConfigError("'nu_mode': expected variable or fixed(<value>), got '" + std::string(text) + "'");
}

}  // namespace

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::kCase1: return "case1";
    case Preset::kCase2: return "case2";
    case Preset::kCustom: return "custom";
  }
  return "?";
}

Preset parse_preset(std::string_view text) {
  if (text == "case1") return Preset::kCase1;
  if (text == "case2") return Preset::kCase2;
  if (text == "custom") return Preset::kCustom;
  throw ConfigError("unknown preset '" + std::string(text) + "' (expected case1|case2|custom)");
}

SimConfig SimConfig::defaults_for(Preset preset) {
  SimConfig c;
  c.preset = preset;
  if (preset == Preset::kCase2) {
    c.particles = 100'000;
    c.t_final = 0.5;
  }
  return c;
}

void SimConfig::validate() const {
  if (particles < 2) throw ConfigError("particles must be at least 2");
  if (!(tau > 0.0)) throw ConfigError("tau must be positive");
  if (!(dt_over_tau > 0.0 && dt_over_tau <= kMaxStepRatio)) throw ConfigError("dt_over_tau must lie in (0, 0.1]");
  if (!(t_final > 0.0)) throw ConfigError("t_final must be positive");
  if (record_every < 1) throw ConfigError("record_every must be at least 1");
  if (tracked_component < 1 || tracked_component > 3) throw ConfigError("tracked_component must be 1, 2 or 3");
  if (!nu_mode.variable && !(nu_mode.fixed_value < 1.0)) throw ConfigError("fixed nu must be below 1");
  if (fit_window && !(fit_window->t0 < fit_window->t1)) throw ConfigError("fit_window requires t0 < t1");
  if (preset == Preset::kCustom) {
    for (int k = 0; k < 3; ++k) {
      if (!(gaussian_temperatures[k] > 0.0)) throw ConfigError("gaussian_temperatures must be positive");
    }
  }
}

std::size_t SimConfig::step_count() const {
  const double raw = t_final / (dt_over_tau * tau);
  // Absorb rounding so 1.0 / 0.1 gives 10 steps, not 11.
  return static_cast<std::size_t>(std::ceil(raw * (1.0 - 1e-12)));
}

TimeWindow parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ConfigError("window must be t0:t1, got '" + std::string(text) + "'");
  TimeWindow w{parse_double("window", text.substr(0, colon)), parse_double("window", text.substr(colon + 1))};
  if (!(w.t0 < w.t1)) throw ConfigError("window requires t0 < t1");
  return w;
}

SimConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (key.empty() || value.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
    if (!entries.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }

  const auto preset_it = entries.find("preset");
  SimConfig c = SimConfig::defaults_for(preset_it == entries.end() ? Preset::kCase1 : parse_preset(preset_it->second));

  for (const auto& [key, value] : entries) {
    if (key == "preset") continue;
    if (key == "particles") c.particles = parse_int<std::size_t>(key, value);
    else if (key == "tau") c.tau = parse_double(key, value);
    else if (key == "dt_over_tau") c.dt_over_tau = parse_double(key, value);
    else if (key == "t_final") c.t_final = parse_double(key, value);
    else if (key == "seed") c.seed = parse_int<std::uint64_t>(key, value);
    else if (key == "nu_mode") c.nu_mode = parse_nu_mode(value);
    else if (key == "renormalize") c.renormalize = parse_bool(key, value);
    else if (key == "output_path") c.output_path = value;
    else if (key == "record_every") c.record_every = parse_int<std::size_t>(key, value);
    else if (key == "fit_window") c.fit_window = parse_window(value);
    else if (key == "tracked_component") c.tracked_component = parse_int<int>(key, value);
    else if (key == "threads") c.threads = parse_int<unsigned>(key, value);
    else if (key == "scheme") c.scheme = parse_scheme(value);
    else if (key == "gaussian_mean") c.gaussian_mean = parse_vector(key, value);
    else if (key == "gaussian_temperatures") c.gaussian_temperatures = parse_vector(key, value);
    else throw ConfigError("unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace esfp
