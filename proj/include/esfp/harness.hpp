#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esfp/closure.hpp"
#include "esfp/moments.hpp"
#include "esfp/noise.hpp"
#include "esfp/oracles.hpp"
#include "esfp/ou_engine.hpp"
#include "esfp/run_record.hpp"

namespace esfp {

/// Initial-condition families.
///  - kCase1: v1 = 100 s^4 - 20, s ~ U[0,1]; v2, v3 ~ U[-50, 50].
///  - kCase2: v1 = 10000 s^4 - 2000; v2, v3 as above.
///  - kCustom: Gaussian with mean `gaussian_mean` and diagonal covariance
///    `gaussian_temperatures`.
enum class Preset { kCase1, kCase2, kCustom };

std::string_view to_string(Preset preset);
Preset parse_preset(std::string_view text);

struct SimConfig {
  std::size_t particles = 1'000'000;
  double tau = 1.0;
  double dt_over_tau = 0.1;
  double t_final = 1.0;
  std::uint64_t seed = 1;
  Preset preset = Preset::kCase1;
  NuMode nu_mode;
  bool renormalize = true;
  std::string output_path = "run.csv";
  std::size_t record_every = 1;
  std::optional<TimeWindow> fit_window;
  int tracked_component = 1;
  unsigned threads = 0;  ///< 0 = hardware concurrency
  OuScheme scheme = OuScheme::kExponential;
  Vector3 gaussian_mean;
  Vector3 gaussian_temperatures{1.0, 1.0, 1.0};

  /// Defaults: case1 1e6 particles to t = 1, case2 1e5 to t = 0.5.
  static SimConfig defaults_for(Preset preset);

  /// Throws ConfigError on any violated constraint.
  void validate() const;

  std::size_t step_count() const;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys, duplicate keys
/// and malformed values throw ConfigError. Defaults come from
/// SimConfig::defaults_for(preset).
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::filesystem::path& path);

/// Parses "t0:t1".
TimeWindow parse_window(std::string_view text);

ParticleEnsemble sample_case1(std::size_t n, const NoiseStream& stream, unsigned threads = 1);
ParticleEnsemble sample_case2(std::size_t n, const NoiseStream& stream, unsigned threads = 1);
ParticleEnsemble sample_gaussian(std::size_t n, const NoiseStream& stream, Vector3 mean, Vector3 temperatures,
                                 unsigned threads = 1);
ParticleEnsemble sample_initial(const SimConfig& config, const NoiseStream& stream);

/// Raised when a step fails; the original error is nested.
class RunError : public Error {
 public:
  RunError(std::size_t step, const std::string& reason);
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct RunOutput {
  std::vector<RunRecord> records;
  MomentSet initial_moments;
  ParticleEnsemble final_ensemble;
};

/// Called once per time level, before the particle update, with the step index.
using StepObserver = std::function<void(std::size_t, const MomentSet&, const ClosureState&)>;

/// Per step: moments, Cardan spectrum, nu, Pi and its Cholesky factor, record,
/// particle update, optional renormalisation to the initial empirical u and T.
/// The last step lands exactly on t_final.
RunOutput run_simulation(const SimConfig& config, const StepObserver& observer = {});

inline std::vector<RunRecord> run(const SimConfig& config) { return run_simulation(config).records; }

inline constexpr std::string_view kCsvHeader = "t,T11,T22,T33,T12,T13,T23,T,q1,q2,q3,nu,Pr,anisotropy";

/// 17 significant digits per value, '\n' line endings.
std::string format_csv(std::span<const RunRecord> records);
std::vector<RunRecord> parse_csv(std::string_view text);

void write_csv(std::span<const RunRecord> records, const std::filesystem::path& path);
std::vector<RunRecord> read_csv(const std::filesystem::path& path);

struct AnalysisReport {
  PrandtlEstimate estimate;
  double final_nu = 0.0;
  double theoretical_pr = 0.0;  ///< 3 / (2 (1 - final_nu))
  int component = 1;
};

AnalysisReport analyze(std::span<const RunRecord> records, std::optional<TimeWindow> window, int component = 1);
AnalysisReport analyze(const std::filesystem::path& csv, std::optional<TimeWindow> window, int component = 1);
std::string format_report(const AnalysisReport& report);

/// Gnuplot script plotting directional temperatures, nu and Pr, and the log
/// decay curves from `csv`.
std::string gnuplot_script(const std::filesystem::path& csv, int component = 1);

}  // namespace esfp
