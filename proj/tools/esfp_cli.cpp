// esfp: run, analyze and sample the homogeneous ES-Fokker-Planck particle solver.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "esfp/harness.hpp"

namespace {

void print_nested(const std::exception& e) {
  std::cerr << "error: " << e.what();
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    std::cerr << " (" << inner.what() << ")";
  } catch (...) {
  }
  std::cerr << "\n";
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed, std::optional<std::string> out_path,
            std::optional<unsigned> threads, bool gnuplot) {
  esfp::SimConfig config = esfp::load_config(config_path);
  if (seed) config.seed = *seed;
  if (out_path) config.output_path = *out_path;
  if (threads) config.threads = *threads;

  const auto records = esfp::run(config);
  esfp::write_csv(records, config.output_path);
  std::cout << "wrote " << records.size() << " records to " << config.output_path << "\n";

  if (gnuplot) {
    const std::string script = config.output_path + ".gp";
    std::ofstream(script) << esfp::gnuplot_script(config.output_path, config.tracked_component);
    std::cout << "wrote " << script << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& in_path, std::optional<std::string> window, int component) {
  std::optional<esfp::TimeWindow> w;
  if (window) w = esfp::parse_window(*window);
  const auto report = esfp::analyze(std::filesystem::path(in_path), w, component);
  std::cout << esfp::format_report(report);
  return 0;
}

int cmd_sample(const std::string& preset, std::size_t n, std::uint64_t seed) {
  esfp::SimConfig config = esfp::SimConfig::defaults_for(esfp::parse_preset(preset));
  config.particles = n;
  config.validate();
  const auto ens = esfp::sample_initial(config, esfp::NoiseStream(seed));
  const auto m = esfp::compute_moments(ens);
  const auto lambda = esfp::eigenvalues_cardan(m.theta);
  std::printf("particles  %zu\n", ens.size());
  std::printf("u          %.10g %.10g %.10g\n", m.u.x, m.u.y, m.u.z);
  std::printf("T          %.10g\n", m.temperature);
  std::printf("theta diag %.10g %.10g %.10g\n", m.theta.xx, m.theta.yy, m.theta.zz);
  std::printf("theta off  %.10g %.10g %.10g\n", m.theta.xy, m.theta.xz, m.theta.yz);
  std::printf("q          %.10g %.10g %.10g\n", m.q.x, m.q.y, m.q.z);
  std::printf("lambda     %.10g %.10g %.10g\n", lambda[0], lambda[1], lambda[2]);
  std::printf("nu         %.10g\n", esfp::select_nu(m.temperature, lambda[2]));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous ES-Fokker-Planck particle solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  std::optional<unsigned> threads;
  bool gnuplot = false;
  auto* run = app.add_subcommand("run", "Run a simulation and write its CSV time series");
  run->add_option("--config", config_path, "Config file (key = value lines)")->required();
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--out", out_path, "Override the output CSV path");
  run->add_option("--threads", threads, "Worker threads (0 = all cores)");
  run->add_flag("--gnuplot", gnuplot, "Also write <out>.gp plotting the run");

  std::string in_path;
  std::optional<std::string> window;
  int component = 1;
  auto* analyze = app.add_subcommand("analyze", "Fit log-decay rates and the numerical Prandtl number");
  analyze->add_option("--in", in_path, "CSV produced by run")->required();
  analyze->add_option("--window", window, "Fit window t0:t1 (default: whole series)");
  analyze->add_option("--component", component, "Tracked directional temperature T_kk")->check(CLI::Range(1, 3));

  std::string preset;
  std::size_t n = 0;
  std::uint64_t sample_seed = 1;
  auto* sample = app.add_subcommand("sample", "Print the moments of an initial ensemble");
  sample->add_option("--preset", preset, "case1 | case2")->required()->check(CLI::IsMember({"case1", "case2"}));
  sample->add_option("--n", n, "Number of particles")->required();
  sample->add_option("--seed", sample_seed, "Seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path, seed, out_path, threads, gnuplot);
    if (*analyze) return cmd_analyze(in_path, window, component);
    if (*sample) return cmd_sample(preset, n, sample_seed);
  } catch (const std::exception& e) {
    print_nested(e);
    return 1;
  }
  return 1;
}
