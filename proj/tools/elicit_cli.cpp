// elicit: run experiment grids, dump theoretical bound curves, sample profiles.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elicit/bench.hpp"
#include "elicit/generators.hpp"
#include "elicit/kernels.hpp"
#include "elicit/profile_io.hpp"
#include "elicit/rules.hpp"
#include "elicit/theory.hpp"

namespace {

using namespace elicit;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct RunArgs {
  std::string rule = "borda";
  std::string dist = "ic";
  std::optional<int> m;
  std::vector<int> ell;
  std::optional<int> n_min, n_max, n_step, trials;
  std::uint64_t seed = 1;
  std::string algorithms;
  std::optional<std::string> preset;
  std::optional<double> phi;
  unsigned threads = 0;
  std::string out;
};

int run_command(const RunArgs& a) {
  std::vector<bench::ExperimentConfig> configs;
  for (const auto& rule_s : split_list(a.rule)) {
    const auto rule = bench::parse_rule(rule_s);
    for (const auto& dist_s : split_list(a.dist)) {
      const auto dist = gen::parse_distribution(dist_s);
      bench::ExperimentConfig c = bench::ExperimentConfig::preset(
          a.preset ? bench::parse_preset(*a.preset) : bench::Preset::Desk, rule, dist);
      if (a.m) c.m = *a.m;
      if (!a.ell.empty()) c.ell_values = a.ell;
      if (a.n_min) c.n_min = *a.n_min;
      if (a.n_max) c.n_max = *a.n_max;
      if (a.n_step) c.n_step = *a.n_step;
      if (a.trials) c.trials = *a.trials;
      c.master_seed = a.seed;
      c.dist.fixed_phi = a.phi;
      if (!a.algorithms.empty()) {
        c.algorithms.clear();
        for (const auto& s : split_list(a.algorithms)) {
          const auto alg = bench::parse_algorithm(s);
          // a shared list spanning both rules keeps only what applies
          if (bench::supports(rule, alg)) c.algorithms.push_back(alg);
        }
      }
      configs.push_back(std::move(c));
    }
  }
  const auto rows = bench::run_grids(configs, {a.threads});
  if (a.out.empty() || a.out == "-")
    bench::write_csv(std::cout, rows);
  else
    bench::write_csv_file(a.out, rows);
  std::fprintf(stderr, "%zu rows (kernels: %s)\n", rows.size(),
               std::string(kernels::isa_name(kernels::active().isa)).c_str());
  return 0;
}

int bounds_command(int m, const std::string& out_path) {
  if (m < 3) throw InputError("bounds need m >= 3");
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
    out = &file;
  }
  char buf[64];
  auto emit = [&](const char* figure, double x, const std::string& series, double value) {
    std::snprintf(buf, sizeof buf, "%.6g", x);
    *out << figure << ',' << m << ',' << buf << ',' << series << ',';
    std::snprintf(buf, sizeof buf, "%.9f", value);
    *out << buf << '\n';
  };
  *out << "figure,m,x,series,value\n";
  const auto borda = rules::make_borda(m);
  for (int ell = 1; ell < m; ++ell) {
    const double l = ell;
    emit("fig1", l, "borda_guarantee", theory::trunc_psf_guarantee(borda, ell).value);
    emit("fig1", l, "borda_simplified", l / (m + l * l / (m - 1)));
    const auto mm = theory::minimax_trunc_bounds(m, ell);
    emit("fig1", l, "minimax_guarantee", mm.guarantee);
    emit("fig1", l, "minimax_impossibility", mm.impossibility);
    emit("fig1", l, "minimax_simplified", 1.0 / (m - l / 2.0));
  }
  for (int ell : {2, 4, 8}) {
    if (ell > m) continue;
    const auto basis = theory::sep_basis(m, ell);
    for (int i = 0; i < ell; ++i)
      for (int p = 1; p <= m; ++p)
        emit("fig2", p, "sep_l" + std::to_string(ell) + "_eta" + std::to_string(i + 1),
             basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(p - 1)]);
  }
  return 0;
}

int gen_command(const std::string& dist, int m, int n, std::uint64_t seed, std::optional<int> ell,
                std::optional<double> phi, const std::string& out_path) {
  gen::DistributionSpec spec{gen::parse_distribution(dist), phi};
  const auto e = gen::generate(spec, m, n, seed);
  const auto data = ell && *ell < m ? to_profile_data(truncate(e, *ell)) : to_profile_data(e);
  if (out_path.empty() || out_path == "-")
    write_profile(std::cout, data);
  else
    save_profile(out_path, data);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate voting rules from partial preferences"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment grid and write CSV");
  run_cmd->add_option("--rule", run.rule, "borda, minimax, or a comma list")->capture_default_str();
  run_cmd->add_option("--dist", run.dist, "ic, euclid1d, mallows3, spic, or a comma list")
      ->capture_default_str();
  run_cmd->add_option("--m", run.m, "number of candidates");
  run_cmd->add_option("--l", run.ell, "elicited depth(s), comma separated")->delimiter(',');
  run_cmd->add_option("--n-min", run.n_min);
  run_cmd->add_option("--n-max", run.n_max);
  run_cmd->add_option("--n-step", run.n_step);
  run_cmd->add_option("--trials", run.trials);
  run_cmd->add_option("--seed", run.seed, "master seed")->capture_default_str();
  run_cmd->add_option("--algorithms", run.algorithms, "comma list; default: all for the rule");
  run_cmd->add_option("--preset", run.preset, "paper or desk (default desk)")
      ->check(CLI::IsMember({"paper", "desk"}));
  run_cmd->add_option("--phi", run.phi, "fixed Mallows dispersion");
  run_cmd->add_option("--threads", run.threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  run_cmd->add_option("--out", run.out, "CSV path, '-' for stdout");

  int bounds_m = 50;
  std::string bounds_out;
  auto* bounds_cmd = app.add_subcommand("bounds", "Write theoretical bound curves as CSV");
  bounds_cmd->add_option("--m", bounds_m)->capture_default_str();
  bounds_cmd->add_option("--out", bounds_out);

  std::string gen_dist = "ic";
  int gen_m = 5, gen_n = 10;
  std::uint64_t gen_seed = 1;
  std::optional<int> gen_ell;
  std::optional<double> gen_phi;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a profile");
  gen_cmd->add_option("--dist", gen_dist)->capture_default_str();
  gen_cmd->add_option("--m", gen_m)->capture_default_str();
  gen_cmd->add_option("--n", gen_n)->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed)->capture_default_str();
  gen_cmd->add_option("--l", gen_ell, "truncate to this depth");
  gen_cmd->add_option("--phi", gen_phi);
  gen_cmd->add_option("--out", gen_out);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return run_command(run);
    if (*bounds_cmd) return bounds_command(bounds_m, bounds_out);
    if (*gen_cmd) return gen_command(gen_dist, gen_m, gen_n, gen_seed, gen_ell, gen_phi, gen_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
