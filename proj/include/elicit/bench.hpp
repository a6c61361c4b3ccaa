#pragma once

// Experiment harness: per-cell Monte-Carlo estimates of the approximation
// ratio reached by each elicitation algorithm, aggregated over independent
// trials and written as CSV.
//
// Seeding: the profile of trial t is drawn from
// derive_seed(master, "profile|<dist>|m=<m>|n=<n>", t), so every rule, depth
// and algorithm in a grid is evaluated on the same profiles. Randomized
// elicitation draws from a stream derived from the profile seed and ell.
// Results never depend on thread count or schedule.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elicit/core.hpp"
#include "elicit/generators.hpp"

namespace elicit::bench {

enum class Rule { Borda, Minimax };

enum class Algorithm {
  Randomized,     // subset elicitation: local-Borda positional estimator / pairwise Minimax estimator
  RegretOptimal,  // truncated ballots, argmax-worst vs argmax-best
  DeterAvg,       // truncated ballots, unranked positions get the mean tail score (Borda only)
  WorstOnly,      // truncated ballots, argmax-worst
  MmHeuristic1,   // truncated ballots, Minimax on n(c, d) (Minimax only)
  MmHeuristic2,   // truncated ballots, normalised n(c, d) (Minimax only)
};

enum class Preset { Paper, Desk };

std::string_view rule_name(Rule r) noexcept;
Rule parse_rule(std::string_view s);
std::string_view algorithm_name(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view s);
Preset parse_preset(std::string_view s);

bool supports(Rule rule, Algorithm algorithm) noexcept;
std::vector<Algorithm> default_algorithms(Rule rule);

struct ExperimentConfig {
  Rule rule = Rule::Borda;
  gen::DistributionSpec dist;
  int m = 20;
  std::vector<int> ell_values{2};
  int n_min = 10;
  int n_max = 1000;
  int n_step = 25;
  int trials = 50;
  std::uint64_t master_seed = 1;
  std::vector<Algorithm> algorithms;

  /// n_min, n_min + n_step, ... while <= n_max.
  std::vector<int> n_values() const;
  void validate() const;

  /// paper: m=50, ell {2,5,8}, 500 trials. desk: m=20, ell {2,5} (Borda) or
  /// {2,8} (Minimax), 50 trials. Both: n = 10..1000 step 25, every supported
  /// algorithm.
  static ExperimentConfig preset(Preset preset, Rule rule, gen::Distribution dist);
};

struct CellSpec {
  Rule rule = Rule::Borda;
  gen::DistributionSpec dist;
  int m = 0;
  int ell = 0;  // ell == m is accepted as a full-information diagnostic
  int n = 0;
  Algorithm algorithm = Algorithm::Randomized;
  int trials = 1;
  std::uint64_t master_seed = 1;
};

struct ResultRow {
  Rule rule = Rule::Borda;
  gen::Distribution dist = gen::Distribution::IC;
  int m = 0;
  int ell = 0;
  int n = 0;
  Algorithm algorithm = Algorithm::Randomized;
  double mean_ratio = 0.0;
  double std_ratio = 0.0;  // population standard deviation
  int trials = 0;          // aggregated (non-degenerate) trials
  std::uint64_t seed = 0;
  int degenerate_trials = 0;

  bool degenerate() const noexcept { return trials == 0; }
};

std::uint64_t profile_seed(std::uint64_t master, const gen::DistributionSpec& dist, int m, int n,
                           int trial);
std::uint64_t elicitation_seed(std::uint64_t profile_seed, int ell);

/// Ratio reached on each trial; nullopt for degenerate trials.
std::vector<std::optional<double>> run_cell_ratios(const CellSpec& cell);
ResultRow run_cell(const CellSpec& cell);

struct RunOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct CellTrials {
  CellSpec cell;
  std::vector<std::optional<double>> ratios;  // indexed by trial
};

/// Per-trial ratios of every cell in the grids, in (config, ell, algorithm, n)
/// order. Each profile is generated once and shared by all of its cells.
std::vector<CellTrials> run_grid_trials(std::span<const ExperimentConfig> configs,
                                        const RunOptions& options = {});

ResultRow aggregate(const CellSpec& cell, std::span<const std::optional<double>> ratios);

/// Rows sorted by (rule, dist, m, ell, algorithm, n); degenerate rows dropped.
std::vector<ResultRow> run_grid(const ExperimentConfig& config, const RunOptions& options = {});
std::vector<ResultRow> run_grids(std::span<const ExperimentConfig> configs,
                                 const RunOptions& options = {});

/// Worst-case lower bound on every trial's ratio, where one is proven.
std::optional<double> theoretical_floor(Rule rule, Algorithm algorithm, int m, int ell);

inline constexpr std::string_view kCsvHeader =
    "rule,dist,m,l,n,algorithm,mean_ratio,std_ratio,trials,seed";

void write_csv(std::ostream& out, std::span<const ResultRow> rows);
std::string to_csv(std::span<const ResultRow> rows);
void write_csv_file(const std::filesystem::path& path, std::span<const ResultRow> rows);

}  // namespace elicit::bench
