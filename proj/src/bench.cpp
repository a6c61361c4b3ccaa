#include "elicit/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "elicit/randomized.hpp"
#include "elicit/rng.hpp"
#include "elicit/rules.hpp"
#include "elicit/theory.hpp"
#include "elicit/truncated.hpp"

namespace elicit::bench {

namespace {

constexpr Algorithm kAllAlgorithms[] = {Algorithm::Randomized,   Algorithm::RegretOptimal,
                                        Algorithm::DeterAvg,     Algorithm::WorstOnly,
                                        Algorithm::MmHeuristic1, Algorithm::MmHeuristic2};

ScoreTable exact_scores(Rule rule, const Election& e) {
  return rule == Rule::Borda ? rules::positional_scores(e, rules::make_borda(e.num_candidates()))
                             : rules::minimax_scores(e);
}

// Winner chosen by `algorithm` from its elicited view of `e`. With ell == m
// the truncated view uses depth m - 1, which already determines every ranking.
Candidate choose(Rule rule, Algorithm algorithm, const Election& e, int ell, std::uint64_t seed) {
  const int m = e.num_candidates();
  if (algorithm == Algorithm::Randomized) {
    const auto elicitation = randomized::elicit_subsets(e, ell, seed);
    return rule == Rule::Borda
               ? randomized::psf_alg(elicitation, randomized::AlphaVector::local_borda(ell)).winner
               : randomized::minimax_alg(elicitation).winner;
  }
  const auto trunc = truncate(e, std::min(ell, m - 1));
  if (rule == Rule::Borda) {
    const auto borda = rules::make_borda(m);
    switch (algorithm) {
      case Algorithm::RegretOptimal: return truncated::regret_optimal_winner(trunc, borda).winner;
      case Algorithm::WorstOnly: return truncated::worst_only_winner(trunc, borda).winner;
      case Algorithm::DeterAvg: return truncated::deter_avg_winner(trunc, borda);
      default: break;
    }
  } else {
    switch (algorithm) {
      case Algorithm::RegretOptimal: return truncated::minimax_regret_optimal_winner(trunc).winner;
      case Algorithm::WorstOnly: return truncated::minimax_worst_only_winner(trunc).winner;
      case Algorithm::MmHeuristic1: return truncated::minimax_heuristic_1(trunc);
      case Algorithm::MmHeuristic2: return truncated::minimax_heuristic_2(trunc);
      default: break;
    }
  }
  throw InputError(std::string("algorithm ") + std::string(algorithm_name(algorithm)) +
                   " does not apply to rule " + std::string(rule_name(rule)));
}

std::optional<double> trial_ratio(Rule rule, Algorithm algorithm, const Election& e,
                                  const ScoreTable& exact, int ell, std::uint64_t pseed) {
  try {
    const Candidate c = choose(rule, algorithm, e, ell, elicitation_seed(pseed, ell));
    return approximation_ratio(e, c, exact);
  } catch (const DegenerateInstance&) {
    return std::nullopt;
  }
}

void validate_cell(const CellSpec& cell) {
  cell.dist.validate();
  if (cell.m < 2) throw InputError("cell needs m >= 2");
  if (cell.ell < 1 || cell.ell > cell.m) throw InputError("cell needs 1 <= l <= m");
  if (cell.algorithm == Algorithm::Randomized && cell.ell < 2)
    throw InputError("randomized elicitation needs l >= 2");
  if (cell.n < 1) throw InputError("cell needs n >= 1");
  if (cell.trials < 1) throw InputError("cell needs trials >= 1");
  if (!supports(cell.rule, cell.algorithm))
    throw InputError(std::string("algorithm ") + std::string(algorithm_name(cell.algorithm)) +
                     " does not apply to rule " + std::string(rule_name(cell.rule)));
}

bool row_less(const ResultRow& a, const ResultRow& b) {
  return std::make_tuple(rule_name(a.rule), gen::distribution_name(a.dist), a.m, a.ell,
                         algorithm_name(a.algorithm), a.n) <
         std::make_tuple(rule_name(b.rule), gen::distribution_name(b.dist), b.m, b.ell,
                         algorithm_name(b.algorithm), b.n);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string_view rule_name(Rule r) noexcept { return r == Rule::Borda ? "borda" : "minimax"; }

Rule parse_rule(std::string_view s) {
  if (s == "borda") return Rule::Borda;
  if (s == "minimax") return Rule::Minimax;
  throw InputError("unknown rule '" + std::string(s) + "' (expected borda or minimax)");
}

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Randomized: return "randomized";
    case Algorithm::RegretOptimal: return "regret_optimal";
    case Algorithm::DeterAvg: return "deter_avg";
    case Algorithm::WorstOnly: return "worst_only";
    case Algorithm::MmHeuristic1: return "mm_heuristic1";
    case Algorithm::MmHeuristic2: return "mm_heuristic2";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view s) {
  for (auto a : kAllAlgorithms)
    if (algorithm_name(a) == s) return a;
  throw InputError("unknown algorithm '" + std::string(s) + "'");
}

Preset parse_preset(std::string_view s) {
  if (s == "paper") return Preset::Paper;
  if (s == "desk") return Preset::Desk;
  throw InputError("unknown preset '" + std::string(s) + "' (expected paper or desk)");
}

bool supports(Rule rule, Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::Randomized:
    case Algorithm::RegretOptimal:
    case Algorithm::WorstOnly: return true;
    case Algorithm::DeterAvg: return rule == Rule::Borda;
    case Algorithm::MmHeuristic1:
    case Algorithm::MmHeuristic2: return rule == Rule::Minimax;
  }
  return false;
}

std::vector<Algorithm> default_algorithms(Rule rule) {
  std::vector<Algorithm> out;
  for (auto a : kAllAlgorithms)
    if (supports(rule, a)) out.push_back(a);
  return out;
}

std::vector<int> ExperimentConfig::n_values() const {
  std::vector<int> out;
  if (n_step < 1) return out;
  for (int n = n_min; n <= n_max; n += n_step) out.push_back(n);
  return out;
}

void ExperimentConfig::validate() const {
  dist.validate();
  if (m < 2) throw InputError("config needs m >= 2");
  if (ell_values.empty()) throw InputError("config needs at least one l value");
  for (int ell : ell_values)
    if (ell < 2 || ell >= m)
      throw InputError("l=" + std::to_string(ell) + " outside [2, m=" + std::to_string(m) + ")");
  if (trials < 1) throw InputError("config needs trials >= 1");
  if (n_min < 1 || n_step < 1 || n_max < n_min) throw InputError("config n range is empty");
  if (algorithms.empty()) throw InputError("config needs at least one algorithm");
  for (auto a : algorithms)
    if (!supports(rule, a))
      throw InputError(std::string("algorithm ") + std::string(algorithm_name(a)) +
                       " does not apply to rule " + std::string(rule_name(rule)));
}

ExperimentConfig ExperimentConfig::preset(Preset preset, Rule rule, gen::Distribution dist) {
  ExperimentConfig c;
  c.rule = rule;
  c.dist.kind = dist;
  c.n_min = 10;
  c.n_max = 1000;
  c.n_step = 25;
  c.algorithms = default_algorithms(rule);
  if (preset == Preset::Paper) {
    c.m = 50;
    c.ell_values = {2, 5, 8};
    c.trials = 500;
  } else {
    c.m = 20;
    c.ell_values = rule == Rule::Borda ? std::vector<int>{2, 5} : std::vector<int>{2, 8};
    c.trials = 50;
  }
  return c;
}

std::uint64_t profile_seed(std::uint64_t master, const gen::DistributionSpec& dist, int m, int n,
                           int trial) {
  std::string tag = "profile|" + std::string(gen::distribution_name(dist.kind)) +
                    "|m=" + std::to_string(m) + "|n=" + std::to_string(n);
  if (dist.fixed_phi) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "|phi=%.17g", *dist.fixed_phi);
    tag += buf;
  }
  return derive_seed(master, tag, static_cast<std::uint64_t>(trial));
}

std::uint64_t elicitation_seed(std::uint64_t pseed, int ell) {
  return derive_seed(pseed, "elicit", static_cast<std::uint64_t>(ell));
}

std::vector<std::optional<double>> run_cell_ratios(const CellSpec& cell) {
  validate_cell(cell);
  std::vector<std::optional<double>> out;
  out.reserve(static_cast<std::size_t>(cell.trials));
  for (int t = 0; t < cell.trials; ++t) {
    const auto pseed = profile_seed(cell.master_seed, cell.dist, cell.m, cell.n, t);
    const auto e = gen::generate(cell.dist, cell.m, cell.n, pseed);
    const auto exact = exact_scores(cell.rule, e);
    out.push_back(trial_ratio(cell.rule, cell.algorithm, e, exact, cell.ell, pseed));
  }
  return out;
}

ResultRow aggregate(const CellSpec& cell, std::span<const std::optional<double>> ratios) {
  ResultRow row;
  row.rule = cell.rule;
  row.dist = cell.dist.kind;
  row.m = cell.m;
  row.ell = cell.ell;
  row.n = cell.n;
  row.algorithm = cell.algorithm;
  row.seed = cell.master_seed;
  double sum = 0.0;
  int k = 0;
  for (const auto& r : ratios) {
    if (!r) {
      ++row.degenerate_trials;
      continue;
    }
    sum += *r;
    ++k;
  }
  row.trials = k;
  if (k == 0) return row;
  row.mean_ratio = sum / k;
  double sq = 0.0;
  for (const auto& r : ratios)
    if (r) sq += (*r - row.mean_ratio) * (*r - row.mean_ratio);
  row.std_ratio = std::sqrt(sq / k);
  return row;
}

ResultRow run_cell(const CellSpec& cell) { return aggregate(cell, run_cell_ratios(cell)); }

std::vector<ResultRow> run_grid(const ExperimentConfig& config, const RunOptions& options) {
  return run_grids(std::span<const ExperimentConfig>(&config, 1), options);
}

std::vector<CellTrials> run_grid_trials(std::span<const ExperimentConfig> configs,
                                        const RunOptions& options) {
  // One work unit per (config, n, trial): the profile and its exact scores
  // are computed once and shared by every (ell, algorithm) pair.
  struct Unit {
    std::size_t config;
    int n_index;
    int trial;
  };
  std::vector<Unit> units;
  std::vector<std::vector<int>> n_values(configs.size());
  std::vector<std::size_t> base(configs.size());
  std::size_t slots = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    configs[i].validate();
    n_values[i] = configs[i].n_values();
    base[i] = slots;
    slots += configs[i].ell_values.size() * configs[i].algorithms.size() * n_values[i].size() *
             static_cast<std::size_t>(configs[i].trials);
    for (int ni = 0; ni < static_cast<int>(n_values[i].size()); ++ni)
      for (int t = 0; t < configs[i].trials; ++t) units.push_back({i, ni, t});
  }

  // slot layout per config: [ell][algorithm][n][trial]
  std::vector<std::optional<double>> ratios(slots);
  auto slot = [&](std::size_t ci, std::size_t li, std::size_t ai, std::size_t ni, std::size_t t) {
    const auto& c = configs[ci];
    const std::size_t nn = n_values[ci].size();
    const auto tt = static_cast<std::size_t>(c.trials);
    return base[ci] + ((li * c.algorithms.size() + ai) * nn + ni) * tt + t;
  };

  parallel_for(units.size(), options.threads, [&](std::size_t u) {
    const auto& unit = units[u];
    const auto& c = configs[unit.config];
    const int n = n_values[unit.config][static_cast<std::size_t>(unit.n_index)];
    const auto pseed = profile_seed(c.master_seed, c.dist, c.m, n, unit.trial);
    const auto e = gen::generate(c.dist, c.m, n, pseed);
    const auto exact = exact_scores(c.rule, e);
    for (std::size_t li = 0; li < c.ell_values.size(); ++li)
      for (std::size_t ai = 0; ai < c.algorithms.size(); ++ai)
        ratios[slot(unit.config, li, ai, static_cast<std::size_t>(unit.n_index),
                    static_cast<std::size_t>(unit.trial))] =
            trial_ratio(c.rule, c.algorithms[ai], e, exact, c.ell_values[li], pseed);
  });

  std::vector<CellTrials> out;
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    const auto& c = configs[ci];
    const auto tt = static_cast<std::size_t>(c.trials);
    for (std::size_t li = 0; li < c.ell_values.size(); ++li)
      for (std::size_t ai = 0; ai < c.algorithms.size(); ++ai)
        for (std::size_t ni = 0; ni < n_values[ci].size(); ++ni) {
          const auto first = ratios.begin() + static_cast<std::ptrdiff_t>(slot(ci, li, ai, ni, 0));
          out.push_back({CellSpec{c.rule, c.dist, c.m, c.ell_values[li], n_values[ci][ni],
                                  c.algorithms[ai], c.trials, c.master_seed},
                         {first, first + static_cast<std::ptrdiff_t>(tt)}});
        }
  }
  return out;
}

std::vector<ResultRow> run_grids(std::span<const ExperimentConfig> configs, const RunOptions& options) {
  std::vector<ResultRow> rows;
  for (const auto& t : run_grid_trials(configs, options)) {
    auto row = aggregate(t.cell, t.ratios);
    if (!row.degenerate()) rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::optional<double> theoretical_floor(Rule rule, Algorithm algorithm, int m, int ell) {
  if (algorithm != Algorithm::RegretOptimal && algorithm != Algorithm::WorstOnly) return std::nullopt;
  const int depth = std::min(ell, m - 1);
  if (rule == Rule::Borda) return theory::trunc_psf_guarantee(rules::make_borda(m), depth).value;
  return theory::minimax_trunc_bounds(m, depth).guarantee;
}

void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kCsvHeader << '\n';
  char buf[64];
  for (const auto& r : rows) {
    out << rule_name(r.rule) << ',' << gen::distribution_name(r.dist) << ',' << r.m << ',' << r.ell
        << ',' << r.n << ',' << algorithm_name(r.algorithm) << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", r.mean_ratio, r.std_ratio);
    out << buf << ',' << r.trials << ',' << r.seed << '\n';
  }
}

std::string to_csv(std::span<const ResultRow> rows) {
  std::ostringstream s;
  write_csv(s, rows);
  return s.str();
}

void write_csv_file(const std::filesystem::path& path, std::span<const ResultRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write CSV '" + path.string() + "'");
  write_csv(out, rows);
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace elicit::bench
