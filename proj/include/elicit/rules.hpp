#pragma once

// Exact positional scoring rules and the Minimax rule on full elections.

#include <cstdint>
#include <span>
#include <vector>

#include "elicit/core.hpp"

namespace elicit::rules {

/// Positional scoring function: alpha(p) for positions p = 1..m, non-increasing.
class ScoringVector {
 public:
  explicit ScoringVector(std::vector<double> alphas);

  int size() const noexcept { return static_cast<int>(alphas_.size()); }
  /// 1-based position.
  double alpha(int p) const { return alphas_.at(static_cast<std::size_t>(p - 1)); }
  std::span<const double> values() const noexcept { return alphas_; }

  bool is_constant() const noexcept { return alphas_.front() == alphas_.back(); }
  /// Experiments compare scores through ratios; a constant vector makes every
  /// candidate a winner.
  void require_nonconstant() const;

  bool operator==(const ScoringVector&) const = default;

 private:
  std::vector<double> alphas_;
};

ScoringVector make_borda(int m);
ScoringVector make_k_approval(int m, int k);

/// Pairwise support counts: at(c, d) voters prefer c to d.
struct PairwiseTally {
  int m = 0;
  std::vector<std::int32_t> counts;  // row-major m x m, zero diagonal

  std::int32_t at(Candidate c, Candidate d) const {
    return counts[static_cast<std::size_t>(c) * static_cast<std::size_t>(m) +
                  static_cast<std::size_t>(d)];
  }
};

/// Tally over any key matrix (see kernels.hpp).
PairwiseTally tally_keys(std::span<const std::int32_t> keys, int n, int m);

ScoreTable positional_scores(const Election& election, const ScoringVector& lambda);

int minimax_pairwise(const Election& election, Candidate c, Candidate d);
PairwiseTally pairwise_tally(const Election& election);

/// score(c) = min over d != c of the number of voters preferring c to d.
ScoreTable minimax_scores(const Election& election);

/// Lowest-index candidate attaining the maximum over non-excluded candidates.
Candidate winner(const ScoreTable& table);

}  // namespace elicit::rules
