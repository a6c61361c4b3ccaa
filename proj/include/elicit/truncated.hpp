#pragma once

// Winner selection from ell-truncated ballots.
//
// worst(c) / best(c) bound the score c can reach over every completion of a
// truncated profile. The regret-optimal choice compares the argmax-worst
// candidate a against the argmax-best candidate b1 and keeps whichever
// guarantees the larger ratio. The chosen candidate need not be a possible
// winner of any completion.

#include <vector>

#include "elicit/core.hpp"
#include "elicit/rules.hpp"

namespace elicit::truncated {

struct WorstBestTable {
  std::vector<double> worst;
  std::vector<double> best;

  int size() const noexcept { return static_cast<int>(worst.size()); }
};

struct GuaranteedWinner {
  Candidate winner = -1;
  /// Lower bound on score(winner) / max score over every completion, in [0, 1].
  double guarantee = 0.0;
};

/// worst: unranked -> last position; best: unranked -> position ell + 1.
WorstBestTable worst_best_positional(const TruncatedProfile& trunc, const rules::ScoringVector& lambda);

/// Candidate-selection step shared by the positional and Minimax variants.
GuaranteedWinner regret_optimal_choice(const WorstBestTable& table);
/// Always the argmax-worst candidate a; guarantee worst(a) / max_{c != a} best(c).
GuaranteedWinner worst_only_choice(const WorstBestTable& table);

GuaranteedWinner regret_optimal_winner(const TruncatedProfile& trunc, const rules::ScoringVector& lambda);
GuaranteedWinner worst_only_winner(const TruncatedProfile& trunc, const rules::ScoringVector& lambda);

/// Unranked positions earn the mean of alpha_{ell+1..m}.
ScoreTable deter_avg_scores(const TruncatedProfile& trunc, const rules::ScoringVector& lambda);
Candidate deter_avg_winner(const TruncatedProfile& trunc, const rules::ScoringVector& lambda);

/// n(c, d) = |{v : c is ranked by v and d is either unranked or ranked below c}|.
rules::PairwiseTally truncated_pairwise(const TruncatedProfile& trunc);

/// worst(c) = min_d n(c, d); best(c) = min_d (n - n(d, c)).
WorstBestTable minimax_worst_best(const TruncatedProfile& trunc);
GuaranteedWinner minimax_regret_optimal_winner(const TruncatedProfile& trunc);
GuaranteedWinner minimax_worst_only_winner(const TruncatedProfile& trunc);

/// min_d n(c, d).
ScoreTable minimax_heuristic_1_scores(const TruncatedProfile& trunc);
/// min over d with n(c, d) + n(d, c) > 0 of n * n(c, d) / (n(c, d) + n(d, c)).
ScoreTable minimax_heuristic_2_scores(const TruncatedProfile& trunc);
Candidate minimax_heuristic_1(const TruncatedProfile& trunc);
Candidate minimax_heuristic_2(const TruncatedProfile& trunc);

}  // namespace elicit::truncated
