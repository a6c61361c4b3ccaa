#pragma once

// Randomized elicitation: every voter ranks a uniformly random ell-subset of
// the candidates. Two estimators run on the responses: the positional
// estimator parameterised by a subset scoring vector alpha, and the
// pairwise-normalised Minimax estimator.

#include <cstdint>
#include <span>
#include <vector>

#include "elicit/core.hpp"
#include "elicit/profile_io.hpp"
#include "elicit/rules.hpp"

namespace elicit::randomized {

/// Scores awarded by local rank within a subset: alpha_1 >= ... >= alpha_ell,
/// alpha_1 > 0, ell >= 2.
class AlphaVector {
 public:
  explicit AlphaVector(std::vector<double> alphas);

  /// (ell-1, ell-2, ..., 0). Its expected per-voter score is proportional to
  /// Borda for every ell.
  static AlphaVector local_borda(int ell);

  int ell() const noexcept { return static_cast<int>(alphas_.size()); }
  /// 1-based local rank.
  double alpha(int i) const { return alphas_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const double> values() const noexcept { return alphas_; }

 private:
  std::vector<double> alphas_;
};

/// One response per voter; responses stored as row-major n x ell local
/// rankings (subset membership is the row's contents).
class RandomElicitation {
 public:
  RandomElicitation(int m, int ell, std::vector<Candidate> local_rankings, std::uint64_t seed);

  int num_candidates() const noexcept { return m_; }
  int num_voters() const noexcept { return n_; }
  int ell() const noexcept { return ell_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::span<const Candidate> local_ranking(int voter) const;
  std::span<const Candidate> local_rankings() const noexcept { return rankings_; }
  SubsetResponse response(int voter) const;

  bool operator==(const RandomElicitation&) const = default;

 private:
  int m_;
  int n_;
  int ell_;
  std::uint64_t seed_;
  std::vector<Candidate> rankings_;
};

/// Each voter, in index order, draws an independent uniform ell-subset
/// (Floyd's algorithm on one stream seeded by `seed`) and reports it in the
/// order induced by her full ranking.
RandomElicitation elicit_subsets(const Election& election, int ell, std::uint64_t seed);

struct Estimate {
  ScoreTable table;
  Candidate winner = -1;
};

/// score(c) = n * total(c) / ranked(c); candidates never ranked are excluded.
Estimate psf_alg(const RandomElicitation& elicitation, const AlphaVector& alpha);

/// S[c][d]: responses that contain both and rank c above d.
rules::PairwiseTally sampled_pairwise(const RandomElicitation& elicitation);

/// score(c) = n * min over d with S[c][d] + S[d][c] > 0 of S[c][d] / (S[c][d] + S[d][c]);
/// candidates never compared with anyone are excluded.
Estimate minimax_alg(const RandomElicitation& elicitation);

ProfileData to_profile_data(const RandomElicitation& elicitation);
RandomElicitation elicitation_from(const ProfileData& data, std::uint64_t seed = 0);

}  // namespace elicit::randomized
