#include "elicit/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "elicit/kernels.hpp"

namespace elicit::rules {

ScoringVector::ScoringVector(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw InputError("scoring vector is empty");
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (!std::isfinite(alphas_[i])) throw InputError("scoring vector entry is not finite");
    if (i > 0 && alphas_[i] > alphas_[i - 1])
      throw InputError("scoring vector must be non-increasing (entry " + std::to_string(i + 1) +
                       ")");
  }
}

void ScoringVector::require_nonconstant() const {
  if (is_constant()) throw InputError("constant scoring vector: every candidate ties");
}

ScoringVector make_borda(int m) {
  if (m < 2) throw InputError("Borda needs m >= 2");
  std::vector<double> a(static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p) a[static_cast<std::size_t>(p - 1)] = m - p;
  return ScoringVector(std::move(a));
}

ScoringVector make_k_approval(int m, int k) {
  if (m < 1 || k < 1 || k > m)
    throw InputError("k-approval needs 1 <= k <= m (k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + ")");
  std::vector<double> a(static_cast<std::size_t>(m), 0.0);
  std::fill_n(a.begin(), k, 1.0);
  return ScoringVector(std::move(a));
}

PairwiseTally tally_keys(std::span<const std::int32_t> keys, int n, int m) {
  PairwiseTally t{m, std::vector<std::int32_t>(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0)};
  kernels::active().tally_pairwise(keys, static_cast<std::size_t>(n), static_cast<std::size_t>(m),
                                   t.counts);
  return t;
}

ScoreTable positional_scores(const Election& election, const ScoringVector& lambda) {
  const int m = election.num_candidates();
  if (lambda.size() != m)
    throw InputError("scoring vector length " + std::to_string(lambda.size()) +
                     " differs from m=" + std::to_string(m));
  std::vector<double> scores(static_cast<std::size_t>(m), 0.0);
  kernels::active().accumulate_positional(election.position_keys(),
                                          static_cast<std::size_t>(election.num_voters()),
                                          static_cast<std::size_t>(m), lambda.values(), scores);
  return ScoreTable::dense(std::move(scores));
}

int minimax_pairwise(const Election& election, Candidate c, Candidate d) {
  const int m = election.num_candidates();
  if (c < 0 || c >= m || d < 0 || d >= m) throw InputError("candidate out of range");
  if (c == d) throw InputError("pairwise support needs two distinct candidates");
  int count = 0;
  for (int v = 0; v < election.num_voters(); ++v)
    count += election.position_of(v, c) < election.position_of(v, d) ? 1 : 0;
  return count;
}

PairwiseTally pairwise_tally(const Election& election) {
  return tally_keys(election.position_keys(), election.num_voters(), election.num_candidates());
}

ScoreTable minimax_scores(const Election& election) {
  const int m = election.num_candidates();
  if (m < 2) throw InputError("Minimax needs m >= 2");
  const auto tally = pairwise_tally(election);
  std::vector<double> scores(static_cast<std::size_t>(m));
  for (Candidate c = 0; c < m; ++c) {
    std::int32_t worst = std::numeric_limits<std::int32_t>::max();
    for (Candidate d = 0; d < m; ++d)
      if (d != c) worst = std::min(worst, tally.at(c, d));
    scores[static_cast<std::size_t>(c)] = worst;
  }
  return ScoreTable::dense(std::move(scores));
}

Candidate winner(const ScoreTable& table) {
  Candidate best = -1;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (table.excluded[c]) continue;
    if (best < 0 || table.scores[c] > table.scores[static_cast<std::size_t>(best)])
      best = static_cast<Candidate>(c);
  }
  if (best < 0) throw InputError("no non-excluded candidate to declare winner");
  return best;
}

}  // namespace elicit::rules
