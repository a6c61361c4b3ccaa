#include "elicit/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "elicit/rng.hpp"

namespace elicit::randomized {

AlphaVector::AlphaVector(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.size() < 2) throw InputError("alpha vector needs ell >= 2 entries");
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (!std::isfinite(alphas_[i])) throw InputError("alpha entry is not finite");
    if (i > 0 && alphas_[i] > alphas_[i - 1]) throw InputError("alpha vector must be non-increasing");
  }
  if (!(alphas_.front() > 0.0)) throw InputError("alpha_1 must be positive");
}

AlphaVector AlphaVector::local_borda(int ell) {
  if (ell < 2) throw InputError("local Borda needs ell >= 2");
  std::vector<double> a(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) a[static_cast<std::size_t>(i)] = ell - 1 - i;
  return AlphaVector(std::move(a));
}

RandomElicitation::RandomElicitation(int m, int ell, std::vector<Candidate> local_rankings,
                                     std::uint64_t seed)
    : m_(m), n_(0), ell_(ell), seed_(seed), rankings_(std::move(local_rankings)) {
  if (ell < 2 || ell > m)
    throw InputError("subset size " + std::to_string(ell) + " outside [2, m=" + std::to_string(m) +
                     "]");
  if (rankings_.empty() || rankings_.size() % static_cast<std::size_t>(ell) != 0)
    throw InputError("elicitation has no responses or ragged rows");
  n_ = static_cast<int>(rankings_.size() / static_cast<std::size_t>(ell));
  std::vector<int> seen(static_cast<std::size_t>(m), -1);
  for (int v = 0; v < n_; ++v) {
    for (Candidate c : local_ranking(v)) {
      if (c < 0 || c >= m) throw InputError("response candidate out of range");
      if (seen[static_cast<std::size_t>(c)] == v)
        throw InputError("voter " + std::to_string(v) + " response repeats a candidate");
      seen[static_cast<std::size_t>(c)] = v;
    }
  }
}

std::span<const Candidate> RandomElicitation::local_ranking(int voter) const {
  if (voter < 0 || voter >= n_) throw InputError("voter out of range");
  return std::span<const Candidate>(rankings_).subspan(
      static_cast<std::size_t>(voter) * static_cast<std::size_t>(ell_),
      static_cast<std::size_t>(ell_));
}

SubsetResponse RandomElicitation::response(int voter) const {
  const auto r = local_ranking(voter);
  SubsetResponse out{voter, {r.begin(), r.end()}, {r.begin(), r.end()}};
  std::sort(out.subset.begin(), out.subset.end());
  return out;
}

RandomElicitation elicit_subsets(const Election& election, int ell, std::uint64_t seed) {
  const int m = election.num_candidates();
  const int n = election.num_voters();
  if (ell < 2 || ell > m)
    throw InputError("subset size " + std::to_string(ell) + " outside [2, m=" + std::to_string(m) +
                     "]");
  Rng rng(seed);
  std::vector<Candidate> rows;
  rows.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(ell));
  std::vector<std::int32_t> subset;
  const auto pos = election.position_keys();
  for (int v = 0; v < n; ++v) {
    floyd_subset(m, ell, rng, subset);
    const std::int32_t* key = pos.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(m);
    std::sort(subset.begin(), subset.end(), [key](Candidate a, Candidate b) { return key[a] < key[b]; });
    rows.insert(rows.end(), subset.begin(), subset.end());
  }
  return RandomElicitation(m, ell, std::move(rows), seed);
}

Estimate psf_alg(const RandomElicitation& elicitation, const AlphaVector& alpha) {
  if (alpha.ell() != elicitation.ell())
    throw InputError("alpha length " + std::to_string(alpha.ell()) + " differs from subset size " +
                     std::to_string(elicitation.ell()));
  const auto m = static_cast<std::size_t>(elicitation.num_candidates());
  const int n = elicitation.num_voters();
  const auto ell = static_cast<std::size_t>(elicitation.ell());
  std::vector<double> total(m, 0.0);
  std::vector<std::int64_t> ranked(m, 0);
  const auto rows = elicitation.local_rankings();
  const auto a = alpha.values();
  for (std::size_t r = 0; r < rows.size(); r += ell) {
    for (std::size_t i = 0; i < ell; ++i) {
      const auto c = static_cast<std::size_t>(rows[r + i]);
      total[c] += a[i];
      ranked[c] += 1;
    }
  }
  Estimate est;
  est.table.scores.assign(m, 0.0);
  est.table.excluded.assign(m, 0);
  for (std::size_t c = 0; c < m; ++c) {
    if (ranked[c] == 0) {
      est.table.excluded[c] = 1;
      continue;
    }
    est.table.scores[c] = (static_cast<double>(n) * total[c]) / static_cast<double>(ranked[c]);
  }
  est.winner = rules::winner(est.table);
  return est;
}

rules::PairwiseTally sampled_pairwise(const RandomElicitation& elicitation) {
  const int m = elicitation.num_candidates();
  const auto ell = static_cast<std::size_t>(elicitation.ell());
  rules::PairwiseTally t{m, std::vector<std::int32_t>(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0)};
  const auto rows = elicitation.local_rankings();
  for (std::size_t r = 0; r < rows.size(); r += ell)
    for (std::size_t i = 0; i < ell; ++i) {
      const auto c = static_cast<std::size_t>(rows[r + i]);
      for (std::size_t j = i + 1; j < ell; ++j)
        t.counts[c * static_cast<std::size_t>(m) + static_cast<std::size_t>(rows[r + j])] += 1;
    }
  return t;
}

Estimate minimax_alg(const RandomElicitation& elicitation) {
  const int m = elicitation.num_candidates();
  const double n = elicitation.num_voters();
  const auto s = sampled_pairwise(elicitation);
  Estimate est;
  est.table.scores.assign(static_cast<std::size_t>(m), 0.0);
  est.table.excluded.assign(static_cast<std::size_t>(m), 0);
  for (Candidate c = 0; c < m; ++c) {
    double best = std::numeric_limits<double>::infinity();
    bool compared = false;
    for (Candidate d = 0; d < m; ++d) {
      if (d == c) continue;
      const std::int32_t wins = s.at(c, d);
      const std::int32_t both = wins + s.at(d, c);
      if (both == 0) continue;
      best = std::min(best, (n * wins) / both);
      compared = true;
    }
    if (compared)
      est.table.scores[static_cast<std::size_t>(c)] = best;
    else
      est.table.excluded[static_cast<std::size_t>(c)] = 1;
  }
  est.winner = rules::winner(est.table);
  return est;
}

ProfileData to_profile_data(const RandomElicitation& elicitation) {
  const auto r = elicitation.local_rankings();
  return ProfileData{elicitation.num_candidates(), elicitation.ell(), {r.begin(), r.end()}};
}

RandomElicitation elicitation_from(const ProfileData& data, std::uint64_t seed) {
  return RandomElicitation(data.m, data.ell, data.rows, seed);
}

}  // namespace elicit::randomized
