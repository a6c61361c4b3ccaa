#include "elicit/truncated.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "elicit/kernels.hpp"

namespace elicit::truncated {

namespace {

Candidate argmax(const std::vector<double>& v, Candidate skip = -1) {
  Candidate best = -1;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (static_cast<Candidate>(c) == skip) continue;
    if (best < 0 || v[c] > v[static_cast<std::size_t>(best)]) best = static_cast<Candidate>(c);
  }
  return best;
}

// Guaranteed ratio when the chosen candidate scores at least `num` and every
// rival at most `den`. A rival ceiling <= 0 means the choice cannot lose.
double quotient(double num, double den) {
  if (den <= 0.0) return 1.0;
  return std::min(1.0, num / den);
}

std::vector<double> accumulate(const TruncatedProfile& trunc, std::span<const double> key_scores) {
  std::vector<double> out(static_cast<std::size_t>(trunc.num_candidates()), 0.0);
  kernels::active().accumulate_positional(trunc.keys(), static_cast<std::size_t>(trunc.num_voters()),
                                          static_cast<std::size_t>(trunc.num_candidates()),
                                          key_scores, out);
  return out;
}

void check_lambda(const TruncatedProfile& trunc, const rules::ScoringVector& lambda) {
  if (lambda.size() != trunc.num_candidates())
    throw InputError("scoring vector length " + std::to_string(lambda.size()) +
                     " differs from m=" + std::to_string(trunc.num_candidates()));
}

// Key table: alpha_1..alpha_ell for ranked positions, `tail` for unranked.
std::vector<double> key_table(const rules::ScoringVector& lambda, int ell, double tail) {
  const auto a = lambda.values();
  std::vector<double> t(a.begin(), a.begin() + ell);
  t.push_back(tail);
  return t;
}

}  // namespace

WorstBestTable worst_best_positional(const TruncatedProfile& trunc, const rules::ScoringVector& lambda) {
  check_lambda(trunc, lambda);
  const int ell = trunc.depth();
  WorstBestTable t;
  t.worst = accumulate(trunc, key_table(lambda, ell, lambda.alpha(trunc.num_candidates())));
  t.best = accumulate(trunc, key_table(lambda, ell, lambda.alpha(ell + 1)));
  return t;
}

GuaranteedWinner regret_optimal_choice(const WorstBestTable& table) {
  if (table.size() < 2) throw InputError("regret-optimal choice needs m >= 2");
  const Candidate a = argmax(table.worst);
  const Candidate b1 = argmax(table.best);
  const auto worst = [&](Candidate c) { return table.worst[static_cast<std::size_t>(c)]; };
  const auto best = [&](Candidate c) { return table.best[static_cast<std::size_t>(c)]; };
  if (!(best(b1) > 0.0))
    throw DegenerateInstance("every best-case score is <= 0; no ratio can be guaranteed");

  if (a != b1) {
    const Candidate b2 = argmax(table.best, b1);
    const double keep_a = quotient(worst(a), best(b1));
    const double keep_b1 = quotient(worst(b1), best(b2));
    return keep_a >= keep_b1 ? GuaranteedWinner{a, keep_a} : GuaranteedWinner{b1, keep_b1};
  }
  // One candidate leads both columns: weigh it against the runner-up by worst.
  const Candidate w = a;
  const Candidate b2 = argmax(table.best, w);
  const Candidate a2 = argmax(table.worst, w);
  const double keep_w = quotient(worst(w), best(b2));
  const double keep_a2 = quotient(worst(a2), best(w));
  return keep_w >= keep_a2 ? GuaranteedWinner{w, keep_w} : GuaranteedWinner{a2, keep_a2};
}

GuaranteedWinner worst_only_choice(const WorstBestTable& table) {
  if (table.size() < 2) throw InputError("worst-only choice needs m >= 2");
  const Candidate a = argmax(table.worst);
  const Candidate rival = argmax(table.best, a);
  return {a, quotient(table.worst[static_cast<std::size_t>(a)],
                      table.best[static_cast<std::size_t>(rival)])};
}

GuaranteedWinner regret_optimal_winner(const TruncatedProfile& trunc, const rules::ScoringVector& lambda) {
  return regret_optimal_choice(worst_best_positional(trunc, lambda));
}

GuaranteedWinner worst_only_winner(const TruncatedProfile& trunc, const rules::ScoringVector& lambda) {
  return worst_only_choice(worst_best_positional(trunc, lambda));
}

ScoreTable deter_avg_scores(const TruncatedProfile& trunc, const rules::ScoringVector& lambda) {
  check_lambda(trunc, lambda);
  const int m = trunc.num_candidates();
  const int ell = trunc.depth();
  double tail = 0.0;
  for (int p = ell + 1; p <= m; ++p) tail += lambda.alpha(p);
  tail /= static_cast<double>(m - ell);
  return ScoreTable::dense(accumulate(trunc, key_table(lambda, ell, tail)));
}

Candidate deter_avg_winner(const TruncatedProfile& trunc, const rules::ScoringVector& lambda) {
  return rules::winner(deter_avg_scores(trunc, lambda));
}

rules::PairwiseTally truncated_pairwise(const TruncatedProfile& trunc) {
  return rules::tally_keys(trunc.keys(), trunc.num_voters(), trunc.num_candidates());
}

WorstBestTable minimax_worst_best(const TruncatedProfile& trunc) {
  const int m = trunc.num_candidates();
  const int n = trunc.num_voters();
  const auto t = truncated_pairwise(trunc);
  WorstBestTable out;
  out.worst.assign(static_cast<std::size_t>(m), 0.0);
  out.best.assign(static_cast<std::size_t>(m), 0.0);
  for (Candidate c = 0; c < m; ++c) {
    std::int32_t lo = std::numeric_limits<std::int32_t>::max();
    std::int32_t hi = std::numeric_limits<std::int32_t>::max();
    for (Candidate d = 0; d < m; ++d) {
      if (d == c) continue;
      lo = std::min(lo, t.at(c, d));
      hi = std::min(hi, n - t.at(d, c));
    }
    out.worst[static_cast<std::size_t>(c)] = lo;
    out.best[static_cast<std::size_t>(c)] = hi;
  }
  return out;
}

GuaranteedWinner minimax_regret_optimal_winner(const TruncatedProfile& trunc) {
  return regret_optimal_choice(minimax_worst_best(trunc));
}

GuaranteedWinner minimax_worst_only_winner(const TruncatedProfile& trunc) {
  return worst_only_choice(minimax_worst_best(trunc));
}

ScoreTable minimax_heuristic_1_scores(const TruncatedProfile& trunc) {
  // Identical to the Minimax worst column.
  return ScoreTable::dense(minimax_worst_best(trunc).worst);
}

ScoreTable minimax_heuristic_2_scores(const TruncatedProfile& trunc) {
  const int m = trunc.num_candidates();
  const double n = trunc.num_voters();
  const auto t = truncated_pairwise(trunc);
  ScoreTable out;
  out.scores.assign(static_cast<std::size_t>(m), 0.0);
  out.excluded.assign(static_cast<std::size_t>(m), 0);
  for (Candidate c = 0; c < m; ++c) {
    double lo = std::numeric_limits<double>::infinity();
    bool any = false;
    for (Candidate d = 0; d < m; ++d) {
      if (d == c) continue;
      const std::int32_t wins = t.at(c, d);
      const std::int32_t both = wins + t.at(d, c);
      if (both == 0) continue;
      lo = std::min(lo, (n * wins) / both);
      any = true;
    }
    if (any)
      out.scores[static_cast<std::size_t>(c)] = lo;
    else
      out.excluded[static_cast<std::size_t>(c)] = 1;
  }
  return out;
}

Candidate minimax_heuristic_1(const TruncatedProfile& trunc) {
  return rules::winner(minimax_heuristic_1_scores(trunc));
}

Candidate minimax_heuristic_2(const TruncatedProfile& trunc) {
  return rules::winner(minimax_heuristic_2_scores(trunc));
}

}  // namespace elicit::truncated
