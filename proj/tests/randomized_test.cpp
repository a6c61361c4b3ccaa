#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "elicit/randomized.hpp"
#include "elicit/rules.hpp"
#include "elicit/theory.hpp"
#include "test_support.hpp"

namespace elicit::randomized {
namespace {

TEST(AlphaVector, Validation) {
  EXPECT_THROW(AlphaVector({1.0}), InputError);
  EXPECT_THROW(AlphaVector({0.0, 0.0}), InputError);
  EXPECT_THROW(AlphaVector({1.0, 2.0}), InputError);
  EXPECT_EQ(AlphaVector::local_borda(4).values()[0], 3.0);
  EXPECT_EQ(AlphaVector::local_borda(4).values()[3], 0.0);
}

TEST(Elicit, FullSubsetIsFullRanking) {
  const auto e = testing::random_election(5, 12, 3);
  const auto el = elicit_subsets(e, 5, 99);
  for (int v = 0; v < 12; ++v) {
    const auto a = el.local_ranking(v);
    const auto b = e.ranking(v);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(Elicit, RejectsDepth) {
  const auto e = testing::random_election(4, 2, 1);
  EXPECT_THROW(elicit_subsets(e, 1, 0), InputError);
  EXPECT_THROW(elicit_subsets(e, 5, 0), InputError);
}

TEST(Elicit, LocalRankingsConsistent) {
  const auto e = testing::random_election(9, 50, 8);
  const auto el = elicit_subsets(e, 4, 5);
  for (int v = 0; v < 50; ++v) {
    const auto r = el.response(v);
    EXPECT_EQ(r.voter, v);
    EXPECT_TRUE(std::is_sorted(r.subset.begin(), r.subset.end()));
    ASSERT_EQ(r.local_ranking.size(), 4u);
    for (std::size_t i = 1; i < 4; ++i)
      EXPECT_LT(e.position_of(v, r.local_ranking[i - 1]), e.position_of(v, r.local_ranking[i]));
  }
}

TEST(Elicit, SubsetFrequencies) {
  // m=3, l=2: each of the 3 subsets has probability 1/3
  const Election e(3, {0, 1, 2});
  std::map<std::vector<Candidate>, int> counts;
  constexpr int kSeeds = 30000;
  for (int s = 0; s < kSeeds; ++s) ++counts[elicit_subsets(e, 2, static_cast<std::uint64_t>(s)).response(0).subset];
  ASSERT_EQ(counts.size(), 3u);
  const double sigma = std::sqrt(kSeeds * (1.0 / 3) * (2.0 / 3));
  for (const auto& [k, c] : counts) EXPECT_LT(std::abs(c - kSeeds / 3.0), 4 * sigma);
}

TEST(Elicit, SeedDeterminism) {
  const auto e = testing::random_election(10, 30, 4);
  EXPECT_EQ(elicit_subsets(e, 3, 17), elicit_subsets(e, 3, 17));
  EXPECT_NE(elicit_subsets(e, 3, 17), elicit_subsets(e, 3, 18));
  const auto a = psf_alg(elicit_subsets(e, 3, 17), AlphaVector::local_borda(3));
  const auto b = psf_alg(elicit_subsets(e, 3, 17), AlphaVector::local_borda(3));
  EXPECT_EQ(a.table.scores, b.table.scores);
  EXPECT_EQ(a.winner, b.winner);
}

TEST(PsfAlg, FullInformationIsExactBorda) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto e = testing::random_election(6, 13, seed);
    const auto est = psf_alg(elicit_subsets(e, 6, seed), AlphaVector::local_borda(6));
    const auto exact = rules::positional_scores(e, rules::make_borda(6));
    EXPECT_EQ(est.table.scores, exact.scores);
    EXPECT_EQ(est.winner, rules::winner(exact));
  }
}

TEST(PsfAlg, SingleVoter) {
  const RandomElicitation el(4, 2, {2, 0}, 0);
  const auto est = psf_alg(el, AlphaVector({3.0, 1.0}));
  EXPECT_EQ(est.table.scores[2], 3.0);
  EXPECT_EQ(est.table.scores[0], 1.0);
  EXPECT_TRUE(est.table.is_excluded(1));
  EXPECT_TRUE(est.table.is_excluded(3));
  EXPECT_EQ(est.winner, 2);
}

TEST(PsfAlg, AlphaLengthMismatch) {
  const RandomElicitation el(4, 2, {2, 0}, 0);
  EXPECT_THROW(psf_alg(el, AlphaVector({2.0, 1.0, 0.0})), InputError);
}

TEST(PsfAlg, UnbiasedForLambdaAlpha) {
  // m <= 6, l in {2, 3}: Monte-Carlo mean within 3 standard errors
  for (auto [m, ell] : {std::pair{5, 2}, std::pair{6, 3}}) {
    const auto e = testing::random_election(m, 20, 100 + static_cast<std::uint64_t>(m));
    std::vector<double> alpha(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) alpha[static_cast<std::size_t>(i)] = ell - i + (i == 0 ? 1.5 : 0.0);
    const AlphaVector av(alpha);
    const auto target = rules::positional_scores(
        e, rules::ScoringVector(theory::lambda_alpha_vector(alpha, m)));
    constexpr int kTrials = 20000;
    std::vector<double> sum(static_cast<std::size_t>(m)), sq(static_cast<std::size_t>(m));
    std::vector<int> k(static_cast<std::size_t>(m));
    for (int t = 0; t < kTrials; ++t) {
      const auto est = psf_alg(elicit_subsets(e, ell, derive_seed(5, "unbiased", static_cast<std::uint64_t>(t))), av);
      for (std::size_t c = 0; c < static_cast<std::size_t>(m); ++c) {
        if (est.table.excluded[c]) continue;
        sum[c] += est.table.scores[c];
        sq[c] += est.table.scores[c] * est.table.scores[c];
        ++k[c];
      }
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(m); ++c) {
      ASSERT_GT(k[c], kTrials / 2);
      const double mean = sum[c] / k[c];
      const double var = sq[c] / k[c] - mean * mean;
      const double se = std::sqrt(var / k[c]);
      EXPECT_LE(std::abs(mean - target.scores[c]), 3 * se + 1e-9) << "m=" << m << " c=" << c;
    }
  }
}

TEST(PsfAlg, ConcentrationBelowTailBound) {
  // Large n so the bound is informative.
  const int m = 5, ell = 2, n = 2000;
  const double eps = 0.2;
  const auto e = testing::random_election(m, n, 12);
  const std::vector<double> alpha{1.0, 0.0};
  const auto target = rules::positional_scores(e, rules::ScoringVector(theory::lambda_alpha_vector(alpha, m)));
  constexpr int kTrials = 2000;
  for (Candidate c = 0; c < m; ++c) {
    const double sc = target.scores[static_cast<std::size_t>(c)];
    const double bound = theory::psf_tail_bound(eps, ell, m, 1.0, sc).value;
    ASSERT_LT(bound, 0.5);
    int dev = 0;
    for (int t = 0; t < kTrials; ++t) {
      const auto est = psf_alg(elicit_subsets(e, ell, derive_seed(8, "tail", static_cast<std::uint64_t>(t))), AlphaVector(alpha));
      dev += std::abs(est.table.scores[static_cast<std::size_t>(c)] - sc) >= eps * sc;
    }
    EXPECT_LE(static_cast<double>(dev) / kTrials, bound);
  }
}

TEST(MinimaxAlg, FullInformationIsExact) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto e = testing::random_election(5, 11, seed);
    const auto est = minimax_alg(elicit_subsets(e, 5, seed));
    const auto exact = rules::minimax_scores(e);
    for (std::size_t c = 0; c < 5; ++c) EXPECT_DOUBLE_EQ(est.table.scores[c], exact.scores[c]);
    EXPECT_EQ(est.winner, rules::winner(exact));
  }
}

RandomElicitation est_source(const Election& e, std::uint64_t seed) { return elicit_subsets(e, 2, seed); }

TEST(MinimaxAlg, UnanimousTopNeverBeaten) {
  std::vector<Candidate> flat;
  for (int v = 0; v < 40; ++v) flat.insert(flat.end(), {3, 1, 0, 2, 4});
  const Election e(5, flat);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto est = minimax_alg(est_source(e, seed));
    ASSERT_FALSE(est.table.is_excluded(3));
    EXPECT_EQ(est.table.scores[3], 40.0);
    EXPECT_EQ(est.table.scores[static_cast<std::size_t>(est.winner)], 40.0);
    const auto s = sampled_pairwise(est_source(e, seed));
    for (Candidate c : {0, 1, 2, 4}) {
      if (est.table.is_excluded(c)) continue;
      bool beaten = false;
      for (Candidate d = 0; d < 5; ++d) beaten |= d != c && s.at(d, c) > 0;
      if (beaten) {
        EXPECT_LT(est.table.scores[static_cast<std::size_t>(c)], 40.0);
      } else {
        EXPECT_EQ(est.table.scores[static_cast<std::size_t>(c)], 40.0);
      }
    }
  }
}

TEST(MinimaxAlg, PairwiseSymmetry) {
  const auto e = testing::random_election(7, 60, 3);
  const auto el = elicit_subsets(e, 3, 4);
  const auto s = sampled_pairwise(el);
  for (Candidate c = 0; c < 7; ++c)
    for (Candidate d = c + 1; d < 7; ++d) {
      int both = 0;
      for (int v = 0; v < 60; ++v) {
        const auto r = el.local_ranking(v);
        both += std::count(r.begin(), r.end(), c) && std::count(r.begin(), r.end(), d);
      }
      EXPECT_EQ(s.at(c, d) + s.at(d, c), both);
    }
}

TEST(MinimaxAlg, PairwiseEstimatesUnbiased) {
  // m=6, l=3: mean of n S[c,d] / (S[c,d] + S[d,c]) within 2% of the exact count
  const auto e = testing::random_election(6, 30, 77);
  const auto exact = rules::pairwise_tally(e);
  constexpr int kTrials = 10000;
  std::vector<double> sum(36, 0.0);
  std::vector<int> k(36, 0);
  for (int t = 0; t < kTrials; ++t) {
    const auto s = sampled_pairwise(elicit_subsets(e, 3, derive_seed(3, "mm", static_cast<std::uint64_t>(t))));
    for (Candidate c = 0; c < 6; ++c)
      for (Candidate d = 0; d < 6; ++d) {
        const int den = c == d ? 0 : s.at(c, d) + s.at(d, c);
        if (den == 0) continue;
        sum[static_cast<std::size_t>(c * 6 + d)] += 30.0 * s.at(c, d) / den;
        ++k[static_cast<std::size_t>(c * 6 + d)];
      }
  }
  for (Candidate c = 0; c < 6; ++c)
    for (Candidate d = 0; d < 6; ++d) {
      if (c == d) continue;
      const auto i = static_cast<std::size_t>(c * 6 + d);
      ASSERT_GT(k[i], 0);
      EXPECT_NEAR(sum[i] / k[i], exact.at(c, d), 0.02 * 30) << c << "," << d;
    }
}

TEST(MinimaxAlg, ExcludesUncompared) {
  const RandomElicitation el(5, 2, {0, 1, 1, 0}, 0);
  const auto est = minimax_alg(el);
  EXPECT_EQ(est.table.scores[0], 1.0);
  EXPECT_EQ(est.table.scores[1], 1.0);
  EXPECT_TRUE(est.table.is_excluded(2));
  EXPECT_EQ(est.winner, 0);
}

}  // namespace
}  // namespace elicit::randomized
