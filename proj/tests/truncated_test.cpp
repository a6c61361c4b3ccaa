#include <gtest/gtest.h>

#include <limits>

#include "elicit/rules.hpp"
#include "elicit/theory.hpp"
#include "elicit/truncated.hpp"
#include "test_support.hpp"

namespace elicit::truncated {
namespace {

using testing::instance_example2;
using testing::instance_i1;
using testing::instance_i2;

TEST(WorstBest, InstanceI1) {
  const auto t = worst_best_positional(instance_i1(), rules::make_borda(6));
  EXPECT_EQ(t.worst, (std::vector<double>{16, 15, 8, 9, 12, 0}));
  EXPECT_EQ(t.best, (std::vector<double>{16, 19, 14, 15, 16, 10}));
}

TEST(WorstBest, InstanceI2) {
  const auto t = worst_best_positional(instance_i2(), rules::make_borda(6));
  EXPECT_EQ(t.worst, (std::vector<double>{16, 13, 9, 9, 13, 0}));
  EXPECT_EQ(t.best, (std::vector<double>{16, 17, 15, 15, 17, 10}));
}

TEST(WorstBest, Example2) {
  const auto t = worst_best_positional(instance_example2(), rules::ScoringVector({3, 1, 1, 1, 0}));
  EXPECT_EQ(t.worst, (std::vector<double>{4, 3, 3, 3, 3}));
  EXPECT_EQ(t.best, (std::vector<double>{4, 6, 6, 6, 6}));
}

TEST(WorstBest, DepthMinusOne) {
  const auto e = testing::random_election(5, 9, 1);
  const auto t = truncate(e, 4);
  const auto wb = worst_best_positional(t, rules::make_borda(5));
  const auto exact = rules::positional_scores(e, rules::make_borda(5));
  for (Candidate c = 0; c < 5; ++c) {
    bool everywhere = true;
    for (int v = 0; v < 9; ++v) everywhere &= t.ranks(v, c);
    if (everywhere) {
      EXPECT_EQ(wb.worst[static_cast<std::size_t>(c)], exact.scores[static_cast<std::size_t>(c)]);
      EXPECT_EQ(wb.best[static_cast<std::size_t>(c)], exact.scores[static_cast<std::size_t>(c)]);
    }
  }
}

TEST(WorstBest, LengthMismatch) {
  EXPECT_THROW(worst_best_positional(instance_i1(), rules::make_borda(5)), InputError);
}

TEST(RegretOptimal, InstanceI1PicksB) {
  const auto w = regret_optimal_winner(instance_i1(), rules::make_borda(6));
  EXPECT_EQ(w.winner, 1);
  EXPECT_EQ(w.guarantee, 15.0 / 16.0);
}

TEST(RegretOptimal, InstanceI2PicksA) {
  const auto w = regret_optimal_winner(instance_i2(), rules::make_borda(6));
  EXPECT_EQ(w.winner, 0);
  EXPECT_EQ(w.guarantee, 16.0 / 17.0);
}

TEST(RegretOptimal, Example2PicksA) {
  const auto w = regret_optimal_winner(instance_example2(), rules::ScoringVector({3, 1, 1, 1, 0}));
  EXPECT_EQ(w.winner, 0);
  EXPECT_EQ(w.guarantee, 4.0 / 6.0);
}

TEST(RegretOptimal, CoincidingArgmaxes) {
  // w = argmax worst = argmax best: keep w unless the runner-up guarantees more
  WorstBestTable t{{10, 6, 2}, {12, 11, 9}};
  auto r = regret_optimal_choice(t);
  EXPECT_EQ(r.winner, 0);
  EXPECT_EQ(r.guarantee, 10.0 / 11.0);
  t = {{5, 4.9, 0}, {100, 5, 1}};
  r = regret_optimal_choice(t);
  EXPECT_EQ(r.winner, 0);
  EXPECT_EQ(r.guarantee, 1.0);
}

TEST(RegretOptimal, DegenerateBest) {
  EXPECT_THROW(regret_optimal_choice(WorstBestTable{{0, 0}, {0, 0}}), DegenerateInstance);
}

TEST(RegretOptimal, DominatesBothSimpleRules) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto e = testing::random_election(6, 7, seed);
    const auto t = truncate(e, 2);
    const auto wb = worst_best_positional(t, rules::make_borda(6));
    const auto r = regret_optimal_choice(wb);
    const auto a = worst_only_choice(wb);
    // argmax-best alone guarantees worst(b1) / max_{c != b1} best(c)
    const auto b1 = static_cast<std::size_t>(std::max_element(wb.best.begin(), wb.best.end()) - wb.best.begin());
    double other = 0;
    for (std::size_t c = 0; c < wb.best.size(); ++c)
      if (c != b1) other = std::max(other, wb.best[c]);
    EXPECT_GE(r.guarantee, a.guarantee);
    EXPECT_GE(r.guarantee, std::min(1.0, wb.worst[b1] / other));
  }
}

TEST(RegretOptimal, GuaranteeAtLeastTheoremBound) {
  for (int m : {4, 6, 9}) {
    for (int ell = 1; ell < m; ++ell) {
      for (const auto& lambda : {rules::make_borda(m), rules::make_k_approval(m, std::min(m - 1, ell + 1)),
                                 rules::ScoringVector(std::vector<double>(static_cast<std::size_t>(m), 1.0))}) {
        if (lambda.is_constant()) continue;
        const double bound = theory::trunc_psf_guarantee(lambda, ell).value;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
          const auto t = truncate(testing::random_election(m, 3 + static_cast<int>(seed % 11), seed), ell);
          EXPECT_GE(regret_optimal_winner(t, lambda).guarantee, bound - 1e-12);
          EXPECT_GE(worst_only_winner(t, lambda).guarantee, bound - 1e-12);
        }
      }
    }
  }
}

TEST(Exhaustive, PositionalCompletionsRespectBounds) {
  // m <= 5, n <= 4, l = 2; guarantees never exceed the realised ratio
  for (int m = 3; m <= 5; ++m) {
    const auto lambda = rules::make_borda(m);
    const int max_n = m == 5 ? 2 : 4;
    for (int n = 1; n <= max_n; ++n)
      for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto t = truncate(testing::random_election(m, n, seed * 13 + static_cast<std::uint64_t>(m)), 2);
        const auto wb = worst_best_positional(t, lambda);
        const auto ro = regret_optimal_winner(t, lambda);
        std::vector<double> lo(static_cast<std::size_t>(m), std::numeric_limits<double>::infinity());
        std::vector<double> hi(static_cast<std::size_t>(m), -std::numeric_limits<double>::infinity());
        testing::for_each_completion(t, [&](const Election& e) {
          const auto s = rules::positional_scores(e, lambda);
          for (std::size_t c = 0; c < s.size(); ++c) {
            lo[c] = std::min(lo[c], s.scores[c]);
            hi[c] = std::max(hi[c], s.scores[c]);
          }
          EXPECT_LE(ro.guarantee, approximation_ratio(e, ro.winner, s) + 1e-12);
        });
        EXPECT_EQ(wb.worst, lo);
        EXPECT_EQ(wb.best, hi);
      }
  }
}

TEST(DeterAvg, InstanceI1) {
  // b is unranked by two voters, each worth the tail mean (2 + 1 + 0) / 3
  const auto s = deter_avg_scores(instance_i1(), rules::make_borda(6));
  EXPECT_EQ(s.scores, (std::vector<double>{16, 17, 11, 12, 14, 5}));
  EXPECT_EQ(deter_avg_winner(instance_i1(), rules::make_borda(6)), 1);
}

TEST(DeterAvg, DepthMinusOneIsExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto e = testing::random_election(6, 9, seed);
    const auto exact = rules::positional_scores(e, rules::make_borda(6));
    EXPECT_EQ(deter_avg_scores(truncate(e, 5), rules::make_borda(6)).scores, exact.scores);
    EXPECT_EQ(deter_avg_winner(truncate(e, 5), rules::make_borda(6)), rules::winner(exact));
  }
}

TEST(MinimaxTruncated, PairwiseDefinition) {
  const auto e = testing::random_election(8, 25, 9);
  const auto t = truncate(e, 3);
  const auto n = truncated_pairwise(t);
  for (Candidate c = 0; c < 8; ++c)
    for (Candidate d = 0; d < 8; ++d) {
      if (c == d) continue;
      int k = 0;
      for (int v = 0; v < 25; ++v)
        k += t.ranks(v, c) && (!t.ranks(v, d) || e.position_of(v, c) < e.position_of(v, d));
      EXPECT_EQ(n.at(c, d), k);
    }
}

TEST(MinimaxTruncated, UnanimousTop) {
  std::vector<Candidate> flat;
  for (int v = 0; v < 6; ++v) flat.insert(flat.end(), {2, 0});
  const TruncatedProfile t(4, 2, flat);
  const auto wb = minimax_worst_best(t);
  EXPECT_EQ(wb.worst[2], 6.0);
  EXPECT_EQ(wb.best[2], 6.0);
  const auto w = minimax_regret_optimal_winner(t);
  EXPECT_EQ(w.winner, 2);
  EXPECT_EQ(w.guarantee, 1.0);
}

TEST(MinimaxTruncated, CyclicInstanceSymmetric) {
  for (int m = 4; m <= 8; ++m)
    for (int ell = 1; ell < m; ++ell) {
      const auto inst = theory::cyclic_adversarial_instance(m, ell, 0);
      const auto wb = minimax_worst_best(inst.truncated);
      const auto h1 = minimax_heuristic_1_scores(inst.truncated);
      for (int c = 1; c < m; ++c) {
        EXPECT_EQ(wb.worst[static_cast<std::size_t>(c)], wb.worst[0]);
        EXPECT_EQ(wb.best[static_cast<std::size_t>(c)], wb.best[0]);
        EXPECT_EQ(h1.scores[static_cast<std::size_t>(c)], h1.scores[0]);
      }
      EXPECT_EQ(minimax_regret_optimal_winner(inst.truncated).winner, 0);
    }
}

TEST(MinimaxTruncated, CanonicalAdversarialCompletion) {
  // worst(c) is attained by ranking c last among the unranked, the rest by index
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto t = truncate(testing::random_election(6, 7, seed), 2);
    const auto wb = minimax_worst_best(t);
    for (Candidate c = 0; c < 6; ++c) {
      std::vector<Candidate> flat;
      for (int v = 0; v < 7; ++v) {
        const auto p = t.prefix(v);
        flat.insert(flat.end(), p.begin(), p.end());
        for (Candidate d = 0; d < 6; ++d)
          if (d != c && !t.ranks(v, d)) flat.push_back(d);
        if (!t.ranks(v, c)) flat.push_back(c);
      }
      const auto s = rules::minimax_scores(Election(6, flat));
      EXPECT_EQ(s.scores[static_cast<std::size_t>(c)], wb.worst[static_cast<std::size_t>(c)]);
    }
  }
}

TEST(MinimaxTruncated, RandomProfilesBeatGuarantee) {
  // m=10, l=4: realised ratio >= 1/(m - l/2) on random completions
  const double floor = 1.0 / (10 - 2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto e = testing::random_election(10, 15, seed);
    const auto t = truncate(e, 4);
    const auto exact = rules::minimax_scores(e);
    if (exact.max_score() <= 0) continue;
    EXPECT_GE(approximation_ratio(e, minimax_regret_optimal_winner(t).winner, exact), floor);
    EXPECT_GE(approximation_ratio(e, minimax_worst_only_winner(t).winner, exact), floor);
    EXPECT_GE(minimax_worst_only_winner(t).guarantee, theory::minimax_trunc_bounds(10, 4).guarantee - 1e-12);
  }
}

TEST(MinimaxTruncated, ExhaustiveCompletions) {
  for (int m = 3; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t = truncate(testing::random_election(m, n, seed + 31 * static_cast<std::uint64_t>(n)), 2);
        const auto wb = minimax_worst_best(t);
        const auto ro = minimax_regret_optimal_winner(t);
        std::vector<double> lo(static_cast<std::size_t>(m), 1e9), hi(static_cast<std::size_t>(m), -1e9);
        testing::for_each_completion(t, [&](const Election& e) {
          const auto s = rules::minimax_scores(e);
          for (std::size_t c = 0; c < s.size(); ++c) {
            lo[c] = std::min(lo[c], s.scores[c]);
            hi[c] = std::max(hi[c], s.scores[c]);
          }
          if (s.max_score() > 0) {
            EXPECT_LE(ro.guarantee, approximation_ratio(e, ro.winner, s) + 1e-12);
          }
        });
        for (std::size_t c = 0; c < lo.size(); ++c) {
          EXPECT_LE(wb.worst[c], lo[c]);
          EXPECT_GE(wb.best[c], hi[c]);
        }
      }
}

TEST(Heuristics, DepthMinusOneIsExact) {
  // with one unranked candidate per voter, n(c, d) is the exact pairwise count
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto e = testing::random_election(5, 9, seed);
    const auto t = truncate(e, 4);
    const auto exact = rules::minimax_scores(e);
    EXPECT_EQ(minimax_heuristic_1_scores(t).scores, exact.scores);
    EXPECT_EQ(minimax_heuristic_2_scores(t).scores, exact.scores);
    EXPECT_EQ(minimax_heuristic_1(t), rules::winner(exact));
    EXPECT_EQ(minimax_heuristic_2(t), rules::winner(exact));
  }
}

TEST(Heuristics, MatchBruteFormula) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto e = testing::random_election(8, 100, seed);
    const auto t = truncate(e, 3);
    const auto h1 = minimax_heuristic_1_scores(t);
    const auto h2 = minimax_heuristic_2_scores(t);
    auto nt = [&](Candidate c, Candidate d) {
      int k = 0;
      for (int v = 0; v < 100; ++v)
        k += t.ranks(v, c) && (!t.ranks(v, d) || e.position_of(v, c) < e.position_of(v, d));
      return k;
    };
    for (Candidate c = 0; c < 8; ++c) {
      double s1 = 1e18, s2 = 1e18;
      bool any = false;
      for (Candidate d = 0; d < 8; ++d) {
        if (d == c) continue;
        s1 = std::min<double>(s1, nt(c, d));
        const int den = nt(c, d) + nt(d, c);
        if (den > 0) {
          s2 = std::min(s2, 100.0 * nt(c, d) / den);
          any = true;
        }
      }
      EXPECT_EQ(h1.scores[static_cast<std::size_t>(c)], s1);
      if (any) {
        EXPECT_DOUBLE_EQ(h2.scores[static_cast<std::size_t>(c)], s2);
      } else {
        EXPECT_TRUE(h2.is_excluded(c));
      }
    }
  }
}

}  // namespace
}  // namespace elicit::truncated
