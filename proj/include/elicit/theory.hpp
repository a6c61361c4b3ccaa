#pragma once

// Closed-form quantities: the positional function that the subset estimator
// is unbiased for, a basis of the space of such functions, Chernoff-type
// tail bounds for both randomized estimators, worst-case guarantees for
// truncated ballots, and the cyclic instance that defeats every
// deterministic Minimax rule on truncated ballots.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "elicit/core.hpp"
#include "elicit/randomized.hpp"
#include "elicit/rules.hpp"

namespace elicit::theory {

enum class BoundKind {
  PsfTail,               // subset positional estimator
  MinimaxTail,           // subset Minimax estimator
  TruncPsfGuarantee,     // regret-optimal positional choice, truncated ballots
  MinimaxImpossibility,  // no deterministic rule does better
  MinimaxGuarantee,      // argmax-worst Minimax choice, truncated ballots
};

std::string_view bound_name(BoundKind kind) noexcept;

struct BoundInputs {
  std::optional<int> m;
  std::optional<int> ell;
  std::optional<double> epsilon;
  std::optional<double> alpha1;
  std::optional<double> score;
};

struct BoundReport {
  double value = 0.0;
  BoundKind formula{};
  BoundInputs inputs;
};

/// lambda_alpha(p) = sum_i alpha_i C(p-1, i-1) C(m-p, ell-i) / C(m-1, ell-1)
/// for 1-based p. Binomials are exact big integers; each weight is rounded
/// once to double. `alpha` may have any length 1 <= ell <= m.
double lambda_alpha(int p, std::span<const double> alpha, int m);
double lambda_alpha(int p, const randomized::AlphaVector& alpha, int m);

/// (lambda_alpha(1), ..., lambda_alpha(m)).
std::vector<double> lambda_alpha_vector(std::span<const double> alpha, int m);

/// Row i is lambda_{eta_i} for the i-th unit alpha vector; ell x m.
std::vector<std::vector<double>> sep_basis(int m, int ell);

/// 2 exp(-eps^2 ell score / (6 m alpha1)), clamped to 1.
BoundReport psf_tail_bound(double epsilon, int ell, int m, double alpha1, double score);

/// m exp(-eps^2 ell^2 score_min / (6 m^2)), clamped to 1.
BoundReport minimax_tail_bound(double epsilon, int ell, int m, double score_min);

/// S / (m alpha_{ell+1} + (alpha_1 - alpha_{ell+1}) / alpha_1 * S), S = alpha_1 + ... + alpha_ell.
BoundReport trunc_psf_guarantee(const rules::ScoringVector& lambda, int ell);

struct MinimaxTruncBounds {
  double impossibility = 0.0;  // 1 / (m - ell)
  double guarantee = 0.0;      // 1 / ((m - ell)(1 + ell^2 / (m^2 - ell^2 - m + ell)))
};

/// Both values are exact rationals rounded once to double.
MinimaxTruncBounds minimax_trunc_bounds(int m, int ell);

struct AdversarialInstance {
  TruncatedProfile truncated;
  Election completion;
  Candidate target;       // the candidate an algorithm declared
  Candidate true_winner;  // its Minimax score is m - ell in `completion`
};

/// Rotational instance: voter i lists c_i, c_{i+1}, ..., c_{i+ell-1} (mod m).
/// The truncated profile is the same for every `chosen`; the completion
/// appends unranked candidates in cyclic index order starting at chosen - 1,
/// so that `chosen` has Minimax score `copies` and chosen - 1 has
/// `copies * (m - ell)`. Each voter row is repeated `copies` times.
AdversarialInstance cyclic_adversarial_instance(int m, int ell, Candidate chosen, int copies = 1);

}  // namespace elicit::theory
