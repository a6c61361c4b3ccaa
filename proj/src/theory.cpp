#include "elicit/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace elicit::theory {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i)
  }
  return r;
}

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InputError("epsilon must lie in (0, 1]");
}

}  // namespace

std::string_view bound_name(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::PsfTail: return "psf_tail";
    case BoundKind::MinimaxTail: return "minimax_tail";
    case BoundKind::TruncPsfGuarantee: return "trunc_psf_guarantee";
    case BoundKind::MinimaxImpossibility: return "minimax_impossibility";
    case BoundKind::MinimaxGuarantee: return "minimax_guarantee";
  }
  return "unknown";
}

double lambda_alpha(int p, std::span<const double> alpha, int m) {
  const int ell = static_cast<int>(alpha.size());
  if (ell < 1 || ell > m) throw InputError("alpha length must lie in [1, m]");
  if (p < 1 || p > m) throw InputError("position " + std::to_string(p) + " outside [1, m]");
  const cpp_int norm = binomial(m - 1, ell - 1);
  double value = 0.0;
  for (int i = 1; i <= ell; ++i) {
    const cpp_int count = binomial(p - 1, i - 1) * binomial(m - p, ell - i);
    if (count == 0) continue;
    const double weight = cpp_rational(count, norm).convert_to<double>();
    value += alpha[static_cast<std::size_t>(i - 1)] * weight;
  }
  return value;
}

double lambda_alpha(int p, const randomized::AlphaVector& alpha, int m) {
  return lambda_alpha(p, alpha.values(), m);
}

std::vector<double> lambda_alpha_vector(std::span<const double> alpha, int m) {
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p) out[static_cast<std::size_t>(p - 1)] = lambda_alpha(p, alpha, m);
  return out;
}

std::vector<std::vector<double>> sep_basis(int m, int ell) {
  if (ell < 2 || ell > m) throw InputError("basis needs 2 <= ell <= m");
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(ell));
  std::vector<double> eta(static_cast<std::size_t>(ell), 0.0);
  for (int i = 0; i < ell; ++i) {
    std::fill(eta.begin(), eta.end(), 0.0);
    eta[static_cast<std::size_t>(i)] = 1.0;
    rows.push_back(lambda_alpha_vector(eta, m));
  }
  return rows;
}

BoundReport psf_tail_bound(double epsilon, int ell, int m, double alpha1, double score) {
  check_epsilon(epsilon);
  if (!(alpha1 > 0.0)) throw InputError("alpha_1 must be positive");
  if (score < 0.0) throw InputError("score must be non-negative");
  if (ell < 1 || m < 1) throw InputError("ell and m must be positive");
  const double exponent = -(epsilon * epsilon * ell * score) / (6.0 * m * alpha1);
  return {clamp_probability(2.0 * std::exp(exponent)), BoundKind::PsfTail,
          {m, ell, epsilon, alpha1, score}};
}

BoundReport minimax_tail_bound(double epsilon, int ell, int m, double score_min) {
  check_epsilon(epsilon);
  if (score_min < 0.0) throw InputError("score must be non-negative");
  if (ell < 1 || m < 1) throw InputError("ell and m must be positive");
  const double l = ell;
  const double mm = m;
  const double exponent = -(epsilon * epsilon * l * l * score_min) / (6.0 * mm * mm);
  return {clamp_probability(mm * std::exp(exponent)), BoundKind::MinimaxTail,
          {m, ell, epsilon, std::nullopt, score_min}};
}

BoundReport trunc_psf_guarantee(const rules::ScoringVector& lambda, int ell) {
  const int m = lambda.size();
  if (ell < 1 || ell >= m) throw InputError("guarantee needs 1 <= ell < m");
  const double a1 = lambda.alpha(1);
  if (!(a1 > 0.0)) throw InputError("alpha_1 must be positive");
  double head = 0.0;
  for (int i = 1; i <= ell; ++i) head += lambda.alpha(i);
  const double next = lambda.alpha(ell + 1);
  const double value = head / (m * next + ((a1 - next) / a1) * head);
  return {value, BoundKind::TruncPsfGuarantee, {m, ell, std::nullopt, a1, std::nullopt}};
}

MinimaxTruncBounds minimax_trunc_bounds(int m, int ell) {
  if (ell < 1 || ell >= m) throw InputError("bounds need 1 <= ell < m");
  const std::int64_t mi = m;
  const std::int64_t li = ell;
  const std::int64_t d = mi * mi - li * li - mi + li;  // (m - ell)(m + ell - 1) > 0
  const std::int64_t guarantee_den = (mi - li) * (d + li * li);
  MinimaxTruncBounds b;
  b.impossibility = 1.0 / static_cast<double>(mi - li);
  b.guarantee = static_cast<double>(d) / static_cast<double>(guarantee_den);
  // guarantee <= impossibility and guarantee >= 1 / (m - ell/2), cross-multiplied.
  if (d * (mi - li) > guarantee_den || d * (2 * mi - li) < 2 * guarantee_den)
    throw std::logic_error("Minimax truncated-ballot bounds out of order");
  return b;
}

AdversarialInstance cyclic_adversarial_instance(int m, int ell, Candidate chosen, int copies) {
  if (ell < 1 || ell >= m) throw InputError("adversarial instance needs 1 <= ell < m");
  if (chosen < 0 || chosen >= m) throw InputError("chosen candidate out of range");
  if (copies < 1) throw InputError("copies must be positive");
  const auto mod = [m](int x) { return ((x % m) + m) % m; };
  const Candidate true_winner = mod(chosen - 1);

  std::vector<Candidate> prefixes;
  std::vector<Candidate> full;
  std::vector<std::uint8_t> listed(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<Candidate> row;
    std::fill(listed.begin(), listed.end(), 0);
    for (int k = 0; k < ell; ++k) {
      row.push_back(mod(i + k));
      listed[static_cast<std::size_t>(mod(i + k))] = 1;
    }
    std::vector<Candidate> completed = row;
    for (int k = 0; k < m; ++k) {
      const Candidate c = mod(true_winner + k);
      if (!listed[static_cast<std::size_t>(c)]) completed.push_back(c);
    }
    for (int r = 0; r < copies; ++r) {
      prefixes.insert(prefixes.end(), row.begin(), row.end());
      full.insert(full.end(), completed.begin(), completed.end());
    }
  }
  return {TruncatedProfile(m, ell, std::move(prefixes)), Election(m, std::move(full)), chosen,
          true_winner};
}

}  // namespace elicit::theory
