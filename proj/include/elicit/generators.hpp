#pragma once

// Seeded preference samplers: impartial culture, 1D Euclidean, a mixture of
// three Mallows models, and single-peaked impartial culture.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "elicit/core.hpp"
#include "elicit/rng.hpp"

namespace elicit::gen {

enum class Distribution { IC, Euclid1D, MallowsMixture, SPIC };

/// "ic", "euclid1d", "mallows3", "spic".
std::string_view distribution_name(Distribution d) noexcept;
Distribution parse_distribution(std::string_view name);

struct DistributionSpec {
  Distribution kind = Distribution::IC;
  /// Mallows mixture only: use this dispersion in every component instead of
  /// drawing each uniformly from [0, 1].
  std::optional<double> fixed_phi;

  void validate() const;
};

Election gen_ic(int m, int n, std::uint64_t seed);

struct EuclideanSample {
  Election election;
  std::vector<double> candidate_points;
  std::vector<double> voter_points;
};
/// Candidate points are drawn first, then voter points.
EuclideanSample sample_euclid1d(int m, int n, std::uint64_t seed);
Election gen_euclid1d(int m, int n, std::uint64_t seed);

/// Ranking voter at `voter_point` gives candidates at `candidate_points`:
/// ascending distance, exact ties to the lower index.
std::vector<Candidate> rank_by_distance(double voter_point, std::span<const double> candidate_points);

struct MallowsComponent {
  std::vector<Candidate> reference;
  double phi = 0.0;
};

struct MallowsMixture {
  std::vector<MallowsComponent> components;  // always three
  std::vector<double> weights;               // uniform on the simplex
};

MallowsMixture draw_mallows_mixture(int m, Rng& rng, std::optional<double> fixed_phi = std::nullopt);

/// Repeated insertion: the i-th reference candidate is inserted j slots above
/// the bottom of the partial ranking with probability proportional to phi^j.
/// Exact Mallows sample, P(tau) proportional to phi^{d_K(reference, tau)}.
std::vector<Candidate> sample_mallows(std::span<const Candidate> reference, double phi, Rng& rng);

Election gen_mallows_mixture(int m, int n, std::uint64_t seed,
                             std::optional<double> fixed_phi = std::nullopt);

struct SinglePeakedSample {
  Election election;
  std::vector<Candidate> axis;
};
/// Built from the bottom: repeatedly take the left or right end of the
/// remaining axis with probability 1/2; uniform over the 2^{m-1}
/// single-peaked rankings.
std::vector<Candidate> sample_single_peaked(std::span<const Candidate> axis, Rng& rng);
SinglePeakedSample sample_spic(int m, int n, std::uint64_t seed);
Election gen_spic(int m, int n, std::uint64_t seed);

Election generate(const DistributionSpec& spec, int m, int n, std::uint64_t seed);

bool is_single_peaked(std::span<const Candidate> ranking, std::span<const Candidate> axis);

/// Number of discordant pairs (adjacent swaps turning a into b).
int kendall_tau_distance(std::span<const Candidate> a, std::span<const Candidate> b);

}  // namespace elicit::gen
