#include "elicit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace elicit::gen {

namespace {

void check_size(int m, int n) {
  if (m < 1 || n < 1) throw InputError("generator needs m >= 1 and n >= 1");
}

std::vector<Candidate> identity(int m) {
  std::vector<Candidate> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<Candidate> random_permutation(int m, Rng& rng) {
  auto v = identity(m);
  rng.shuffle(std::span<Candidate>(v));
  return v;
}

}  // namespace

std::string_view distribution_name(Distribution d) noexcept {
  switch (d) {
    case Distribution::IC: return "ic";
    case Distribution::Euclid1D: return "euclid1d";
    case Distribution::MallowsMixture: return "mallows3";
    case Distribution::SPIC: return "spic";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  for (auto d : {Distribution::IC, Distribution::Euclid1D, Distribution::MallowsMixture,
                 Distribution::SPIC})
    if (distribution_name(d) == name) return d;
  throw InputError("unknown distribution '" + std::string(name) +
                   "' (expected ic, euclid1d, mallows3 or spic)");
}

void DistributionSpec::validate() const {
  if (fixed_phi) {
    if (kind != Distribution::MallowsMixture)
      throw InputError("fixed phi applies only to the Mallows mixture");
    if (!(*fixed_phi >= 0.0 && *fixed_phi <= 1.0)) throw InputError("phi must lie in [0, 1]");
  }
}

Election gen_ic(int m, int n, std::uint64_t seed) {
  check_size(m, n);
  Rng rng(seed);
  std::vector<Candidate> rows;
  rows.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  auto perm = identity(m);
  for (int v = 0; v < n; ++v) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(std::span<Candidate>(perm));
    rows.insert(rows.end(), perm.begin(), perm.end());
  }
  return Election(m, std::move(rows));
}

std::vector<Candidate> rank_by_distance(double voter_point, std::span<const double> candidate_points) {
  auto order = identity(static_cast<int>(candidate_points.size()));
  std::stable_sort(order.begin(), order.end(), [&](Candidate a, Candidate b) {
    return std::abs(voter_point - candidate_points[static_cast<std::size_t>(a)]) <
           std::abs(voter_point - candidate_points[static_cast<std::size_t>(b)]);
  });
  return order;
}

EuclideanSample sample_euclid1d(int m, int n, std::uint64_t seed) {
  check_size(m, n);
  Rng rng(seed);
  std::vector<double> cands(static_cast<std::size_t>(m));
  for (auto& x : cands) x = rng.uniform01();
  std::vector<double> voters(static_cast<std::size_t>(n));
  for (auto& x : voters) x = rng.uniform01();
  std::vector<Candidate> rows;
  rows.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (double x : voters) {
    const auto r = rank_by_distance(x, cands);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return {Election(m, std::move(rows)), std::move(cands), std::move(voters)};
}

Election gen_euclid1d(int m, int n, std::uint64_t seed) {
  return std::move(sample_euclid1d(m, n, seed).election);
}

MallowsMixture draw_mallows_mixture(int m, Rng& rng, std::optional<double> fixed_phi) {
  MallowsMixture mix;
  for (int j = 0; j < 3; ++j) {
    MallowsComponent comp;
    comp.reference = random_permutation(m, rng);
    comp.phi = fixed_phi ? *fixed_phi : rng.uniform01();
    mix.components.push_back(std::move(comp));
  }
  double u1 = rng.uniform01();
  double u2 = rng.uniform01();
  if (u1 > u2) std::swap(u1, u2);
  mix.weights = {u1, u2 - u1, 1.0 - u2};
  return mix;
}

std::vector<Candidate> sample_mallows(std::span<const Candidate> reference, double phi, Rng& rng) {
  if (!(phi >= 0.0 && phi <= 1.0)) throw InputError("phi must lie in [0, 1]");
  std::vector<Candidate> out;
  out.reserve(reference.size());
  std::vector<double> weight;  // weight[k] = phi^k, k slots above the bottom
  for (std::size_t i = 0; i < reference.size(); ++i) {
    weight.push_back(i == 0 ? 1.0 : weight.back() * phi);
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
    double u = rng.uniform01() * total;
    std::size_t k = 0;
    for (; k + 1 < weight.size(); ++k) {
      if (u < weight[k]) break;
      u -= weight[k];
    }
    // zero-weight slots are unreachable even under rounding
    while (k > 0 && weight[k] == 0.0) --k;
    out.insert(out.end() - static_cast<std::ptrdiff_t>(k), reference[i]);
  }
  return out;
}

Election gen_mallows_mixture(int m, int n, std::uint64_t seed, std::optional<double> fixed_phi) {
  check_size(m, n);
  if (fixed_phi && !(*fixed_phi >= 0.0 && *fixed_phi <= 1.0))
    throw InputError("phi must lie in [0, 1]");
  Rng rng(seed);
  const auto mix = draw_mallows_mixture(m, rng, fixed_phi);
  std::vector<Candidate> rows;
  rows.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const double u = rng.uniform01();
    const std::size_t j = u < mix.weights[0] ? 0 : (u < mix.weights[0] + mix.weights[1] ? 1 : 2);
    const auto r = sample_mallows(mix.components[j].reference, mix.components[j].phi, rng);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return Election(m, std::move(rows));
}

std::vector<Candidate> sample_single_peaked(std::span<const Candidate> axis, Rng& rng) {
  const std::size_t m = axis.size();
  std::vector<Candidate> out(m);
  std::size_t lo = 0;
  std::size_t hi = m;  // remaining axis[lo, hi)
  for (std::size_t slot = m; slot > 1; --slot) {
    out[slot - 1] = rng.coin() ? axis[lo++] : axis[--hi];
  }
  if (m > 0) out[0] = axis[lo];
  return out;
}

SinglePeakedSample sample_spic(int m, int n, std::uint64_t seed) {
  check_size(m, n);
  Rng rng(seed);
  auto axis = random_permutation(m, rng);
  std::vector<Candidate> rows;
  rows.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto r = sample_single_peaked(axis, rng);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return {Election(m, std::move(rows)), std::move(axis)};
}

Election gen_spic(int m, int n, std::uint64_t seed) { return std::move(sample_spic(m, n, seed).election); }

Election generate(const DistributionSpec& spec, int m, int n, std::uint64_t seed) {
  spec.validate();
  switch (spec.kind) {
    case Distribution::IC: return gen_ic(m, n, seed);
    case Distribution::Euclid1D: return gen_euclid1d(m, n, seed);
    case Distribution::MallowsMixture: return gen_mallows_mixture(m, n, seed, spec.fixed_phi);
    case Distribution::SPIC: return gen_spic(m, n, seed);
  }
  throw InputError("unknown distribution");
}

bool is_single_peaked(std::span<const Candidate> ranking, std::span<const Candidate> axis) {
  const std::size_t m = axis.size();
  if (ranking.size() != m) return false;
  std::vector<std::ptrdiff_t> where(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = axis[i];
    if (c < 0 || static_cast<std::size_t>(c) >= m) return false;
    where[static_cast<std::size_t>(c)] = static_cast<std::ptrdiff_t>(i);
  }
  if (m == 0) return true;
  std::ptrdiff_t lo = where[static_cast<std::size_t>(ranking[0])];
  std::ptrdiff_t hi = lo;
  for (std::size_t k = 1; k < m; ++k) {
    const auto p = where[static_cast<std::size_t>(ranking[k])];
    if (p == lo - 1)
      lo = p;
    else if (p == hi + 1)
      hi = p;
    else
      return false;
  }
  return true;
}

int kendall_tau_distance(std::span<const Candidate> a, std::span<const Candidate> b) {
  if (a.size() != b.size()) throw InputError("rankings differ in length");
  std::vector<std::size_t> pos_b(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) pos_b[static_cast<std::size_t>(b[i])] = i;
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      d += pos_b[static_cast<std::size_t>(a[i])] > pos_b[static_cast<std::size_t>(a[j])] ? 1 : 0;
  return d;
}

}  // namespace elicit::gen
