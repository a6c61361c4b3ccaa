#pragma once

// Elections, truncated ballots and the approximation-ratio contract.
//
// Candidates and voters are dense 0-based indices. Positions handed out by
// the public API are 1-based (position 1 = most preferred); everything stored
// in memory is 0-based.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace elicit {

using Candidate = std::int32_t;

/// Thrown when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an instance has no meaningful approximation ratio
/// (max exact score <= 0).
class DegenerateInstance : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Full strict preference profile: n voters, each ranking all m candidates.
class Election {
 public:
  /// `rankings` is row-major n x m, most-preferred first.
  Election(int m, std::vector<Candidate> rankings);

  static Election from_rows(int m, const std::vector<std::vector<Candidate>>& rows);

  int num_candidates() const noexcept { return m_; }
  int num_voters() const noexcept { return n_; }

  std::span<const Candidate> ranking(int voter) const;
  std::span<const Candidate> rankings() const noexcept { return rankings_; }

  /// Row-major n x m matrix of 0-based positions indexed by candidate.
  /// A smaller key means more preferred.
  std::span<const std::int32_t> position_keys() const noexcept { return positions_; }

  /// 1-based position of `c` in the ranking of `voter`.
  int position_of(int voter, Candidate c) const;

  bool operator==(const Election&) const = default;

 private:
  int m_;
  int n_;
  std::vector<Candidate> rankings_;
  std::vector<std::int32_t> positions_;
};

/// Per-voter top-ell prefixes, 1 <= ell < m.
class TruncatedProfile {
 public:
  /// `prefixes` is row-major n x ell.
  TruncatedProfile(int m, int ell, std::vector<Candidate> prefixes);

  int num_candidates() const noexcept { return m_; }
  int num_voters() const noexcept { return n_; }
  int depth() const noexcept { return ell_; }

  std::span<const Candidate> prefix(int voter) const;
  std::span<const Candidate> prefixes() const noexcept { return prefixes_; }

  /// Row-major n x m keys: the 0-based prefix position of a ranked candidate,
  /// or `depth()` for every unranked candidate (unranked candidates tie).
  std::span<const std::int32_t> keys() const noexcept { return keys_; }

  bool ranks(int voter, Candidate c) const;

  bool operator==(const TruncatedProfile&) const = default;

 private:
  int m_;
  int n_;
  int ell_;
  std::vector<Candidate> prefixes_;
  std::vector<std::int32_t> keys_;
};

/// A voter's ranking of the ell-subset assigned to her.
struct SubsetResponse {
  int voter = 0;
  std::vector<Candidate> subset;         // ascending candidate index
  std::vector<Candidate> local_ranking;  // most-preferred first

  bool operator==(const SubsetResponse&) const = default;
};

/// Per-candidate scores. Excluded candidates have no defined score and never
/// win.
struct ScoreTable {
  std::vector<double> scores;
  std::vector<std::uint8_t> excluded;

  static ScoreTable dense(std::vector<double> scores);

  std::size_t size() const noexcept { return scores.size(); }
  bool is_excluded(Candidate c) const { return excluded[static_cast<std::size_t>(c)] != 0; }
  /// Maximum over non-excluded candidates; throws if all are excluded.
  double max_score() const;
};

int position_of(const Election& election, int voter, Candidate candidate);

TruncatedProfile truncate(const Election& election, int ell);

/// score(chosen) / max score, both taken from the exact rule on the full
/// election.
double approximation_ratio(const Election& election, Candidate chosen,
                           const ScoreTable& exact_scores);

}  // namespace elicit
