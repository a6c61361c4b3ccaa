#include "elicit/core.hpp"

#include <algorithm>
#include <limits>

namespace elicit {

namespace {

std::string index_message(const char* what, long value, long bound) {
  return std::string(what) + " " + std::to_string(value) + " out of range [0, " +
         std::to_string(bound) + ")";
}

}  // namespace

Election::Election(int m, std::vector<Candidate> rankings)
    : m_(m), n_(0), rankings_(std::move(rankings)) {
  if (m < 1) throw InputError("election needs at least one candidate");
  if (rankings_.empty() || rankings_.size() % static_cast<std::size_t>(m) != 0)
    throw InputError("ranking data is not a non-empty multiple of m");
  n_ = static_cast<int>(rankings_.size() / static_cast<std::size_t>(m));

  positions_.assign(rankings_.size(), -1);
  for (int v = 0; v < n_; ++v) {
    const std::size_t row = static_cast<std::size_t>(v) * static_cast<std::size_t>(m_);
    for (int k = 0; k < m_; ++k) {
      const Candidate c = rankings_[row + static_cast<std::size_t>(k)];
      if (c < 0 || c >= m_)
        throw InputError("voter " + std::to_string(v) + ": " + index_message("candidate", c, m_));
      auto& slot = positions_[row + static_cast<std::size_t>(c)];
      if (slot >= 0)
        throw InputError("voter " + std::to_string(v) + " ranks candidate " + std::to_string(c) +
                         " twice");
      slot = k;
    }
  }
}

Election Election::from_rows(int m, const std::vector<std::vector<Candidate>>& rows) {
  std::vector<Candidate> flat;
  flat.reserve(rows.size() * static_cast<std::size_t>(std::max(m, 0)));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m) throw InputError("ranking row length differs from m");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Election(m, std::move(flat));
}

std::span<const Candidate> Election::ranking(int voter) const {
  if (voter < 0 || voter >= n_) throw InputError(index_message("voter", voter, n_));
  return std::span<const Candidate>(rankings_).subspan(
      static_cast<std::size_t>(voter) * static_cast<std::size_t>(m_), static_cast<std::size_t>(m_));
}

int Election::position_of(int voter, Candidate c) const {
  if (voter < 0 || voter >= n_) throw InputError(index_message("voter", voter, n_));
  if (c < 0 || c >= m_) throw InputError(index_message("candidate", c, m_));
  return positions_[static_cast<std::size_t>(voter) * static_cast<std::size_t>(m_) +
                    static_cast<std::size_t>(c)] +
         1;
}

TruncatedProfile::TruncatedProfile(int m, int ell, std::vector<Candidate> prefixes)
    : m_(m), n_(0), ell_(ell), prefixes_(std::move(prefixes)) {
  if (m < 2) throw InputError("truncated profile needs at least two candidates");
  if (ell < 1 || ell >= m)
    throw InputError("truncation depth " + std::to_string(ell) + " outside [1, m)");
  if (prefixes_.empty() || prefixes_.size() % static_cast<std::size_t>(ell) != 0)
    throw InputError("prefix data is not a non-empty multiple of ell");
  n_ = static_cast<int>(prefixes_.size() / static_cast<std::size_t>(ell));

  keys_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_), ell_);
  for (int v = 0; v < n_; ++v) {
    const std::size_t krow = static_cast<std::size_t>(v) * static_cast<std::size_t>(m_);
    for (int k = 0; k < ell_; ++k) {
      const Candidate c = prefixes_[static_cast<std::size_t>(v) * static_cast<std::size_t>(ell_) +
                                    static_cast<std::size_t>(k)];
      if (c < 0 || c >= m_)
        throw InputError("voter " + std::to_string(v) + ": " + index_message("candidate", c, m_));
      auto& slot = keys_[krow + static_cast<std::size_t>(c)];
      if (slot != ell_)
        throw InputError("voter " + std::to_string(v) + " lists candidate " + std::to_string(c) +
                         " twice");
      slot = k;
    }
  }
}

std::span<const Candidate> TruncatedProfile::prefix(int voter) const {
  if (voter < 0 || voter >= n_) throw InputError(index_message("voter", voter, n_));
  return std::span<const Candidate>(prefixes_).subspan(
      static_cast<std::size_t>(voter) * static_cast<std::size_t>(ell_),
      static_cast<std::size_t>(ell_));
}

bool TruncatedProfile::ranks(int voter, Candidate c) const {
  if (voter < 0 || voter >= n_) throw InputError(index_message("voter", voter, n_));
  if (c < 0 || c >= m_) throw InputError(index_message("candidate", c, m_));
  return keys_[static_cast<std::size_t>(voter) * static_cast<std::size_t>(m_) +
               static_cast<std::size_t>(c)] < ell_;
}

ScoreTable ScoreTable::dense(std::vector<double> scores) {
  ScoreTable t;
  t.excluded.assign(scores.size(), 0);
  t.scores = std::move(scores);
  return t;
}

double ScoreTable::max_score() const {
  double best = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (excluded[c]) continue;
    best = any ? std::max(best, scores[c]) : scores[c];
    any = true;
  }
  if (!any) throw InputError("every candidate is excluded");
  return best;
}

int position_of(const Election& election, int voter, Candidate candidate) {
  return election.position_of(voter, candidate);
}

TruncatedProfile truncate(const Election& election, int ell) {
  const int m = election.num_candidates();
  if (ell < 1 || ell >= m)
    throw InputError("truncation depth " + std::to_string(ell) + " outside [1, " +
                     std::to_string(m) + ")");
  std::vector<Candidate> prefixes;
  prefixes.reserve(static_cast<std::size_t>(election.num_voters()) * static_cast<std::size_t>(ell));
  for (int v = 0; v < election.num_voters(); ++v) {
    const auto r = election.ranking(v);
    prefixes.insert(prefixes.end(), r.begin(), r.begin() + ell);
  }
  return TruncatedProfile(m, ell, std::move(prefixes));
}

double approximation_ratio(const Election& election, Candidate chosen,
                           const ScoreTable& exact_scores) {
  const int m = election.num_candidates();
  if (exact_scores.size() != static_cast<std::size_t>(m))
    throw InputError("score table size differs from candidate count");
  if (chosen < 0 || chosen >= m) throw InputError(index_message("candidate", chosen, m));
  const double best = exact_scores.max_score();
  if (!(best > 0.0))
    throw DegenerateInstance("maximum exact score is " + std::to_string(best) +
                             "; approximation ratio undefined");
  return exact_scores.scores[static_cast<std::size_t>(chosen)] / best;
}

}  // namespace elicit
