#pragma once

// Profile text format:
//
//   m n l
//   c,c,...,c        (n rows of l comma-separated 0-based candidate indices)
//
// l == m for full profiles, l < m for truncated ballots or subset responses.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "elicit/core.hpp"

namespace elicit {

struct ProfileData {
  int m = 0;
  int ell = 0;
  std::vector<Candidate> rows;  // row-major n x ell

  int num_voters() const noexcept {
    return ell > 0 ? static_cast<int>(rows.size() / static_cast<std::size_t>(ell)) : 0;
  }
  bool operator==(const ProfileData&) const = default;
};

ProfileData to_profile_data(const Election& election);
ProfileData to_profile_data(const TruncatedProfile& profile);

/// Requires ell == m.
Election election_from(const ProfileData& data);
/// Requires ell < m.
TruncatedProfile truncated_from(const ProfileData& data);

void write_profile(std::ostream& out, const ProfileData& data);
ProfileData read_profile(std::istream& in);

/// PrefLib strict-order files (soc / soi). Both the current layout
/// ("# KEY: value" metadata, "count: a,b,c" data lines) and the legacy
/// layout (candidate count, names, totals line, "count,a,b,c" rows) are
/// accepted. PrefLib candidates are 1-based; counts are expanded into voter
/// rows. All orders must have the same length.
ProfileData read_preflib(std::istream& in);

ProfileData load_profile(const std::filesystem::path& path);
ProfileData load_preflib(const std::filesystem::path& path);
void save_profile(const std::filesystem::path& path, const ProfileData& data);

}  // namespace elicit
