#include "elicit/profile_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace elicit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

long parse_int(std::string_view token, int line_no) {
  token = trim(token);
  long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(token) + "'");
  return value;
}

std::vector<long> parse_list(std::string_view line, char sep, int line_no) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto stop = line.find(sep, start);
    const auto token = line.substr(start, stop == std::string_view::npos ? line.npos : stop - start);
    out.push_back(parse_int(token, line_no));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

}  // namespace

ProfileData to_profile_data(const Election& election) {
  const auto r = election.rankings();
  return ProfileData{election.num_candidates(), election.num_candidates(), {r.begin(), r.end()}};
}

ProfileData to_profile_data(const TruncatedProfile& profile) {
  const auto r = profile.prefixes();
  return ProfileData{profile.num_candidates(), profile.depth(), {r.begin(), r.end()}};
}

Election election_from(const ProfileData& data) {
  if (data.ell != data.m)
    throw InputError("profile has l=" + std::to_string(data.ell) + " < m=" +
                     std::to_string(data.m) + "; not a full election");
  return Election(data.m, data.rows);
}

TruncatedProfile truncated_from(const ProfileData& data) {
  return TruncatedProfile(data.m, data.ell, data.rows);
}

void write_profile(std::ostream& out, const ProfileData& data) {
  const int n = data.num_voters();
  out << data.m << ' ' << n << ' ' << data.ell << '\n';
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < data.ell; ++k) {
      if (k) out << ',';
      out << data.rows[static_cast<std::size_t>(v) * static_cast<std::size_t>(data.ell) +
                       static_cast<std::size_t>(k)];
    }
    out << '\n';
  }
}

ProfileData read_profile(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw InputError("empty profile");
  std::istringstream header(line);
  long m = 0, n = 0, ell = 0;
  if (!(header >> m >> n >> ell)) throw InputError("line 1: expected header 'm n l'");
  if (m < 1 || n < 1 || ell < 1 || ell > m)
    throw InputError("line 1: invalid header values m=" + std::to_string(m) + " n=" +
                     std::to_string(n) + " l=" + std::to_string(ell));

  ProfileData data;
  data.m = static_cast<int>(m);
  data.ell = static_cast<int>(ell);
  data.rows.reserve(static_cast<std::size_t>(n * ell));
  for (long v = 0; v < n; ++v) {
    if (!next_line())
      throw InputError("expected " + std::to_string(n) + " rows, found " + std::to_string(v));
    const auto values = parse_list(trim(line), ',', line_no);
    if (static_cast<long>(values.size()) != ell)
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(ell) +
                       " entries, got " + std::to_string(values.size()));
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(m), 0);
    for (long c : values) {
      if (c < 0 || c >= m)
        throw InputError("line " + std::to_string(line_no) + ": candidate " + std::to_string(c) +
                         " out of range");
      if (seen[static_cast<std::size_t>(c)]++)
        throw InputError("line " + std::to_string(line_no) + ": candidate " + std::to_string(c) +
                         " repeated");
      data.rows.push_back(static_cast<Candidate>(c));
    }
  }
  if (next_line())
    throw InputError("line " + std::to_string(line_no) + ": trailing data after " +
                     std::to_string(n) + " rows");
  return data;
}

ProfileData read_preflib(std::istream& in) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty()) lines.emplace_back(line_no, std::string(trim(line)));
    }
  }
  if (lines.empty()) throw InputError("empty PrefLib file");

  long m = 0;
  std::vector<std::pair<long, std::vector<long>>> orders;
  auto add_order = [&](long count, std::vector<long> order, int line_no) {
    if (count < 0) throw InputError("line " + std::to_string(line_no) + ": negative count");
    if (order.empty()) throw InputError("line " + std::to_string(line_no) + ": empty order");
    orders.emplace_back(count, std::move(order));
  };
  auto reject_ties = [](const std::string& s, int line_no) {
    if (s.find('{') != std::string::npos)
      throw InputError("line " + std::to_string(line_no) + ": weak orders are not supported");
  };

  const bool modern = lines.front().second.starts_with('#');
  if (modern) {
    for (const auto& [no, text] : lines) {
      if (text.starts_with('#')) {
        constexpr std::string_view key = "# NUMBER ALTERNATIVES:";
        if (text.starts_with(key)) m = parse_int(std::string_view(text).substr(key.size()), no);
        continue;
      }
      reject_ties(text, no);
      const auto colon = text.find(':');
      if (colon == std::string::npos)
        throw InputError("line " + std::to_string(no) + ": expected 'count: order'");
      const std::string_view tv(text);
      add_order(parse_int(tv.substr(0, colon), no), parse_list(trim(tv.substr(colon + 1)), ',', no),
                no);
    }
    if (m < 1) throw InputError("missing '# NUMBER ALTERNATIVES' metadata");
  } else {
    std::size_t i = 0;
    m = parse_int(lines[i].second, lines[i].first);
    if (m < 1) throw InputError("invalid candidate count");
    i += 1 + static_cast<std::size_t>(m);  // candidate name lines
    if (i >= lines.size()) throw InputError("truncated PrefLib header");
    ++i;  // voters,sum,unique
    for (; i < lines.size(); ++i) {
      const auto& [no, text] = lines[i];
      reject_ties(text, no);
      auto values = parse_list(text, ',', no);
      const long count = values.front();
      values.erase(values.begin());
      add_order(count, std::move(values), no);
    }
  }
  if (orders.empty()) throw InputError("PrefLib file has no orders");

  const std::size_t len = orders.front().second.size();
  ProfileData data;
  data.m = static_cast<int>(m);
  data.ell = static_cast<int>(len);
  if (data.ell > data.m) throw InputError("order longer than candidate count");
  for (const auto& [count, order] : orders) {
    if (order.size() != len) throw InputError("PrefLib orders have different lengths");
    for (long c : order)
      if (c < 1 || c > m) throw InputError("PrefLib candidate " + std::to_string(c) + " out of range");
    for (long k = 0; k < count; ++k)
      for (long c : order) data.rows.push_back(static_cast<Candidate>(c - 1));
  }
  if (data.rows.empty()) throw InputError("PrefLib file has zero voters");
  return data;
}

ProfileData load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile '" + path.string() + "'");
  try {
    return read_profile(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ProfileData load_preflib(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open PrefLib file '" + path.string() + "'");
  try {
    return read_preflib(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_profile(const std::filesystem::path& path, const ProfileData& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write profile '" + path.string() + "'");
  write_profile(out, data);
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace elicit
