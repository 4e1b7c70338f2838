#include "polytrunc/eberhard.hpp"

#include <charconv>
#include <sstream>

namespace polytrunc {

SparsePSequence::SparsePSequence(const std::map<int, std::uint64_t>& counts) {
  for (auto [k, c] : counts) {
    if (k < 3) throw Error(ErrorKind::InvalidSequence, "face size " + std::to_string(k) + " < 3");
    if (k == 6) throw Error(ErrorKind::InvalidSequence, "p6 is not part of a target sequence");
    if (c != 0) counts_[k] = c;
  }
}

SparsePSequence SparsePSequence::parse(std::string_view text) {
  std::map<int, std::uint64_t> counts;
  auto parse_int = [&](std::string_view tok, auto& out) {
    auto first = tok.data();
    auto last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || tok.empty()) {
      throw Error(ErrorKind::InvalidSequence, "bad number '" + std::string(tok) + "'");
    }
  };
  if (!text.empty() && text.back() == ',') {
    throw Error(ErrorKind::InvalidSequence, "trailing ','");
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidSequence, "expected k=c, got '" + std::string(item) + "'");
    }
    int k = 0;
    std::uint64_t c = 0;
    parse_int(item.substr(0, eq), k);
    parse_int(item.substr(eq + 1), c);
    if (counts.contains(k)) {
      throw Error(ErrorKind::InvalidSequence, "p" + std::to_string(k) + " given twice");
    }
    counts[k] = c;
  }
  return SparsePSequence(counts);
}

std::uint64_t SparsePSequence::operator[](int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

std::string SparsePSequence::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (auto [k, c] : counts_) {
    if (!first) out << ',';
    out << k << '=' << c;
    first = false;
  }
  return out.str();
}

bool check_star_identity(const SparsePSequence& s) {
  return check_star_identity(PVector(s.counts()));
}

bool check_flag_sequence(const SparsePSequence& s) {
  return s[3] == 0 && check_star_identity(s);
}

TruncationResult flagify(const Polytope3& p) {
  if (auto p3 = p_vector(p)[3]; p3 > 0) {
    throw Error(ErrorKind::HasTriangles, std::to_string(p3) + " triangular faces");
  }
  return truncate(EdgeSubgraph::all_edges(p));
}

PVector transformed_pvector(const Polytope3& p) {
  PVector out = p_vector(p);
  out.add(6, p.edge_count());
  return out;
}

bool matches_sequence(const PVector& p, const SparsePSequence& s) {
  for (auto [k, c] : p.counts()) {
    if (k != 6 && s[k] != c) return false;
  }
  for (auto [k, c] : s.counts()) {
    if (p[k] != c) return false;
  }
  return true;
}

std::vector<ScanMatch> scan_for_sequence(std::span<const Polytope3> stream,
                                         const SparsePSequence& target, bool emit_flagified) {
  std::vector<ScanMatch> matches;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    PVector pv = p_vector(stream[i]);
    if (!matches_sequence(pv, target)) continue;
    ScanMatch match{i, pv, std::nullopt};
    if (emit_flagified && pv[3] == 0) match.flagified = flagify(stream[i]).polytope;
    matches.push_back(std::move(match));
  }
  return matches;
}

}  // namespace polytrunc
