#ifndef POLYTRUNC_EBERHARD_HPP
#define POLYTRUNC_EBERHARD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polytrunc/polytope.hpp"
#include "polytrunc/truncation.hpp"

namespace polytrunc {

/// Target counts p_k for k >= 3, k != 6. p6 is left free.
class SparsePSequence {
 public:
  SparsePSequence() = default;
  explicit SparsePSequence(const std::map<int, std::uint64_t>& counts);

  /// Parses "k=c,k=c,...". Throws InvalidSequence.
  static SparsePSequence parse(std::string_view text);

  std::uint64_t operator[](int k) const;
  const std::map<int, std::uint64_t>& counts() const { return counts_; }
  std::string to_string() const;

 private:
  std::map<int, std::uint64_t> counts_;
};

/// The face-count identity for a sequence; p6 does not enter it.
bool check_star_identity(const SparsePSequence& s);

/// p3 == 0 and the identity holds.
bool check_flag_sequence(const SparsePSequence& s);

/// Truncation along the whole edge graph. Throws HasTriangles if p3 > 0.
TruncationResult flagify(const Polytope3& p);

/// p_k unchanged for k != 6, p6 increased by f1.
PVector transformed_pvector(const Polytope3& p);

/// True iff p_k(p) == s[k] for every k != 6.
bool matches_sequence(const PVector& p, const SparsePSequence& s);

struct ScanMatch {
  std::size_t index;  // position in the scanned stream
  PVector pvector;
  std::optional<Polytope3> flagified;  // set when requested and p3 == 0
};

std::vector<ScanMatch> scan_for_sequence(std::span<const Polytope3> stream,
                                         const SparsePSequence& target, bool emit_flagified);

}  // namespace polytrunc

#endif  // POLYTRUNC_EBERHARD_HPP
