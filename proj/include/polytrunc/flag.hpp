#ifndef POLYTRUNC_FLAG_HPP
#define POLYTRUNC_FLAG_HPP

#include <array>
#include <vector>

#include "polytrunc/polytope.hpp"

namespace polytrunc {

/// Three pairwise adjacent faces with no common vertex. Stored sorted.
struct Belt3 {
  std::array<FaceId, 3> faces;

  friend auto operator<=>(const Belt3&, const Belt3&) = default;
};

/// Inclusion-minimal set of faces with empty common intersection. Stored
/// sorted.
struct MissingFace {
  std::vector<FaceId> faces;

  friend auto operator<=>(const MissingFace&, const MissingFace&) = default;
};

/// All 3-belts, sorted lexicographically by face id (faces are numbered by
/// their smallest dart).
std::vector<Belt3> enumerate_3belts(const Polytope3& p);

/// Belt-based decision: the tetrahedron is not flag, any other simple
/// 3-polytope is flag iff it has no 3-belt.
bool is_flag(const Polytope3& p);

/// Decision straight from the definition: every set of pairwise intersecting
/// faces must have a common point. Faces are treated as vertex sets and no
/// adjacency or belt machinery is used.
///
/// Only sets of size 3 and 4 need checking. In a simple 3-polytope every
/// vertex lies on exactly three faces, so any four faces have empty common
/// intersection; a larger pairwise intersecting set therefore contains a
/// pairwise intersecting 4-subset that already fails.
bool is_flag_oracle(const Polytope3& p);

/// All missing faces (cardinality 2, 3 or 4), sorted by size then
/// lexicographically.
std::vector<MissingFace> missing_faces(const Polytope3& p);

}  // namespace polytrunc

#endif  // POLYTRUNC_FLAG_HPP
