#ifndef POLYTRUNC_IDS_HPP
#define POLYTRUNC_IDS_HPP

#include <compare>
#include <cstdint>
#include <functional>

namespace polytrunc {

/// Index wrapper that keeps vertex, dart, face and edge indices from being
/// mixed up. Values are dense 0-based indices into the owning Polytope3.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const Id&) const = default;
};

using VertexId = Id<struct VertexTag>;
using DartId = Id<struct DartTag>;
using FaceId = Id<struct FaceTag>;
// An edge is named by the smaller of its two darts.
using EdgeId = Id<struct EdgeTag>;

}  // namespace polytrunc

template <class Tag>
struct std::hash<polytrunc::Id<Tag>> {
  std::size_t operator()(const polytrunc::Id<Tag>& id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // POLYTRUNC_IDS_HPP
