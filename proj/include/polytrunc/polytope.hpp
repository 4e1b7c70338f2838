#ifndef POLYTRUNC_POLYTOPE_HPP
#define POLYTRUNC_POLYTOPE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polytrunc/error.hpp"
#include "polytrunc/ids.hpp"

namespace polytrunc {

/// Upper bound on f0 accepted by the constructor. The binary planar_code
/// format is narrower (255); see io.hpp.
inline constexpr std::size_t kMaxVertices = 4096;

/// Per-vertex neighbor lists in counterclockwise order. Lists of any length
/// are accepted as input so that non-cubic data can be diagnosed.
using RotationSpec = std::vector<std::vector<std::uint32_t>>;

/// Counts p_k of k-gonal faces. Zero counts are never stored.
class PVector {
 public:
  PVector() = default;
  explicit PVector(const std::map<int, std::uint64_t>& counts);
  PVector(std::initializer_list<std::pair<const int, std::uint64_t>> counts)
      : PVector(std::map<int, std::uint64_t>(counts)) {}

  std::uint64_t operator[](int k) const;
  void add(int k, std::uint64_t count = 1);
  void set(int k, std::uint64_t count);

  const std::map<int, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const;

  /// Rendered as "{3:2, 4:3}".
  std::string to_string() const;

  friend bool operator==(const PVector&, const PVector&) = default;

 private:
  std::map<int, std::uint64_t> counts_;
};

/// 3p3 + 2p4 + p5 == 12 + sum_{k>=7} (k-6) p_k. Holds for every simple
/// 3-polytope; p6 does not enter.
bool check_star_identity(const PVector& p);

/// Immutable combinatorial embedding of a simple 3-polytope.
///
/// Darts are laid out vertex-major: the darts leaving vertex v are 3v, 3v+1,
/// 3v+2 in counterclockwise order, so origin(d) = d / 3 and rot(d) advances
/// the slot. Faces are the orbits of face_next(d) = rot(twin(d)); face ids are
/// assigned in order of each face's smallest dart.
class Polytope3 {
 public:
  /// Builds and fully validates. Throws Error on any invariant violation.
  static Polytope3 from_rotation(const RotationSpec& spec);

  enum class Orientation {
    as_given,   // cycles must already traverse every edge once in each direction
    normalize,  // cycles are flipped as needed to make the orientation coherent
  };

  /// Builds from face boundary cycles (vertex sequences). The rotation at b is
  /// read off each corner (a, b, c) of a cycle as rot(b->a) = b->c, which makes
  /// the given cycles exactly the traced faces.
  static Polytope3 from_faces(std::size_t vertex_count,
                              const std::vector<std::vector<std::uint32_t>>& faces,
                              Orientation orientation = Orientation::normalize);

  std::size_t vertex_count() const { return twin_.size() / 3; }
  std::size_t dart_count() const { return twin_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return face_offsets_.size() - 1; }

  static VertexId origin(DartId d) { return VertexId{d.value / 3}; }
  static DartId dart_at(VertexId v, unsigned slot) { return DartId{3 * v.value + slot}; }
  static unsigned slot_of(DartId d) { return d.value % 3; }
  static DartId rot(DartId d) { return DartId{d.value - d.value % 3 + (d.value + 1) % 3}; }
  static DartId rot_inv(DartId d) { return DartId{d.value - d.value % 3 + (d.value + 2) % 3}; }

  DartId twin(DartId d) const { return twin_[d.value]; }
  VertexId target(DartId d) const { return origin(twin(d)); }
  DartId face_next(DartId d) const { return rot(twin(d)); }

  FaceId face_of(DartId d) const { return face_of_[d.value]; }
  std::span<const DartId> face_darts(FaceId f) const;
  std::size_t face_size(FaceId f) const { return face_darts(f).size(); }
  std::vector<VertexId> face_vertices(FaceId f) const;

  /// Faces at v, indexed by dart slot: the face containing dart 3v+s.
  std::array<FaceId, 3> faces_around(VertexId v) const;
  std::array<VertexId, 3> neighbors(VertexId v) const;

  EdgeId edge_of(DartId d) const;
  std::span<const EdgeId> edges() const { return edges_; }
  /// Dense index of an edge in edges(), which is sorted by EdgeId.
  std::size_t edge_index(EdgeId e) const { return edge_index_[e.value]; }
  bool is_edge(EdgeId e) const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  /// The two faces on either side of e: face of the dart, face of its twin.
  std::array<FaceId, 2> faces_of(EdgeId e) const;

  std::optional<DartId> dart_between(VertexId u, VertexId v) const;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  /// The rotation system this polytope was built from (normalized to the
  /// stored slot order).
  RotationSpec rotation() const;

 private:
  Polytope3() = default;

  std::vector<DartId> twin_;
  std::vector<FaceId> face_of_;
  std::vector<DartId> face_darts_;
  std::vector<std::size_t> face_offsets_;
  std::vector<EdgeId> edges_;
  std::vector<std::uint32_t> edge_index_;  // per dart, meaningful for EdgeIds
};

inline Polytope3 build_from_rotation(const RotationSpec& spec) {
  return Polytope3::from_rotation(spec);
}

PVector p_vector(const Polytope3& p);

/// The edge shared by faces i and j, if any.
std::optional<EdgeId> faces_adjacent(const Polytope3& p, FaceId i, FaceId j);

/// The vertex lying on all three faces, if any.
std::optional<VertexId> triple_vertex(const Polytope3& p, FaceId i, FaceId j, FaceId k);

/// Reference implementation of the 3-connectivity test: delete every vertex
/// pair and check connectivity. Quadratic in f0; the constructor uses a
/// faster equivalent.
bool is_3connected_bruteforce(const RotationSpec& spec);

/// Isomorphism-invariant byte code (relabeling and reflection).
std::string canonical_form(const Polytope3& p);
bool is_isomorphic(const Polytope3& a, const Polytope3& b);

}  // namespace polytrunc

#endif  // POLYTRUNC_POLYTOPE_HPP
