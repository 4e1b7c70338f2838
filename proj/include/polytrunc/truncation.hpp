#ifndef POLYTRUNC_TRUNCATION_HPP
#define POLYTRUNC_TRUNCATION_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polytrunc/polytope.hpp"

namespace polytrunc {

/// A nonempty set of edges of one host polytope. The subgraph only borrows
/// the host, which must outlive it; every operation below reads the host
/// from here, so a subgraph cannot be applied to a different polytope.
class EdgeSubgraph {
 public:
  EdgeSubgraph(const Polytope3& host, std::span<const EdgeId> edges);
  /// Edges named by endpoint pairs, e.g. from the CLI's "u-v" syntax.
  static EdgeSubgraph from_vertex_pairs(const Polytope3& host,
                                        std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);
  /// Bit i selects host.edges()[i].
  static EdgeSubgraph from_mask(const Polytope3& host, const std::vector<bool>& mask);
  static EdgeSubgraph all_edges(const Polytope3& host);

  const Polytope3& host() const { return *host_; }
  std::span<const EdgeId> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(EdgeId e) const { return mask_[host_->edge_index(e)]; }

  /// Sorted endpoint pairs rendered as "0-1,2-3". Used for deterministic
  /// ordering of sweep reports.
  std::string encoding() const;

 private:
  EdgeSubgraph(const Polytope3& host, std::vector<bool> mask);

  const Polytope3* host_;
  std::vector<bool> mask_;  // indexed by host.edge_index
  std::vector<EdgeId> edges_;
};

struct TruncationResult {
  Polytope3 polytope;
  std::map<FaceId, FaceId> face_of_facet;  // old face -> new face
  std::map<EdgeId, FaceId> face_of_edge;   // truncated edge -> new face
};

/// Number of subgraph edges at each vertex of the host, indexed by VertexId.
std::vector<unsigned> valency_profile(const EdgeSubgraph& gamma);

/// True iff no vertex has valency 2.
bool admits_simple_truncation(const EdgeSubgraph& gamma);

/// Cuts off every edge of the subgraph. Throws NonSimpleResult if a vertex
/// has valency 2.
TruncationResult truncate(const EdgeSubgraph& gamma);

/// Face sizes of truncate(gamma) computed from valencies alone.
struct PredictedFaceSizes {
  std::map<FaceId, std::size_t> of_facet;
  std::map<EdgeId, std::size_t> of_edge;
};
PredictedFaceSizes predicted_face_sizes(const EdgeSubgraph& gamma);

enum class CriterionMode {
  with_simplex_exception,  // default: a single edge on the tetrahedron is not flag
  clauses_only,            // triangle and 3-belt clauses as literally stated
};

/// Predicted flagness of the truncation. Throws NonSimpleInput on a
/// valency-2 vertex.
bool flag_criterion(const EdgeSubgraph& gamma,
                    CriterionMode mode = CriterionMode::with_simplex_exception);

}  // namespace polytrunc

#endif  // POLYTRUNC_TRUNCATION_HPP
