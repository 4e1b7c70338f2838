#include "polytrunc/truncation.hpp"

#include <algorithm>
#include <sstream>

#include "polytrunc/flag.hpp"

namespace polytrunc {

// ---------------------------------------------------------------------------
// EdgeSubgraph

EdgeSubgraph::EdgeSubgraph(const Polytope3& host, std::vector<bool> mask)
    : host_(&host), mask_(std::move(mask)) {
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) edges_.push_back(host.edges()[i]);
  }
  if (edges_.empty()) throw Error(ErrorKind::EmptySubgraph, "subgraph has no edges");
}

EdgeSubgraph::EdgeSubgraph(const Polytope3& host, std::span<const EdgeId> edges)
    : host_(&host), mask_(host.edge_count(), false) {
  for (EdgeId e : edges) {
    if (!host.is_edge(e)) {
      throw Error(ErrorKind::ForeignEdge, "edge " + std::to_string(e.value) + " is not in the host");
    }
    mask_[host.edge_index(e)] = true;
  }
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) edges_.push_back(host.edges()[i]);
  }
  if (edges_.empty()) throw Error(ErrorKind::EmptySubgraph, "subgraph has no edges");
}

EdgeSubgraph EdgeSubgraph::from_vertex_pairs(
    const Polytope3& host, std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
  std::vector<EdgeId> edges;
  for (auto [u, v] : pairs) {
    auto e = host.edge_between(VertexId{u}, VertexId{v});
    if (!e) {
      throw Error(ErrorKind::ForeignEdge,
                  std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    }
    edges.push_back(*e);
  }
  return EdgeSubgraph(host, edges);
}

EdgeSubgraph EdgeSubgraph::from_mask(const Polytope3& host, const std::vector<bool>& mask) {
  if (mask.size() != host.edge_count()) {
    throw Error(ErrorKind::ForeignEdge, "mask length does not match the host edge count");
  }
  return EdgeSubgraph(host, mask);
}

EdgeSubgraph EdgeSubgraph::all_edges(const Polytope3& host) {
  return EdgeSubgraph(host, std::vector<bool>(host.edge_count(), true));
}

std::string EdgeSubgraph::encoding() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (EdgeId e : edges_) {
    auto [u, v] = host_->endpoints(e);
    pairs.emplace_back(std::min(u.value, v.value), std::max(u.value, v.value));
  }
  std::sort(pairs.begin(), pairs.end());
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ',';
    out << pairs[i].first << '-' << pairs[i].second;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Valencies

std::vector<unsigned> valency_profile(const EdgeSubgraph& gamma) {
  std::vector<unsigned> valency(gamma.host().vertex_count(), 0);
  for (EdgeId e : gamma.edges()) {
    auto [u, v] = gamma.host().endpoints(e);
    ++valency[u.value];
    ++valency[v.value];
  }
  return valency;
}

bool admits_simple_truncation(const EdgeSubgraph& gamma) {
  auto valency = valency_profile(gamma);
  return std::none_of(valency.begin(), valency.end(), [](unsigned k) { return k == 2; });
}

namespace {

void require_simple(const std::vector<unsigned>& valency, ErrorKind kind) {
  for (std::size_t v = 0; v < valency.size(); ++v) {
    if (valency[v] == 2) {
      throw Error(kind, "vertex " + std::to_string(v) + " has valency 2 in the subgraph");
    }
  }
}

// Slot at v of the subgraph edge, for a valency-1 vertex.
unsigned gamma_slot(const EdgeSubgraph& gamma, VertexId v) {
  const Polytope3& p = gamma.host();
  for (unsigned s = 0; s < 3; ++s) {
    if (gamma.contains(p.edge_of(Polytope3::dart_at(v, s)))) return s;
  }
  return 3;
}

}  // namespace

// ---------------------------------------------------------------------------
// Surgery
//
// Slot arithmetic used throughout: at vertex v, the face in slot s is the face
// of dart 3v+s. The edge of that dart separates the faces in slots s and s+1,
// so the face in slot s contains the edges of the darts in slots s and s-1.

TruncationResult truncate(const EdgeSubgraph& gamma) {
  const Polytope3& p = gamma.host();
  const auto valency = valency_profile(gamma);
  require_simple(valency, ErrorKind::NonSimpleResult);

  constexpr std::uint32_t kNone = UINT32_MAX;
  const std::size_t n = p.vertex_count();
  // New vertex ids. keep[v]: valency 0. corner[v][s]: the new vertex near v on
  // the face in slot s (valency 1: only the two faces along the cut edge;
  // valency 3: all three). center[v]: valency 3.
  std::vector<std::uint32_t> keep(n, kNone), center(n, kNone);
  std::vector<std::array<std::uint32_t, 3>> corner(n, {kNone, kNone, kNone});
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    VertexId vid{v};
    switch (valency[v]) {
      case 0:
        keep[v] = next++;
        break;
      case 1: {
        unsigned s = gamma_slot(gamma, vid);
        std::array<unsigned, 2> slots{s, (s + 1) % 3};
        std::sort(slots.begin(), slots.end(), [&](unsigned a, unsigned b) {
          return p.face_of(Polytope3::dart_at(vid, a)) < p.face_of(Polytope3::dart_at(vid, b));
        });
        for (unsigned t : slots) corner[v][t] = next++;
        break;
      }
      case 3: {
        std::array<unsigned, 3> slots{0, 1, 2};
        std::sort(slots.begin(), slots.end(), [&](unsigned a, unsigned b) {
          return p.face_of(Polytope3::dart_at(vid, a)) < p.face_of(Polytope3::dart_at(vid, b));
        });
        for (unsigned t : slots) corner[v][t] = next++;
        center[v] = next++;
        break;
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<FaceId> old_face_of_cycle;
  std::vector<EdgeId> edge_of_cycle;

  // (a) Surviving faces: concatenate the replacement of each corner.
  for (std::uint32_t f = 0; f < p.face_count(); ++f) {
    std::vector<std::uint32_t> cycle;
    for (DartId d : p.face_darts(FaceId{f})) {
      const VertexId v = Polytope3::origin(d);
      const unsigned s = Polytope3::slot_of(d);
      switch (valency[v.value]) {
        case 0:
          cycle.push_back(keep[v.value]);
          break;
        case 1:
          if (corner[v.value][s] != kNone) {
            // cut edge lies on this face: the corner becomes one vertex
            cycle.push_back(corner[v.value][s]);
          } else {
            // cut edge leaves the face: the corner becomes an edge, entered
            // from the incoming side (slot s+2) and left on the outgoing side
            cycle.push_back(corner[v.value][(s + 2) % 3]);
            cycle.push_back(corner[v.value][(s + 1) % 3]);
          }
          break;
        case 3:
          cycle.push_back(corner[v.value][s]);
          break;
      }
    }
    cycles.push_back(std::move(cycle));
    old_face_of_cycle.push_back(FaceId{f});
  }

  // (b) One new face per cut edge u->v (dart d on face F_i, twin on F_j):
  // long side along F_i, end at u, long side along F_j, end at v.
  for (EdgeId e : gamma.edges()) {
    const DartId d{e.value};
    const DartId t = p.twin(d);
    const VertexId u = Polytope3::origin(d);
    const VertexId v = Polytope3::origin(t);
    const unsigned su = Polytope3::slot_of(d);  // F_i at u; F_j is su+1
    const unsigned sv = Polytope3::slot_of(t);  // F_j at v; F_i is sv+1
    std::vector<std::uint32_t> cycle;
    cycle.push_back(corner[v.value][(sv + 1) % 3]);
    cycle.push_back(corner[u.value][su]);
    if (valency[u.value] == 3) cycle.push_back(center[u.value]);
    cycle.push_back(corner[u.value][(su + 1) % 3]);
    cycle.push_back(corner[v.value][sv]);
    if (valency[v.value] == 3) cycle.push_back(center[v.value]);
    cycles.push_back(std::move(cycle));
    edge_of_cycle.push_back(e);
  }

  TruncationResult result{
      Polytope3::from_faces(next, cycles, Polytope3::Orientation::as_given), {}, {}};
  const Polytope3& q = result.polytope;
  auto face_of_cycle = [&](const std::vector<std::uint32_t>& cycle) {
    auto dart = q.dart_between(VertexId{cycle[0]}, VertexId{cycle[1]});
    return q.face_of(*dart);
  };
  for (std::size_t i = 0; i < old_face_of_cycle.size(); ++i) {
    result.face_of_facet.emplace(old_face_of_cycle[i], face_of_cycle(cycles[i]));
  }
  for (std::size_t i = 0; i < edge_of_cycle.size(); ++i) {
    result.face_of_edge.emplace(edge_of_cycle[i],
                                face_of_cycle(cycles[old_face_of_cycle.size() + i]));
  }
  return result;
}

PredictedFaceSizes predicted_face_sizes(const EdgeSubgraph& gamma) {
  const Polytope3& p = gamma.host();
  const auto valency = valency_profile(gamma);
  require_simple(valency, ErrorKind::NonSimpleResult);

  PredictedFaceSizes out;
  for (std::uint32_t f = 0; f < p.face_count(); ++f) {
    std::size_t size = 0;
    for (DartId d : p.face_darts(FaceId{f})) {
      ++size;
      const VertexId v = Polytope3::origin(d);
      if (valency[v.value] != 1) continue;
      // the face contains the edges of d and of rot_inv(d); the third edge
      // at v is the one of rot(d)
      if (gamma.contains(p.edge_of(Polytope3::rot(d)))) ++size;
    }
    out.of_facet.emplace(FaceId{f}, size);
  }
  auto end_size = [&](VertexId w) -> std::size_t { return valency[w.value] == 3 ? 2 : 1; };
  for (EdgeId e : gamma.edges()) {
    auto [u, v] = p.endpoints(e);
    out.of_edge.emplace(e, 2 + end_size(u) + end_size(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Flagness criterion

bool flag_criterion(const EdgeSubgraph& gamma, CriterionMode mode) {
  const Polytope3& p = gamma.host();
  require_simple(valency_profile(gamma), ErrorKind::NonSimpleInput);

  for (std::uint32_t f = 0; f < p.face_count(); ++f) {
    if (p.face_size(FaceId{f}) != 3) continue;
    int cut = 0;
    for (DartId d : p.face_darts(FaceId{f})) cut += gamma.contains(p.edge_of(d)) ? 1 : 0;
    if (cut >= 2) return false;
  }
  for (const Belt3& belt : enumerate_3belts(p)) {
    const auto [i, j, k] = belt.faces;
    bool hit = false;
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, k}, std::pair{k, i}}) {
      auto e = faces_adjacent(p, a, b);
      if (e && gamma.contains(*e)) hit = true;
    }
    if (!hit) return false;
  }
  // Cutting a single edge of the tetrahedron gives the triangular prism,
  // which has a 3-belt although both clauses hold.
  if (mode == CriterionMode::with_simplex_exception && p.face_count() == 4 && gamma.size() == 1) {
    return false;
  }
  return true;
}

}  // namespace polytrunc
