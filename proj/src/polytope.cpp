#include "polytrunc/polytope.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace polytrunc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::LoopOrMultiEdge: return "LoopOrMultiEdge";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::Not3Connected: return "Not3Connected";
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::InconsistentFaces: return "InconsistentFaces";
    case ErrorKind::EmptySubgraph: return "EmptySubgraph";
    case ErrorKind::ForeignEdge: return "ForeignEdge";
    case ErrorKind::NonSimpleResult: return "NonSimpleResult";
    case ErrorKind::NonSimpleInput: return "NonSimpleInput";
    case ErrorKind::HasTriangles: return "HasTriangles";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// PVector

PVector::PVector(const std::map<int, std::uint64_t>& counts) {
  for (auto [k, c] : counts) set(k, c);
}

std::uint64_t PVector::operator[](int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

void PVector::add(int k, std::uint64_t count) {
  if (count != 0) set(k, (*this)[k] + count);
}

void PVector::set(int k, std::uint64_t count) {
  if (k < 3) throw Error(ErrorKind::InvalidSequence, "face size " + std::to_string(k) + " < 3");
  if (count == 0)
    counts_.erase(k);
  else
    counts_[k] = count;
}

std::uint64_t PVector::total() const {
  std::uint64_t sum = 0;
  for (auto [k, c] : counts_) sum += c;
  return sum;
}

std::string PVector::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto [k, c] : counts_) {
    if (!first) out << ", ";
    out << k << ':' << c;
    first = false;
  }
  out << '}';
  return out.str();
}

bool check_star_identity(const PVector& p) {
  std::int64_t lhs = 0;
  std::int64_t rhs = 12;
  for (auto [k, c] : p.counts()) {
    auto count = static_cast<std::int64_t>(c);
    if (k < 6)
      lhs += (6 - k) * count;
    else
      rhs += (k - 6) * count;
  }
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Validation helpers

namespace {

using Adjacency = std::vector<std::array<std::uint32_t, 3>>;

// Connected and free of articulation points once `removed` is deleted.
// Iterative lowpoint DFS.
bool biconnected_without(const Adjacency& adj, std::uint32_t removed) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0), parent(n, kUnseen);
  std::vector<unsigned> next_child(n, 0);

  const std::uint32_t root = removed == 0 ? 1 : 0;
  std::uint32_t time = 0;
  std::uint32_t root_children = 0;
  std::vector<std::uint32_t> stack{root};
  disc[root] = low[root] = time++;

  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    if (next_child[v] < 3) {
      std::uint32_t w = adj[v][next_child[v]++];
      if (w == removed) continue;
      if (disc[w] == kUnseen) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        if (v == root) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (parent[v] != kUnseen) {
      std::uint32_t u = parent[v];
      low[u] = std::min(low[u], low[v]);
      if (u != root && low[v] >= disc[u]) return false;
    }
  }
  if (time != n - 1) return false;  // disconnected
  return root_children <= 1;
}

bool is_3connected(const Adjacency& adj) {
  if (adj.size() < 4) return false;
  for (std::uint32_t x = 0; x < adj.size(); ++x) {
    if (!biconnected_without(adj, x)) return false;
  }
  return true;
}

}  // namespace

bool is_3connected_bruteforce(const RotationSpec& spec) {
  const std::size_t n = spec.size();
  if (n < 4) return false;
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[a] = seen[b] = 1;
      std::size_t start = 0;
      while (start == a || start == b) ++start;
      std::vector<std::size_t> stack{start};
      seen[start] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto w : spec[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != n - 2) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

Polytope3 Polytope3::from_rotation(const RotationSpec& spec) {
  const std::size_t n = spec.size();
  if (n > kMaxVertices) {
    throw Error(ErrorKind::TooManyVertices,
                std::to_string(n) + " vertices exceeds limit " + std::to_string(kMaxVertices));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (spec[v].size() != 3) {
      throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(spec[v].size()));
    }
  }
  Adjacency adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (unsigned s = 0; s < 3; ++s) {
      std::uint32_t w = spec[v][s];
      if (w >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(w));
      }
      if (w == v) throw Error(ErrorKind::LoopOrMultiEdge, "loop at vertex " + std::to_string(v));
      adj[v][s] = w;
    }
    if (adj[v][0] == adj[v][1] || adj[v][1] == adj[v][2] || adj[v][0] == adj[v][2]) {
      throw Error(ErrorKind::LoopOrMultiEdge, "repeated neighbor at vertex " + std::to_string(v));
    }
  }

  Polytope3 p;
  p.twin_.resize(3 * n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (unsigned s = 0; s < 3; ++s) {
      std::uint32_t w = adj[v][s];
      auto back = std::find(adj[w].begin(), adj[w].end(), v);
      if (back == adj[w].end()) {
        throw Error(ErrorKind::AsymmetricAdjacency, std::to_string(v) + " lists " +
                                                        std::to_string(w) + " but not vice versa");
      }
      p.twin_[3 * v + s] = DartId{3 * w + static_cast<std::uint32_t>(back - adj[w].begin())};
    }
  }

  // Faces: orbits of rot(twin(d)), numbered by smallest dart.
  constexpr std::uint32_t kNone = UINT32_MAX;
  p.face_of_.assign(3 * n, FaceId{kNone});
  p.face_offsets_.push_back(0);
  for (std::uint32_t start = 0; start < 3 * n; ++start) {
    if (p.face_of_[start].value != kNone) continue;
    FaceId f{static_cast<std::uint32_t>(p.face_offsets_.size() - 1)};
    DartId d{start};
    do {
      p.face_of_[d.value] = f;
      p.face_darts_.push_back(d);
      d = p.face_next(d);
    } while (d.value != start);
    std::size_t len = p.face_darts_.size() - p.face_offsets_.back();
    if (len < 3) {
      throw Error(ErrorKind::DegenerateFace, "face of length " + std::to_string(len));
    }
    p.face_offsets_.push_back(p.face_darts_.size());
  }

  const auto f0 = static_cast<long>(n);
  const auto f1 = static_cast<long>(3 * n / 2);
  const auto f2 = static_cast<long>(p.face_count());
  if (3 * n % 2 != 0 || f0 - f1 + f2 != 2) {
    throw Error(ErrorKind::EulerViolation, "f0 - f1 + f2 = " + std::to_string(f0 - f1 + f2) +
                                               " (f0=" + std::to_string(f0) +
                                               ", f2=" + std::to_string(f2) + ")");
  }

  if (!is_3connected(adj)) throw Error(ErrorKind::Not3Connected, "graph is not 3-connected");

  p.edge_index_.assign(3 * n, kNone);
  for (std::uint32_t d = 0; d < 3 * n; ++d) {
    if (d < p.twin_[d].value) {
      p.edge_index_[d] = static_cast<std::uint32_t>(p.edges_.size());
      p.edges_.push_back(EdgeId{d});
    }
  }

  // Face boundaries must be simple cycles and two faces may share at most one
  // edge. Both follow from 3-connectivity; checked anyway.
  std::vector<std::uint32_t> last_seen(n, kNone);
  std::vector<std::uint32_t> shared(p.face_count(), 0);
  for (std::uint32_t f = 0; f < p.face_count(); ++f) {
    std::fill(shared.begin(), shared.end(), 0);
    for (DartId d : p.face_darts(FaceId{f})) {
      auto v = origin(d).value;
      if (last_seen[v] == f) {
        throw Error(ErrorKind::DegenerateFace, "face " + std::to_string(f) + " repeats a vertex");
      }
      last_seen[v] = f;
      if (++shared[p.face_of(p.twin(d)).value] > 1) {
        throw Error(ErrorKind::DegenerateFace,
                    "faces share more than one edge (face " + std::to_string(f) + ")");
      }
    }
  }
  return p;
}

Polytope3 Polytope3::from_faces(std::size_t vertex_count,
                                const std::vector<std::vector<std::uint32_t>>& faces,
                                Orientation orientation) {
  if (vertex_count > kMaxVertices) {
    throw Error(ErrorKind::TooManyVertices, std::to_string(vertex_count) + " vertices");
  }
  // undirected edge -> (face, traversed low->high)
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::pair<std::size_t, bool>>>
      sides;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& cyc = faces[f];
    if (cyc.size() < 3) throw Error(ErrorKind::DegenerateFace, "face with fewer than 3 vertices");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint32_t a = cyc[i];
      std::uint32_t b = cyc[(i + 1) % cyc.size()];
      if (a >= vertex_count || b >= vertex_count) {
        throw Error(ErrorKind::VertexOutOfRange, "face lists vertex out of range");
      }
      if (a == b) throw Error(ErrorKind::LoopOrMultiEdge, "loop in face boundary");
      sides[{std::min(a, b), std::max(a, b)}].emplace_back(f, a < b);
    }
  }

  std::vector<int> flip(faces.size(), -1);
  std::vector<std::vector<std::pair<std::size_t, bool>>> face_links(faces.size());
  for (const auto& [edge, incidences] : sides) {
    if (incidences.size() != 2) {
      throw Error(ErrorKind::InconsistentFaces,
                  "edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                      " lies on " + std::to_string(incidences.size()) + " faces");
    }
    auto [f, dir_f] = incidences[0];
    auto [g, dir_g] = incidences[1];
    // Coherent iff the two sides traverse the edge in opposite directions.
    bool same = dir_f == dir_g;
    face_links[f].emplace_back(g, same);
    face_links[g].emplace_back(f, same);
  }

  if (orientation == Orientation::as_given) {
    for (const auto& links : face_links) {
      for (auto [g, same] : links) {
        if (same) throw Error(ErrorKind::InconsistentFaces, "incoherent face orientation");
      }
    }
    std::fill(flip.begin(), flip.end(), 0);
  } else {
    for (std::size_t seed = 0; seed < faces.size(); ++seed) {
      if (flip[seed] != -1) continue;
      flip[seed] = 0;
      std::queue<std::size_t> queue;
      queue.push(seed);
      while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop();
        for (auto [g, same] : face_links[f]) {
          int want = same ? 1 - flip[f] : flip[f];
          if (flip[g] == -1) {
            flip[g] = want;
            queue.push(g);
          } else if (flip[g] != want) {
            throw Error(ErrorKind::InconsistentFaces, "face cycles are not orientable");
          }
        }
      }
    }
  }

  // corner (a, b, c) gives rot(b->a) = b->c
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> corners(vertex_count);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::vector<std::uint32_t> cyc = faces[f];
    if (flip[f] == 1) std::reverse(cyc.begin(), cyc.end());
    const std::size_t m = cyc.size();
    for (std::size_t i = 0; i < m; ++i) {
      corners[cyc[i]].emplace_back(cyc[(i + m - 1) % m], cyc[(i + 1) % m]);
    }
  }

  RotationSpec spec(vertex_count);
  for (std::uint32_t b = 0; b < vertex_count; ++b) {
    const auto& cs = corners[b];
    if (cs.size() != 3) {
      throw Error(ErrorKind::NotCubic,
                  "vertex " + std::to_string(b) + " lies on " + std::to_string(cs.size()) + " faces");
    }
    auto next = [&](std::uint32_t a) -> std::uint32_t {
      for (auto [x, c] : cs) {
        if (x == a) return c;
      }
      throw Error(ErrorKind::InconsistentFaces, "face corners at vertex " + std::to_string(b) +
                                                    " do not close up");
    };
    std::uint32_t a0 = cs[0].first;
    std::uint32_t a1 = next(a0);
    std::uint32_t a2 = next(a1);
    if (next(a2) != a0) {
      throw Error(ErrorKind::InconsistentFaces,
                  "face corners at vertex " + std::to_string(b) + " do not close up");
    }
    spec[b] = {a0, a1, a2};
  }
  return from_rotation(spec);
}

// ---------------------------------------------------------------------------
// Queries

std::span<const DartId> Polytope3::face_darts(FaceId f) const {
  return std::span<const DartId>(face_darts_).subspan(
      face_offsets_[f.value], face_offsets_[f.value + 1] - face_offsets_[f.value]);
}

std::vector<VertexId> Polytope3::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  for (DartId d : face_darts(f)) out.push_back(origin(d));
  return out;
}

std::array<FaceId, 3> Polytope3::faces_around(VertexId v) const {
  return {face_of(dart_at(v, 0)), face_of(dart_at(v, 1)), face_of(dart_at(v, 2))};
}

std::array<VertexId, 3> Polytope3::neighbors(VertexId v) const {
  return {target(dart_at(v, 0)), target(dart_at(v, 1)), target(dart_at(v, 2))};
}

EdgeId Polytope3::edge_of(DartId d) const { return EdgeId{std::min(d.value, twin(d).value)}; }

bool Polytope3::is_edge(EdgeId e) const {
  return e.value < dart_count() && e.value < twin_[e.value].value;
}

std::pair<VertexId, VertexId> Polytope3::endpoints(EdgeId e) const {
  DartId d{e.value};
  return {origin(d), target(d)};
}

std::array<FaceId, 2> Polytope3::faces_of(EdgeId e) const {
  DartId d{e.value};
  return {face_of(d), face_of(twin(d))};
}

std::optional<DartId> Polytope3::dart_between(VertexId u, VertexId v) const {
  if (u.value >= vertex_count() || v.value >= vertex_count()) return std::nullopt;
  for (unsigned s = 0; s < 3; ++s) {
    DartId d = dart_at(u, s);
    if (target(d) == v) return d;
  }
  return std::nullopt;
}

std::optional<EdgeId> Polytope3::edge_between(VertexId u, VertexId v) const {
  auto d = dart_between(u, v);
  if (!d) return std::nullopt;
  return edge_of(*d);
}

RotationSpec Polytope3::rotation() const {
  RotationSpec spec(vertex_count());
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    for (VertexId w : neighbors(VertexId{v})) spec[v].push_back(w.value);
  }
  return spec;
}

PVector p_vector(const Polytope3& p) {
  PVector out;
  for (std::uint32_t f = 0; f < p.face_count(); ++f) {
    out.add(static_cast<int>(p.face_size(FaceId{f})));
  }
  return out;
}

std::optional<EdgeId> faces_adjacent(const Polytope3& p, FaceId i, FaceId j) {
  if (i == j) return std::nullopt;
  for (DartId d : p.face_darts(i)) {
    if (p.face_of(p.twin(d)) == j) return p.edge_of(d);
  }
  return std::nullopt;
}

std::optional<VertexId> triple_vertex(const Polytope3& p, FaceId i, FaceId j, FaceId k) {
  if (i == j || j == k || i == k) return std::nullopt;
  for (DartId d : p.face_darts(i)) {
    VertexId v = Polytope3::origin(d);
    auto around = p.faces_around(v);
    bool has_j = std::find(around.begin(), around.end(), j) != around.end();
    bool has_k = std::find(around.begin(), around.end(), k) != around.end();
    if (has_j && has_k) return v;
  }
  return std::nullopt;
}

}  // namespace polytrunc
