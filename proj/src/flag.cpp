#include "polytrunc/flag.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace polytrunc {

namespace {

// Faces as vertex bitsets. Intersection of closed faces is the set of common
// vertices, since every edge or face of the polytope contains a vertex.
class FaceVertexSets {
 public:
  explicit FaceVertexSets(const Polytope3& p)
      : words_((p.vertex_count() + 63) / 64), faces_(p.face_count()), bits_(faces_ * words_, 0) {
    for (std::uint32_t f = 0; f < faces_; ++f) {
      for (VertexId v : p.face_vertices(FaceId{f})) {
        bits_[f * words_ + v.value / 64] |= std::uint64_t{1} << (v.value % 64);
      }
    }
  }

  std::size_t face_count() const { return faces_; }

  bool meet(std::initializer_list<std::size_t> faces) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t acc = ~std::uint64_t{0};
      for (auto f : faces) acc &= bits_[f * words_ + w];
      if (acc != 0) return true;
    }
    return false;
  }

 private:
  std::size_t words_;
  std::size_t faces_;
  std::vector<std::uint64_t> bits_;
};

FaceId fid(std::size_t i) { return FaceId{static_cast<std::uint32_t>(i)}; }

}  // namespace

std::vector<Belt3> enumerate_3belts(const Polytope3& p) {
  const std::size_t m = p.face_count();
  std::vector<std::vector<char>> adjacent(m, std::vector<char>(m, 0));
  for (EdgeId e : p.edges()) {
    auto [f, g] = p.faces_of(e);
    adjacent[f.value][g.value] = adjacent[g.value][f.value] = 1;
  }
  std::set<std::array<std::uint32_t, 3>> corners;
  for (std::uint32_t v = 0; v < p.vertex_count(); ++v) {
    auto around = p.faces_around(VertexId{v});
    std::array<std::uint32_t, 3> key{around[0].value, around[1].value, around[2].value};
    std::sort(key.begin(), key.end());
    corners.insert(key);
  }

  std::vector<Belt3> belts;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) {
      if (!adjacent[i][j]) continue;
      for (std::uint32_t k = j + 1; k < m; ++k) {
        if (!adjacent[i][k] || !adjacent[j][k]) continue;
        if (corners.contains({i, j, k})) continue;
        belts.push_back(Belt3{{FaceId{i}, FaceId{j}, FaceId{k}}});
      }
    }
  }
  return belts;
}

bool is_flag(const Polytope3& p) {
  if (p.face_count() == 4) return false;
  return enumerate_3belts(p).empty();
}

bool is_flag_oracle(const Polytope3& p) {
  const FaceVertexSets sets(p);
  const std::size_t m = sets.face_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!sets.meet({i, j})) continue;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!sets.meet({i, k}) || !sets.meet({j, k})) continue;
        if (!sets.meet({i, j, k})) return false;
        for (std::size_t l = k + 1; l < m; ++l) {
          if (!sets.meet({i, l}) || !sets.meet({j, l}) || !sets.meet({k, l})) continue;
          if (!sets.meet({i, j, k, l})) return false;
        }
      }
    }
  }
  return true;
}

std::vector<MissingFace> missing_faces(const Polytope3& p) {
  const FaceVertexSets sets(p);
  const std::size_t m = sets.face_count();
  std::vector<MissingFace> pairs, triples, quads;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!sets.meet({i, j})) {
        pairs.push_back({{fid(i), fid(j)}});
        continue;
      }
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!sets.meet({i, k}) || !sets.meet({j, k})) continue;
        if (!sets.meet({i, j, k})) {
          triples.push_back({{fid(i), fid(j), fid(k)}});
          continue;
        }
        for (std::size_t l = k + 1; l < m; ++l) {
          if (!sets.meet({i, l}) || !sets.meet({j, l}) || !sets.meet({k, l})) continue;
          if (!sets.meet({i, j, l}) || !sets.meet({i, k, l}) || !sets.meet({j, k, l})) continue;
          if (!sets.meet({i, j, k, l})) quads.push_back({{fid(i), fid(j), fid(k), fid(l)}});
        }
      }
    }
  }
  std::vector<MissingFace> out;
  out.reserve(pairs.size() + triples.size() + quads.size());
  for (auto* group : {&pairs, &triples, &quads}) {
    std::move(group->begin(), group->end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace polytrunc
