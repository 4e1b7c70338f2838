#include <gtest/gtest.h>

#include "polytrunc/flag.hpp"
#include "polytrunc/io.hpp"
#include "polytrunc/truncation.hpp"
#include "support/oracles.hpp"

namespace polytrunc {
namespace {

using testing::VertexSet;

std::vector<FaceId> faces_of_size(const Polytope3& p, std::size_t k) {
  std::vector<FaceId> out;
  for (std::uint32_t f = 0; f < p.face_count(); ++f) {
    if (p.face_size(FaceId{f}) == k) out.push_back(FaceId{f});
  }
  return out;
}

std::set<std::vector<VertexSet>> belts_as_vertex_sets(const Polytope3& p) {
  std::set<std::vector<VertexSet>> out;
  for (const Belt3& b : enumerate_3belts(p)) {
    std::vector<VertexSet> belt;
    for (FaceId f : b.faces) belt.push_back(testing::sorted_vertices(p, f));
    std::sort(belt.begin(), belt.end());
    out.insert(belt);
  }
  return out;
}

// Small polytopes with and without belts, including truncation outputs.
std::vector<Polytope3> small_polytopes() {
  std::vector<Polytope3> out;
  for (auto name : {"tetrahedron", "triangular_prism", "cube", "pentagonal_prism", "k_prism(6)"}) {
    out.push_back(catalog(name));
  }
  auto tet = catalog("tetrahedron");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> star{{0, 1}, {0, 2}, {0, 3}};
  out.push_back(truncate(EdgeSubgraph::from_vertex_pairs(tet, star)).polytope);
  auto prism = catalog("triangular_prism");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> top{{0, 1}};
  out.push_back(truncate(EdgeSubgraph::from_vertex_pairs(prism, top)).polytope);
  return out;
}

TEST(Belts, Examples) {
  EXPECT_TRUE(enumerate_3belts(catalog("tetrahedron")).empty());
  EXPECT_TRUE(enumerate_3belts(catalog("cube")).empty());

  auto prism = catalog("triangular_prism");
  auto belts = enumerate_3belts(prism);
  ASSERT_EQ(belts.size(), 1u);
  auto quads = faces_of_size(prism, 4);
  EXPECT_EQ(std::vector<FaceId>(belts[0].faces.begin(), belts[0].faces.end()), quads);
}

TEST(Belts, MatchBruteForceOverFaceVertexSets) {
  for (const auto& p : small_polytopes()) {
    auto faces = testing::faces_by_nonseparating_cycles(p.rotation());
    EXPECT_EQ(belts_as_vertex_sets(p), testing::belts_by_brute_force(faces));
  }
}

TEST(Belts, SatisfyTypeInvariantsAndAreSorted) {
  for (const auto& entry : catalog_entries()) {
    const auto belts = enumerate_3belts(entry.polytope);
    EXPECT_TRUE(std::is_sorted(belts.begin(), belts.end()));
    for (const Belt3& b : belts) {
      auto [i, j, k] = b.faces;
      EXPECT_LT(i, j);
      EXPECT_LT(j, k);
      EXPECT_TRUE(faces_adjacent(entry.polytope, i, j));
      EXPECT_TRUE(faces_adjacent(entry.polytope, j, k));
      EXPECT_TRUE(faces_adjacent(entry.polytope, i, k));
      EXPECT_FALSE(triple_vertex(entry.polytope, i, j, k));
      auto vi = testing::sorted_vertices(entry.polytope, i);
      auto vj = testing::sorted_vertices(entry.polytope, j);
      auto vk = testing::sorted_vertices(entry.polytope, k);
      EXPECT_EQ(testing::common(vi, vj, vk), 0u);
    }
  }
}

TEST(IsFlag, Examples) {
  EXPECT_FALSE(is_flag(catalog("tetrahedron")));
  EXPECT_TRUE(is_flag(catalog("cube")));
  EXPECT_FALSE(is_flag(catalog("triangular_prism")));
  EXPECT_TRUE(is_flag(catalog("dodecahedron")));
}

TEST(IsFlagOracle, Examples) {
  EXPECT_FALSE(is_flag_oracle(catalog("tetrahedron")));
  EXPECT_TRUE(is_flag_oracle(catalog("cube")));
  EXPECT_FALSE(is_flag_oracle(catalog("triangular_prism")));
}

TEST(MissingFaces, Tetrahedron) {
  auto missing = missing_faces(catalog("tetrahedron"));
  ASSERT_EQ(missing.size(), 1u);
  EXPECT_EQ(missing[0].faces, (std::vector<FaceId>{FaceId{0}, FaceId{1}, FaceId{2}, FaceId{3}}));
}

TEST(MissingFaces, CubeHasThreeOppositePairs) {
  auto cube = catalog("cube");
  auto missing = missing_faces(cube);
  ASSERT_EQ(missing.size(), 3u);
  for (const auto& m : missing) {
    ASSERT_EQ(m.faces.size(), 2u);
    EXPECT_FALSE(faces_adjacent(cube, m.faces[0], m.faces[1]));
  }
}

TEST(MissingFaces, TriangularPrism) {
  auto prism = catalog("triangular_prism");
  auto missing = missing_faces(prism);
  ASSERT_EQ(missing.size(), 2u);
  EXPECT_EQ(missing[0].faces, faces_of_size(prism, 3));
  EXPECT_EQ(missing[1].faces, faces_of_size(prism, 4));
}

TEST(MissingFaces, AreInclusionMinimalNonFaces) {
  for (const auto& p : small_polytopes()) {
    for (const auto& m : missing_faces(p)) {
      std::vector<VertexSet> sets;
      for (FaceId f : m.faces) sets.push_back(testing::sorted_vertices(p, f));
      auto meet = [&](std::uint32_t skip) {
        VertexSet acc;
        bool first = true;
        for (std::uint32_t i = 0; i < sets.size(); ++i) {
          if (i == skip) continue;
          if (first) {
            acc = sets[i];
            first = false;
            continue;
          }
          VertexSet next;
          std::set_intersection(acc.begin(), acc.end(), sets[i].begin(), sets[i].end(),
                                std::back_inserter(next));
          acc = next;
        }
        return acc;
      };
      EXPECT_TRUE(meet(UINT32_MAX).empty());
      for (std::uint32_t drop = 0; drop < sets.size(); ++drop) EXPECT_FALSE(meet(drop).empty());
    }
  }
}

TEST(FlagAnalysis, ThreeDecisionsAgree) {
  std::vector<Polytope3> all = small_polytopes();
  for (const auto& entry : catalog_entries()) all.push_back(entry.polytope);
  for (const auto& p : all) {
    bool flag = is_flag(p);
    auto missing = missing_faces(p);
    bool pairs_only = std::all_of(missing.begin(), missing.end(),
                                  [](const MissingFace& m) { return m.faces.size() == 2; });
    EXPECT_EQ(flag, is_flag_oracle(p));
    EXPECT_EQ(flag, pairs_only);
    if (flag && p.face_count() > 4) EXPECT_EQ(p_vector(p)[3], 0u);
  }
}

TEST(FlagAnalysis, NoFourFacesShareAVertex) {
  for (const auto& p : small_polytopes()) {
    for (std::uint32_t v = 0; v < p.vertex_count(); ++v) {
      auto around = p.faces_around(VertexId{v});
      std::set<FaceId> distinct(around.begin(), around.end());
      EXPECT_EQ(distinct.size(), 3u);
      std::size_t containing = 0;
      for (std::uint32_t f = 0; f < p.face_count(); ++f) {
        auto verts = p.face_vertices(FaceId{f});
        if (std::find(verts.begin(), verts.end(), VertexId{v}) != verts.end()) ++containing;
      }
      EXPECT_EQ(containing, 3u);
    }
  }
}

}  // namespace
}  // namespace polytrunc
