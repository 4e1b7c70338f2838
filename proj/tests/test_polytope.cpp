#include <gtest/gtest.h>

#include <random>

#include "polytrunc/io.hpp"
#include "polytrunc/polytope.hpp"
#include "support/oracles.hpp"

namespace polytrunc {
namespace {

using testing::faces_by_nonseparating_cycles;
using testing::pvector_of;

const RotationSpec kTetrahedron{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

// Top square 0..3, bottom square 4..7, vertical edges i - i+4.
RotationSpec cube_spec() {
  RotationSpec spec(8);
  for (std::uint32_t i = 0; i < 4; ++i) {
    spec[i] = {(i + 3) % 4, (i + 1) % 4, i + 4};
    spec[4 + i] = {4 + (i + 1) % 4, 4 + (i + 3) % 4, i};
  }
  return spec;
}

ErrorKind kind_of(const RotationSpec& spec) {
  try {
    build_from_rotation(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "construction unexpectedly succeeded";
  return ErrorKind::IoError;
}

TEST(BuildFromRotation, Tetrahedron) {
  auto p = build_from_rotation(kTetrahedron);
  EXPECT_EQ(p.vertex_count(), 4u);
  EXPECT_EQ(p.edge_count(), 6u);
  EXPECT_EQ(p.face_count(), 4u);
}

TEST(BuildFromRotation, Cube) {
  auto p = build_from_rotation(cube_spec());
  EXPECT_EQ(p.vertex_count(), 8u);
  EXPECT_EQ(p.edge_count(), 12u);
  EXPECT_EQ(p.face_count(), 6u);
  EXPECT_TRUE(is_isomorphic(p, catalog("cube")));
}

TEST(BuildFromRotation, RejectsDegreeTwoVertex) {
  RotationSpec spec = kTetrahedron;
  spec[0] = {1, 2};
  EXPECT_EQ(kind_of(spec), ErrorKind::NotCubic);
}

TEST(BuildFromRotation, RejectsAsymmetricAdjacency) {
  // 0 lists 1, but 1 does not list 0
  RotationSpec spec{{1, 2, 3}, {2, 3, 4}, {0, 1, 3}, {0, 2, 1}, {1, 2, 3}};
  EXPECT_EQ(kind_of(spec), ErrorKind::AsymmetricAdjacency);
}

TEST(BuildFromRotation, RejectsLoopsAndRepeatedNeighbors) {
  RotationSpec loop = kTetrahedron;
  loop[0] = {0, 2, 3};
  EXPECT_EQ(kind_of(loop), ErrorKind::LoopOrMultiEdge);
  RotationSpec multi = kTetrahedron;
  multi[0] = {1, 1, 3};
  EXPECT_EQ(kind_of(multi), ErrorKind::LoopOrMultiEdge);
}

TEST(BuildFromRotation, RejectsOutOfRangeNeighbor) {
  RotationSpec spec = kTetrahedron;
  spec[3] = {0, 2, 7};
  EXPECT_EQ(kind_of(spec), ErrorKind::VertexOutOfRange);
}

TEST(BuildFromRotation, RejectsToroidalEmbedding) {
  // K4 with one vertex's rotation reversed: 2 faces, genus 1.
  RotationSpec spec = kTetrahedron;
  std::reverse(spec[0].begin(), spec[0].end());
  EXPECT_EQ(kind_of(spec), ErrorKind::EulerViolation);
}

TEST(BuildFromRotation, RejectsTwoConnectedGraph) {
  // Two copies of K4 minus an edge, joined by two edges: a planar cubic graph
  // with the 2-cut {0, 1}.
  std::vector<std::vector<std::uint32_t>> faces{
      {0, 2, 3}, {1, 3, 2}, {4, 7, 6}, {5, 6, 7}, {0, 3, 1, 5, 7, 4}, {0, 2, 1, 5, 6, 4}};
  try {
    Polytope3::from_faces(8, faces);
    FAIL() << "expected Not3Connected";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Not3Connected);
  }
  RotationSpec graph(8);
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto a = f[i], b = f[(i + 1) % f.size()];
      if (std::find(graph[a].begin(), graph[a].end(), b) == graph[a].end()) {
        graph[a].push_back(b);
        graph[b].push_back(a);
      }
    }
  }
  EXPECT_FALSE(is_3connected_bruteforce(graph));
}

TEST(BuildFromRotation, RejectsTooManyVertices) {
  RotationSpec spec(kMaxVertices + 2, std::vector<std::uint32_t>{0, 1, 2});
  EXPECT_EQ(kind_of(spec), ErrorKind::TooManyVertices);
}

TEST(PVector, CatalogExamples) {
  EXPECT_EQ(p_vector(catalog("tetrahedron")), (PVector{{3, 4}}));
  EXPECT_EQ(p_vector(catalog("dodecahedron")), (PVector{{5, 12}}));
  EXPECT_EQ(p_vector(catalog("triangular_prism")), (PVector{{3, 2}, {4, 3}}));
}

TEST(PVector, AgreesWithNonseparatingCycleFaces) {
  for (auto name : {"tetrahedron", "triangular_prism", "cube", "pentagonal_prism", "dodecahedron",
                    "k_prism(7)"}) {
    auto p = catalog(name);
    EXPECT_EQ(p_vector(p), pvector_of(faces_by_nonseparating_cycles(p.rotation()))) << name;
  }
}

TEST(PVector, RejectsFaceSizesBelowThree) {
  PVector pv;
  EXPECT_THROW(pv.add(2), Error);
  EXPECT_EQ(pv.to_string(), "{}");
  pv.add(4, 6);
  pv.add(6, 0);
  EXPECT_EQ(pv.to_string(), "{4:6}");
  EXPECT_EQ(pv[6], 0u);
}

TEST(StarIdentity, Examples) {
  EXPECT_TRUE(check_star_identity(PVector{{3, 4}}));
  EXPECT_TRUE(check_star_identity(PVector{{4, 6}}));
  EXPECT_FALSE(check_star_identity(PVector{{3, 1}, {4, 1}}));
  // heptagonal prism: 2*7 = 12 + 1*2
  EXPECT_TRUE(check_star_identity(PVector{{4, 7}, {7, 2}}));
  EXPECT_FALSE(check_star_identity(PVector{{7, 1}}));
}

TEST(FacesAdjacent, Examples) {
  auto tet = catalog("tetrahedron");
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      auto e = faces_adjacent(tet, FaceId{i}, FaceId{j});
      ASSERT_TRUE(e.has_value());
      auto sides = tet.faces_of(*e);
      EXPECT_TRUE((sides[0] == FaceId{i} && sides[1] == FaceId{j}) ||
                  (sides[0] == FaceId{j} && sides[1] == FaceId{i}));
    }
  }

  auto cube = catalog("cube");
  for (std::uint32_t i = 0; i < 6; ++i) {
    int absent = 0;
    for (std::uint32_t j = 0; j < 6; ++j) {
      if (i != j && !faces_adjacent(cube, FaceId{i}, FaceId{j})) ++absent;
    }
    EXPECT_EQ(absent, 1) << "each cube face has exactly one opposite face";
  }

  auto prism = catalog("triangular_prism");
  std::vector<FaceId> triangles;
  for (std::uint32_t f = 0; f < prism.face_count(); ++f) {
    if (prism.face_size(FaceId{f}) == 3) triangles.push_back(FaceId{f});
  }
  ASSERT_EQ(triangles.size(), 2u);
  EXPECT_FALSE(faces_adjacent(prism, triangles[0], triangles[1]));
}

TEST(TripleVertex, Examples) {
  auto tet = catalog("tetrahedron");
  auto v = triple_vertex(tet, FaceId{0}, FaceId{1}, FaceId{2});
  ASSERT_TRUE(v.has_value());
  auto around = tet.faces_around(*v);
  std::sort(around.begin(), around.end());
  EXPECT_EQ(around, (std::array<FaceId, 3>{FaceId{0}, FaceId{1}, FaceId{2}}));

  auto cube = catalog("cube");
  for (std::uint32_t x = 0; x < cube.vertex_count(); ++x) {
    auto a = cube.faces_around(VertexId{x});
    EXPECT_EQ(triple_vertex(cube, a[0], a[1], a[2]), VertexId{x});
  }

  auto prism = catalog("triangular_prism");
  std::vector<FaceId> quads;
  for (std::uint32_t f = 0; f < prism.face_count(); ++f) {
    if (prism.face_size(FaceId{f}) == 4) quads.push_back(FaceId{f});
  }
  ASSERT_EQ(quads.size(), 3u);
  EXPECT_FALSE(triple_vertex(prism, quads[0], quads[1], quads[2]).has_value());
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (const auto& entry : catalog_entries()) {
    const auto spec = entry.polytope.rotation();
    const auto form = canonical_form(entry.polytope);
    for (int trial = 0; trial < 5; ++trial) {
      auto relabeled = build_from_rotation(testing::relabel(spec, testing::random_permutation(spec.size(), rng)));
      EXPECT_EQ(canonical_form(relabeled), form) << entry.name;
    }
  }
}

TEST(CanonicalForm, Examples) {
  auto cube = catalog("cube");
  EXPECT_NE(canonical_form(cube), canonical_form(catalog("tetrahedron")));
  EXPECT_FALSE(is_isomorphic(cube, catalog("tetrahedron")));

  auto prism = catalog("triangular_prism");
  auto mirrored = build_from_rotation(testing::mirror(prism.rotation()));
  EXPECT_EQ(canonical_form(prism), canonical_form(mirrored));
  EXPECT_TRUE(is_isomorphic(prism, mirrored));
}

TEST(CanonicalForm, SeparatesCatalogEntries) {
  // Named entries alias k_prism(3..5); everything else is pairwise distinct.
  std::map<std::string, std::string> seen;
  for (const auto& entry : catalog_entries()) {
    auto form = canonical_form(entry.polytope);
    if (auto it = seen.find(form); it != seen.end()) {
      std::set<std::pair<std::string, std::string>> aliases{{"triangular_prism", "k_prism(3)"},
                                                            {"cube", "k_prism(4)"},
                                                            {"pentagonal_prism", "k_prism(5)"}};
      EXPECT_TRUE(aliases.contains({it->second, entry.name})) << it->second << " vs " << entry.name;
    } else {
      seen.emplace(form, entry.name);
    }
  }
}

TEST(Polytope3, InvariantsOnCatalog) {
  for (const auto& entry : catalog_entries()) {
    const Polytope3& p = entry.polytope;
    const long f0 = static_cast<long>(p.vertex_count());
    const long f1 = static_cast<long>(p.edge_count());
    const long f2 = static_cast<long>(p.face_count());
    EXPECT_EQ(f0 - f1 + f2, 2) << entry.name;
    EXPECT_EQ(2 * f1, 3 * f0) << entry.name;
    EXPECT_TRUE(check_star_identity(p_vector(p))) << entry.name;

    std::size_t traced = 0;
    for (std::uint32_t f = 0; f < p.face_count(); ++f) traced += p.face_size(FaceId{f});
    EXPECT_EQ(traced, p.dart_count());

    for (std::uint32_t d = 0; d < p.dart_count(); ++d) {
      DartId dart{d};
      EXPECT_NE(p.twin(dart), dart);
      EXPECT_EQ(p.twin(p.twin(dart)), dart);
      EXPECT_NE(Polytope3::origin(dart), p.target(dart));
      EXPECT_EQ(p.face_of(p.face_next(dart)), p.face_of(dart));
    }

    // face ids follow the smallest dart of each face
    for (std::uint32_t f = 1; f < p.face_count(); ++f) {
      auto prev = p.face_darts(FaceId{f - 1});
      auto cur = p.face_darts(FaceId{f});
      EXPECT_LT(*std::min_element(prev.begin(), prev.end()), *std::min_element(cur.begin(), cur.end()));
    }
    EXPECT_TRUE(is_3connected_bruteforce(p.rotation())) << entry.name;
  }
}

TEST(Polytope3, RotationRoundTrip) {
  auto cube = build_from_rotation(cube_spec());
  EXPECT_EQ(cube.rotation(), cube_spec());
  for (std::uint32_t v = 0; v < 8; ++v) {
    for (VertexId w : cube.neighbors(VertexId{v})) {
      auto e = cube.edge_between(VertexId{v}, w);
      ASSERT_TRUE(e.has_value());
      EXPECT_TRUE(cube.is_edge(*e));
      auto [a, b] = cube.endpoints(*e);
      EXPECT_TRUE((a == VertexId{v} && b == w) || (a == w && b == VertexId{v}));
    }
  }
  EXPECT_FALSE(cube.edge_between(VertexId{0}, VertexId{2}).has_value());
}

}  // namespace
}  // namespace polytrunc
