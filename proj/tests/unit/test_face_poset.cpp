#include <gtest/gtest.h>

#include "hpoly/catalog.hpp"
#include "hpoly/error.hpp"
#include "hpoly/face_poset.hpp"
#include "hpoly/symmetry.hpp"
#include "hpoly/validate.hpp"
#include "oracles.hpp"

using namespace hpoly;

namespace {

FacePoset triangle() { return build_poset(3, {{{0, 1}, {1, 2}, {0, 2}}, }); }

// Vertices 0..7 as bits (x,y,z); edges join vertices differing in one bit.
FacePoset cube_by_hand() {
  std::vector<std::vector<FaceIndex>> edges;
  std::map<std::pair<FaceIndex, FaceIndex>, FaceIndex> edge_id;
  for (FaceIndex v = 0; v < 8; ++v) {
    for (FaceIndex b = 1; b < 8; b <<= 1) {
      if (v & b) continue;
      edge_id[{v, v | b}] = static_cast<FaceIndex>(edges.size());
      edges.push_back({v, v | b});
    }
  }
  std::vector<std::vector<FaceIndex>> squares;
  for (FaceIndex axis = 1; axis < 8; axis <<= 1) {
    for (FaceIndex side : {FaceIndex{0}, axis}) {
      std::vector<FaceIndex> sq;
      for (const auto& [pair, id] : edge_id) {
        if ((pair.first & axis) == side && (pair.second & axis) == side) sq.push_back(id);
      }
      squares.push_back(sq);
    }
  }
  return build_poset(8, {edges, squares});
}

}  // namespace

TEST(BuildPoset, Triangle) {
  const FacePoset t = triangle();
  EXPECT_EQ(t.rank(), 2);
  EXPECT_EQ(t.count_flags(), 6u);
  EXPECT_TRUE(validate(t).ok());
}

TEST(BuildPoset, CubeByHand) {
  const FacePoset c = cube_by_hand();
  EXPECT_EQ(c.face_count(0), 8u);
  EXPECT_EQ(c.face_count(1), 12u);
  EXPECT_EQ(c.face_count(2), 6u);
  EXPECT_EQ(c.count_flags(), 48u);
  EXPECT_TRUE(validate(c).ok());
  EXPECT_TRUE(is_isomorphic(c, catalog_get("cube")));
}

TEST(BuildPoset, EdgeOnOneVertexRejected) {
  EXPECT_THROW(build_poset(2, {{{0}, {0, 1}}}), PreconditionError);
}

TEST(BuildPoset, CountFlagsCap) {
  const FacePoset c = catalog_get("cube");
  EXPECT_EQ(c.count_flags(), 48u);
  EXPECT_EQ(c.count_flags(10), 11u);
}

TEST(Validate, Cube) { EXPECT_TRUE(validate(catalog_get("cube")).ok()); }

TEST(Validate, DiamondViolationHasWitness) {
  // Square 0123 plus a third edge 02 also placed in the face: vertex 0 lies
  // in three edges of the face.
  const FacePoset p = build_poset(4, {{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}}});
  const ValidationReport r = validate(p);
  ASSERT_FALSE(r.ok());
  const Violation* v = r.find(Axiom::diamond);
  ASSERT_NE(v, nullptr);
  EXPECT_FALSE(v->detail.empty());
}

TEST(Validate, TwoTrianglesNotConnected) {
  // Two disjoint triangles as the 2-faces of one rank-3 "polytope" would
  // violate diamonds; as a rank-2 poset (six vertices, six edges) the
  // greatest face sees two components.
  const FacePoset p = build_poset(6, {{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}});
  const ValidationReport r = validate(p);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.find(Axiom::strong_flag_connectivity), nullptr);
}

TEST(Validate, RequireValidThrows) {
  const FacePoset p = build_poset(6, {{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}});
  EXPECT_THROW(require_valid(p, "test"), NotPolytopalError);
}

TEST(Section, CubeFacetIsSquare) {
  const FacePoset c = catalog_get("cube");
  const FacePoset f = face_section(c, 2, 0);
  EXPECT_EQ(f.rank(), 2);
  EXPECT_EQ(f.vertex_count(), 4u);
}

TEST(Section, CubeVertexFigureIsTriangle) {
  const FacePoset v = co_face(catalog_get("cube"), 0, 3);
  EXPECT_EQ(v.rank(), 2);
  EXPECT_EQ(v.vertex_count(), 3u);
}

TEST(Section, TetrahedronEdgeIsSegment) {
  const FacePoset e = face_section(catalog_get("tetrahedron"), 1, 0);
  EXPECT_EQ(e.rank(), 1);
  EXPECT_EQ(e.vertex_count(), 2u);
}

TEST(Section, IncomparableBoundsRejected) {
  const FacePoset c = catalog_get("cube");
  // Vertex 0 and a square not containing it.
  FaceIndex far = 0;
  for (FaceIndex s = 0; s < c.face_count(2); ++s) {
    const auto vs = c.vertex_set(2, s);
    if (std::find(vs.begin(), vs.end(), 0u) == vs.end()) far = s;
  }
  EXPECT_THROW(section(c, {{0, 0}, {2, far}}), PreconditionError);
}

TEST(Dual, CubeIsOctahedron) {
  EXPECT_TRUE(is_isomorphic(dual(catalog_get("cube")), catalog_get("octahedron")));
  EXPECT_TRUE(is_isomorphic(dual(catalog_get("tetrahedron")), catalog_get("tetrahedron")));
}

TEST(Dual, Involution) {
  const FacePoset c = catalog_get("cuboctahedron");
  EXPECT_EQ(canonicalize(dual(dual(c))), canonicalize(c));
}

TEST(Schlafli, Types) {
  EXPECT_EQ(schlafli_type(catalog_get("cube")), (std::vector<int>{4, 3}));
  EXPECT_FALSE(schlafli_type(catalog_get("cuboctahedron")).has_value());
  EXPECT_EQ(schlafli_type(catalog_get("t44-1-2")), (std::vector<int>{4, 4}));
  EXPECT_EQ(schlafli_type(catalog_get("t434-4")), (std::vector<int>{4, 3, 4}));
}

TEST(Describable, CubeAndHemicube) {
  EXPECT_TRUE(is_describable(catalog_get("cube"), Describability::vertex));
  EXPECT_TRUE(is_describable(catalog_get("cube"), Describability::facet));
  const FacePoset h = catalog_get("hemicube");
  EXPECT_FALSE(is_describable(h, Describability::vertex));
  // Brute force: all three squares use all four vertices.
  for (FaceIndex s = 0; s < h.face_count(2); ++s) EXPECT_EQ(h.vertex_set(2, s).size(), 4u);
}

TEST(Bipartition, Classes) {
  auto count_yellow = [](const std::vector<VertexColor>& c) {
    return std::count(c.begin(), c.end(), VertexColor::yellow);
  };
  const auto cube = edge_bipartition(catalog_get("cube"));
  ASSERT_TRUE(cube.has_value());
  EXPECT_EQ(count_yellow(*cube), 4);
  EXPECT_EQ((*cube)[0], VertexColor::yellow);
  EXPECT_FALSE(edge_bipartition(catalog_get("tetrahedron")).has_value());
  const auto square = edge_bipartition(polygon(4));
  ASSERT_TRUE(square.has_value());
  EXPECT_EQ(count_yellow(*square), 2);
}

TEST(Canonicalize, Idempotent) {
  const FacePoset c = catalog_get("icosidodecahedron");
  EXPECT_EQ(canonicalize(canonicalize(c)), canonicalize(c));
}

TEST(Canonicalize, FacetPermutation) {
  const FacePoset p = dual(catalog_get("cuboctahedron"));
  std::vector<FaceIndex> perm;
  const FacePoset q = canonicalize(p, &perm);
  ASSERT_EQ(perm.size(), p.facet_count());
  for (FaceIndex f = 0; f < p.facet_count(); ++f) {
    EXPECT_EQ(p.vertex_set(2, f).size(), q.vertex_set(2, perm[f]).size());
  }
}

TEST(FlagCount, MatchesOracle) {
  for (const char* name : {"cube", "cuboctahedron", "hemicube", "t44-1-3", "truncated-tetrahedron", "simplex-4"}) {
    const FacePoset p = catalog_get(name);
    EXPECT_EQ(p.count_flags(), oracle::enumerate_flags(p).chains.size()) << name;
  }
}
