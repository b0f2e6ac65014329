#include <gtest/gtest.h>

#include "hpoly/catalog.hpp"
#include "hpoly/constructions.hpp"
#include "hpoly/coset.hpp"
#include "hpoly/error.hpp"
#include "hpoly/hereditary.hpp"
#include "hpoly/perm_group.hpp"
#include "hpoly/presentation.hpp"
#include "hpoly/validate.hpp"
#include "oracles.hpp"

using namespace hpoly;

namespace {

OrbitClassification orbits_of(const FacePoset& p) { return flag_orbits(flag_graph(p)); }

PermutationGroup group_of(const std::string& name) {
  return permutation_group(coset_enumerate(read_presentation(catalog_dir() / catalog_entry(name).file)));
}

}  // namespace

TEST(Medial, Cube) {
  const FacePoset m = medial(catalog_get("cube"));
  EXPECT_EQ(m.face_count(0), 12u);
  EXPECT_EQ(m.face_count(1), 24u);
  EXPECT_EQ(m.face_count(2), 14u);
  EXPECT_TRUE(is_isomorphic(m, catalog_get("cuboctahedron")));
  const oracle::Summary s = oracle::summarize(m);
  EXPECT_EQ(s.k, 2u);
  EXPECT_EQ(s.class_I, (std::vector<int>{0, 1}));
  EXPECT_TRUE(oracle::facet_hereditary(m));
}

TEST(Medial, TetrahedronIsOctahedron) {
  const FacePoset m = medial(catalog_get("tetrahedron"));
  EXPECT_TRUE(is_isomorphic(m, catalog_get("octahedron")));
  EXPECT_EQ(orbits_of(m).verdict, Verdict::regular);
}

TEST(Medial, GroupOrderAndFlags) {
  for (const char* name : {"cube", "tetrahedron", "n98-6", "t44-1-2", "hemicube"}) {
    const FacePoset p = catalog_get(name);
    const FacePoset m = medial(p);
    EXPECT_EQ(m.count_flags(), 2 * p.count_flags()) << name;
    const bool self_dual = is_isomorphic(p, dual(p));
    const std::size_t gp = orbits_of(p).group_order;
    EXPECT_EQ(orbits_of(m).group_order, self_dual ? 2 * gp : gp) << name;
    // Regular exactly for self-dual inputs, when the input is regular.
    if (orbits_of(p).verdict == Verdict::regular) {
      EXPECT_EQ(orbits_of(m).verdict == Verdict::regular, self_dual) << name;
    }
  }
}

TEST(Medial, N98) {
  const FacePoset m = medial(catalog_get("n98-6"));
  EXPECT_EQ(schlafli_type(m), (std::vector<int>{5, 4}));
  const SymmetryAnalysis a(m);
  EXPECT_EQ(a.orbits().group_order, 1920u);
  EXPECT_EQ(a.orbits().k, 2u);
  EXPECT_EQ(a.orbits().class_I, (std::vector<int>{0, 1}));
  EXPECT_TRUE(a.facet_hereditary());
}

TEST(Medial, RankMustBeThree) {
  EXPECT_THROW(medial(catalog_get("t434-4")), PreconditionError);
  EXPECT_THROW(medial(polygon(4)), PreconditionError);
}

TEST(Halved, CubeIsTetrahedron) {
  EXPECT_TRUE(is_isomorphic(halved(catalog_get("cube")), catalog_get("tetrahedron")));
}

TEST(Halved, MatchesGroupLevelEta) {
  const GroupPresentation cube = parse_presentation(
      "cgroup 1\nkind reflection\nrank 3\nauto-relators on\nrel (g0 g1)^4\nrel (g1 g2)^3\n");
  const PermutationGroup cg = permutation_group(coset_enumerate(cube));
  const FacePoset eta = poset_from_flag_graph(flag_graph_from_reflection_group(
      halving(cg, HalvingVariant::eta, GroupKind::reflection)));
  EXPECT_TRUE(is_isomorphic(halved(catalog_get("cube")), eta));
}

TEST(Halved, Toroid22) {
  const FacePoset t = catalog_get("t44-2-2");
  const FacePoset h = halved(t);
  EXPECT_EQ(2 * h.count_flags(), t.count_flags());
  EXPECT_EQ(schlafli_type(h), (std::vector<int>{4, 4}));
  EXPECT_TRUE(is_isomorphic(h, dual(h)));
  const PermutationGroup g = group_of("t44-2-2");
  const FacePoset eta = poset_from_flag_graph(flag_graph_from_rotation_group(
      halving(g, HalvingVariant::eta, GroupKind::rotation)));
  EXPECT_TRUE(is_isomorphic(h, eta));
}

TEST(Halved, ColourChoiceIrrelevant) {
  // Swap vertex 0 with a vertex of the other colour, so the construction
  // keeps the other class.
  const FacePoset c = catalog_get("t63-2-2");
  const auto colours = *edge_bipartition(c);
  FaceIndex other = 0;
  while (colours[other] == colours[0]) ++other;
  auto lists = cover_lists(c);
  for (auto& edge : lists[0]) {
    for (auto& x : edge) x = x == 0 ? other : x == other ? 0 : x;
  }
  const FacePoset d = build_poset(c.vertex_count(), lists);
  // The old vertex 0, now labelled `other`, lands in the dropped class.
  EXPECT_NE((*edge_bipartition(d))[other], VertexColor::yellow);
  EXPECT_TRUE(is_isomorphic(halved(c), halved(d)));
}

TEST(Halved, Errors) {
  EXPECT_THROW(halved(catalog_get("tetrahedron")), PreconditionError);
  EXPECT_THROW(halved(catalog_get("t44-1-2")), PreconditionError);  // odd cycles
}

TEST(TwoPower, TriangleIsCube) {
  EXPECT_TRUE(is_isomorphic(two_power(polygon(3)), catalog_get("cube")));
}

TEST(TwoPower, Square) {
  const FacePoset p = two_power(polygon(4));
  EXPECT_EQ(p.vertex_count(), 16u);
  EXPECT_EQ(p.rank(), 3);
  EXPECT_EQ(oracle::summarize(p).group_order, 128u);
}

TEST(TwoPower, OrbitsPreserved) {
  for (const char* name : {"cuboctahedron", "t44-1-2", "cube"}) {
    const FacePoset k = catalog_get(name);
    const FacePoset p = two_power(k);
    EXPECT_EQ(p.count_flags(), (std::size_t{1} << k.vertex_count()) * k.count_flags()) << name;
    const auto ok = orbits_of(k);
    const auto op = orbits_of(p);
    EXPECT_EQ(op.k, ok.k) << name;
    if (ok.verdict == Verdict::regular) EXPECT_EQ(op.verdict, Verdict::regular) << name;
    if (ok.verdict == Verdict::chiral) EXPECT_EQ(op.class_I, std::vector<int>{0}) << name;
  }
}

TEST(TwoPower, Cuboctahedron) {
  const auto o = orbits_of(two_power(catalog_get("cuboctahedron")));
  EXPECT_EQ(o.k, 2u);
  EXPECT_EQ(o.class_I, (std::vector<int>{0, 1, 2}));
}

TEST(TwoPower, Errors) {
  // Every face of the hemicube contains all four vertices.
  EXPECT_THROW(two_power(catalog_get("hemicube")), PreconditionError);
  TwoPowerOptions small;
  small.max_vertices = 8;
  EXPECT_THROW(two_power(catalog_get("cuboctahedron"), small), LimitError);
}

TEST(ChiralExtension, Toroid) {
  const FacePoset q = catalog_get("t44-1-2");
  const FacePoset x = chiral_extension(q);
  const SymmetryAnalysis a(x);
  EXPECT_TRUE(a.facet_hereditary());
  EXPECT_EQ(a.orbits().k, 2u);
  EXPECT_EQ(a.orbits().class_I, std::vector<int>{3});
  EXPECT_EQ(a.orbits().group_order, (std::size_t{1} << q.facet_count()) * 20u);
  for (FaceIndex f = 0; f < x.facet_count(); ++f) EXPECT_TRUE(is_isomorphic(face_section(x, 3, f), q));
}

TEST(ChiralExtension, RegularRejected) {
  EXPECT_THROW(chiral_extension(catalog_get("t44-2-0")), PreconditionError);
}

TEST(Alternating, CubicToroid) {
  const FacePoset p = catalog_get("t434-4");
  const AlternatingResult r = alternating(p);
  EXPECT_EQ(r.poset.count_flags(), p.count_flags());
  EXPECT_EQ(r.poset.vertex_count(), 32u);
  EXPECT_EQ(r.ambiguous_ridges, 0u);
  std::size_t tetra = 0, octa = 0;
  for (FaceIndex f = 0; f < r.poset.facet_count(); ++f) {
    const auto t = schlafli_type(face_section(r.poset, 3, f));
    ASSERT_TRUE(t.has_value());
    if (*t == std::vector<int>{3, 3}) {
      ++tetra;
      EXPECT_EQ(r.facet_kind[f], AlternatingFacet::halved_facet);
    } else {
      EXPECT_EQ(*t, (std::vector<int>{3, 4}));
      EXPECT_EQ(r.facet_kind[f], AlternatingFacet::vertex_figure);
      ++octa;
    }
  }
  EXPECT_EQ(tetra, 64u);
  EXPECT_EQ(octa, 32u);
  EXPECT_TRUE(is_isomorphic(co_face(r.poset, 0, 0), catalog_get("cuboctahedron")));
  EXPECT_TRUE(SymmetryAnalysis(r.poset).facet_hereditary());
}

TEST(Alternating, ChiralToroid) {
  const FacePoset p = catalog_get("t444-13-13");
  const AlternatingPreconditionReport pre = alternating_preconditions(p);
  EXPECT_TRUE(pre.ok()) << pre.describe();
  const AlternatingResult r = alternating(p);
  const SymmetryAnalysis a(r.poset);
  EXPECT_EQ(a.orbits().k, 4u);
  EXPECT_TRUE(a.facet_hereditary());
  // Colour-preserving automorphisms of p (half of 2000) embed with index 1 or 2.
  const std::size_t colour_preserving = 1000;
  EXPECT_EQ(a.orbits().group_order % colour_preserving, 0u);
  EXPECT_LE(a.orbits().group_order / colour_preserving, 2u);
}

TEST(Alternating, EnantiomorphicVariantClashes) {
  const FacePoset p = catalog_get("t444-13-31");
  const AlternatingPreconditionReport pre = alternating_preconditions(p);
  EXPECT_TRUE(pre.bipartite);
  ASSERT_TRUE(pre.opposite_vertex_clash.has_value());
  const auto& c = *pre.opposite_vertex_clash;
  EXPECT_NE(c.face_a, c.face_b);
  for (FaceIndex s : {c.face_a, c.face_b}) {
    const auto vs = p.vertex_set(2, s);
    EXPECT_TRUE(std::binary_search(vs.begin(), vs.end(), c.vertex_u));
    EXPECT_TRUE(std::binary_search(vs.begin(), vs.end(), c.vertex_v));
  }
  EXPECT_THROW(alternating(p), PreconditionError);
}

TEST(Alternating, WrongRank) { EXPECT_THROW(alternating(catalog_get("cube")), PreconditionError); }
