#include <gtest/gtest.h>

#include "hpoly/catalog.hpp"
#include "hpoly/flag_graph.hpp"
#include "hpoly/symmetry.hpp"
#include "oracles.hpp"

using namespace hpoly;

TEST(FlagGraph, PentagonInvolutions) {
  const FlagGraph fg = flag_graph(polygon(5));
  ASSERT_EQ(fg.flag_count(), 10u);
  for (int i = 0; i < 2; ++i) {
    for (FlagIndex f = 0; f < 10; ++f) {
      EXPECT_NE(fg.adjacent(i, f), f);
      EXPECT_EQ(fg.adjacent(i, fg.adjacent(i, f)), f);
    }
  }
  EXPECT_TRUE(check_flag_graph(fg).empty());
}

TEST(FlagGraph, CubeRoundTrip) {
  const FacePoset c = catalog_get("cube");
  const FlagGraph fg = flag_graph(c);
  EXPECT_EQ(fg.flag_count(), 48u);
  EXPECT_TRUE(is_isomorphic(poset_from_flag_graph(fg), c));
}

TEST(FlagGraph, MatchesOracleAdjacency) {
  const FacePoset p = catalog_get("cuboctahedron");
  const FlagGraph fg = flag_graph(p);
  const oracle::Flags o = oracle::enumerate_flags(p);
  ASSERT_EQ(fg.flag_count(), o.chains.size());
  // Both number flags in lexicographic chain order.
  for (FlagIndex f = 0; f < fg.flag_count(); ++f) {
    const auto c = fg.chain(f);
    EXPECT_TRUE(std::equal(c.begin(), c.end(), o.chains[f].begin()));
    for (int i = 0; i < 3; ++i) EXPECT_EQ(fg.adjacent(i, f), o.adj[static_cast<std::size_t>(i)][f]);
  }
}

TEST(FlagGraph, CommutationViolationRejected) {
  // adj0 and adj2 generate a dihedral group of order 6, so they do not commute.
  const std::vector<std::vector<FlagIndex>> adj = {
      {1, 0, 3, 2, 5, 4}, {3, 4, 5, 0, 1, 2}, {5, 2, 1, 4, 3, 0}};
  const FlagGraph fg(3, adj);
  EXPECT_FALSE(check_flag_graph(fg).empty());
  EXPECT_ANY_THROW(poset_from_flag_graph(fg));
}

TEST(Automorphisms, Orders) {
  EXPECT_EQ(automorphisms(flag_graph(catalog_get("cube"))).order(), 48u);
  EXPECT_EQ(automorphisms(flag_graph(polygon(5))).order(), 10u);
  EXPECT_EQ(automorphisms(flag_graph(catalog_get("t44-1-2"))).order(), 20u);
}

TEST(Automorphisms, MatchOracle) {
  for (const char* name : {"cube", "cuboctahedron", "t44-1-2", "t44-2-0", "hemicube", "truncated-tetrahedron",
                           "icosidodecahedron", "t63-2-2", "simplex-4"}) {
    const FacePoset p = catalog_get(name);
    const OrbitClassification o = flag_orbits(flag_graph(p));
    const oracle::Summary s = oracle::summarize(p);
    EXPECT_EQ(o.group_order, s.group_order) << name;
    EXPECT_EQ(o.k, s.k) << name;
    EXPECT_EQ(o.class_I, s.class_I) << name;
  }
}

TEST(Automorphisms, BaseOrbitSortedAndUnique) {
  const auto g = automorphisms(flag_graph(catalog_get("dodecahedron")));
  EXPECT_TRUE(std::is_sorted(g.base_orbit.begin(), g.base_orbit.end()));
  EXPECT_EQ(std::adjacent_find(g.base_orbit.begin(), g.base_orbit.end()), g.base_orbit.end());
}

TEST(Automorphisms, ExtensionIsUnique) {
  const FlagGraph fg = flag_graph(catalog_get("cuboctahedron"));
  const auto g = automorphisms(fg);
  for (FlagIndex b : g.base_orbit) {
    const auto m = extend_flag_map(fg, fg, g.base_flag, b);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ((*m)[g.base_flag], b);
  }
  // A flag outside the base orbit is not an image.
  for (FlagIndex f = 0; f < fg.flag_count(); ++f) {
    if (!std::binary_search(g.base_orbit.begin(), g.base_orbit.end(), f)) {
      EXPECT_FALSE(extend_flag_map(fg, fg, g.base_flag, f).has_value());
      break;
    }
  }
}

TEST(FlagOrbits, Verdicts) {
  auto orbits = [](const char* name) { return flag_orbits(flag_graph(catalog_get(name))); };
  EXPECT_EQ(orbits("cube").verdict, Verdict::regular);
  EXPECT_EQ(orbits("cube").verdict_text(), "regular");
  const auto co = orbits("cuboctahedron");
  EXPECT_EQ(co.k, 2u);
  EXPECT_EQ(co.class_I, (std::vector<int>{0, 1}));
  EXPECT_EQ(co.verdict, Verdict::two_orbit);
  const auto tt = orbits("truncated-tetrahedron");
  EXPECT_EQ(tt.k, 3u);
  EXPECT_EQ(tt.verdict_text(), "3-orbit");
  EXPECT_FALSE(tt.class_I.has_value());
  const auto ch = orbits("t44-1-2");
  EXPECT_EQ(ch.verdict, Verdict::chiral);
  EXPECT_EQ(ch.class_I, std::vector<int>{});
}

TEST(FlagOrbits, OrbitLabelsAreMinima) {
  const auto o = flag_orbits(flag_graph(catalog_get("truncated-tetrahedron")));
  for (FlagIndex f = 0; f < o.orbit_of.size(); ++f) {
    EXPECT_LE(o.orbit_of[f], f);
    EXPECT_EQ(o.orbit_of[o.orbit_of[f]], o.orbit_of[f]);
  }
}

TEST(Transitivity, Examples) {
  const FlagGraph co = flag_graph(catalog_get("cuboctahedron"));
  EXPECT_TRUE(transitivity(co, 0, TransitivityMode::face));
  EXPECT_FALSE(transitivity(co, 2, TransitivityMode::face));
  EXPECT_TRUE(transitivity(flag_graph(catalog_get("cube")), 2, TransitivityMode::chain));
  EXPECT_TRUE(transitivity(flag_graph(catalog_get("truncated-tetrahedron")), 0, TransitivityMode::face));
  EXPECT_THROW(transitivity(co, 3, TransitivityMode::face), std::exception);
}

TEST(Transitivity, FaceOrbitsMatchOracle) {
  for (const char* name : {"cuboctahedron", "truncated-tetrahedron", "t44-1-3"}) {
    const FacePoset p = catalog_get(name);
    const FlagGraph fg = flag_graph(p);
    for (int r = 0; r < 3; ++r) {
      EXPECT_EQ(transitivity(fg, r, TransitivityMode::face), oracle::face_orbits(p, r) == 1) << name << " " << r;
    }
  }
}

TEST(Isomorphism, DistinguishesAndMatches) {
  EXPECT_TRUE(is_isomorphic(catalog_get("t44-1-2"), catalog_get("t44-2-1")));
  EXPECT_FALSE(is_isomorphic(catalog_get("cube"), catalog_get("octahedron")));
  EXPECT_FALSE(is_isomorphic(catalog_get("t44-1-2"), catalog_get("t44-2-0")));
}
