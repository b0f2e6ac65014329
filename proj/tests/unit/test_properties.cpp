#include <gtest/gtest.h>

#include "hpoly/catalog.hpp"
#include "hpoly/hereditary.hpp"
#include "hpoly/symmetry.hpp"
#include "oracles.hpp"

using namespace hpoly;

namespace {

// Small enough for the brute-force oracles.
bool oracle_sized(const CatalogEntry& e) {
  if (e.slow) return false;
  return !e.expected.flags || *e.expected.flags <= 2000;
}

}  // namespace

TEST(Properties, CatalogAgreesWithOracles) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (!oracle_sized(e)) continue;
    SCOPED_TRACE(e.name);
    const FacePoset p = catalog_get(e.name);
    const SymmetryAnalysis a(p);
    const oracle::Summary s = oracle::summarize(p);
    EXPECT_EQ(a.flags().flag_count(), s.flags);
    EXPECT_EQ(a.orbits().group_order, s.group_order);
    EXPECT_EQ(a.orbits().k, s.k);
    EXPECT_EQ(a.orbits().class_I, s.class_I);
    EXPECT_EQ(a.facet_hereditary(), oracle::facet_hereditary(p));
    for (int r = 0; r < p.rank(); ++r) {
      EXPECT_EQ(a.transitive(r, TransitivityMode::face), oracle::face_orbits(p, r) == 1) << "rank " << r;
    }
  }
}

TEST(Properties, FreeAction) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (!oracle_sized(e)) continue;
    SCOPED_TRACE(e.name);
    const SymmetryAnalysis a(catalog_get(e.name));
    const auto& o = a.orbits();
    EXPECT_EQ(o.group_order * o.k, a.flags().flag_count());
    // Orbits all have the same size.
    std::vector<std::size_t> size(a.flags().flag_count(), 0);
    for (FlagIndex f = 0; f < a.flags().flag_count(); ++f) ++size[o.orbit_of[f]];
    for (FlagIndex f = 0; f < a.flags().flag_count(); ++f) {
      if (o.orbit_of[f] == f) EXPECT_EQ(size[f], o.group_order);
    }
  }
}

TEST(Properties, RegularFacetsGiveHereditaryTwoOrbit) {
  // A 2-orbit polyhedron with regular facets in class {0,1} is hereditary;
  // rank-3 hereditary polytopes are regular or in that class.
  for (const CatalogEntry& e : catalog_entries()) {
    if (!oracle_sized(e)) continue;
    const FacePoset p = catalog_get(e.name);
    if (p.rank() != 3) continue;
    SCOPED_TRACE(e.name);
    const SymmetryAnalysis a(p);
    const bool regular = a.orbits().verdict == Verdict::regular;
    const bool class01 = a.orbits().class_I == std::vector<int>{0, 1};
    EXPECT_EQ(a.facet_hereditary(), regular || class01);
  }
}
