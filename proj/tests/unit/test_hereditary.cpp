#include <gtest/gtest.h>

#include "hpoly/catalog.hpp"
#include "hpoly/constructions.hpp"
#include "hpoly/hereditary.hpp"
#include "oracles.hpp"

using namespace hpoly;

TEST(Hereditary, Examples) {
  EXPECT_TRUE(hereditary_report(catalog_get("cuboctahedron")).facet_hereditary);
  EXPECT_FALSE(hereditary_report(catalog_get("t44-1-2")).facet_hereditary);
  const HereditaryReport tt = hereditary_report(catalog_get("truncated-tetrahedron"));
  EXPECT_FALSE(tt.facet_hereditary);
  EXPECT_FALSE(tt.chirally_hereditary);
}

TEST(Hereditary, MatchesOracle) {
  for (const char* name : {"cube", "cuboctahedron", "icosidodecahedron", "t44-1-2", "t44-1-3", "t44-2-2",
                           "truncated-tetrahedron", "hemicube", "t63-2-2"}) {
    const FacePoset p = catalog_get(name);
    EXPECT_EQ(SymmetryAnalysis(p).facet_hereditary(), oracle::facet_hereditary(p)) << name;
  }
  const FacePoset ext = chiral_extension(catalog_get("t44-1-2"));
  EXPECT_EQ(SymmetryAnalysis(ext).facet_hereditary(), oracle::facet_hereditary(ext));
  const FacePoset tp = two_power(catalog_get("t44-1-2"));
  EXPECT_EQ(SymmetryAnalysis(tp).facet_hereditary(), oracle::facet_hereditary(tp));
}

TEST(Hereditary, PerFacetCounts) {
  const SymmetryAnalysis a(catalog_get("t44-1-2"));
  for (const SectionCheck& c : a.section_checks(-1, 2, false)) {
    EXPECT_EQ(c.group_order, 8u);
    EXPECT_EQ(c.extends, 4u);
    EXPECT_FALSE(c.ok());
    EXPECT_TRUE(c.rotation_ok());
  }
}

TEST(Hereditary, WitnessIsNotAnImage) {
  const SymmetryAnalysis a(catalog_get("truncated-tetrahedron"));
  bool found = false;
  for (const SectionCheck& c : a.section_checks(-1, 2, false)) {
    if (!c.witness) continue;
    found = true;
    // The witness flag is the image of a section automorphism that does not
    // extend, so no automorphism maps a flag of the facet's orbit there.
    EXPECT_NE(a.orbits().orbit_of[*c.witness], a.orbits().orbit_of[a.group().base_flag]);
  }
  EXPECT_TRUE(found);
}

TEST(JFace, TruncatedTetrahedron) {
  const FacePoset p = catalog_get("truncated-tetrahedron");
  EXPECT_TRUE(j_face_hereditary(p, 1, false));
  EXPECT_FALSE(j_face_hereditary(p, 2, false));
  EXPECT_THROW(j_face_hereditary(p, 3, false), std::exception);
  EXPECT_THROW(j_face_hereditary(p, 0, false), std::exception);
}

TEST(JFace, CuboctahedronStrong) {
  EXPECT_TRUE(j_face_hereditary(catalog_get("cuboctahedron"), 1, true));
}

TEST(Section, CubeAndErrors) {
  const FacePoset c = catalog_get("cube");
  EXPECT_TRUE(section_hereditary(c, 0, 2, false));
  EXPECT_TRUE(section_hereditary(c, 0, 2, true));
  EXPECT_THROW(section_hereditary(c, 1, 1, false), std::exception);
}

TEST(Section, AlternatingChiralToroidRegression) {
  const AlternatingResult r = alternating(catalog_get("t444-13-13"));
  const SymmetryAnalysis a(r.poset);
  // Recorded value of the exhaustive extension test.
  EXPECT_EQ(a.section_hereditary(0, 2, false), false);
  EXPECT_TRUE(a.facet_hereditary());
}

TEST(Chirally, Examples) {
  EXPECT_TRUE(chirally_hereditary(catalog_get("t44-1-2")));
  EXPECT_TRUE(chirally_hereditary(catalog_get("cuboctahedron")));
  EXPECT_FALSE(chirally_hereditary(catalog_get("truncated-tetrahedron")));
}

TEST(Report, KeysPresent) {
  const HereditaryReport r = hereditary_report(catalog_get("t434-4"));
  EXPECT_TRUE(r.facet_hereditary);
  EXPECT_EQ(r.per_facet.size(), 64u);
  EXPECT_EQ(r.j_face.size(), 6u);      // j = 1..3, strong or not
  EXPECT_EQ(r.sections.size(), 12u);   // 6 pairs i < j <= 3, strong or not
}
