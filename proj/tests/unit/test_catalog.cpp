#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "hpoly/catalog.hpp"
#include "hpoly/error.hpp"
#include "hpoly/validate.hpp"

using namespace hpoly;

TEST(Catalog, EntriesListed) {
  const auto& entries = catalog_entries();
  ASSERT_FALSE(entries.empty());
  EXPECT_EQ(catalog_entry("cube").source, CatalogSource::builtin);
  EXPECT_EQ(catalog_entry("u5512").source, CatalogSource::presentation);
  EXPECT_TRUE(catalog_entry("u5512").slow);
}

TEST(Catalog, EveryFastEntryMeetsItsExpectations) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.slow) continue;
    SCOPED_TRACE(e.name);
    EXPECT_NO_THROW(catalog_get(e.name));
  }
}

TEST(Catalog, ParametricNames) {
  EXPECT_EQ(catalog_get("polygon-7").count_flags(), 14u);
  EXPECT_EQ(catalog_get("simplex-5").count_flags(), 720u);
}

TEST(Catalog, UnknownName) {
  EXPECT_THROW(catalog_entry("no-such-thing"), Error);
  EXPECT_THROW(catalog_get("no-such-thing"), Error);
}

TEST(Catalog, MismatchReported) {
  CatalogExpectation ex;
  ex.flags = 49;
  const auto problems = check_expectation(ex, catalog_build("cube"));
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("48"), std::string::npos);
}

TEST(Catalog, DirectoryOverride) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hpoly-catalog-test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "catalog.json");
    out << R"({"entries": [{"name": "cube", "source": "builtin", "expect": {"flags": 48}}]})";
  }
  const char* old = std::getenv("HPOLY_CATALOG_DIR");
  const std::string saved = old ? old : "";
  setenv("HPOLY_CATALOG_DIR", dir.c_str(), 1);
  EXPECT_EQ(catalog_dir(), dir);
  EXPECT_EQ(catalog_entries().size(), 1u);
  EXPECT_EQ(catalog_get("cube").count_flags(), 48u);
  EXPECT_THROW(catalog_entry("u5512"), Error);
  if (old) {
    setenv("HPOLY_CATALOG_DIR", saved.c_str(), 1);
  } else {
    unsetenv("HPOLY_CATALOG_DIR");
  }
  EXPECT_NO_THROW(catalog_entry("u5512"));
  std::filesystem::remove_all(dir);
}
