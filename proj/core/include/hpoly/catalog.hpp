#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hpoly/face_poset.hpp"

namespace hpoly {

enum class CatalogSource { builtin, presentation };

/// Values an entry must reproduce. Unset fields are not checked.
struct CatalogExpectation {
  std::optional<std::size_t> flags;
  std::optional<std::size_t> group_order;
  std::optional<std::size_t> orbits;        // k
  std::optional<std::vector<int>> class_I;  // only for k = 2
  std::optional<std::string> verdict;
  std::optional<bool> hereditary;
  std::optional<std::vector<std::size_t>> faces;  // f-vector, ranks 0..n-1
  std::optional<std::vector<int>> schlafli;
  std::optional<bool> self_dual;
};

struct CatalogEntry {
  std::string name;
  CatalogSource source = CatalogSource::builtin;
  std::string file;  // presentation file, relative to the catalog directory
  std::string description;
  bool slow = false;
  CatalogExpectation expected;
};

/// $HPOLY_CATALOG_DIR, or the directory the library was configured with.
std::filesystem::path catalog_dir();

/// Entries of catalog.json in file order. Loaded once per directory.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

/// Poset for a registered entry, or for "polygon-<m>" / "simplex-<n>",
/// without checking expectations.
FacePoset catalog_build(const std::string& name, const Limits& limits = {});

/// Builds, validates and checks the recorded expectations. Throws Error on
/// an unknown name or a mismatch.
FacePoset catalog_get(const std::string& name, const Limits& limits = {});

/// Mismatches between `p` and the expectation, one message per field.
std::vector<std::string> check_expectation(const CatalogExpectation& expected, const FacePoset& p,
                                           const Limits& limits = {});

/// Built-in constructions that do not come from a presentation file.
FacePoset builtin_poset(const std::string& name);
std::vector<std::string> builtin_names();

/// Cubic toroid {4,3,4} on the n x n x n torus (n >= 3).
FacePoset cubic_toroid(int n);

}  // namespace hpoly
