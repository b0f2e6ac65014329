#include "hpoly/catalog.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "hpoly/error.hpp"
#include "hpoly/hereditary.hpp"
#include "hpoly/perm_group.hpp"
#include "hpoly/presentation.hpp"
#include "hpoly/validate.hpp"
#include "internal/hull.hpp"

#ifndef HPOLY_CATALOG_DEFAULT_DIR
#define HPOLY_CATALOG_DEFAULT_DIR "catalog"
#endif

namespace hpoly {

namespace {

using internal::Point;

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

std::vector<Point> join(std::vector<Point> a, const std::vector<Point>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Parses "<prefix>-<n>" and returns n, or -1.
int suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size() + 1, prefix + "-") != 0) return -1;
  const std::string digits = name.substr(prefix.size() + 1);
  if (digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos) return -1;
  return std::stoi(digits);
}

template <typename T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

std::vector<CatalogEntry> load_entries(const std::filesystem::path& dir) {
  const auto path = dir / "catalog.json";
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  std::vector<CatalogEntry> out;
  for (const auto& j : doc.at("entries")) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    const auto source = j.at("source").get<std::string>();
    if (source == "builtin") {
      e.source = CatalogSource::builtin;
    } else {
      e.source = CatalogSource::presentation;
      e.file = source;
    }
    e.description = j.value("description", "");
    e.slow = j.value("slow", false);
    if (j.contains("expect")) {
      const auto& x = j.at("expect");
      auto& ex = e.expected;
      ex.flags = get_opt<std::size_t>(x, "flags");
      ex.group_order = get_opt<std::size_t>(x, "group");
      ex.orbits = get_opt<std::size_t>(x, "k");
      ex.class_I = get_opt<std::vector<int>>(x, "class");
      ex.verdict = get_opt<std::string>(x, "verdict");
      ex.hereditary = get_opt<bool>(x, "hereditary");
      ex.faces = get_opt<std::vector<std::size_t>>(x, "faces");
      ex.schlafli = get_opt<std::vector<int>>(x, "type");
      ex.self_dual = get_opt<bool>(x, "self_dual");
    }
    out.push_back(std::move(e));
  }
  return out;
}

template <typename T>
std::string show(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

template <typename T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

template <typename T>
void expect_eq(std::vector<std::string>& out, const char* what, const std::optional<T>& want, const T& got) {
  if (want && *want != got) out.push_back(std::string(what) + ": expected " + show(*want) + ", got " + show(got));
}

}  // namespace

std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("HPOLY_CATALOG_DIR"); env && *env) return env;
  return HPOLY_CATALOG_DEFAULT_DIR;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static std::mutex mu;
  static std::map<std::string, std::vector<CatalogEntry>> cache;
  const std::lock_guard lock(mu);
  const auto dir = catalog_dir().string();
  auto it = cache.find(dir);
  if (it == cache.end()) it = cache.emplace(dir, load_entries(dir)).first;
  return it->second;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw Error("unknown catalog entry '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"tetrahedron", "cube",        "octahedron",       "dodecahedron",          "icosahedron",
          "cuboctahedron", "icosidodecahedron", "truncated-tetrahedron", "t434-4"};
}

FacePoset cubic_toroid(int n) {
  if (n < 3) throw PreconditionError("cubic toroid needs n >= 3");
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t cells = un * un * un;
  auto point = [&](std::size_t x, std::size_t y, std::size_t z) { return (x % un) * un * un + (y % un) * un + z % un; };
  auto shift = [&](std::size_t p, int axis) {
    std::size_t c[3] = {p / (un * un), (p / un) % un, p % un};
    ++c[axis];
    return point(c[0], c[1], c[2]);
  };
  // A j-face is (base point, axis subset S with |S| = j); index it as
  // point * (subsets of that size) + position of S.
  std::array<std::vector<unsigned>, 4> subsets;
  for (unsigned s = 0; s < 8; ++s) subsets[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  auto index_of = [&](std::size_t p, unsigned s) {
    const auto& list = subsets[static_cast<std::size_t>(__builtin_popcount(s))];
    std::size_t pos = 0;
    while (list[pos] != s) ++pos;
    return static_cast<FaceIndex>(p * list.size() + pos);
  };
  std::vector<std::vector<std::vector<FaceIndex>>> covers(3);
  for (int rank = 1; rank <= 3; ++rank) {
    const auto& list = subsets[static_cast<std::size_t>(rank)];
    auto& level = covers[static_cast<std::size_t>(rank - 1)];
    level.resize(cells * list.size());
    for (std::size_t p = 0; p < cells; ++p) {
      for (std::size_t k = 0; k < list.size(); ++k) {
        const unsigned s = list[k];
        auto& cov = level[p * list.size() + k];
        for (int axis = 0; axis < 3; ++axis) {
          if (!(s >> axis & 1u)) continue;
          const unsigned rest = s & ~(1u << axis);
          cov.push_back(index_of(p, rest));
          cov.push_back(index_of(shift(p, axis), rest));
        }
      }
    }
  }
  return canonicalize(build_poset(cells, std::move(covers)));
}

FacePoset builtin_poset(const std::string& name) {
  using internal::convex_polyhedron;
  using internal::expand_points;
  if (int m = suffix_number(name, "polygon"); m >= 0) {
    if (m < 2) throw Error("polygon needs at least 2 vertices");
    return polygon(static_cast<std::size_t>(m));
  }
  if (int n = suffix_number(name, "simplex"); n >= 0) {
    if (n < 1) throw Error("simplex needs rank at least 1");
    return simplex(n);
  }
  if (name == "tetrahedron") return simplex(3);
  if (name == "cube") return convex_polyhedron(expand_points({{1, 1, 1}}, false, false));
  if (name == "octahedron") return convex_polyhedron(expand_points({{1, 0, 0}}, false, false));
  if (name == "icosahedron") return convex_polyhedron(expand_points({{0, 1, kPhi}}, false, false));
  if (name == "dodecahedron") {
    return convex_polyhedron(
        join(expand_points({{1, 1, 1}}, false, false), expand_points({{0, 1 / kPhi, kPhi}}, false, false)));
  }
  if (name == "cuboctahedron") return convex_polyhedron(expand_points({{1, 1, 0}}, true, false));
  if (name == "icosidodecahedron") {
    return convex_polyhedron(join(expand_points({{0, 0, kPhi}}, false, false),
                                  expand_points({{0.5, kPhi / 2, kPhi * kPhi / 2}}, false, false)));
  }
  if (name == "truncated-tetrahedron") return convex_polyhedron(expand_points({{3, 1, 1}}, true, true));
  if (name == "t434-4") return cubic_toroid(4);
  throw Error("unknown built-in polytope '" + name + "'");
}

FacePoset catalog_build(const std::string& name, const Limits& limits) {
  if (suffix_number(name, "polygon") >= 0 || suffix_number(name, "simplex") >= 0) return builtin_poset(name);
  const CatalogEntry& e = catalog_entry(name);
  if (e.source == CatalogSource::builtin) return builtin_poset(e.name);
  const auto pres = read_presentation(catalog_dir() / e.file);
  return poset_from_presentation(pres, limits.max_flags);
}

std::vector<std::string> check_expectation(const CatalogExpectation& ex, const FacePoset& p, const Limits& limits) {
  std::vector<std::string> out;
  std::vector<std::size_t> faces;
  for (int r = 0; r < p.rank(); ++r) faces.push_back(p.face_count(r));
  expect_eq(out, "faces", ex.faces, faces);
  if (ex.schlafli) {
    const auto type = schlafli_type(p);
    if (!type || *type != *ex.schlafli) out.push_back("type: expected " + show(*ex.schlafli) + ", got " +
                                                       (type ? show(*type) : std::string("not equivelar")));
  }
  const bool needs_symmetry = ex.flags || ex.group_order || ex.orbits || ex.class_I || ex.verdict || ex.hereditary;
  if (needs_symmetry) {
    const SymmetryAnalysis a(p, limits);
    expect_eq(out, "flags", ex.flags, a.flags().flag_count());
    expect_eq(out, "group", ex.group_order, a.orbits().group_order);
    expect_eq(out, "k", ex.orbits, a.orbits().k);
    if (ex.class_I) {
      if (!a.orbits().class_I) {
        out.push_back("class: expected " + show(*ex.class_I) + ", got none");
      } else {
        expect_eq(out, "class", ex.class_I, *a.orbits().class_I);
      }
    }
    expect_eq(out, "verdict", ex.verdict, a.orbits().verdict_text());
    if (ex.hereditary) expect_eq(out, "hereditary", ex.hereditary, a.facet_hereditary());
  }
  if (ex.self_dual) expect_eq(out, "self_dual", ex.self_dual, is_isomorphic(p, dual(p), limits));
  return out;
}

FacePoset catalog_get(const std::string& name, const Limits& limits) {
  FacePoset p = catalog_build(name, limits);
  require_valid(p, name.c_str(), limits);
  if (suffix_number(name, "polygon") >= 0 || suffix_number(name, "simplex") >= 0) return p;
  const auto mismatches = check_expectation(catalog_entry(name).expected, p, limits);
  if (!mismatches.empty()) {
    std::string msg = "catalog entry '" + name + "' does not match its expectations:";
    for (const auto& m : mismatches) msg += "\n  " + m;
    throw Error(msg);
  }
  return p;
}

}  // namespace hpoly
