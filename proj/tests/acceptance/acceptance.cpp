// Acceptance run: the library's own verification suite, each criterion
// cross-checked against the brute-force oracles where they are tractable.
// Prints one line per criterion and exits nonzero if any fails.

#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hpoly/catalog.hpp"
#include "hpoly/constructions.hpp"
#include "hpoly/coset.hpp"
#include "hpoly/hereditary.hpp"
#include "hpoly/presentation.hpp"
#include "hpoly/verify.hpp"
#include "oracles.hpp"

using namespace hpoly;

namespace {

struct Cross {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

void summary_is(Cross& c, const std::string& label, const FacePoset& p, std::size_t k, std::size_t group,
                std::optional<std::vector<int>> class_I, bool hereditary) {
  const oracle::Summary s = oracle::summarize(p);
  c.expect(s.k == k, label + ": oracle k=" + std::to_string(s.k));
  c.expect(s.group_order == group, label + ": oracle group=" + std::to_string(s.group_order));
  c.expect(s.class_I == class_I, label + ": oracle class differs");
  c.expect(oracle::facet_hereditary(p) == hereditary, label + ": oracle hereditary differs");
}

// The table is a permutation action satisfying every relator, and the
// sampled right translations (maps commuting with the generators) exist, so
// the action is regular at those points.
void coset_table_sound(Cross& c, const GroupPresentation& pres, const CosetTable& t) {
  const std::size_t n = t.coset_count;
  const int gens = pres.generator_count();
  auto act = [&](std::size_t x, int letter) -> std::size_t {
    const int g = std::abs(letter) - 1;
    if (letter > 0 || t.columns == t.generators) return t.entries[x * t.columns + g];
    return t.entries[x * t.columns + t.generators + g];
  };
  for (int g = 1; g <= gens; ++g) {
    std::vector<char> hit(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = act(x, g);
      if (y >= n || hit[y] || act(y, -g) != x) {
        c.expect(false, "generator column is not a permutation");
        return;
      }
      hit[y] = 1;
    }
  }
  for (const Word& w : pres.relators) {
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t y = x;
      for (int l : w) y = act(y, l);
      if (y != x) {
        c.expect(false, "relator " + format_word(w) + " fails at coset " + std::to_string(x));
        return;
      }
    }
  }
  for (std::size_t target = 1; target < n; target += n / 64 + 1) {
    std::vector<std::size_t> img(n, SIZE_MAX);
    img[0] = target;
    std::deque<std::size_t> q{0};
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop_front();
      for (int g = 1; g <= gens; ++g) {
        const std::size_t y = act(x, g), z = act(img[x], g);
        if (img[y] == SIZE_MAX) {
          img[y] = z;
          q.push_back(y);
        } else if (img[y] != z) {
          c.expect(false, "coset action is not regular");
          return;
        }
      }
    }
  }
}

std::map<std::string, std::function<void(Cross&)>> cross_checks() {
  std::map<std::string, std::function<void(Cross&)>> m;
  m["AC1"] = [](Cross& c) {
    summary_is(c, "medial(cube)", medial(catalog_get("cube")), 2, 48, std::vector<int>{0, 1}, true);
    summary_is(c, "medial(tetrahedron)", medial(catalog_get("tetrahedron")), 1, 48, std::nullopt, true);
  };
  m["AC2"] = [](Cross& c) {
    const FacePoset n = catalog_get("n98-6");
    summary_is(c, "n98-6", n, 1, 1920, std::nullopt, true);
    const oracle::Summary s = oracle::summarize(medial(n));
    c.expect(s.k == 2 && s.group_order == 1920 && s.class_I == std::vector<int>{0, 1},
             "medial(n98-6): oracle disagrees");
  };
  m["AC3"] = [](Cross& c) {
    const GroupPresentation pres = read_presentation(catalog_dir() / catalog_entry("u5512").file);
    const CosetTable t = coset_enumerate(pres);
    c.expect(t.coset_count == 30720, "u5512: " + std::to_string(t.coset_count) + " cosets");
    coset_table_sound(c, pres, t);
  };
  m["AC4"] = [](Cross& c) {
    for (const CatalogEntry& e : catalog_entries()) {
      if (e.slow || (e.expected.flags && *e.expected.flags > 2000)) continue;
      const FacePoset p = catalog_get(e.name);
      if (p.rank() != 3) continue;
      const oracle::Summary s = oracle::summarize(p);
      const bool regular = s.k == 1;
      const bool class01 = s.class_I == std::vector<int>{0, 1};
      c.expect(oracle::facet_hereditary(p) == (regular || class01), e.name + ": oracle breaks the equivalence");
    }
  };
  m["AC5"] = [](Cross& c) {
    summary_is(c, "2^triangle", two_power(polygon(3)), 1, 48, std::nullopt, true);
    summary_is(c, "2^square", two_power(polygon(4)), 1, 128, std::nullopt, true);
    summary_is(c, "2^t44-1-2", two_power(catalog_get("t44-1-2")), 2, 640, std::vector<int>{0}, false);
  };
  m["AC6"] = [](Cross& c) {
    summary_is(c, "extension of t44-1-2", chiral_extension(catalog_get("t44-1-2")), 2, 640, std::vector<int>{3},
               true);
  };
  m["AC7"] = [](Cross& c) {
    summary_is(c, "truncated tetrahedron", catalog_get("truncated-tetrahedron"), 3, 24, std::nullopt, false);
  };
  m["AC8"] = [](Cross& c) {
    const AlternatingResult r = alternating(catalog_get("t434-4"));
    const oracle::Summary s = oracle::summarize(r.poset);
    c.expect(s.flags == 3072, "alternating(t434-4): oracle flags " + std::to_string(s.flags));
    c.expect(s.group_order * s.k == s.flags, "alternating(t434-4): action not free");
    c.expect(oracle::facet_hereditary(r.poset), "alternating(t434-4): oracle says not hereditary");
  };
  m["AC9"] = [](Cross& c) {
    for (const char* name : {"cube", "cuboctahedron", "t44-1-2", "hemicube", "truncated-tetrahedron"}) {
      const oracle::Summary s = oracle::summarize(catalog_get(name));
      c.expect(s.group_order * s.k == s.flags, std::string(name) + ": action not free");
    }
  };
  return m;
}

}  // namespace

int main() {
  VerifyOptions options;
  options.slow = true;
  const auto checks = cross_checks();
  bool all = true;
  for (const CheckResult& r : run_verification(options)) {
    Cross cross;
    if (auto it = checks.find(r.id); it != checks.end()) {
      try {
        it->second(cross);
      } catch (const std::exception& e) {
        cross.failures.push_back(std::string("oracle cross-check threw: ") + e.what());
      }
    }
    const bool ok = r.passed && cross.failures.empty();
    all = all && ok;
    std::printf("%s %s  %s (%.2fs of %.0fs)\n", r.id.c_str(), ok ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.budget_seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    for (const auto& f : cross.failures) std::printf("    oracle: %s\n", f.c_str());
  }
  return all ? 0 : 1;
}
