#include "hpoly/validate.hpp"

#include <algorithm>
#include <sstream>

#include "hpoly/error.hpp"
#include "hpoly/flag_graph.hpp"
#include "internal/union_find.hpp"

namespace hpoly {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::graded: return "graded";
    case Axiom::diamond: return "diamond";
    case Axiom::strong_flag_connectivity: return "strong-flag-connectivity";
    case Axiom::covers_two: return "covers-two";
  }
  return "?";
}

const Violation* ValidationReport::find(Axiom a) const {
  for (const auto& v : violations) {
    if (v.axiom == a) return &v;
  }
  return nullptr;
}

namespace {

std::optional<Violation> check_covers_two(const FacePoset& p) {
  for (int r = 1; r < p.rank(); ++r) {
    for (FaceIndex f = 0; f < p.face_count(r); ++f) {
      if (p.covers(r, f).size() < 2) {
        return Violation{Axiom::covers_two, {r, f}, {r, f}, "face covers fewer than two faces"};
      }
    }
  }
  // F(n) must cover at least two facets.
  if (p.facet_count() < 2) {
    return Violation{Axiom::covers_two, {p.rank(), 0}, {p.rank(), 0}, "fewer than two facets"};
  }
  return std::nullopt;
}

std::optional<Violation> check_graded(const FacePoset& p) {
  // Faces below rank n-1 with nothing above them end a chain early.
  for (int r = 0; r + 1 < p.rank(); ++r) {
    for (FaceIndex f = 0; f < p.face_count(r); ++f) {
      if (p.covered_by(r, f).empty()) {
        return Violation{Axiom::graded, {r, f}, {p.rank(), 0}, "maximal chain ends below the facets"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_diamond(const FacePoset& p) {
  const int n = p.rank();
  auto fail = [](FaceRef lo, FaceRef hi, std::size_t count) {
    return Violation{Axiom::diamond, lo, hi,
                     std::to_string(count) + " faces between, expected exactly 2"};
  };
  if (n == 1) {
    if (p.vertex_count() != 2) return fail({-1, 0}, {1, 0}, p.vertex_count());
    return std::nullopt;
  }
  for (FaceIndex e = 0; e < p.face_count(1); ++e) {
    if (p.covers(1, e).size() != 2) return fail({-1, 0}, {1, e}, p.covers(1, e).size());
  }
  // G of rank r >= 2 (or F(n)) over F of rank r-2.
  std::vector<std::uint32_t> tally;
  std::vector<FaceIndex> touched;
  for (int r = 2; r <= n; ++r) {
    tally.assign(p.face_count(r - 2), 0);
    const std::size_t uppers = r == n ? 1 : p.face_count(r);
    for (FaceIndex g = 0; g < uppers; ++g) {
      touched.clear();
      auto visit = [&](FaceIndex h) {
        for (FaceIndex f : p.covers(r - 1, h)) {
          if (tally[f]++ == 0) touched.push_back(f);
        }
      };
      if (r == n) {
        for (FaceIndex h = 0; h < p.face_count(r - 1); ++h) visit(h);
      } else {
        for (FaceIndex h : p.covers(r, g)) visit(h);
      }
      std::optional<Violation> bad;
      for (FaceIndex f : touched) {
        if (!bad && tally[f] != 2) bad = fail({r - 2, f}, {r, g}, tally[f]);
        tally[f] = 0;
      }
      if (bad) return bad;
    }
  }
  return std::nullopt;
}

// Sections are checked by rank window: for lower rank a and upper rank b,
// the flags joined through adjacencies a+1..b-1 must form exactly one
// component per (faces at ranks <= a, faces at ranks >= b) tuple.
std::optional<Violation> check_connectivity(const FacePoset& p, const FlagGraph& fg) {
  const int n = p.rank();
  const std::size_t count = fg.flag_count();
  for (int a = -1; a <= n - 3; ++a) {
    for (int b = n; b >= a + 3; --b) {
      internal::UnionFind uf(count);
      for (int i = a + 1; i < b; ++i) {
        for (FlagIndex f = 0; f < count; ++f) uf.unite(f, fg.adjacent(i, f));
      }
      std::vector<FlagIndex> roots;
      for (FlagIndex f = 0; f < count; ++f) {
        if (uf.find(f) == f) roots.push_back(f);
      }
      auto outside = [&](FlagIndex f) {
        std::vector<FaceIndex> key;
        auto c = fg.chain(f);
        for (int r = 0; r < n; ++r) {
          if (r <= a || r >= b) key.push_back(c[static_cast<std::size_t>(r)]);
        }
        return key;
      };
      std::vector<std::pair<std::vector<FaceIndex>, FlagIndex>> keyed;
      keyed.reserve(roots.size());
      for (FlagIndex r : roots) keyed.emplace_back(outside(r), r);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t k = 1; k < keyed.size(); ++k) {
        if (keyed[k].first == keyed[k - 1].first) {
          auto c = fg.chain(keyed[k].second);
          FaceRef lo{a, a >= 0 ? c[static_cast<std::size_t>(a)] : 0};
          FaceRef hi{b, b < n ? c[static_cast<std::size_t>(b)] : 0};
          return Violation{Axiom::strong_flag_connectivity, lo, hi, "section flag graph is disconnected"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate(const FacePoset& p, const Limits& limits) {
  ValidationReport report;
  if (auto v = check_covers_two(p)) report.violations.push_back(*v);
  if (auto v = check_graded(p)) report.violations.push_back(*v);
  if (auto v = check_diamond(p)) report.violations.push_back(*v);
  if (!report.violations.empty()) {
    report.skipped.push_back(Axiom::strong_flag_connectivity);
    return report;
  }
  FlagGraph fg = flag_graph(p, limits);
  report.flag_count = fg.flag_count();
  if (auto v = check_connectivity(p, fg)) report.violations.push_back(*v);
  return report;
}

void require_valid(const FacePoset& p, const char* context, const Limits& limits) {
  auto r = validate(p, limits);
  if (!r.ok()) throw NotPolytopalError(std::string(context) + ": " + describe(r));
}

std::string describe(const ValidationReport& r) {
  if (r.ok()) return "valid polytope, " + std::to_string(r.flag_count) + " flags";
  std::ostringstream out;
  bool first = true;
  for (const auto& v : r.violations) {
    if (!first) out << "; ";
    first = false;
    out << axiom_name(v.axiom) << " violated: " << v.detail << " [ranks " << v.lower.rank << ":"
        << v.lower.index << " .. " << v.upper.rank << ":" << v.upper.index << "]";
  }
  for (Axiom a : r.skipped) out << "; " << axiom_name(a) << " not checked";
  return out.str();
}

}  // namespace hpoly
