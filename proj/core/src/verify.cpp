#include "hpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "hpoly/catalog.hpp"
#include "hpoly/constructions.hpp"
#include "hpoly/coset.hpp"
#include "hpoly/error.hpp"
#include "hpoly/hereditary.hpp"
#include "hpoly/presentation.hpp"
#include "hpoly/report.hpp"
#include "hpoly/symmetry.hpp"
#include "hpoly/validate.hpp"

namespace hpoly {

namespace {

using Clock = std::chrono::steady_clock;

std::string show(const std::vector<int>& v) { return "{" + join_ints(v, ",") + "}"; }

std::string show_class(const OrbitClassification& o) {
  return o.class_I ? show(*o.class_I) : std::string("none");
}

// Collects failures for one criterion.
class Check {
 public:
  explicit Check(CheckResult& r) : r_(r) {}
  bool expect(bool ok, const std::string& what) {
    if (!ok) r_.failures.push_back(what);
    return ok;
  }
  template <typename A, typename B>
  bool expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return true;
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    r_.failures.push_back(s.str());
    return false;
  }
  void note(const std::string& n) { r_.notes.push_back(n); }

 private:
  CheckResult& r_;
};

// Posets and analyses are shared between criteria.
class Workspace {
 public:
  const FacePoset& get(const std::string& name) {
    auto it = posets_.find(name);
    if (it == posets_.end()) it = posets_.emplace(name, catalog_get(name)).first;
    return it->second;
  }
  const SymmetryAnalysis& analysis(const std::string& key, const FacePoset& p) {
    auto it = analyses_.find(key);
    if (it == analyses_.end()) it = analyses_.emplace(key, std::make_unique<SymmetryAnalysis>(p)).first;
    return *it->second;
  }
  const SymmetryAnalysis& analysis(const std::string& name) { return analysis(name, get(name)); }
  const FacePoset& keep(const std::string& key, FacePoset p) {
    return posets_.insert_or_assign(key, std::move(p)).first->second;
  }
  bool has(const std::string& key) const { return posets_.count(key) != 0; }

 private:
  std::map<std::string, FacePoset> posets_;
  std::map<std::string, std::unique_ptr<SymmetryAnalysis>> analyses_;
};

/// One facet from each flag orbit; together they meet every facet orbit.
std::vector<FaceIndex> facet_representatives(const SymmetryAnalysis& a) {
  const int n = a.poset().rank();
  std::set<FaceIndex> reps;
  std::set<FlagIndex> labels(a.orbits().orbit_of.begin(), a.orbits().orbit_of.end());
  for (FlagIndex f : labels) reps.insert(a.flags().chain(f)[static_cast<std::size_t>(n - 1)]);
  return {reps.begin(), reps.end()};
}

struct FacetSummary {
  bool all_regular = true;
  bool all_chiral = true;
  bool any_regular = false;
  bool any_chiral = false;
  bool all_regular_or_chiral = true;
};

FacetSummary facet_summary(const SymmetryAnalysis& a) {
  FacetSummary s;
  const int n = a.poset().rank();
  for (FaceIndex f : facet_representatives(a)) {
    const auto v = flag_orbits(flag_graph(face_section(a.poset(), n - 1, f))).verdict;
    s.all_regular = s.all_regular && v == Verdict::regular;
    s.all_chiral = s.all_chiral && v == Verdict::chiral;
    s.any_regular = s.any_regular || v == Verdict::regular;
    s.any_chiral = s.any_chiral || v == Verdict::chiral;
    s.all_regular_or_chiral = s.all_regular_or_chiral && (v == Verdict::regular || v == Verdict::chiral);
  }
  return s;
}

bool is_range(const std::vector<int>& v, int lo, int hi) {
  if (static_cast<int>(v.size()) != hi - lo + 1) return false;
  for (int i = lo; i <= hi; ++i) {
    if (v[static_cast<std::size_t>(i - lo)] != i) return false;
  }
  return true;
}

bool class_is(const OrbitClassification& o, const std::vector<int>& want) {
  return o.k == 2 && o.class_I && *o.class_I == want;
}

// ---------------------------------------------------------------------------

void medial_suite(Workspace& ws, Check& c) {
  const FacePoset& cube_medial = ws.keep("medial(cube)", medial(ws.get("cube")));
  c.expect(is_isomorphic(cube_medial, ws.get("cuboctahedron")), "medial(cube) is not the cuboctahedron");
  const auto& a = ws.analysis("medial(cube)", cube_medial);
  c.expect_eq(a.orbits().k, 2u, "medial(cube) k");
  c.expect(class_is(a.orbits(), {0, 1}), "medial(cube) class " + show_class(a.orbits()));
  c.expect(a.facet_hereditary(), "medial(cube) not hereditary");

  const FacePoset& dodeca_medial = ws.keep("medial(dodecahedron)", medial(ws.get("dodecahedron")));
  c.expect(is_isomorphic(dodeca_medial, ws.get("icosidodecahedron")),
           "medial(dodecahedron) is not the icosidodecahedron");
  const auto& b = ws.analysis("medial(dodecahedron)", dodeca_medial);
  c.expect_eq(b.orbits().k, 2u, "medial(dodecahedron) k");
  c.expect(class_is(b.orbits(), {0, 1}), "medial(dodecahedron) class " + show_class(b.orbits()));
  c.expect(b.facet_hereditary(), "medial(dodecahedron) not hereditary");

  const FacePoset& tet_medial = ws.keep("medial(tetrahedron)", medial(ws.get("tetrahedron")));
  c.expect(ws.analysis("medial(tetrahedron)", tet_medial).orbits().verdict == Verdict::regular,
           "medial(tetrahedron) not regular");
}

void n98_suite(Workspace& ws, Check& c) {
  const FacePoset& p = ws.get("n98-6");
  c.expect(schlafli_type(p) == std::vector<int>{5, 5}, "N98.6 is not of type {5,5}");
  c.expect_eq(ws.analysis("n98-6").flags().flag_count(), 1920u, "N98.6 flags");
  const FacePoset& m = ws.keep("medial(n98-6)", medial(p));
  c.expect(schlafli_type(m) == std::vector<int>{5, 4}, "medial(N98.6) is not of type {5,4}");
  const auto& a = ws.analysis("medial(n98-6)", m);
  c.expect_eq(a.orbits().group_order, 1920u, "medial(N98.6) group order");
  c.expect_eq(a.flags().flag_count(), 3840u, "medial(N98.6) flags");
  c.expect_eq(a.orbits().k, 2u, "medial(N98.6) k");
  c.expect(class_is(a.orbits(), {0, 1}), "medial(N98.6) class " + show_class(a.orbits()));
  c.expect(a.facet_hereditary(), "medial(N98.6) not hereditary");
  c.expect(a.orbits().verdict != Verdict::regular, "medial(N98.6) is regular");
}

void coset_suite(Check& c) {
  const auto pres = read_presentation(catalog_dir() / catalog_entry("u5512").file);
  GroupPresentation trivial = pres;
  trivial.subgroup.clear();
  const CosetTable t = coset_enumerate(trivial);
  c.expect_eq(t.coset_count, 30720u, "cosets of {5,5|12}_{12,5}");
}

void rank3_catalog(Workspace& ws, std::vector<std::string>& names) {
  for (const auto& e : catalog_entries()) {
    if (ws.get(e.name).rank() == 3) names.push_back(e.name);
  }
}

void two_orbit_theorem(Workspace& ws, Check& c) {
  std::vector<std::string> names;
  rank3_catalog(ws, names);
  for (const auto& name : names) {
    const auto& a = ws.analysis(name);
    const bool predicted = a.orbits().verdict == Verdict::regular || class_is(a.orbits(), {0, 1});
    c.expect(a.facet_hereditary() == predicted, name + ": hereditary=" + (a.facet_hereditary() ? "true" : "false") +
                                                    " but k=" + std::to_string(a.orbits().k) + " class " +
                                                    show_class(a.orbits()));
  }
  c.note(std::to_string(names.size()) + " rank-3 entries");
}

void two_power_suite(Workspace& ws, Check& c) {
  const FacePoset& t = ws.keep("2^triangle", two_power(polygon(3)));
  c.expect(is_isomorphic(t, ws.get("cube")), "2^triangle is not the cube");
  const FacePoset& s = ws.keep("2^square", two_power(polygon(4)));
  c.expect_eq(ws.analysis("2^square", s).orbits().group_order, 128u, "|Aut(2^square)|");
  const FacePoset& co = ws.keep("2^cuboctahedron", two_power(ws.get("cuboctahedron")));
  const auto& a = ws.analysis("2^cuboctahedron", co);
  c.expect_eq(a.orbits().k, 2u, "2^cuboctahedron k");
  c.expect(class_is(a.orbits(), {0, 1, 2}), "2^cuboctahedron class " + show_class(a.orbits()));
  const FacePoset& ch = ws.keep("2^t44-1-2", two_power(ws.get("t44-1-2")));
  const auto& b = ws.analysis("2^t44-1-2", ch);
  c.expect_eq(b.orbits().k, 2u, "2^{4,4}_(1,2) k");
  c.expect(class_is(b.orbits(), {0}), "2^{4,4}_(1,2) class " + show_class(b.orbits()));
}

// Smallest (by flags, then name) chiral {4,4} toroid in the catalog that is
// facet-describable.
std::string smallest_describable_chiral_toroid(Workspace& ws) {
  std::string best;
  std::size_t best_flags = 0;
  for (const auto& e : catalog_entries()) {
    const FacePoset& p = ws.get(e.name);
    if (p.rank() != 3 || schlafli_type(p) != std::vector<int>{4, 4}) continue;
    const auto& a = ws.analysis(e.name);
    if (a.orbits().verdict != Verdict::chiral || !is_describable(p, Describability::facet)) continue;
    const std::size_t flags = a.flags().flag_count();
    if (best.empty() || flags < best_flags || (flags == best_flags && e.name < best)) {
      best = e.name;
      best_flags = flags;
    }
  }
  return best;
}

void chiral_extension_suite(Workspace& ws, Check& c) {
  const std::string q_name = smallest_describable_chiral_toroid(ws);
  if (!c.expect(!q_name.empty(), "no facet-describable chiral toroid in the catalog")) return;
  c.note("Q = " + q_name);
  const FacePoset& q = ws.get(q_name);
  const FacePoset& x = ws.keep("ext(" + q_name + ")", chiral_extension(q));
  const auto& a = ws.analysis("ext(" + q_name + ")", x);
  c.expect(a.facet_hereditary(), "extension not hereditary");
  c.expect_eq(a.orbits().k, 2u, "extension k");
  c.expect(class_is(a.orbits(), {3}), "extension class " + show_class(a.orbits()));
  for (FaceIndex f = 0; f < x.facet_count(); ++f) {
    if (!c.expect(is_isomorphic(face_section(x, 3, f), q), "facet " + std::to_string(f) + " not isomorphic to Q")) {
      break;
    }
  }
  const std::size_t want = (std::size_t{1} << q.facet_count()) * ws.analysis(q_name).orbits().group_order;
  c.expect_eq(a.orbits().group_order, want, "extension group order vs 2^f |Aut(Q)|");
}

void truncated_tetrahedron_suite(Workspace& ws, Check& c, bool slow) {
  const auto& a = ws.analysis("truncated-tetrahedron");
  c.expect_eq(a.orbits().k, 3u, "truncated tetrahedron k");
  c.expect(a.j_face_hereditary(1, false), "truncated tetrahedron not 1-face hereditary");
  c.expect(!a.j_face_hereditary(2, false), "truncated tetrahedron is 2-face hereditary");
  c.expect(!a.facet_hereditary(), "truncated tetrahedron is hereditary");
  c.expect(!a.chirally_hereditary(), "truncated tetrahedron is chirally hereditary");
  if (!slow) {
    c.note("2^(truncated tetrahedron) skipped (needs --slow)");
    return;
  }
  const FacePoset& p = ws.keep("2^truncated-tetrahedron", two_power(ws.get("truncated-tetrahedron")));
  const auto& b = ws.analysis("2^truncated-tetrahedron", p);
  c.expect(b.j_face_hereditary(2, false), "2^(truncated tetrahedron) not 2-face hereditary");
  c.expect(!b.j_face_hereditary(3, false), "2^(truncated tetrahedron) is 3-face hereditary");
  std::size_t cubes = 0, big = 0, other = 0;
  for (FaceIndex f : facet_representatives(b)) {
    const FacePoset facet = face_section(p, 3, f);
    const std::size_t flags = facet.count_flags();
    if (flags == 48 && is_isomorphic(facet, ws.get("cube"))) {
      ++cubes;
    } else if (flags == 768) {
      ++big;
    } else {
      ++other;
    }
  }
  c.expect(cubes > 0, "2^(truncated tetrahedron) has no cube facets");
  c.expect(big > 0, "2^(truncated tetrahedron) has no 768-flag facets");
  c.expect_eq(other, 0u, "2^(truncated tetrahedron) facets that are neither");
}

void check_alternating_shape(const AlternatingResult& r, std::size_t input_flags, Check& c, const std::string& label) {
  const FacePoset& p = r.poset;
  c.expect_eq(p.count_flags(), input_flags, label + " flag count");
  for (FaceIndex e = 0; e < p.face_count(1); ++e) {
    const auto facets = p.facet_set(1, e);
    std::size_t halved = 0;
    for (FaceIndex f : facets) halved += r.facet_kind[f] == AlternatingFacet::halved_facet;
    if (!c.expect(facets.size() == 4 && halved == 2, label + ": edge " + std::to_string(e) + " not in 2+2 facets")) {
      return;
    }
  }
  for (FaceIndex g = 0; g < p.face_count(2); ++g) {
    const auto up = p.covered_by(2, g);
    if (!c.expect(up.size() == 2 && r.facet_kind[up[0]] != r.facet_kind[up[1]],
                  label + ": 2-face " + std::to_string(g) + " does not separate the two kinds")) {
      return;
    }
  }
}

void alternating_suite(Workspace& ws, Check& c, bool slow) {
  const FacePoset& cubic = ws.get("t434-4");
  const AlternatingResult r = alternating(cubic);
  ws.keep("alt(t434-4)", r.poset);
  check_alternating_shape(r, cubic.count_flags(), c, "cubic toroid");
  std::set<std::vector<int>> types;
  for (FaceIndex f = 0; f < r.poset.facet_count(); ++f) {
    const auto t = schlafli_type(face_section(r.poset, 3, f));
    types.insert(t ? *t : std::vector<int>{});
  }
  c.expect(types == std::set<std::vector<int>>{{3, 3}, {3, 4}}, "cubic toroid: facet types are not {3,3} and {3,4}");
  const FacePoset& cubo = ws.get("cuboctahedron");
  for (FaceIndex v = 0; v < r.poset.vertex_count(); ++v) {
    if (!c.expect(is_isomorphic(co_face(r.poset, 0, v), cubo),
                  "cubic toroid: vertex-figure " + std::to_string(v) + " is not a cuboctahedron")) {
      break;
    }
  }
  c.expect(ws.analysis("alt(t434-4)", r.poset).facet_hereditary(), "alternating cubic toroid not hereditary");

  if (!slow) {
    c.note("rank-4 chiral toroid skipped (needs --slow)");
    return;
  }
  const FacePoset& chiral = ws.get("t444-13-13");
  c.expect_eq(chiral.vertex_count(), 50u, "chiral toroid vertices");
  c.expect_eq(chiral.facet_count(), 50u, "chiral toroid facets");
  c.expect_eq(ws.analysis("t444-13-13").orbits().group_order, 2000u, "chiral toroid group order");
  const AlternatingResult s = alternating(chiral);
  ws.keep("alt(t444-13-13)", s.poset);
  check_alternating_shape(s, chiral.count_flags(), c, "chiral toroid");
  const auto& a = ws.analysis("alt(t444-13-13)", s.poset);
  c.expect(a.facet_hereditary(), "alternating chiral toroid not hereditary");
  c.expect_eq(a.orbits().k, 4u, "alternating chiral toroid k");
  std::map<AlternatingFacet, FacePoset> sample;
  for (FaceIndex f = 0; f < s.poset.facet_count(); ++f) {
    if (!sample.count(s.facet_kind[f])) sample.emplace(s.facet_kind[f], face_section(s.poset, 3, f));
  }
  if (c.expect(sample.size() == 2, "alternating chiral toroid lacks a facet kind")) {
    const FacePoset& h = sample.at(AlternatingFacet::halved_facet);
    const FacePoset& v = sample.at(AlternatingFacet::vertex_figure);
    c.expect(flag_orbits(flag_graph(h)).verdict == Verdict::chiral, "halved facets not chiral");
    c.expect(flag_orbits(flag_graph(v)).verdict == Verdict::chiral, "vertex-figure facets not chiral");
    c.expect(!is_isomorphic(h, v), "the two facet kinds are isomorphic");
    c.expect(is_isomorphic(h, ws.get("t44-1-2")), "halved facets are not {4,4}_(1,2)");
    c.expect(is_isomorphic(v, ws.get("t44-1-3")), "vertex-figure facets are not {4,4}_(1,3)");
  }
  try {
    alternating(ws.get("t444-13-31"));
    c.expect(false, "enantiomorphic variant was accepted");
  } catch (const PreconditionError&) {
    const auto pre = alternating_preconditions(ws.get("t444-13-31"));
    c.expect(pre.opposite_vertex_clash.has_value(), "variant rejected, but not for an opposite-vertex clash");
  }
}

// ---------------------------------------------------------------------------

void free_action(const std::string& name, const SymmetryAnalysis& a, Check& c) {
  const auto& g = a.group();
  const std::size_t flags = a.flags().flag_count();
  c.expect(a.orbits().group_order * a.orbits().k == flags, name + ": |Aut| * k != flags");
  for (const auto& gen : g.generators) {
    bool identity = true, fixes = false;
    for (FlagIndex f = 0; f < gen.size(); ++f) {
      identity = identity && gen[f] == f;
      fixes = fixes || gen[f] == f;
    }
    c.expect(identity || !fixes, name + ": a non-identity automorphism fixes a flag");
  }
  // Exhaustive on small groups: the map base -> b fixes no flag unless b = base.
  if (g.order() * flags <= 4'000'000) {
    for (FlagIndex b : g.base_orbit) {
      if (b == g.base_flag) continue;
      const auto m = extend_flag_map(a.flags(), a.flags(), g.base_flag, b);
      if (!c.expect(m.has_value(), name + ": orbit element does not extend")) return;
      for (FlagIndex f = 0; f < flags; ++f) {
        if (!c.expect((*m)[f] != f, name + ": automorphism with a fixed flag")) return;
      }
    }
  }
}

void properties(const std::string& name, const SymmetryAnalysis& a, bool constructed, Check& c) {
  free_action(name, a, c);
  const int n = a.poset().rank();
  if (n < 3) return;
  // Extendable-set closure is asserted inside every section test.
  const bool hereditary = a.facet_hereditary();
  (void)a.j_face_hereditary(1, true);
  const FacetSummary fs = facet_summary(a);
  const auto& orb = a.orbits();

  if (hereditary) {
    const FacePoset& p = a.poset();
    const auto reps = facet_representatives(a);
    for (int i = 0; i <= n - 2; ++i) {
      bool facets_chain = true, facets_face = true;
      for (FaceIndex f : reps) {
        const FlagGraph fg = flag_graph(face_section(p, n - 1, f));
        facets_chain = facets_chain && transitivity(fg, i, TransitivityMode::chain);
        facets_face = facets_face && transitivity(fg, i, TransitivityMode::face);
      }
      if (facets_chain) {
        c.expect(a.transitive(i, TransitivityMode::chain),
                 name + ": hereditary with {0.." + std::to_string(i) + "}-chain transitive facets but not itself");
      }
      if (facets_face) {
        c.expect(a.transitive(i, TransitivityMode::face),
                 name + ": hereditary with " + std::to_string(i) + "-face transitive facets but not itself");
      }
    }
    if (fs.all_regular_or_chiral) c.expect(!(fs.any_regular && fs.any_chiral), name + ": mixes regular and chiral facets");
    if (fs.all_regular) {
      // An (n-3)-face whose co-face is an odd polygon forces regularity.
      bool odd = false;
      for (FaceIndex f = 0; f < p.face_count(n - 3) && !odd; ++f) {
        odd = co_face(p, n - 3, f).vertex_count() % 2 == 1;
      }
      if (odd) c.expect(orb.verdict == Verdict::regular, name + ": regular-facetted hereditary with odd q but not regular");
    }
    if (constructed && fs.all_chiral) {
      c.expect(orb.k == 2 || orb.k == 4, name + ": chiral-facetted hereditary with k=" + std::to_string(orb.k));
      if (orb.k == 2) {
        c.expect(class_is(orb, {}) || class_is(orb, {n - 1}), name + ": chiral-facetted with class " + show_class(orb));
      }
    }
  }
  if (fs.all_regular) {
    const bool predicted = orb.verdict == Verdict::regular || (orb.k == 2 && orb.class_I && is_range(*orb.class_I, 0, n - 2));
    c.expect(hereditary == predicted, name + ": regular-facetted, hereditary=" + (hereditary ? "true" : "false") +
                                          " but class " + show_class(orb));
  }
}

void property_suites(Workspace& ws, Check& c, bool slow) {
  std::size_t count = 0;
  for (const auto& e : catalog_entries()) {
    properties(e.name, ws.analysis(e.name), false, c);
    ++count;
  }
  // Constructed instances, building any the earlier criteria skipped.
  auto ensure = [&](const std::string& key, auto build) {
    if (!ws.has(key)) ws.keep(key, build());
  };
  ensure("medial(cube)", [&] { return medial(ws.get("cube")); });
  ensure("medial(n98-6)", [&] { return medial(ws.get("n98-6")); });
  ensure("2^square", [&] { return two_power(polygon(4)); });
  ensure("2^t44-1-2", [&] { return two_power(ws.get("t44-1-2")); });
  ensure("ext(t44-1-2)", [&] { return chiral_extension(ws.get("t44-1-2")); });
  ensure("ext(t44-1-3)", [&] { return chiral_extension(ws.get("t44-1-3")); });
  ensure("halved(t44-2-2)", [&] { return halved(ws.get("t44-2-2")); });
  ensure("alt(t434-4)", [&] { return alternating(ws.get("t434-4")).poset; });
  if (slow) ensure("alt(t444-13-13)", [&] { return alternating(ws.get("t444-13-13")).poset; });
  for (const char* key : {"medial(cube)", "medial(dodecahedron)", "medial(tetrahedron)", "medial(n98-6)", "2^triangle",
                          "2^square", "2^cuboctahedron", "2^t44-1-2", "ext(t44-1-2)", "ext(t44-1-3)",
                          "halved(t44-2-2)", "alt(t434-4)", "alt(t444-13-13)", "2^truncated-tetrahedron"}) {
    if (!ws.has(key)) continue;
    properties(key, ws.analysis(key, ws.get(key)), true, c);
    ++count;
  }
  c.note(std::to_string(count) + " instances");
}

struct Criterion {
  const char* id;
  const char* title;
  double budget;
  std::function<void(Workspace&, Check&, bool)> run;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const std::vector<Criterion> criteria = {
      {"AC1", "medial suite", 1, [](Workspace& ws, Check& c, bool) { medial_suite(ws, c); }},
      {"AC2", "N98.6 and its medial", 10, [](Workspace& ws, Check& c, bool) { n98_suite(ws, c); }},
      {"AC3", "30720 cosets for {5,5|12}_{12,5}", 60, [](Workspace&, Check& c, bool) { coset_suite(c); }},
      {"AC4", "rank-3 catalog: hereditary iff regular or class {0,1}", 30,
       [](Workspace& ws, Check& c, bool) { two_orbit_theorem(ws, c); }},
      {"AC5", "2^K suite", 60, [](Workspace& ws, Check& c, bool) { two_power_suite(ws, c); }},
      {"AC6", "chiral extension of the smallest describable chiral toroid", 120,
       [](Workspace& ws, Check& c, bool) { chiral_extension_suite(ws, c); }},
      {"AC7", "truncated tetrahedron and its 2^K", 1800,
       [](Workspace& ws, Check& c, bool slow) { truncated_tetrahedron_suite(ws, c, slow); }},
      {"AC8", "alternating suite", 1800, [](Workspace& ws, Check& c, bool slow) { alternating_suite(ws, c, slow); }},
      {"AC9", "property suites over the catalog and constructions", 600,
       [](Workspace& ws, Check& c, bool slow) { property_suites(ws, c, slow); }},
  };
  Workspace ws;
  std::vector<CheckResult> results;
  for (const auto& cr : criteria) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), cr.id) == options.only.end()) {
      continue;
    }
    CheckResult r;
    r.id = cr.id;
    r.title = cr.title;
    r.budget_seconds = cr.budget;
    Check c(r);
    const auto t0 = Clock::now();
    try {
      cr.run(ws, c, options.slow);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (r.seconds > r.budget_seconds) {
      r.failures.push_back("took " + std::to_string(r.seconds) + " s, budget " + std::to_string(r.budget_seconds) + " s");
    }
    r.passed = r.failures.empty();
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hpoly
