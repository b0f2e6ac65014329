#include "hpoly/hereditary.hpp"

#include <algorithm>
#include <numeric>

#include "hpoly/error.hpp"
#include "hpoly/validate.hpp"
#include "internal/union_find.hpp"

namespace hpoly {

namespace {

constexpr FlagIndex kUnset = static_cast<FlagIndex>(-1);

// Number of closure probes per extendable set; each probe costs one
// extension over the section's flags.
constexpr std::size_t kClosureProbes = 24;

struct RepResult {
  std::size_t group_order = 1;
  std::size_t extends = 1;
  std::optional<FlagIndex> witness;
  std::size_t rotation_order = 1;
  std::size_t rotation_extends = 1;
};

}  // namespace

FlagGraph section_flag_graph(const FlagGraph& fg, FlagIndex base, int lower_rank, int upper_rank,
                             std::vector<FlagIndex>& to_global) {
  const int m = upper_rank - lower_rank - 1;
  if (m < 1) throw PreconditionError("section rank below 1");
  to_global.assign(1, base);
  std::vector<FlagIndex> local(fg.flag_count(), kUnset);
  local[base] = 0;
  for (std::size_t h = 0; h < to_global.size(); ++h) {
    for (int i = lower_rank + 1; i < upper_rank; ++i) {
      FlagIndex y = fg.adjacent(i, to_global[h]);
      if (local[y] == kUnset) {
        local[y] = static_cast<FlagIndex>(to_global.size());
        to_global.push_back(y);
      }
    }
  }
  std::vector<std::vector<FlagIndex>> adj(static_cast<std::size_t>(m), std::vector<FlagIndex>(to_global.size()));
  for (int r = 0; r < m; ++r) {
    for (std::size_t x = 0; x < to_global.size(); ++x) {
      adj[static_cast<std::size_t>(r)][x] = local[fg.adjacent(lower_rank + 1 + r, to_global[x])];
    }
  }
  return FlagGraph(m, std::move(adj));
}

SymmetryAnalysis::SymmetryAnalysis(const FacePoset& p, const Limits& limits)
    : poset_(p), flags_(flag_graph(p, limits)) {
  group_ = automorphisms(flags_);
  orbits_ = flag_orbits(flags_, group_);
}

std::vector<SectionCheck> SymmetryAnalysis::section_checks(int lo, int hi, bool strong) const {
  const int n = poset_.rank();
  if (lo < -1 || hi > n || lo >= hi) throw PreconditionError("invalid section ranks");
  const FlagGraph& fg = flags_;
  const std::size_t count = fg.flag_count();
  const std::uint64_t uppers = hi < n ? poset_.face_count(hi) : 1;
  auto at = [&](FlagIndex f, int r) -> FaceIndex {
    return r >= 0 && r < n ? fg.chain(f)[static_cast<std::size_t>(r)] : 0;
  };
  auto pair_key = [&](FlagIndex f) { return std::uint64_t{at(f, lo)} * uppers + at(f, hi); };

  // Flags grouped by their (F, G) pair; runs[k] = start of the k-th pair.
  std::vector<FlagIndex> order(count);
  std::iota(order.begin(), order.end(), FlagIndex{0});
  std::sort(order.begin(), order.end(), [&](FlagIndex a, FlagIndex b) {
    auto ka = pair_key(a), kb = pair_key(b);
    return ka != kb ? ka < kb : a < b;
  });
  std::vector<std::size_t> runs;
  std::vector<std::uint32_t> pair_of(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k == 0 || pair_key(order[k]) != pair_key(order[k - 1])) runs.push_back(k);
    pair_of[order[k]] = static_cast<std::uint32_t>(runs.size() - 1);
  }
  runs.push_back(count);
  const std::size_t pairs = runs.size() - 1;

  // Pairs met by flags of one orbit are images of each other.
  internal::UnionFind uf(pairs);
  std::vector<std::uint32_t> first(count, static_cast<std::uint32_t>(-1));
  for (FlagIndex f = 0; f < count; ++f) {
    auto& slot = first[orbits_.orbit_of[f]];
    if (slot == static_cast<std::uint32_t>(-1)) {
      slot = pair_of[f];
    } else {
      uf.unite(slot, pair_of[f]);
    }
  }

  const int m = hi - lo - 1;
  auto mid = [&](FlagIndex f) {
    auto c = fg.chain(f);
    return std::vector<FaceIndex>(c.begin() + lo + 1, c.begin() + hi);
  };
  auto outside_equal = [&](FlagIndex a, FlagIndex b) {
    auto ca = fg.chain(a), cb = fg.chain(b);
    for (int r = 0; r < n; ++r) {
      if ((r < lo || r > hi) && ca[static_cast<std::size_t>(r)] != cb[static_cast<std::size_t>(r)]) return false;
    }
    return true;
  };

  auto evaluate = [&](std::size_t pair) {
    RepResult res;
    const FlagIndex base = order[runs[pair]];
    if (m < 1) return res;
    std::vector<FlagIndex> to_global;
    FlagGraph local = section_flag_graph(fg, base, lo, hi, to_global);
    AutomorphismGroup sg = automorphisms(local);
    res.group_order = sg.order();

    // Section flags keyed by their middle chain.
    std::vector<std::pair<std::vector<FaceIndex>, FlagIndex>> by_mid;
    by_mid.reserve(to_global.size());
    for (FlagIndex x = 0; x < to_global.size(); ++x) by_mid.emplace_back(mid(to_global[x]), x);
    std::sort(by_mid.begin(), by_mid.end());

    // Extendable set: middle chains of flags in the base flag's orbit.
    std::vector<std::uint8_t> ext(to_global.size(), 0);
    for (std::size_t k = runs[pair]; k < runs[pair + 1]; ++k) {
      const FlagIndex f = order[k];
      if (orbits_.orbit_of[f] != orbits_.orbit_of[base]) continue;
      if (strong && !outside_equal(f, base)) continue;
      auto key = mid(f);
      auto it = std::lower_bound(by_mid.begin(), by_mid.end(), std::make_pair(key, FlagIndex{0}));
      if (it == by_mid.end() || it->first != key) throw Error("orbit flag outside its section");
      ext[it->second] = 1;
    }
    std::vector<FlagIndex> members;
    for (FlagIndex x = 0; x < ext.size(); ++x) {
      if (ext[x]) members.push_back(x);
    }
    res.extends = members.size();
    for (FlagIndex x : sg.base_orbit) {
      if (!ext[x]) {
        res.witness = to_global[x];
        break;
      }
    }

    // The extendable automorphisms must form a subgroup.
    for (std::size_t a = 0; a < std::min(members.size(), kClosureProbes); ++a) {
      auto g = extend_flag_map(local, local, 0, members[a]);
      if (!g) throw Error("extendable image is not a section automorphism");
      for (FlagIndex b : members) {
        if (!ext[(*g)[b]]) throw Error("extendable section automorphisms are not closed");
      }
    }

    std::vector<std::uint8_t> parity;
    if (flag_parity(local, parity)) {
      res.rotation_order = 0;
      res.rotation_extends = 0;
      for (FlagIndex x : sg.base_orbit) res.rotation_order += parity[x] == parity[0];
      for (FlagIndex x : members) res.rotation_extends += parity[x] == parity[0];
    } else {
      res.rotation_order = res.group_order;
      res.rotation_extends = res.extends;
    }

    // Facet sections: test the section's generators literally as well.
    if (lo == -1 && hi == n - 1 && !strong) {
      for (const auto& g : sg.generators) {
        const bool literal = extend_flag_map(fg, fg, base, to_global[g[0]]).has_value();
        if (literal != static_cast<bool>(ext[g[0]])) {
          throw Error("orbit-based and literal extension tests disagree");
        }
      }
    }
    return res;
  };

  std::vector<std::optional<RepResult>> by_root(pairs);
  std::vector<SectionCheck> out;
  out.reserve(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    auto root = uf.find(static_cast<std::uint32_t>(k));
    if (!by_root[root]) by_root[root] = evaluate(root);
    const RepResult& r = *by_root[root];
    const FlagIndex f = order[runs[k]];
    SectionCheck c;
    c.lower = {lo, at(f, lo)};
    c.upper = {hi, at(f, hi)};
    c.group_order = r.group_order;
    c.extends = r.extends;
    c.rotation_order = r.rotation_order;
    c.rotation_extends = r.rotation_extends;
    // Witnesses are only meaningful for the section they were found in.
    if (root == k) c.witness = r.witness;
    out.push_back(c);
  }
  return out;
}

namespace {

bool all_ok(const std::vector<SectionCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const SectionCheck& c) { return c.ok(); });
}

}  // namespace

bool SymmetryAnalysis::facet_hereditary() const {
  if (poset_.rank() < 2) throw PreconditionError("hereditary needs rank >= 2");
  return all_ok(section_checks(-1, poset_.rank() - 1, false));
}

bool SymmetryAnalysis::j_face_hereditary(int j, bool strong) const {
  if (j < 1 || j > poset_.rank() - 1) throw PreconditionError("face rank out of range");
  return all_ok(section_checks(-1, j, strong));
}

bool SymmetryAnalysis::section_hereditary(int i, int j, bool strong) const {
  if (i >= j) throw PreconditionError("section needs i < j");
  if (i < 0 || j > poset_.rank() - 1) throw PreconditionError("section rank out of range");
  return all_ok(section_checks(i, j, strong));
}

bool SymmetryAnalysis::chirally_hereditary() const {
  if (poset_.rank() < 2) throw PreconditionError("hereditary needs rank >= 2");
  auto checks = section_checks(-1, poset_.rank() - 1, false);
  return std::all_of(checks.begin(), checks.end(), [](const SectionCheck& c) { return c.rotation_ok(); });
}

bool SymmetryAnalysis::transitive(int i, TransitivityMode mode) const {
  return transitivity(flags_, orbits_, i, mode);
}

HereditaryReport SymmetryAnalysis::report() const {
  const int n = poset_.rank();
  if (n < 2) throw PreconditionError("hereditary needs rank >= 2");
  HereditaryReport r;
  r.per_facet = section_checks(-1, n - 1, false);
  r.facet_hereditary = all_ok(r.per_facet);
  r.chirally_hereditary = std::all_of(r.per_facet.begin(), r.per_facet.end(),
                                      [](const SectionCheck& c) { return c.rotation_ok(); });
  for (int j = 1; j <= n - 1; ++j) {
    for (bool strong : {false, true}) r.j_face[{j, strong}] = j_face_hereditary(j, strong);
  }
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      for (bool strong : {false, true}) r.sections[{i, j, strong}] = section_hereditary(i, j, strong);
    }
  }
  return r;
}

HereditaryReport hereditary_report(const FacePoset& p, const Limits& limits) {
  return SymmetryAnalysis(p, limits).report();
}

bool j_face_hereditary(const FacePoset& p, int j, bool strong, const Limits& limits) {
  return SymmetryAnalysis(p, limits).j_face_hereditary(j, strong);
}

bool section_hereditary(const FacePoset& p, int i, int j, bool strong, const Limits& limits) {
  return SymmetryAnalysis(p, limits).section_hereditary(i, j, strong);
}

bool chirally_hereditary(const FacePoset& p, const Limits& limits) {
  return SymmetryAnalysis(p, limits).chirally_hereditary();
}

}  // namespace hpoly
