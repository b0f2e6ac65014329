#include "hpoly/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "hpoly/error.hpp"
#include "internal/union_find.hpp"

namespace hpoly {

namespace {

constexpr FlagIndex kUnset = static_cast<FlagIndex>(-1);

// Replaces each row signature by its rank among the distinct signatures.
std::size_t relabel(std::vector<std::uint32_t>& sig, std::size_t width, std::vector<std::uint32_t>& out) {
  const std::size_t count = width ? sig.size() / width : 0;
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  auto row = [&](std::uint32_t x) { return sig.begin() + static_cast<std::ptrdiff_t>(x * width); };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(width), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(width));
  });
  out.assign(count, 0);
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0 && !std::equal(row(order[k - 1]), row(order[k - 1]) + static_cast<std::ptrdiff_t>(width),
                             row(order[k]))) {
      ++next;
    }
    out[order[k]] = next;
  }
  return count ? next + 1 : 0;
}

// Orbit of `start` under the generators, as a membership mask.
void close_orbit(const std::vector<std::vector<FlagIndex>>& gens, FlagIndex start,
                 std::vector<std::uint8_t>& mask, std::vector<FlagIndex>& members) {
  members.assign(1, start);
  mask[start] = 1;
  for (std::size_t h = 0; h < members.size(); ++h) {
    for (const auto& g : gens) {
      FlagIndex y = g[members[h]];
      if (!mask[y]) {
        mask[y] = 1;
        members.push_back(y);
      }
    }
  }
}

FlagGraph disjoint_union(const FlagGraph& a, const FlagGraph& b) {
  const auto shift = static_cast<FlagIndex>(a.flag_count());
  std::vector<std::vector<FlagIndex>> adj(static_cast<std::size_t>(a.rank()));
  for (int i = 0; i < a.rank(); ++i) {
    auto& row = adj[static_cast<std::size_t>(i)];
    row.assign(a.adjacency(i).begin(), a.adjacency(i).end());
    for (FlagIndex y : b.adjacency(i)) row.push_back(y + shift);
  }
  return FlagGraph(a.rank(), std::move(adj));
}

}  // namespace

std::optional<std::vector<FlagIndex>> extend_flag_map(const FlagGraph& from, const FlagGraph& to,
                                                      FlagIndex a, FlagIndex b) {
  if (from.rank() != to.rank() || from.flag_count() != to.flag_count()) return std::nullopt;
  const int n = from.rank();
  std::vector<FlagIndex> map(from.flag_count(), kUnset);
  std::vector<FlagIndex> queue;
  queue.reserve(from.flag_count());
  map[a] = b;
  queue.push_back(a);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const FlagIndex x = queue[h];
    const FlagIndex mx = map[x];
    for (int i = 0; i < n; ++i) {
      const FlagIndex y = from.adjacent(i, x);
      const FlagIndex t = to.adjacent(i, mx);
      if (map[y] == kUnset) {
        map[y] = t;
        queue.push_back(y);
      } else if (map[y] != t) {
        return std::nullopt;
      }
    }
  }
  // A covering map between connected graphs of equal size is a bijection.
  if (queue.size() != from.flag_count()) return std::nullopt;
  return map;
}

std::vector<std::uint32_t> refine_colors(const FlagGraph& fg) {
  const int n = fg.rank();
  const std::size_t count = fg.flag_count();
  const auto width = static_cast<std::size_t>(std::max(n - 1, 1));
  std::vector<std::uint32_t> sig(count * width, 0);
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<std::uint32_t> len(count, 0);
    for (FlagIndex f = 0; f < count; ++f) {
      if (len[f]) continue;
      std::vector<FlagIndex> cycle;
      FlagIndex x = f;
      do {
        cycle.push_back(x);
        x = fg.adjacent(i, x);
        cycle.push_back(x);
        x = fg.adjacent(i + 1, x);
      } while (x != f);
      for (FlagIndex y : cycle) len[y] = static_cast<std::uint32_t>(cycle.size());
    }
    for (FlagIndex f = 0; f < count; ++f) sig[f * width + static_cast<std::size_t>(i)] = len[f];
  }
  std::vector<std::uint32_t> color;
  std::size_t classes = relabel(sig, width, color);
  const auto w2 = static_cast<std::size_t>(n) + 1;
  for (;;) {
    sig.assign(count * w2, 0);
    for (FlagIndex f = 0; f < count; ++f) {
      sig[f * w2] = color[f];
      for (int i = 0; i < n; ++i) sig[f * w2 + 1 + static_cast<std::size_t>(i)] = color[fg.adjacent(i, f)];
    }
    std::vector<std::uint32_t> next;
    std::size_t refined = relabel(sig, w2, next);
    color.swap(next);
    if (refined == classes) break;
    classes = refined;
  }
  return color;
}

AutomorphismGroup automorphisms(const FlagGraph& fg) {
  AutomorphismGroup group;
  const std::size_t count = fg.flag_count();
  if (count == 0) return group;
  const auto color = refine_colors(fg);

  // Candidates in breadth-first order from the base flag.
  std::vector<FlagIndex> order{0};
  std::vector<std::uint8_t> seen(count, 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (int i = 0; i < fg.rank(); ++i) {
      FlagIndex y = fg.adjacent(i, order[h]);
      if (!seen[y]) {
        seen[y] = 1;
        order.push_back(y);
      }
    }
  }

  std::vector<std::uint8_t> in_orbit(count, 0), failed(count, 0);
  std::vector<FlagIndex> orbit, scratch;
  close_orbit(group.generators, 0, in_orbit, orbit);
  for (FlagIndex c : order) {
    if (in_orbit[c] || failed[c] || color[c] != color[0]) continue;
    if (auto g = extend_flag_map(fg, fg, 0, c)) {
      group.generators.push_back(std::move(*g));
      std::fill(in_orbit.begin(), in_orbit.end(), 0);
      close_orbit(group.generators, 0, in_orbit, orbit);
      if (orbit.size() == count) break;
    } else {
      // No automorphism reaches c, hence none reaches anything in its orbit.
      close_orbit(group.generators, c, failed, scratch);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  group.base_orbit = std::move(orbit);
  return group;
}

std::string OrbitClassification::verdict_text() const {
  switch (verdict) {
    case Verdict::regular: return "regular";
    case Verdict::chiral: return "chiral";
    case Verdict::two_orbit: return "2-orbit";
    case Verdict::multi_orbit: break;
  }
  return std::to_string(k) + "-orbit";
}

OrbitClassification flag_orbits(const FlagGraph& fg) { return flag_orbits(fg, automorphisms(fg)); }

OrbitClassification flag_orbits(const FlagGraph& fg, const AutomorphismGroup& group) {
  OrbitClassification out;
  const std::size_t count = fg.flag_count();
  out.group_order = group.order();
  internal::UnionFind uf(count);
  for (const auto& g : group.generators) {
    for (FlagIndex f = 0; f < count; ++f) uf.unite(f, g[f]);
  }
  out.orbit_of.resize(count);
  for (FlagIndex f = 0; f < count; ++f) out.orbit_of[f] = uf.find(f);
  out.k = uf.components();
  if (out.k * out.group_order != count) {
    throw Error("automorphism action is not free: " + std::to_string(out.group_order) + " x " +
                std::to_string(out.k) + " != " + std::to_string(count));
  }
  if (out.k == 1) {
    out.verdict = Verdict::regular;
  } else if (out.k == 2) {
    std::vector<int> cls;
    for (int i = 0; i < fg.rank(); ++i) {
      const bool same = out.orbit_of[0] == out.orbit_of[fg.adjacent(i, 0)];
      for (FlagIndex f = 1; f < count; ++f) {
        if ((out.orbit_of[f] == out.orbit_of[fg.adjacent(i, f)]) != same) {
          throw Error("two-orbit class depends on the flag at rank " + std::to_string(i));
        }
      }
      if (same) cls.push_back(i);
    }
    out.verdict = cls.empty() ? Verdict::chiral : Verdict::two_orbit;
    out.class_I = std::move(cls);
  }
  return out;
}

bool transitivity(const FlagGraph& fg, const OrbitClassification& orbits, int i, TransitivityMode mode) {
  if (i < 0 || i >= fg.rank()) throw PreconditionError("rank out of range");
  if (!fg.has_chains()) throw PreconditionError("transitivity needs flag chains");
  const std::size_t count = fg.flag_count();
  const auto len = static_cast<std::size_t>(mode == TransitivityMode::face ? 1 : i + 1);
  const auto from = static_cast<std::size_t>(mode == TransitivityMode::face ? i : 0);

  // Number the distinct keys, then merge keys met by flags of one orbit.
  std::vector<FlagIndex> order(count);
  std::iota(order.begin(), order.end(), FlagIndex{0});
  auto key = [&](FlagIndex f) { return fg.chain(f).subspan(from, len); };
  std::sort(order.begin(), order.end(), [&](FlagIndex a, FlagIndex b) {
    auto ka = key(a), kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  std::vector<std::uint32_t> id(count);
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      auto a = key(order[k - 1]), b = key(order[k]);
      if (!std::equal(a.begin(), a.end(), b.begin())) ++next;
    }
    id[order[k]] = next;
  }
  internal::UnionFind uf(next + 1);
  std::vector<std::uint32_t> first(count, static_cast<std::uint32_t>(-1));
  for (FlagIndex f = 0; f < count; ++f) {
    auto& slot = first[orbits.orbit_of[f]];
    if (slot == static_cast<std::uint32_t>(-1)) {
      slot = id[f];
    } else {
      uf.unite(slot, id[f]);
    }
  }
  return uf.components() == 1;
}

bool transitivity(const FlagGraph& fg, int i, TransitivityMode mode) {
  return transitivity(fg, flag_orbits(fg), i, mode);
}

bool is_isomorphic(const FlagGraph& a, const FlagGraph& b) {
  if (a.rank() != b.rank() || a.flag_count() != b.flag_count()) return false;
  if (a.flag_count() == 0) return true;
  const auto color = refine_colors(disjoint_union(a, b));
  const std::size_t shift = a.flag_count();
  for (FlagIndex c = 0; c < b.flag_count(); ++c) {
    if (color[shift + c] != color[0]) continue;
    if (extend_flag_map(a, b, 0, c)) return true;
  }
  return false;
}

bool is_isomorphic(const FacePoset& a, const FacePoset& b, const Limits& limits) {
  if (a.rank() != b.rank()) return false;
  for (int r = 0; r < a.rank(); ++r) {
    if (a.face_count(r) != b.face_count(r)) return false;
  }
  return is_isomorphic(flag_graph(a, limits), flag_graph(b, limits));
}

}  // namespace hpoly
