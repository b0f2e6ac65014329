#include "hpoly/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "hpoly/error.hpp"
#include "hpoly/validate.hpp"

namespace hpoly {

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint32_t>(x);
  return out;
}

Perm identity_perm(std::size_t degree) {
  Perm out(degree);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

bool is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] != x) return false;
  }
  return true;
}

std::size_t perm_order(const Perm& a) {
  std::vector<std::uint8_t> seen(a.size(), 0);
  std::size_t order = 1;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = a[y]) {
      seen[y] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Perm> generators, bool semiregular)
    : degree_(degree), gens_(std::move(generators)), semiregular_(semiregular) {
  for (const auto& g : gens_) {
    if (g.size() != degree_) throw PreconditionError("generator degree mismatch");
  }
}

std::vector<std::uint32_t> PermutationGroup::orbit(std::uint32_t point) const {
  std::vector<std::uint8_t> seen(degree_, 0);
  std::vector<std::uint32_t> out{point};
  seen[point] = 1;
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (const auto& g : gens_) {
      std::uint32_t y = g[out[h]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

namespace {

// Deterministic Schreier-Sims; levels hold strong generators and explicit
// transversals, so it is meant for modest degrees.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& gens) : degree_(degree) {
    for (const auto& g : gens) {
      if (is_identity(g)) continue;
      if (levels_.empty()) add_level(g);
      levels_[0].gens.push_back(g);
    }
    if (levels_.empty()) return;
    rebuild(0);
    std::size_t i = levels_.size();
    while (i >= 1) {
      std::size_t lvl = i - 1;
      bool restarted = false;
      Level& L = levels_[lvl];
      for (std::size_t k = 0; !restarted && k < L.orbit.size(); ++k) {
        const std::uint32_t x = L.orbit[k];
        for (std::size_t s = 0; s < levels_[lvl].gens.size() && !restarted; ++s) {
          const Level& cur = levels_[lvl];
          const Perm& g = cur.gens[s];
          Perm h = compose(compose(cur.transversal[index_of(cur, x)], g),
                           invert(cur.transversal[index_of(cur, g[x])]));
          auto [residue, j] = strip(std::move(h), lvl + 1);
          if (is_identity(residue)) continue;
          if (j == levels_.size()) add_level(residue);
          for (std::size_t l = lvl + 1; l <= j; ++l) {
            levels_[l].gens.push_back(residue);
            rebuild(l);
          }
          i = j + 1;
          restarted = true;
        }
      }
      if (!restarted) --i;
    }
  }

  std::size_t order() const {
    std::size_t o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

 private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit/transversal
    std::vector<Perm> transversal;
  };

  static std::size_t index_of(const Level& l, std::uint32_t x) { return static_cast<std::size_t>(l.slot[x]); }

  void add_level(const Perm& moved_by) {
    std::uint32_t b = 0;
    while (moved_by[b] == b) ++b;
    Level l;
    l.base = b;
    levels_.push_back(std::move(l));
    rebuild(levels_.size() - 1);
  }

  void rebuild(std::size_t lvl) {
    Level& l = levels_[lvl];
    l.orbit.assign(1, l.base);
    l.slot.assign(degree_, -1);
    l.slot[l.base] = 0;
    l.transversal.assign(1, identity_perm(degree_));
    for (std::size_t h = 0; h < l.orbit.size(); ++h) {
      for (const auto& g : l.gens) {
        std::uint32_t y = g[l.orbit[h]];
        if (l.slot[y] == -1) {
          l.slot[y] = static_cast<std::int32_t>(l.orbit.size());
          l.orbit.push_back(y);
          l.transversal.push_back(compose(l.transversal[h], g));
        }
      }
    }
  }

  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      const std::uint32_t x = g[L.base];
      if (L.slot[x] == -1) return {std::move(g), l};
      g = compose(g, invert(L.transversal[index_of(L, x)]));
    }
    return {std::move(g), levels_.size()};
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace

std::size_t PermutationGroup::order() const {
  if (semiregular_) return orbit(0).size();
  return StabilizerChain(degree_, gens_).order();
}

Perm PermutationGroup::evaluate(const Word& w) const {
  Perm out = identity_perm(degree_);
  for (int letter : w) {
    const Perm& g = gens_.at(static_cast<std::size_t>(std::abs(letter) - 1));
    out = compose(out, letter > 0 ? g : invert(g));
  }
  return out;
}

PermutationGroup permutation_group(const CosetTable& table, bool trivial_subgroup) {
  std::vector<Perm> gens(static_cast<std::size_t>(table.generators), Perm(table.coset_count));
  for (int g = 0; g < table.generators; ++g) {
    for (std::size_t c = 0; c < table.coset_count; ++c) gens[static_cast<std::size_t>(g)][c] = table.at(c, g);
  }
  return PermutationGroup(table.coset_count, std::move(gens), trivial_subgroup);
}

namespace {

// Points of the orbit of 0 renumbered 0..m-1 in breadth-first order.
struct OrbitIndex {
  std::vector<std::uint32_t> points;
  std::vector<std::int64_t> local;
};

OrbitIndex index_orbit(const PermutationGroup& g) {
  OrbitIndex o;
  o.points = g.orbit(0);
  o.local.assign(g.degree(), -1);
  for (std::size_t k = 0; k < o.points.size(); ++k) o.local[o.points[k]] = static_cast<std::int64_t>(k);
  return o;
}

std::vector<FlagIndex> restrict_perm(const Perm& p, const OrbitIndex& o) {
  std::vector<FlagIndex> out(o.points.size());
  for (std::size_t k = 0; k < o.points.size(); ++k) out[k] = static_cast<FlagIndex>(o.local[p[o.points[k]]]);
  return out;
}

}  // namespace

FlagGraph flag_graph_from_reflection_group(const PermutationGroup& g) {
  for (const auto& p : g.generators()) {
    if (!is_identity(compose(p, p))) throw PreconditionError("reflection generators must be involutions");
  }
  OrbitIndex o = index_orbit(g);
  std::vector<std::vector<FlagIndex>> adj;
  for (const auto& p : g.generators()) adj.push_back(restrict_perm(p, o));
  const int rank = static_cast<int>(adj.size());
  return FlagGraph(rank, std::move(adj));
}

FlagGraph flag_graph_from_rotation_group(const PermutationGroup& g) {
  const auto& s = g.generators();
  if (s.empty()) throw PreconditionError("rotation group needs generators");
  const int n = static_cast<int>(s.size()) + 1;
  std::vector<Perm> white(static_cast<std::size_t>(n)), black(static_cast<std::size_t>(n));
  white[0] = black[0] = identity_perm(g.degree());
  white[1] = invert(s[0]);
  black[1] = s[0];
  Perm prefix = s[0];
  for (int i = 2; i < n; ++i) {
    prefix = compose(prefix, s[static_cast<std::size_t>(i - 1)]);
    white[static_cast<std::size_t>(i)] = black[static_cast<std::size_t>(i)] = prefix;
    if (!is_identity(compose(prefix, prefix))) {
      throw PreconditionError("s1..s" + std::to_string(i) + " is not an involution");
    }
  }
  OrbitIndex o = index_orbit(g);
  const auto m = static_cast<FlagIndex>(o.points.size());
  std::vector<std::vector<FlagIndex>> adj(static_cast<std::size_t>(n), std::vector<FlagIndex>(2 * m));
  for (int i = 0; i < n; ++i) {
    auto w = restrict_perm(white[static_cast<std::size_t>(i)], o);
    auto b = restrict_perm(black[static_cast<std::size_t>(i)], o);
    for (FlagIndex x = 0; x < m; ++x) {
      adj[static_cast<std::size_t>(i)][x] = m + w[x];
      adj[static_cast<std::size_t>(i)][m + x] = b[x];
    }
  }
  return FlagGraph(n, std::move(adj));
}

PermutationGroup halving(const PermutationGroup& g, HalvingVariant variant, GroupKind kind) {
  const auto& a = g.generators();
  std::vector<Perm> gens;
  if (kind == GroupKind::reflection) {
    if (a.size() != 3) throw PreconditionError("halving needs rank 3");
    if (perm_order(compose(a[0], a[1])) != 4) throw PreconditionError("halving needs type {4,q}");
    Perm conj = compose(compose(a[0], a[1]), a[0]);
    gens = variant == HalvingVariant::eta ? std::vector<Perm>{conj, a[2], a[1]}
                                          : std::vector<Perm>{a[1], a[2], conj};
  } else {
    if (a.size() != 2) throw PreconditionError("halving needs rank 3");
    if (perm_order(a[0]) != 4) throw PreconditionError("halving needs type {4,q}");
    Perm s11 = compose(a[0], a[0]);
    Perm s2i = invert(a[1]);
    gens = variant == HalvingVariant::eta ? std::vector<Perm>{compose(s11, a[1]), s2i}
                                          : std::vector<Perm>{a[1], compose(s2i, s11)};
  }
  PermutationGroup h(g.degree(), std::move(gens), g.semiregular());
  const std::size_t full = g.order(), half = h.order();
  if (half * 2 != full) throw PreconditionError("edge graph is not bipartite (halving subgroup has index 1)");
  return h;
}

FlagGraph flag_graph_from_presentation(const GroupPresentation& pres, std::size_t limit) {
  if (!pres.subgroup.empty()) throw PreconditionError("polytope presentations enumerate over the trivial subgroup");
  CosetTable table = coset_enumerate(pres, limit);
  if (pres.order && *pres.order != table.coset_count) {
    throw Error("presentation declares order " + std::to_string(*pres.order) + " but enumerates " +
                std::to_string(table.coset_count));
  }
  PermutationGroup g = permutation_group(table);
  return pres.kind == GroupKind::reflection ? flag_graph_from_reflection_group(g)
                                            : flag_graph_from_rotation_group(g);
}

FacePoset poset_from_presentation(const GroupPresentation& pres, std::size_t limit) {
  return canonicalize(poset_from_flag_graph(flag_graph_from_presentation(pres, limit)));
}

}  // namespace hpoly
