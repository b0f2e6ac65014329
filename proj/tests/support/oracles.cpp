#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace oracle {

namespace {

constexpr std::size_t kNone = SIZE_MAX;

void extend_chain(const hpoly::FacePoset& p, Chain& c, std::vector<Chain>& out) {
  const int r = static_cast<int>(c.size());
  if (r == p.rank()) {
    out.push_back(c);
    return;
  }
  for (hpoly::FaceIndex g : p.covered_by(r - 1, c.back())) {
    c.push_back(g);
    extend_chain(p, c, out);
    c.pop_back();
  }
}

bool incident_up(const hpoly::FacePoset& p, int r, hpoly::FaceIndex lower, hpoly::FaceIndex upper) {
  for (hpoly::FaceIndex g : p.covered_by(r, lower)) {
    if (g == upper) return true;
  }
  return false;
}

// Adjacency-preserving map sending `from` to `to`, grown by BFS over the
// given adjacency ranks. Flags not reachable that way stay unmapped.
std::optional<std::vector<std::size_t>> try_extend(const Flags& f, std::size_t from, std::size_t to,
                                                   const std::vector<int>& ranks) {
  std::vector<std::size_t> img(f.chains.size(), kNone);
  std::vector<std::size_t> pre(f.chains.size(), kNone);
  std::deque<std::size_t> q{from};
  img[from] = to;
  pre[to] = from;
  while (!q.empty()) {
    const std::size_t x = q.front();
    q.pop_front();
    for (int i : ranks) {
      const std::size_t y = f.adj[static_cast<std::size_t>(i)][x];
      const std::size_t z = f.adj[static_cast<std::size_t>(i)][img[x]];
      if (y == kNone || z == kNone) return std::nullopt;
      if (img[y] == kNone) {
        if (pre[z] != kNone) return std::nullopt;
        img[y] = z;
        pre[z] = y;
        q.push_back(y);
      } else if (img[y] != z) {
        return std::nullopt;
      }
    }
  }
  return img;
}

}  // namespace

Flags enumerate_flags(const hpoly::FacePoset& p) {
  Flags f;
  f.rank = p.rank();
  for (hpoly::FaceIndex v = 0; v < p.vertex_count(); ++v) {
    Chain c{v};
    extend_chain(p, c, f.chains);
  }
  std::sort(f.chains.begin(), f.chains.end());
  for (std::size_t i = 0; i < f.chains.size(); ++i) f.index[f.chains[i]] = i;
  f.adj.assign(static_cast<std::size_t>(f.rank), std::vector<std::size_t>(f.chains.size(), kNone));
  for (std::size_t x = 0; x < f.chains.size(); ++x) {
    const Chain& c = f.chains[x];
    for (int i = 0; i < f.rank; ++i) {
      // Faces of rank i between c[i-1] and c[i+1], other than c[i].
      std::vector<hpoly::FaceIndex> between;
      const std::size_t count = p.face_count(i);
      for (hpoly::FaceIndex g = 0; g < count; ++g) {
        if (i > 0 && !incident_up(p, i - 1, c[static_cast<std::size_t>(i - 1)], g)) continue;
        if (i + 1 < f.rank && !incident_up(p, i, g, c[static_cast<std::size_t>(i + 1)])) continue;
        between.push_back(g);
      }
      if (between.size() != 2) continue;
      Chain d = c;
      d[static_cast<std::size_t>(i)] = between[0] == c[static_cast<std::size_t>(i)] ? between[1] : between[0];
      f.adj[static_cast<std::size_t>(i)][x] = f.index.at(d);
    }
  }
  return f;
}

std::vector<std::vector<std::size_t>> automorphisms(const Flags& f) {
  std::vector<int> ranks(static_cast<std::size_t>(f.rank));
  for (int i = 0; i < f.rank; ++i) ranks[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t t = 0; t < f.chains.size(); ++t) {
    auto m = try_extend(f, 0, t, ranks);
    if (!m) continue;
    // A flag map that preserves adjacency must also be a well-defined
    // map on faces.
    bool ok = true;
    for (int r = 0; r < f.rank && ok; ++r) {
      std::map<hpoly::FaceIndex, hpoly::FaceIndex> face_map;
      for (std::size_t x = 0; x < f.chains.size() && ok; ++x) {
        if ((*m)[x] == kNone) {
          ok = false;
          break;
        }
        const auto a = f.chains[x][static_cast<std::size_t>(r)];
        const auto b = f.chains[(*m)[x]][static_cast<std::size_t>(r)];
        auto [it, fresh] = face_map.emplace(a, b);
        ok = fresh || it->second == b;
      }
    }
    if (ok) out.push_back(std::move(*m));
  }
  return out;
}

Summary summarize(const hpoly::FacePoset& p) {
  const Flags f = enumerate_flags(p);
  const auto autos = automorphisms(f);
  Summary s;
  s.flags = f.chains.size();
  s.group_order = autos.size();
  s.k = s.flags / s.group_order;
  if (s.k == 2) {
    std::set<std::size_t> images;
    for (const auto& a : autos) images.insert(a[0]);
    std::vector<int> cls;
    for (int i = 0; i < f.rank; ++i) {
      if (images.count(f.adj[static_cast<std::size_t>(i)][0])) cls.push_back(i);
    }
    s.class_I = cls;
  }
  return s;
}

bool facet_hereditary(const hpoly::FacePoset& p) {
  const Flags f = enumerate_flags(p);
  const auto autos = automorphisms(f);
  std::set<std::size_t> global_images;
  for (const auto& a : autos) global_images.insert(a[0]);
  const int n = f.rank;
  std::vector<int> inner;
  for (int i = 0; i + 1 < n; ++i) inner.push_back(i);
  std::set<hpoly::FaceIndex> done;
  for (std::size_t base = 0; base < f.chains.size(); ++base) {
    const hpoly::FaceIndex facet = f.chains[base][static_cast<std::size_t>(n - 1)];
    if (!done.insert(facet).second) continue;
    // Section automorphisms: maps base -> t over flags through the facet,
    // using adjacencies below rank n-1 only.
    for (std::size_t t = 0; t < f.chains.size(); ++t) {
      if (f.chains[t][static_cast<std::size_t>(n - 1)] != facet) continue;
      auto m = try_extend(f, base, t, inner);
      if (!m) continue;
      // Extends iff some global automorphism sends base to t.
      bool extends = false;
      for (const auto& a : autos) {
        if (a[base] == t) {
          extends = true;
          break;
        }
      }
      if (!extends) return false;
    }
  }
  return true;
}

std::size_t face_orbits(const hpoly::FacePoset& p, int r) {
  const Flags f = enumerate_flags(p);
  const auto autos = automorphisms(f);
  std::vector<std::set<hpoly::FaceIndex>> orbit(p.face_count(r));
  std::set<std::set<hpoly::FaceIndex>> distinct;
  for (hpoly::FaceIndex g = 0; g < p.face_count(r); ++g) {
    std::set<hpoly::FaceIndex> o;
    for (const auto& a : autos) {
      for (std::size_t x = 0; x < f.chains.size(); ++x) {
        if (f.chains[x][static_cast<std::size_t>(r)] == g) {
          o.insert(f.chains[a[x]][static_cast<std::size_t>(r)]);
          break;
        }
      }
    }
    distinct.insert(o);
  }
  return distinct.size();
}

}  // namespace oracle
