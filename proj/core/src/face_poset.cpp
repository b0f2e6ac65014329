#include "hpoly/face_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "hpoly/error.hpp"

namespace hpoly {

void Incidence::push_row(std::span<const FaceIndex> values) {
  targets.insert(targets.end(), values.begin(), values.end());
  offsets.push_back(static_cast<std::uint32_t>(targets.size()));
}

FacePoset build_poset(std::size_t vertex_count,
                      std::vector<std::vector<std::vector<FaceIndex>>> covers) {
  FacePoset p;
  const int n = static_cast<int>(covers.size()) + 1;
  if (vertex_count == 0) throw PreconditionError("rank 0 has no faces");
  p.rank_ = n;
  p.counts_.resize(static_cast<std::size_t>(n));
  p.counts_[0] = vertex_count;
  p.down_.resize(static_cast<std::size_t>(n));
  p.up_.resize(static_cast<std::size_t>(n));

  for (int r = 1; r < n; ++r) {
    auto& lists = covers[static_cast<std::size_t>(r - 1)];
    if (lists.empty()) throw PreconditionError("rank " + std::to_string(r) + " has no faces");
    p.counts_[static_cast<std::size_t>(r)] = lists.size();
    const std::size_t below = p.counts_[static_cast<std::size_t>(r - 1)];
    for (std::size_t f = 0; f < lists.size(); ++f) {
      auto& l = lists[f];
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
        throw PreconditionError("face (" + std::to_string(r) + "," + std::to_string(f) +
                                ") lists a covered face twice");
      }
      if (l.size() < 2) {
        throw PreconditionError("face (" + std::to_string(r) + "," + std::to_string(f) +
                                ") covers fewer than two faces");
      }
      if (l.back() >= below) {
        throw PreconditionError("face (" + std::to_string(r) + "," + std::to_string(f) +
                                ") covers out-of-range index " + std::to_string(l.back()));
      }
      p.down_[static_cast<std::size_t>(r)].push_row(l);
    }
  }

  for (int r = 0; r + 1 < n; ++r) {
    std::vector<std::vector<FaceIndex>> up(p.counts_[static_cast<std::size_t>(r)]);
    const auto& d = p.down_[static_cast<std::size_t>(r + 1)];
    for (std::size_t g = 0; g < d.rows(); ++g) {
      for (FaceIndex f : d.row(g)) up[f].push_back(static_cast<FaceIndex>(g));
    }
    for (const auto& row : up) p.up_[static_cast<std::size_t>(r)].push_row(row);
  }
  return p;
}

std::vector<std::vector<std::vector<FaceIndex>>> cover_lists(const FacePoset& p) {
  std::vector<std::vector<std::vector<FaceIndex>>> out(static_cast<std::size_t>(p.rank() - 1));
  for (int r = 1; r < p.rank(); ++r) {
    auto& lists = out[static_cast<std::size_t>(r - 1)];
    lists.resize(p.face_count(r));
    for (std::size_t f = 0; f < lists.size(); ++f) {
      auto c = p.covers(r, static_cast<FaceIndex>(f));
      lists[f].assign(c.begin(), c.end());
    }
  }
  return out;
}

bool operator==(const FacePoset& a, const FacePoset& b) {
  if (a.rank_ != b.rank_ || a.counts_ != b.counts_) return false;
  for (int r = 1; r < a.rank_; ++r) {
    const auto& x = a.down_[static_cast<std::size_t>(r)];
    const auto& y = b.down_[static_cast<std::size_t>(r)];
    if (x.offsets != y.offsets || x.targets != y.targets) return false;
  }
  return true;
}

namespace {

// Faces of rank `target` reachable downward from the given rank-r faces.
std::vector<FaceIndex> descend(const FacePoset& p, int r, std::vector<FaceIndex> faces,
                               int target) {
  while (r > target) {
    std::vector<FaceIndex> next;
    for (FaceIndex f : faces) {
      auto c = p.covers(r, f);
      next.insert(next.end(), c.begin(), c.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    faces = std::move(next);
    --r;
  }
  return faces;
}

std::vector<FaceIndex> ascend(const FacePoset& p, int r, std::vector<FaceIndex> faces,
                              int target) {
  while (r < target) {
    std::vector<FaceIndex> next;
    for (FaceIndex f : faces) {
      auto c = p.covered_by(r, f);
      next.insert(next.end(), c.begin(), c.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    faces = std::move(next);
    ++r;
  }
  return faces;
}

}  // namespace

std::vector<FaceIndex> FacePoset::vertex_set(int r, FaceIndex f) const {
  return descend(*this, r, {f}, 0);
}

std::vector<FaceIndex> FacePoset::facet_set(int r, FaceIndex f) const {
  return ascend(*this, r, {f}, rank_ - 1);
}

std::size_t FacePoset::count_flags(std::size_t cap) const {
  // chains[f] = number of chains from a vertex up to face f.
  const std::size_t limit = cap == SIZE_MAX ? cap : cap + 1;
  std::vector<std::size_t> chains(counts_[0], 1);
  for (int r = 1; r < rank_; ++r) {
    std::vector<std::size_t> next(counts_[static_cast<std::size_t>(r)], 0);
    for (std::size_t f = 0; f < next.size(); ++f) {
      std::size_t s = 0;
      for (FaceIndex g : covers(r, static_cast<FaceIndex>(f))) s = std::min(limit, s + chains[g]);
      next[f] = s;
    }
    chains = std::move(next);
  }
  std::size_t total = 0;
  for (std::size_t c : chains) total = std::min(limit, total + c);
  return total;
}

bool is_incident(const FacePoset& p, FaceRef a, FaceRef b) {
  if (a.rank > b.rank) return false;
  if (a.rank == b.rank) return a.rank == -1 || a.rank == p.rank() || a.index == b.index;
  if (a.rank == -1 || b.rank == p.rank()) return true;
  auto below = descend(p, b.rank, {b.index}, a.rank);
  return std::binary_search(below.begin(), below.end(), a.index);
}

FacePoset section(const FacePoset& p, const SectionSpec& s) {
  const int n = p.rank();
  const int lo = s.lower.rank;
  const int hi = s.upper.rank;
  if (lo < -1 || hi > n || hi - lo - 1 < 1) {
    throw PreconditionError("section bounds must be at least two ranks apart");
  }
  if (!is_incident(p, s.lower, s.upper)) throw PreconditionError("section bounds are not incident");

  // Faces per rank strictly between the bounds.
  std::vector<std::vector<FaceIndex>> keep(static_cast<std::size_t>(n));
  for (int r = lo + 1; r < hi; ++r) {
    std::vector<FaceIndex> above;
    if (lo == -1) {
      above.resize(p.face_count(r));
      std::iota(above.begin(), above.end(), FaceIndex{0});
    } else {
      above = ascend(p, lo, {s.lower.index}, r);
    }
    if (hi != n) {
      auto below = descend(p, hi, {s.upper.index}, r);
      std::vector<FaceIndex> both;
      std::set_intersection(above.begin(), above.end(), below.begin(), below.end(),
                            std::back_inserter(both));
      above = std::move(both);
    }
    keep[static_cast<std::size_t>(r)] = std::move(above);
  }

  const auto& base = keep[static_cast<std::size_t>(lo + 1)];
  std::vector<std::vector<std::vector<FaceIndex>>> covers;
  for (int r = lo + 2; r < hi; ++r) {
    const auto& below = keep[static_cast<std::size_t>(r - 1)];
    std::vector<std::vector<FaceIndex>> lists;
    for (FaceIndex f : keep[static_cast<std::size_t>(r)]) {
      std::vector<FaceIndex> l;
      for (FaceIndex g : p.covers(r, f)) {
        auto it = std::lower_bound(below.begin(), below.end(), g);
        if (it != below.end() && *it == g) l.push_back(static_cast<FaceIndex>(it - below.begin()));
      }
      lists.push_back(std::move(l));
    }
    covers.push_back(std::move(lists));
  }
  return build_poset(base.size(), std::move(covers));
}

FacePoset face_section(const FacePoset& p, int rank, FaceIndex f) {
  return section(p, {{-1, 0}, {rank, f}});
}

FacePoset co_face(const FacePoset& p, int rank, FaceIndex f) {
  return section(p, {{rank, f}, {p.rank(), 0}});
}

FacePoset dual(const FacePoset& p) {
  const int n = p.rank();
  std::vector<std::vector<std::vector<FaceIndex>>> covers;
  // Dual rank d face = original rank n-1-d face; dual covers = original up-list.
  for (int d = 1; d < n; ++d) {
    const int r = n - 1 - d;
    std::vector<std::vector<FaceIndex>> lists(p.face_count(r));
    for (std::size_t f = 0; f < lists.size(); ++f) {
      auto c = p.covered_by(r, static_cast<FaceIndex>(f));
      lists[f].assign(c.begin(), c.end());
    }
    covers.push_back(std::move(lists));
  }
  return build_poset(p.face_count(n - 1), std::move(covers));
}

FacePoset canonicalize(const FacePoset& p, std::vector<FaceIndex>* facet_perm) {
  const int n = p.rank();
  // perm[r][old] = new index.
  std::vector<FaceIndex> prev_perm(p.vertex_count());
  std::iota(prev_perm.begin(), prev_perm.end(), FaceIndex{0});
  std::vector<std::vector<std::vector<FaceIndex>>> covers;
  for (int r = 1; r < n; ++r) {
    const std::size_t m = p.face_count(r);
    std::vector<std::vector<FaceIndex>> lists(m);
    for (std::size_t f = 0; f < m; ++f) {
      for (FaceIndex g : p.covers(r, static_cast<FaceIndex>(f))) lists[f].push_back(prev_perm[g]);
      std::sort(lists[f].begin(), lists[f].end());
    }
    std::vector<FaceIndex> order(m);
    std::iota(order.begin(), order.end(), FaceIndex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](FaceIndex a, FaceIndex b) { return lists[a] < lists[b]; });
    std::vector<FaceIndex> perm(m);
    std::vector<std::vector<FaceIndex>> sorted(m);
    for (std::size_t k = 0; k < m; ++k) {
      perm[order[k]] = static_cast<FaceIndex>(k);
      sorted[k] = lists[order[k]];
    }
    covers.push_back(std::move(sorted));
    prev_perm = std::move(perm);
  }
  if (facet_perm) *facet_perm = prev_perm;
  return build_poset(p.vertex_count(), std::move(covers));
}

std::optional<std::vector<int>> schlafli_type(const FacePoset& p) {
  const int n = p.rank();
  std::vector<int> type;
  // Section F(i+1)/F(i-2) for i = 1..n-1 is a polygon whose size is the
  // number of rank-i faces between the bounds.
  for (int i = 1; i < n; ++i) {
    std::optional<int> size;
    auto check = [&](std::size_t count) {
      if (!size) size = static_cast<int>(count);
      return *size == static_cast<int>(count);
    };
    if (i - 2 == -1 && i + 1 == n) {
      if (!check(p.face_count(i))) return std::nullopt;
    } else if (i - 2 == -1) {
      for (FaceIndex g = 0; g < p.face_count(i + 1); ++g) {
        if (!check(p.covers(i + 1, g).size())) return std::nullopt;
      }
    } else if (i + 1 == n) {
      for (FaceIndex f = 0; f < p.face_count(i - 2); ++f) {
        if (!check(ascend(p, i - 2, {f}, i).size())) return std::nullopt;
      }
    } else {
      for (FaceIndex g = 0; g < p.face_count(i + 1); ++g) {
        auto mids = descend(p, i + 1, {g}, i - 2);
        for (FaceIndex f : mids) {
          auto up = ascend(p, i - 2, {f}, i);
          auto down = p.covers(i + 1, g);
          std::size_t count = 0;
          for (FaceIndex h : up) count += std::binary_search(down.begin(), down.end(), h);
          if (!check(count)) return std::nullopt;
        }
      }
    }
    type.push_back(*size);
  }
  return type;
}

bool is_describable(const FacePoset& p, Describability mode) {
  if (mode == Describability::facet) return is_describable(dual(p), Describability::vertex);
  std::map<std::vector<FaceIndex>, int> seen;
  // F(n) owns the full vertex set, so a proper face with every vertex clashes
  // with it; F(-1) owns the empty set, which no proper face has.
  const std::size_t v = p.vertex_count();
  for (int r = 0; r < p.rank(); ++r) {
    for (FaceIndex f = 0; f < p.face_count(r); ++f) {
      auto vs = p.vertex_set(r, f);
      if (vs.size() == v && r > 0) return false;
      if (!seen.emplace(std::move(vs), r).second) return false;
    }
  }
  return true;
}

std::optional<std::vector<VertexColor>> edge_bipartition(const FacePoset& p) {
  if (p.rank() < 2) throw PreconditionError("edge_bipartition needs rank >= 2");
  const std::size_t v = p.vertex_count();
  std::vector<int> color(v, -1);
  std::vector<FaceIndex> queue{0};
  color[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    FaceIndex x = queue[head];
    for (FaceIndex e : p.covered_by(0, x)) {
      for (FaceIndex y : p.covers(1, e)) {
        if (y == x) continue;
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<VertexColor> out(v);
  for (std::size_t i = 0; i < v; ++i) {
    if (color[i] == -1) return std::nullopt;
    out[i] = color[i] == 0 ? VertexColor::yellow : VertexColor::red;
  }
  return out;
}

FacePoset polygon(std::size_t m) {
  if (m < 2) throw PreconditionError("a polygon needs at least two vertices");
  std::vector<std::vector<FaceIndex>> edges(m);
  for (std::size_t i = 0; i < m; ++i) {
    edges[i] = {static_cast<FaceIndex>(i), static_cast<FaceIndex>((i + 1) % m)};
  }
  if (m == 2) edges = {{0, 1}, {0, 1}};
  return build_poset(m, {edges});
}

FacePoset simplex(int n) {
  if (n < 1) throw PreconditionError("simplex rank must be >= 1");
  const int points = n + 1;
  // Rank r faces = subsets of size r+1, indexed by position in an ordered list.
  std::vector<std::map<unsigned, FaceIndex>> index(static_cast<std::size_t>(n));
  std::vector<std::vector<unsigned>> masks(static_cast<std::size_t>(n));
  for (unsigned mask = 1; mask < (1u << points) - 1; ++mask) {
    int r = __builtin_popcount(mask) - 1;
    masks[static_cast<std::size_t>(r)].push_back(mask);
  }
  for (int r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < masks[static_cast<std::size_t>(r)].size(); ++k) {
      index[static_cast<std::size_t>(r)][masks[static_cast<std::size_t>(r)][k]] =
          static_cast<FaceIndex>(k);
    }
  }
  std::vector<std::vector<std::vector<FaceIndex>>> covers;
  for (int r = 1; r < n; ++r) {
    std::vector<std::vector<FaceIndex>> lists;
    for (unsigned mask : masks[static_cast<std::size_t>(r)]) {
      std::vector<FaceIndex> l;
      for (int b = 0; b < points; ++b) {
        if (mask & (1u << b)) l.push_back(index[static_cast<std::size_t>(r - 1)][mask & ~(1u << b)]);
      }
      lists.push_back(std::move(l));
    }
    covers.push_back(std::move(lists));
  }
  return build_poset(static_cast<std::size_t>(points), std::move(covers));
}

}  // namespace hpoly
