#include "hpoly/flag_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hpoly/error.hpp"
#include "hpoly/validate.hpp"
#include "internal/union_find.hpp"

namespace hpoly {

FlagGraph::FlagGraph(int rank, std::vector<std::vector<FlagIndex>> adjacency,
                     std::vector<FaceIndex> chains)
    : rank_(rank), adj_(std::move(adjacency)), chains_(std::move(chains)) {
  if (static_cast<int>(adj_.size()) != rank_) throw PreconditionError("one adjacency per rank");
  count_ = adj_.empty() ? 0 : adj_[0].size();
  for (const auto& a : adj_) {
    if (a.size() != count_) throw PreconditionError("adjacency permutations differ in size");
  }
}

namespace {

// Faces of rank i lying strictly between the chain's neighbours at i-1, i+1.
void between(const FacePoset& p, std::span<const FaceIndex> chain, int i,
             std::vector<FaceIndex>& out) {
  const int n = p.rank();
  out.clear();
  if (n == 1) {
    for (FaceIndex v = 0; v < p.vertex_count(); ++v) out.push_back(v);
  } else if (i == 0) {
    auto c = p.covers(1, chain[1]);
    out.assign(c.begin(), c.end());
  } else if (i == n - 1) {
    auto c = p.covered_by(n - 2, chain[static_cast<std::size_t>(n - 2)]);
    out.assign(c.begin(), c.end());
  } else {
    auto down = p.covers(i + 1, chain[static_cast<std::size_t>(i + 1)]);
    auto up = p.covered_by(i - 1, chain[static_cast<std::size_t>(i - 1)]);
    std::set_intersection(down.begin(), down.end(), up.begin(), up.end(), std::back_inserter(out));
  }
}

}  // namespace

FlagGraph flag_graph(const FacePoset& p, const Limits& limits) {
  const int n = p.rank();
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t total = p.count_flags(limits.max_flags);
  if (total > limits.max_flags) {
    throw LimitError("flag count exceeds limit " + std::to_string(limits.max_flags));
  }

  // Lexicographic enumeration: vertex ascending, then each covered_by list.
  std::vector<FaceIndex> chains;
  chains.reserve(total * nn);
  std::vector<FaceIndex> cur(nn);
  std::vector<std::size_t> pos(nn, 0);
  for (FaceIndex v = 0; v < p.vertex_count(); ++v) {
    cur[0] = v;
    if (n == 1) {
      chains.push_back(v);
      continue;
    }
    int depth = 1;
    pos[1] = 0;
    while (depth >= 1) {
      auto ups = p.covered_by(depth - 1, cur[static_cast<std::size_t>(depth - 1)]);
      auto& k = pos[static_cast<std::size_t>(depth)];
      if (k >= ups.size()) {
        --depth;
        if (depth >= 1) ++pos[static_cast<std::size_t>(depth)];
        continue;
      }
      cur[static_cast<std::size_t>(depth)] = ups[k];
      if (depth == n - 1) {
        chains.insert(chains.end(), cur.begin(), cur.end());
        ++k;
      } else {
        ++depth;
        pos[static_cast<std::size_t>(depth)] = 0;
      }
    }
  }
  const std::size_t count = chains.size() / nn;

  auto locate = [&](std::span<const FaceIndex> key) -> FlagIndex {
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      const FaceIndex* c = chains.data() + mid * nn;
      if (std::lexicographical_compare(c, c + nn, key.begin(), key.end())) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo == count || !std::equal(key.begin(), key.end(), chains.data() + lo * nn)) {
      throw NotPolytopalError("flag lookup failed");
    }
    return static_cast<FlagIndex>(lo);
  };

  std::vector<std::vector<FlagIndex>> adj(nn, std::vector<FlagIndex>(count));
  std::vector<FaceIndex> key(nn), options;
  for (std::size_t f = 0; f < count; ++f) {
    std::span<const FaceIndex> c(chains.data() + f * nn, nn);
    for (int i = 0; i < n; ++i) {
      between(p, c, i, options);
      if (options.size() != 2) {
        throw NotPolytopalError("diamond condition fails at rank " + std::to_string(i) + " (" +
                                std::to_string(options.size()) + " faces)");
      }
      std::copy(c.begin(), c.end(), key.begin());
      key[static_cast<std::size_t>(i)] = options[0] == c[static_cast<std::size_t>(i)] ? options[1] : options[0];
      adj[static_cast<std::size_t>(i)][f] = locate(key);
    }
  }
  return FlagGraph(n, std::move(adj), std::move(chains));
}

std::string check_flag_graph(const FlagGraph& fg) {
  const int n = fg.rank();
  const std::size_t count = fg.flag_count();
  if (count == 0) return "no flags";
  for (int i = 0; i < n; ++i) {
    for (FlagIndex f = 0; f < count; ++f) {
      FlagIndex g = fg.adjacent(i, f);
      if (g >= count) return "adjacency " + std::to_string(i) + " out of range";
      if (g == f) return "adjacency " + std::to_string(i) + " has a fixed point at flag " + std::to_string(f);
      if (fg.adjacent(i, g) != f) return "adjacency " + std::to_string(i) + " is not an involution";
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (FlagIndex f = 0; f < count; ++f) {
        if (fg.adjacent(i, fg.adjacent(j, f)) != fg.adjacent(j, fg.adjacent(i, f))) {
          return "adjacencies " + std::to_string(i) + " and " + std::to_string(j) +
                 " do not commute at flag " + std::to_string(f);
        }
      }
    }
  }
  internal::UnionFind uf(count);
  for (int i = 0; i < n; ++i) {
    for (FlagIndex f = 0; f < count; ++f) uf.unite(f, fg.adjacent(i, f));
  }
  if (uf.components() != 1) return "flag graph is disconnected";
  return {};
}

bool flag_parity(const FlagGraph& fg, std::vector<std::uint8_t>& parity) {
  const std::size_t count = fg.flag_count();
  parity.assign(count, 2);
  std::vector<FlagIndex> queue;
  bool bipartite = true;
  for (FlagIndex s = 0; s < count; ++s) {
    if (parity[s] != 2) continue;
    parity[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      FlagIndex x = queue[h];
      for (int i = 0; i < fg.rank(); ++i) {
        FlagIndex y = fg.adjacent(i, x);
        if (parity[y] == 2) {
          parity[y] = static_cast<std::uint8_t>(1 - parity[x]);
          queue.push_back(y);
        } else if (parity[y] == parity[x]) {
          bipartite = false;
        }
      }
    }
  }
  return bipartite;
}

FacePoset poset_from_flag_graph(const FlagGraph& fg) {
  if (auto why = check_flag_graph(fg); !why.empty()) throw NotPolytopalError(why);
  const int n = fg.rank();
  const std::size_t count = fg.flag_count();

  // label[i][flag] = index of the rank-i face containing the flag.
  std::vector<std::vector<FaceIndex>> label(static_cast<std::size_t>(n));
  std::vector<std::size_t> faces(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    internal::UnionFind uf(count);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (FlagIndex f = 0; f < count; ++f) uf.unite(f, fg.adjacent(j, f));
    }
    auto& lab = label[static_cast<std::size_t>(i)];
    lab.assign(count, 0);
    std::vector<FaceIndex> root_label(count, static_cast<FaceIndex>(-1));
    FaceIndex next = 0;
    for (FlagIndex f = 0; f < count; ++f) {
      auto r = uf.find(f);
      if (root_label[r] == static_cast<FaceIndex>(-1)) root_label[r] = next++;
      lab[f] = root_label[r];
    }
    faces[static_cast<std::size_t>(i)] = next;
  }

  std::vector<std::vector<std::vector<FaceIndex>>> covers;
  for (int i = 1; i < n; ++i) {
    std::vector<std::vector<FaceIndex>> lists(faces[static_cast<std::size_t>(i)]);
    for (FlagIndex f = 0; f < count; ++f) {
      lists[label[static_cast<std::size_t>(i)][f]].push_back(label[static_cast<std::size_t>(i - 1)][f]);
    }
    for (auto& l : lists) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    covers.push_back(std::move(lists));
  }

  FacePoset p;
  try {
    p = build_poset(faces[0], std::move(covers));
  } catch (const PreconditionError& e) {
    throw NotPolytopalError(std::string("flag graph does not come from a polytope: ") + e.what());
  }

  // Each flag must map to a distinct chain, and those must be all chains.
  std::vector<FaceIndex> chains(count * static_cast<std::size_t>(n));
  for (FlagIndex f = 0; f < count; ++f) {
    for (int i = 0; i < n; ++i) {
      chains[f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(i)][f];
    }
  }
  std::vector<FlagIndex> order(count);
  std::iota(order.begin(), order.end(), FlagIndex{0});
  auto row = [&](FlagIndex f) { return chains.begin() + static_cast<std::ptrdiff_t>(f) * n; };
  std::sort(order.begin(), order.end(), [&](FlagIndex a, FlagIndex b) {
    return std::lexicographical_compare(row(a), row(a) + n, row(b), row(b) + n);
  });
  for (std::size_t k = 1; k < count; ++k) {
    if (std::equal(row(order[k - 1]), row(order[k - 1]) + n, row(order[k]))) {
      throw NotPolytopalError("flag graph does not come from a polytope: two flags share a chain");
    }
  }
  if (p.count_flags(count) != count) {
    throw NotPolytopalError("flag graph does not come from a polytope: chain count mismatch");
  }
  require_valid(p, "poset_from_flag_graph");
  return p;
}

}  // namespace hpoly
