#include <array>
#include <bit>
#include <numeric>
#include <vector>

#include "posetkit/dimension.hpp"

namespace posetkit {

namespace {

// Directed edges of the incomparability graph, keyed so that u -> v and
// v -> u are distinct nodes of the forcing relation.
struct ForcingSets {
  std::vector<std::size_t> parent;

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a < b ? b : a] = a < b ? a : b;
  }
};

}  // namespace

std::optional<std::vector<Bitset>> orient_incomparability_graph(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Bitset> remaining(n, Bitset(n));
  for (Element x = 0; x < n; ++x) {
    remaining[x] = ~(p.up_set(x) | p.down_set(x));
    remaining[x].reset(x);
  }
  std::vector<Bitset> orient(n, Bitset(n));
  std::vector<Bitset> in_class(n, Bitset(n));
  std::vector<ElementPair> frontier;
  std::vector<ElementPair> members;

  // Each round extracts the implication class of the smallest remaining edge
  // within the remaining graph, orients it, then deletes it.
  for (Element a = 0; a < n; ++a) {
    while (remaining[a].any()) {
      const Element b = remaining[a].find_first();
      members.clear();
      frontier.assign(1, {a, b});
      in_class[a].set(b);
      while (!frontier.empty()) {
        const auto [x, y] = frontier.back();
        frontier.pop_back();
        members.emplace_back(x, y);
        if (in_class[y].test(x)) return std::nullopt;
        // x -> y forces x -> z for z adjacent to x but not to y.
        Bitset tails = remaining[x] - remaining[y];
        tails.reset(y);
        for (auto z = tails.find_first(); z != Bitset::npos; z = tails.find_next(z)) {
          if (in_class[z].test(x)) return std::nullopt;
          if (!in_class[x].test(z)) {
            in_class[x].set(z);
            frontier.emplace_back(x, z);
          }
        }
        // x -> y forces w -> y for w adjacent to y but not to x.
        Bitset heads = remaining[y] - remaining[x];
        heads.reset(x);
        for (auto w = heads.find_first(); w != Bitset::npos; w = heads.find_next(w)) {
          if (in_class[y].test(w)) return std::nullopt;
          if (!in_class[w].test(y)) {
            in_class[w].set(y);
            frontier.emplace_back(w, y);
          }
        }
      }
      for (const auto& [x, y] : members) {
        orient[x].set(y);
        remaining[x].reset(y);
        remaining[y].reset(x);
        in_class[x].reset(y);
      }
    }
  }
  return orient;
}

namespace dim2 {

MaskOracle::MaskOracle(const Poset& host) : incomparable_(host.size(), 0) {
  if (host.size() > 64) throw DomainError("MaskOracle supports at most 64 elements");
  for (Element x = 0; x < host.size(); ++x) {
    for (Element y = 0; y < host.size(); ++y) {
      if (host.incomparable(x, y)) incomparable_[x] |= std::uint64_t{1} << y;
    }
  }
}

// The incomparability graph is a comparability graph iff no implication class
// of the forcing relation contains both orientations of an edge.
bool MaskOracle::accepts(std::uint64_t members) const {
  std::array<std::uint8_t, 64> local{};
  std::array<std::uint64_t, 64> adj{};
  std::array<Element, 64> host_of{};
  std::size_t k = 0;
  for (std::uint64_t rest = members; rest != 0; rest &= rest - 1) {
    const auto x = static_cast<Element>(std::countr_zero(rest));
    local[x] = static_cast<std::uint8_t>(k);
    host_of[k++] = x;
  }
  if (k <= 3) return true;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t row = 0;
    for (std::uint64_t rest = incomparable_[host_of[i]] & members; rest != 0; rest &= rest - 1) {
      row |= std::uint64_t{1} << local[std::countr_zero(rest)];
    }
    adj[i] = row;
  }
  // Directed edge u -> v is node u * k + v.
  thread_local ForcingSets sets;
  sets.parent.resize(k * k);
  std::iota(sets.parent.begin(), sets.parent.end(), std::size_t{0});
  for (std::size_t v = 0; v < k; ++v) {
    for (std::uint64_t xs = adj[v]; xs != 0; xs &= xs - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(xs));
      // Neighbors y > x of v that are not adjacent to x.
      std::uint64_t ys = adj[v] & ~adj[x] & ~((std::uint64_t{2} << x) - 1);
      for (; ys != 0; ys &= ys - 1) {
        const auto y = static_cast<std::size_t>(std::countr_zero(ys));
        sets.unite(v * k + x, v * k + y);
        sets.unite(x * k + v, y * k + v);
      }
    }
  }
  for (std::size_t u = 0; u < k; ++u) {
    for (std::uint64_t vs = adj[u] & ~((std::uint64_t{2} << u) - 1); vs != 0; vs &= vs - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(vs));
      if (sets.find(u * k + v) == sets.find(v * k + u)) return false;
    }
  }
  return true;
}

IncrementalForcing::IncrementalForcing(const MaskOracle& host)
    : host_(host), parent_(64 * 64), rank_(64 * 64, 0) {
  std::iota(parent_.begin(), parent_.end(), std::uint16_t{0});
  log_.reserve(1024);
}

std::uint16_t IncrementalForcing::find(std::uint16_t e) const {
  while (parent_[e] != e) e = parent_[e];
  return e;
}

bool IncrementalForcing::join(std::uint16_t e, std::uint16_t f) {
  const auto reverse = [](std::uint16_t x) {
    return static_cast<std::uint16_t>((x & 63) << 6 | x >> 6);
  };
  const std::uint16_t re = find(e);
  const std::uint16_t rf = find(f);
  if (re == rf) return true;
  if (rf == find(reverse(e))) return false;
  const auto link = [this](std::uint16_t a, std::uint16_t b) {
    if (rank_[a] < rank_[b]) std::swap(a, b);
    const bool bump = rank_[a] == rank_[b];
    parent_[b] = a;
    if (bump) ++rank_[a];
    log_.push_back({b, bump});
  };
  link(re, rf);
  link(find(reverse(e)), find(reverse(f)));
  return true;
}

void IncrementalForcing::rollback(std::size_t mark) {
  while (log_.size() > mark) {
    const Undo undo = log_.back();
    log_.pop_back();
    const std::uint16_t root = parent_[undo.child];
    if (undo.rank_bumped) --rank_[root];
    parent_[undo.child] = undo.child;
  }
}

bool IncrementalForcing::push(Element u) {
  const std::size_t mark = log_.size();
  const auto edge = [](std::size_t a, std::size_t b) {
    return static_cast<std::uint16_t>(a << 6 | b);
  };
  const std::uint64_t near = host_.incomparable_to(u) & members_;
  bool ok = true;
  // Pairs centred on an existing v that involve u: u and y both adjacent to
  // v, y not adjacent to u.
  for (std::uint64_t vs = near; ok && vs != 0; vs &= vs - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(vs));
    std::uint64_t ys = host_.incomparable_to(v) & members_ & ~host_.incomparable_to(u);
    for (; ok && ys != 0; ys &= ys - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(ys));
      ok = join(edge(v, u), edge(v, y));
    }
  }
  // Pairs centred on u itself.
  for (std::uint64_t xs = near; ok && xs != 0; xs &= xs - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(xs));
    std::uint64_t ys = near & ~host_.incomparable_to(x) & ~((std::uint64_t{2} << x) - 1);
    for (; ok && ys != 0; ys &= ys - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(ys));
      ok = join(edge(u, x), edge(u, y));
    }
  }
  if (!ok) {
    rollback(mark);
    return false;
  }
  marks_.emplace_back(mark, members_);
  members_ |= std::uint64_t{1} << u;
  return true;
}

void IncrementalForcing::pop() {
  const auto [mark, members] = marks_.back();
  marks_.pop_back();
  rollback(mark);
  members_ = members;
}

}  // namespace dim2

}  // namespace posetkit
