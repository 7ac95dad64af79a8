#include "posetkit/order_invariants.hpp"

#include <algorithm>
#include <cmath>

#include "posetkit/matching.hpp"

namespace posetkit {

std::string_view to_string(ExtractionKind kind) noexcept {
  return kind == ExtractionKind::antichain ? "antichain" : "chain-union";
}

std::size_t ceil_sqrt(std::size_t value) {
  auto k = static_cast<std::size_t>(std::sqrt(static_cast<long double>(value)));
  while (k * k < value) ++k;
  while (k > 0 && (k - 1) * (k - 1) >= value) --k;
  return k;
}

HeightResult height(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  // Elements sorted by down-set size form a topological order.
  std::vector<Element> topo(n);
  for (Element x = 0; x < n; ++x) topo[x] = x;
  std::stable_sort(topo.begin(), topo.end(), [&](Element a, Element b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::vector<std::size_t> longest(n, 1);
  std::vector<Element> prev(n, n);
  for (Element x : topo) {
    const auto& down = p.down_set(x);
    for (auto y = down.find_first(); y != Bitset::npos; y = down.find_next(y)) {
      if (longest[y] + 1 > longest[x]) {
        longest[x] = longest[y] + 1;
        prev[x] = y;
      }
    }
  }
  const auto top = static_cast<Element>(
      std::max_element(longest.begin(), longest.end()) - longest.begin());
  HeightResult result;
  result.height = longest[top];
  for (Element x = top; x != n; x = prev[x]) result.chain.push_back(x);
  std::reverse(result.chain.begin(), result.chain.end());
  return result;
}

DilworthPair dilworth(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (Element x = 0; x < n; ++x) {
    const auto& up = p.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) adj[x].push_back(y);
  }
  const BipartiteMatching matching(n, n, std::move(adj));

  DilworthPair result;
  for (Element x = 0; x < n; ++x) {
    if (matching.mate_of_right(x) != BipartiteMatching::kFree) continue;
    std::vector<Element> chain;
    for (Element y = x; y != BipartiteMatching::kFree; y = matching.mate_of_left(y)) {
      chain.push_back(y);
    }
    result.cover.chains.push_back(std::move(chain));
  }

  std::vector<bool> left_reached;
  std::vector<bool> right_reached;
  matching.alternating_reach(left_reached, right_reached);
  std::vector<Element> members;
  for (Element x = 0; x < n; ++x) {
    if (left_reached[x] && !right_reached[x]) members.push_back(x);
  }
  result.antichain.members = Subset(std::move(members));
  return result;
}

AntichainCertificate max_antichain(const Poset& p) { return dilworth(p).antichain; }

ChainFamily min_chain_cover(const Poset& p) { return dilworth(p).cover; }

std::vector<std::vector<Element>> largest_chains(const ChainFamily& cover, std::size_t count) {
  std::vector<std::vector<Element>> chains = cover.chains;
  auto smallest = [](const std::vector<Element>& c) {
    return *std::min_element(c.begin(), c.end());
  };
  std::sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return smallest(a) < smallest(b);
  });
  if (chains.size() > count) chains.resize(count);
  return chains;
}

ExtractionResult goodwillie_subposet(const Poset& p, std::size_t d) {
  if (d < 2) throw DomainError("goodwillie_subposet requires d >= 2");
  if (p.empty()) throw DomainError("goodwillie_subposet requires a non-empty poset");
  const std::size_t n = p.size();
  auto [cover, antichain] = dilworth(p);

  ExtractionResult result;
  result.guarantee = std::sqrt(static_cast<double>(d) * static_cast<double>(n));
  result.integer_guarantee = ceil_sqrt(d * n);

  const std::size_t width = antichain.width();
  if (width * width >= d * n) {
    result.kind = ExtractionKind::antichain;
    result.subset = std::move(antichain.members);
    return result;
  }
  result.kind = ExtractionKind::chain_union;
  result.chains = largest_chains(cover, d);
  std::vector<Element> members;
  for (const auto& c : result.chains) members.insert(members.end(), c.begin(), c.end());
  result.subset = Subset(std::move(members));
  return result;
}

bool is_chain(const Poset& p, const std::vector<Element>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!p.less(elements[i], elements[j])) return false;
    }
  }
  return true;
}

bool is_antichain(const Poset& p, const Subset& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (p.comparable(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace posetkit
