#include "posetkit/dimension.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "posetkit/order_invariants.hpp"

namespace posetkit {

namespace {

bool is_total(const Poset& p) {
  return p.relation_count() == p.size() * (p.size() - (p.empty() ? 0 : 1)) / 2;
}

// Sorting by down-set size is a linear extension; unique when p is total.
LinearExtension extension_by_rank(const std::vector<std::size_t>& rank) {
  LinearExtension ext;
  ext.order.resize(rank.size());
  for (std::size_t i = 0; i < rank.size(); ++i) ext.order[i] = i;
  std::stable_sort(ext.order.begin(), ext.order.end(),
                   [&](Element a, Element b) { return rank[a] < rank[b]; });
  return ext;
}

Realizer pad_to(Realizer r, std::size_t d) {
  while (!r.extensions.empty() && r.extensions.size() < d) {
    r.extensions.push_back(r.extensions.back());
  }
  return r;
}

DimensionAnswer yes_with(Realizer r, std::uint64_t nodes = 0) {
  DimensionAnswer answer;
  answer.verdict = Verdict::yes;
  answer.realizer = std::move(r);
  answer.nodes = nodes;
  return answer;
}

DimensionAnswer checked(const Poset& p, DimensionAnswer answer) {
  if (answer.yes() && !verify_realizer(p, *answer.realizer)) {
    throw PosetError("internal error: produced realizer failed verification");
  }
  return answer;
}

constexpr std::size_t kUnplaced = 64;

// Grows d extensions round-robin, one position at a time. Extensions are kept
// in lexicographic order to avoid revisiting permutations of the same family.
class RealizerSearch {
 public:
  RealizerSearch(const Poset& p, std::size_t d, std::uint64_t budget)
      : n_(p.size()), d_(d), budget_(budget), below_(n_, 0), incomparable_(n_, 0),
        placed_(d, 0), rank_(d, std::vector<std::size_t>(n_, kUnplaced)),
        sequence_(d), tied_(d, true) {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (p.less(y, x)) below_[x] |= std::uint64_t{1} << y;
        if (p.incomparable(x, y)) incomparable_[x] |= std::uint64_t{1} << y;
      }
    }
  }

  DimensionAnswer run() {
    DimensionAnswer answer;
    const bool found = descend(0);
    answer.nodes = nodes_;
    if (found) {
      Realizer r;
      for (auto& seq : sequence_) r.extensions.push_back(LinearExtension{seq});
      answer.verdict = Verdict::yes;
      answer.realizer = std::move(r);
    } else {
      answer.verdict = out_of_budget_ ? Verdict::budget_exceeded : Verdict::no;
    }
    return answer;
  }

 private:
  bool still_reversible(Element first, Element second, std::size_t except) const {
    for (std::size_t j = 0; j < d_; ++j) {
      if (j == except) continue;
      // `first` before `second` is still possible unless `second` already
      // precedes it.
      if (!(rank_[j][second] < rank_[j][first])) return true;
    }
    return false;
  }

  bool descend(std::size_t step) {
    if (step == n_ * d_) return true;
    const std::size_t j = step % d_;
    const std::size_t position = step / d_;
    const std::uint64_t placed = placed_[j];
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    const bool tied = j > 0 && tied_[j];
    const Element floor = tied ? sequence_[j - 1][position] : 0;

    for (std::uint64_t free = all & ~placed; free != 0; free &= free - 1) {
      const auto x = static_cast<Element>(std::countr_zero(free));
      if (x < floor || (below_[x] & ~placed) != 0) continue;
      if (++nodes_ > budget_) {
        out_of_budget_ = true;
        return false;
      }
      // Placing x now rules out "y before x" in this extension for every
      // unplaced incomparable y.
      bool viable = true;
      for (std::uint64_t ys = incomparable_[x] & ~placed; ys != 0; ys &= ys - 1) {
        const auto y = static_cast<Element>(std::countr_zero(ys));
        if (!still_reversible(y, x, j)) {
          viable = false;
          break;
        }
      }
      if (!viable) continue;

      placed_[j] |= std::uint64_t{1} << x;
      rank_[j][x] = position;
      sequence_[j].push_back(x);
      const bool saved = tied_[j];
      tied_[j] = tied && x == floor;
      if (descend(step + 1)) return true;
      tied_[j] = saved;
      sequence_[j].pop_back();
      rank_[j][x] = kUnplaced;
      placed_[j] = placed;
      if (out_of_budget_) return false;
    }
    return false;
  }

  std::size_t n_;
  std::size_t d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> incomparable_;
  std::vector<std::uint64_t> placed_;
  std::vector<std::vector<std::size_t>> rank_;
  std::vector<std::vector<Element>> sequence_;
  std::vector<bool> tied_;
};

// Distributes the critical pairs among d extensions. Class j keeps the
// transitive closure of the order plus the reversals assigned to it; a
// reversal (a, b) fits class j unless a already precedes b there. Pairs are
// taken most-constrained first, and unused classes are interchangeable, so at
// most one fresh class is tried per pair.
class ReversalSearch {
 public:
  ReversalSearch(const Poset& p, std::size_t d, std::uint64_t budget)
      : n_(p.size()), d_(d), budget_(budget), reach_(d, std::vector<std::uint64_t>(n_, 0)) {
    std::vector<std::uint64_t> up(n_, 0);
    std::vector<std::uint64_t> down(n_, 0);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (p.less(x, y)) up[x] |= std::uint64_t{1} << y;
        if (p.less(y, x)) down[x] |= std::uint64_t{1} << y;
      }
    }
    for (auto& r : reach_) r = up;
    // (a, b) is critical when a is incomparable to b, everything below a is
    // below b and everything above b is above a; some class must put b first.
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        if (!p.incomparable(a, b)) continue;
        if ((down[a] & ~down[b]) == 0 && (up[b] & ~up[a]) == 0) critical_.emplace_back(a, b);
      }
    }
  }

  DimensionAnswer run() {
    DimensionAnswer answer;
    const bool found = descend(0);
    answer.nodes = nodes_;
    if (!found) {
      answer.verdict = out_of_budget_ ? Verdict::budget_exceeded : Verdict::no;
      return answer;
    }
    Realizer r;
    for (std::size_t j = 0; j < d_; ++j) {
      // The closure of a class is a partial order; ranking by predecessor
      // count gives one of its linear extensions.
      std::vector<std::size_t> before(n_, 0);
      for (Element x = 0; x < n_; ++x) {
        for (std::uint64_t ys = reach_[j][x]; ys != 0; ys &= ys - 1) ++before[std::countr_zero(ys)];
      }
      r.extensions.push_back(extension_by_rank(before));
    }
    answer.verdict = Verdict::yes;
    answer.realizer = std::move(r);
    return answer;
  }

 private:
  bool precedes(std::size_t j, Element x, Element y) const { return (reach_[j][x] >> y) & 1; }

  // b first in class j: everything reaching b (and b) now reaches a and above.
  void reverse(std::size_t j, Element a, Element b) {
    auto& r = reach_[j];
    const std::uint64_t gained = r[a] | (std::uint64_t{1} << a);
    const std::uint64_t bit_b = std::uint64_t{1} << b;
    for (Element u = 0; u < n_; ++u) {
      if (u == b || (r[u] & bit_b)) r[u] |= gained;
    }
  }

  bool descend(std::size_t used) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    // Most constrained unsatisfied pair.
    std::size_t best = critical_.size();
    std::size_t best_options = d_ + 1;
    for (std::size_t i = 0; i < critical_.size(); ++i) {
      const auto [a, b] = critical_[i];
      std::size_t options = 0;
      bool satisfied = false;
      for (std::size_t j = 0; j < used; ++j) {
        if (precedes(j, b, a)) {
          satisfied = true;
          break;
        }
        if (!precedes(j, a, b)) ++options;
      }
      if (satisfied) continue;
      if (used < d_) ++options;
      if (options < best_options) {
        best = i;
        best_options = options;
        if (options == 0) return false;
      }
    }
    if (best == critical_.size()) return true;

    const auto [a, b] = critical_[best];
    const std::size_t limit = std::min(used + 1, d_);
    for (std::size_t j = 0; j < limit; ++j) {
      if (precedes(j, a, b)) continue;
      const std::vector<std::uint64_t> saved = reach_[j];
      reverse(j, a, b);
      if (descend(std::max(used, j + 1))) return true;
      reach_[j] = saved;
      if (out_of_budget_) return false;
    }
    return false;
  }

  std::size_t n_;
  std::size_t d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<ElementPair> critical_;
  std::vector<std::vector<std::uint64_t>> reach_;
};

}  // namespace

std::vector<ElementPair> incomparable_pairs(const Poset& p) {
  std::vector<ElementPair> pairs;
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.comparable(x, y)) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

bool verify_realizer(const Poset& p, const Realizer& r) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> ranks;
  ranks.reserve(r.size());
  for (const auto& ext : r.extensions) {
    if (ext.order.size() != n) {
      throw DomainError("realizer extension has " + std::to_string(ext.order.size()) +
                        " entries, expected " + std::to_string(n));
    }
    std::vector<std::size_t> rank(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Element x = ext.order[i];
      if (x >= n || rank[x] != n) throw DomainError("realizer extension is not a permutation");
      rank[x] = i;
    }
    ranks.push_back(std::move(rank));
  }
  if (n == 0) return true;
  if (r.extensions.empty()) return false;
  for (const auto& ext : r.extensions) {
    if (!is_linear_extension(p, ext)) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!p.incomparable(x, y)) continue;
      const bool reversed = std::any_of(ranks.begin(), ranks.end(),
                                        [&](const auto& rank) { return rank[y] < rank[x]; });
      if (!reversed) return false;
    }
  }
  return true;
}

Realizer restrict_realizer(const Realizer& r, const Subset& s) {
  Realizer out;
  for (const auto& ext : r.extensions) {
    LinearExtension restricted;
    for (Element x : ext.order) {
      const auto it = std::lower_bound(s.begin(), s.end(), x);
      if (it != s.end() && *it == x) {
        restricted.order.push_back(static_cast<Element>(it - s.begin()));
      }
    }
    out.extensions.push_back(std::move(restricted));
  }
  return out;
}

LinearExtension some_linear_extension(const Poset& p) {
  std::vector<std::size_t> rank(p.size());
  for (Element x = 0; x < p.size(); ++x) rank[x] = p.down_set(x).count();
  return extension_by_rank(rank);
}

Realizer chain_cover_realizer(const Poset& p, const std::vector<std::vector<Element>>& chains) {
  const std::size_t n = p.size();
  Realizer r;
  for (const auto& chain : chains) {
    Bitset in_chain(n);
    for (Element x : chain) in_chain.set(x);
    std::vector<std::size_t> pending(n);
    Bitset available(n);
    for (Element x = 0; x < n; ++x) {
      pending[x] = p.down_set(x).count();
      if (pending[x] == 0) available.set(x);
    }
    // Elements off the chain go as early as possible, so each chain element
    // lands above everything incomparable to it.
    LinearExtension ext;
    while (ext.order.size() < n) {
      auto x = (available - in_chain).find_first();
      if (x == Bitset::npos) x = available.find_first();
      available.reset(x);
      ext.order.push_back(x);
      const auto& up = p.up_set(x);
      for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
        if (--pending[y] == 0) available.set(y);
      }
    }
    r.extensions.push_back(std::move(ext));
  }
  return r;
}

DimensionAnswer backtrack_realizer(const Poset& p, std::size_t d, const SearchOptions& options) {
  if (p.size() > 64) throw DomainError("exact realizer search supports at most 64 elements");
  if (d == 0) {
    DimensionAnswer answer;
    if (p.empty()) return yes_with(Realizer{});
    return answer;
  }
  return checked(p, RealizerSearch(p, d, options.node_budget).run());
}

DimensionAnswer reversal_realizer(const Poset& p, std::size_t d, const SearchOptions& options) {
  if (p.size() > 64) throw DomainError("exact realizer search supports at most 64 elements");
  if (d == 0) {
    DimensionAnswer answer;
    if (p.empty()) return yes_with(Realizer{});
    return answer;
  }
  return checked(p, ReversalSearch(p, d, options.node_budget).run());
}

DimensionAnswer has_dim_at_most_2(const Poset& p, const SearchOptions& options) {
  const std::size_t n = p.size();
  if (is_total(p)) {
    const auto ext = some_linear_extension(p);
    return yes_with(Realizer{{ext, ext}});
  }
  const auto orientation = orient_incomparability_graph(p);
  if (!orientation) return DimensionAnswer{};

  std::vector<std::size_t> forward(n);
  std::vector<std::size_t> backward(n);
  for (Element x = 0; x < n; ++x) {
    const std::size_t below = p.down_set(x).count();
    std::size_t into = 0;
    for (Element y = 0; y < n; ++y) into += (*orientation)[y].test(x) ? 1 : 0;
    forward[x] = below + into;
    backward[x] = below + (*orientation)[x].count();
  }
  Realizer r{{extension_by_rank(forward), extension_by_rank(backward)}};
  if (verify_realizer(p, r)) return yes_with(std::move(r));
  if (n > 64) {
    throw PosetError("transitive orientation failed verification on a poset too large for "
                     "the exact fallback");
  }
  return reversal_realizer(p, 2, options);
}

DimensionAnswer has_dim_at_most(const Poset& p, std::size_t d, const SearchOptions& options) {
  if (d == 0) throw DomainError("has_dim_at_most requires d >= 1");
  if (p.empty()) return yes_with(Realizer{std::vector<LinearExtension>(d)});
  if (d == 1) {
    if (!is_total(p)) return DimensionAnswer{};
    return yes_with(Realizer{{some_linear_extension(p)}});
  }
  if (d == 2) return has_dim_at_most_2(p, options);

  const auto cover = min_chain_cover(p);
  if (cover.size() <= d) {
    return checked(p, yes_with(pad_to(chain_cover_realizer(p, cover.chains), d)));
  }
  const auto two = has_dim_at_most_2(p, options);
  if (two.yes()) return yes_with(pad_to(*two.realizer, d));
  return reversal_realizer(p, d, options);
}

std::size_t dimension(const Poset& p, const SearchOptions& options) {
  if (p.empty()) return 0;
  if (is_total(p)) return 1;
  if (has_dim_at_most_2(p, options).yes()) return 2;
  const std::size_t width = min_chain_cover(p).size();
  for (std::size_t d = 3; d < width; ++d) {
    const auto answer = reversal_realizer(p, d, options);
    if (answer.verdict == Verdict::budget_exceeded) {
      throw BudgetExceeded("dimension search exceeded its node budget at d = " +
                           std::to_string(d));
    }
    if (answer.yes()) return d;
  }
  return width;
}

}  // namespace posetkit
