#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit {

// d linear extensions whose intersection is the host order.
struct Realizer {
  std::vector<LinearExtension> extensions;

  std::size_t size() const noexcept { return extensions.size(); }
};

class BudgetExceeded : public PosetError {
 public:
  using PosetError::PosetError;
};

enum class Verdict { yes, no, budget_exceeded };

struct DimensionAnswer {
  Verdict verdict = Verdict::no;
  std::optional<Realizer> realizer;  // present and verified iff verdict == yes
  std::uint64_t nodes = 0;

  bool yes() const noexcept { return verdict == Verdict::yes; }
};

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
};

// Unordered incomparable pairs {x, y}, x < y as indices, ascending.
std::vector<ElementPair> incomparable_pairs(const Poset& p);

// True iff every extension is a linear extension and every incomparable pair
// is reversed by some pair of extensions. Throws DomainError on a malformed
// permutation.
bool verify_realizer(const Poset& p, const Realizer& r);

// Restriction of each extension to `s`, relabeled to induced(p, s) indices.
Realizer restrict_realizer(const Realizer& r, const Subset& s);

// Polynomial test: transitive orientation of the incomparability graph,
// verified, with exact backtracking as fallback.
DimensionAnswer has_dim_at_most_2(const Poset& p, const SearchOptions& options = {});

DimensionAnswer has_dim_at_most(const Poset& p, std::size_t d, const SearchOptions& options = {});

// Least d with a realizer of size d; 0 for the empty poset. Throws
// BudgetExceeded when the search cannot decide.
std::size_t dimension(const Poset& p, const SearchOptions& options = {});

// One linear extension per chain of a cover; realizes p whenever the chains
// partition its elements.
Realizer chain_cover_realizer(const Poset& p, const std::vector<std::vector<Element>>& chains);

// Any linear extension, smallest available index first.
LinearExtension some_linear_extension(const Poset& p);

// Transitive orientation of the incomparability graph by implication
// classes; `orient[x][y]` set means the edge {x, y} is directed x -> y.
// Returns nullopt when some implication class meets its own reverse.
std::optional<std::vector<Bitset>> orient_incomparability_graph(const Poset& p);

// Exact realizer searches for n <= 64. `reversal_realizer` assigns each
// critical pair to an extension that reverses it and is the engine behind
// has_dim_at_most and dimension. `backtrack_realizer` grows d extensions
// position by position and is kept as an independent reference.
DimensionAnswer reversal_realizer(const Poset& p, std::size_t d, const SearchOptions& options);
DimensionAnswer backtrack_realizer(const Poset& p, std::size_t d, const SearchOptions& options);

namespace dim2 {

// Bit-mask recognizer for subsets of a host with at most 64 elements: true iff
// the subposet on `members` has dimension <= 2. `incomparable[x]` is the host
// incomparability row of x.
class MaskOracle {
 public:
  explicit MaskOracle(const Poset& host);

  bool accepts(std::uint64_t members) const;
  std::uint64_t incomparable_to(Element x) const { return incomparable_[x]; }
  std::size_t size() const noexcept { return incomparable_.size(); }

 private:
  std::vector<std::uint64_t> incomparable_;
};

// The same test maintained incrementally along a search path. Elements are
// pushed one at a time; a push that would make an implication class meet its
// own reverse is refused and leaves the state unchanged. Union-find over
// directed edges, by rank and without path compression so pops can roll back.
class IncrementalForcing {
 public:
  explicit IncrementalForcing(const MaskOracle& host);

  bool push(Element u);
  void pop();
  bool accepts_with(Element u) {
    if (!push(u)) return false;
    pop();
    return true;
  }
  std::uint64_t members() const noexcept { return members_; }

 private:
  struct Undo {
    std::uint16_t child;
    bool rank_bumped;
  };

  std::uint16_t find(std::uint16_t e) const;
  // Joins the classes of e and f (and of their reverses). False on conflict.
  bool join(std::uint16_t e, std::uint16_t f);
  void rollback(std::size_t mark);

  const MaskOracle& host_;
  std::uint64_t members_ = 0;
  std::vector<std::uint16_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<Undo> log_;
  std::vector<std::pair<std::size_t, std::uint64_t>> marks_;
};

}  // namespace dim2

}  // namespace posetkit
