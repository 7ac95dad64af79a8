#pragma once

#include <cstddef>
#include <cstdint>

#include "posetkit/dimension.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

struct ExtremalStats {
  std::uint64_t nodes = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t memo_hits = 0;
  double elapsed_ms = 0.0;
};

// Largest induced subposet of dimension <= d found by the search.
// `certificate` realizes induced(host, witness) in that poset's own indices.
struct ExtremalResult {
  std::size_t value = 0;
  Subset witness;
  Realizer certificate;
  bool exact = false;
  ExtremalStats stats;
};

struct ExtremalOptions {
  // Counted in dimension-oracle calls, so runs are reproducible across machines.
  std::uint64_t oracle_budget = 10'000'000;
  bool parallel = true;
  // Lexicographically smallest maximum witness after an exact search.
  bool canonical_witness = true;
  // Depth of the include/exclude tree below which subtrees run as tasks.
  std::size_t task_depth = 10;
  // Node budget for each realizer search made by the d >= 3 oracle.
  SearchOptions inner{1'000'000};
};

// ex*(p, D_{d+1}): exact branch-and-bound over the hereditary property
// "dimension <= d". Hosts above 64 elements get the seed only (exact = false).
ExtremalResult ex_star_max_dim(const Poset& p, std::size_t d, const ExtremalOptions& options = {});

// Straight include/exclude recursion in index order with a plain cardinality
// bound; single-threaded. Kept as the reference the tuned solver is checked
// against.
ExtremalResult ex_star_max_dim_reference(const Poset& p, std::size_t d,
                                         std::uint64_t oracle_budget = 10'000'000);

// Best of a maximum antichain and the union of the d largest chains of a
// minimum chain cover.
Subset greedy_seed(const Poset& p, std::size_t d);

struct LexPowerReport {
  ExtremalResult base;  // ex*(p, D_{d+1})
  ExtremalResult lhs;   // ex*(p^k, D_{d+1})
  std::uint64_t rhs = 0;  // base.value^k
  bool holds = false;
};

LexPowerReport verify_lex_power_instance(const Poset& p, std::size_t d, std::size_t k,
                                        const ExtremalOptions& options = {});

}  // namespace posetkit
