#include "posetkit/extremal.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "posetkit/order_invariants.hpp"

namespace posetkit {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

Mask mask_of(const Subset& s, const std::vector<std::size_t>& position) {
  Mask m = 0;
  for (Element x : s) m |= bit(position[x]);
  return m;
}

Subset subset_of(Mask m, const std::vector<Element>& host_of) {
  std::vector<Element> members;
  for (; m != 0; m &= m - 1) members.push_back(host_of[std::countr_zero(m)]);
  return Subset(std::move(members));
}

Poset relabeled(const Poset& p, const std::vector<Element>& host_of) {
  const std::size_t n = p.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.less(host_of[i], host_of[j])) rows[i].set(j);
    }
  }
  return Poset::from_closed_relation(std::move(rows));
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Realizer certify(const Poset& p, const Subset& witness, std::size_t d) {
  const auto answer = has_dim_at_most(induced(p, witness), d, SearchOptions{1'000'000'000});
  if (!answer.yes()) {
    throw PosetError("internal error: extremal witness could not be certified");
  }
  return *answer.realizer;
}

Subset seed_for(const Poset& p, std::size_t d) {
  if (d >= 2) return greedy_seed(p, d);
  return Subset(height(p).chain);
}

// "dimension <= d" on subsets of a host with at most 64 elements.
class SubsetOracle {
 public:
  SubsetOracle(const Poset& host, std::size_t d, const ExtremalOptions& options)
      : host_(host), d_(d), options_(options), fast_(host), memo_(omp_get_max_threads()) {}

  bool accepts(Mask members) {
    count_call();
    if (d_ == 1) {
      for (Mask rest = members; rest != 0; rest &= rest - 1) {
        if (fast_.incomparable_to(std::countr_zero(rest)) & members) return false;
      }
      return true;
    }
    if (fast_.accepts(members)) return true;
    if (d_ == 2) return false;

    auto& memo = memo_[static_cast<std::size_t>(omp_get_thread_num())];
    if (const auto it = memo.find(members); it != memo.end()) {
      memo_hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
    std::vector<Element> elements;
    for (Mask rest = members; rest != 0; rest &= rest - 1) {
      elements.push_back(static_cast<Element>(std::countr_zero(rest)));
    }
    const auto answer = has_dim_at_most(induced(host_, Subset(std::move(elements))), d_,
                                        options_.inner);
    if (answer.verdict == Verdict::budget_exceeded) {
      undecided_.store(true, std::memory_order_relaxed);
    }
    if (memo.size() > (std::size_t{1} << 20)) memo.clear();
    memo.emplace(members, answer.yes());
    return answer.yes();
  }

  void count_call() {
    if (calls_.fetch_add(1, std::memory_order_relaxed) + 1 > options_.oracle_budget) {
      over_budget_.store(true, std::memory_order_relaxed);
    }
  }
  const dim2::MaskOracle& fast() const { return fast_; }

  bool over_budget() const { return over_budget_.load(std::memory_order_relaxed); }
  bool undecided() const { return undecided_.load(std::memory_order_relaxed); }
  std::uint64_t calls() const { return calls_.load(); }
  std::uint64_t memo_hits() const { return memo_hits_.load(); }

 private:
  const Poset& host_;
  std::size_t d_;
  const ExtremalOptions& options_;
  dim2::MaskOracle fast_;
  std::vector<std::unordered_map<Mask, bool>> memo_;
  std::atomic<std::uint64_t> calls_{0};
  std::atomic<std::uint64_t> memo_hits_{0};
  std::atomic<bool> over_budget_{false};
  std::atomic<bool> undecided_{false};
};

// Current set along one search path, answering "still dimension <= d with u
// added?" through the shared oracle.
class OraclePath {
 public:
  OraclePath(SubsetOracle& oracle, Mask current) : oracle_(oracle), current_(current) {}

  bool accepts_with(std::size_t u) { return oracle_.accepts(current_ | bit(u)); }
  void push(std::size_t u) {
    saved_.push_back(current_);
    current_ |= bit(u);
  }
  void pop() {
    current_ = saved_.back();
    saved_.pop_back();
  }

 private:
  SubsetOracle& oracle_;
  Mask current_;
  std::vector<Mask> saved_;
};

// d = 2 path: the forcing classes of the current set are kept and extended one
// element at a time instead of being rebuilt per query.
class ForcingPath {
 public:
  ForcingPath(SubsetOracle& oracle, Mask current) : oracle_(oracle), forcing_(oracle.fast()) {
    for (Mask rest = current; rest != 0; rest &= rest - 1) {
      if (!forcing_.push(static_cast<std::size_t>(std::countr_zero(rest)))) {
        throw PosetError("internal error: search path left the hereditary family");
      }
    }
  }

  bool accepts_with(std::size_t u) {
    oracle_.count_call();
    return forcing_.accepts_with(u);
  }
  void push(std::size_t u) { forcing_.push(u); }
  void pop() { forcing_.pop(); }

 private:
  SubsetOracle& oracle_;
  dim2::IncrementalForcing forcing_;
};

// Depth-first include/exclude search. Candidates are the elements that are
// individually compatible with the current set; since the property is
// hereditary, a rejected candidate stays rejected below this node.
template <class Path>
class BranchAndBound {
 public:
  BranchAndBound(SubsetOracle& oracle, std::size_t n, const ExtremalOptions& options)
      : oracle_(oracle), n_(n), options_(options) {}

  Mask maximize(Mask incumbent) {
    best_ = incumbent;
    threshold_.store(static_cast<std::size_t>(std::popcount(incumbent)));
    stop_on_improve_ = false;
    run(0, 0);
    return best_;
  }

  // Some accepted set of at least `target` elements containing `required`
  // and avoiding `forbidden`.
  std::optional<Mask> find_at_least(Mask required, Mask forbidden, std::size_t target) {
    threshold_.store(target - 1);
    stop_on_improve_ = true;
    found_.store(false);
    if (!oracle_.accepts(required)) return std::nullopt;
    run(required, forbidden);
    if (!found_.load()) return std::nullopt;
    return best_;
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  void run(Mask current, Mask forbidden) {
    Path path(oracle_, current);
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    Mask remaining = 0;
    for (Mask rest = all & ~current & ~forbidden; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      if (path.accepts_with(u)) remaining |= bit(u);
    }
    if (options_.parallel && omp_get_max_threads() > 1) {
#pragma omp parallel
#pragma omp single
      descend(path, current, remaining, 0);
    } else {
      descend(path, current, remaining, 0);
    }
  }

  bool halted() const { return found_.load(std::memory_order_relaxed) || oracle_.over_budget(); }

  void record(Mask current, std::size_t size) {
    std::lock_guard lock(mutex_);
    if (stop_on_improve_) {
      if (!found_.load()) {
        best_ = current;
        found_.store(true);
      }
    } else if (size > threshold_.load()) {
      best_ = current;
      threshold_.store(size);
    }
  }

  std::size_t threshold() const { return threshold_.load(std::memory_order_relaxed); }

  void spawn(Mask current, Mask remaining, std::size_t depth) {
    Path path(oracle_, current);
    descend(path, current, remaining, depth);
  }

  void descend(Path& path, Mask current, Mask remaining, std::size_t depth) {
    const auto size = static_cast<std::size_t>(std::popcount(current));
    while (true) {
      nodes_.fetch_add(1, std::memory_order_relaxed);
      if (halted()) return;
      if (size > threshold()) record(current, size);
      if (remaining == 0) return;
      if (size + static_cast<std::size_t>(std::popcount(remaining)) <= threshold()) return;
      const auto v = static_cast<std::size_t>(std::countr_zero(remaining));
      remaining &= remaining - 1;

      // Include v: keep only candidates still compatible with current + v.
      path.push(v);
      Mask kept = 0;
      auto unchecked = static_cast<std::size_t>(std::popcount(remaining));
      bool viable = true;
      for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
        if (size + 1 + static_cast<std::size_t>(std::popcount(kept)) + unchecked <= threshold()) {
          viable = false;
          break;
        }
        --unchecked;
        const auto u = static_cast<std::size_t>(std::countr_zero(rest));
        if (path.accepts_with(u)) kept |= bit(u);
      }
      const Mask grown = current | bit(v);
      if (viable) {
        if (options_.parallel && depth < options_.task_depth && omp_in_parallel()) {
#pragma omp task firstprivate(grown, kept, depth)
          spawn(grown, kept, depth + 1);
        } else {
          descend(path, grown, kept, depth + 1);
        }
      }
      path.pop();
      // Exclude v and continue at this node.
      ++depth;
    }
  }

  SubsetOracle& oracle_;
  std::size_t n_;
  const ExtremalOptions& options_;
  std::mutex mutex_;
  Mask best_ = 0;
  std::atomic<std::size_t> threshold_{0};
  std::atomic<bool> found_{false};
  bool stop_on_improve_ = false;
  std::atomic<std::uint64_t> nodes_{0};
};

struct SearchOutcome {
  Mask best = 0;
  bool exact = false;
  std::uint64_t nodes = 0;
};

template <class Path>
SearchOutcome run_search(SubsetOracle& oracle, std::size_t n, Mask incumbent,
                         const std::vector<std::size_t>& position,
                         const ExtremalOptions& options) {
  BranchAndBound<Path> search(oracle, n, options);
  SearchOutcome out;
  out.best = search.maximize(incumbent);
  out.exact = !oracle.over_budget() && !oracle.undecided();
  const auto value = static_cast<std::size_t>(std::popcount(out.best));

  if (out.exact && options.canonical_witness && value > 0) {
    // Fix host elements in index order: include each one if some maximum
    // set still contains it. `best` always satisfies the fixes made so far.
    Mask required = 0;
    Mask forbidden = 0;
    for (Element h = 0; h < n && out.exact; ++h) {
      const Mask b = bit(position[h]);
      if (out.best & b) {
        required |= b;
        continue;
      }
      if (auto found = search.find_at_least(required | b, forbidden, value)) {
        out.best = *found;
        required |= b;
      } else {
        forbidden |= b;
      }
      out.exact = !oracle.over_budget() && !oracle.undecided();
    }
  }
  out.nodes = search.nodes();
  return out;
}

}  // namespace

Subset greedy_seed(const Poset& p, std::size_t d) {
  if (d < 2) throw DomainError("greedy_seed requires d >= 2");
  auto [cover, antichain] = dilworth(p);
  std::vector<Element> members;
  for (const auto& c : largest_chains(cover, d)) members.insert(members.end(), c.begin(), c.end());
  Subset chains(std::move(members));
  if (antichain.width() >= chains.size()) return std::move(antichain.members);
  return chains;
}

ExtremalResult ex_star_max_dim(const Poset& p, std::size_t d, const ExtremalOptions& options) {
  if (d == 0) throw DomainError("ex_star_max_dim requires d >= 1");
  const auto start = Clock::now();
  const std::size_t n = p.size();
  ExtremalResult result;

  if (n > 64) {
    // Too large for the mask search: report the seed, or the whole poset when
    // the polynomial tests settle it.
    if (d <= 2 && has_dim_at_most(p, d).yes()) {
      result.witness = Subset::all(n);
      result.exact = true;
    } else {
      result.witness = seed_for(p, d);
    }
    result.value = result.witness.size();
    result.certificate = certify(p, result.witness, d);
    result.stats.elapsed_ms = elapsed_ms(start);
    return result;
  }

  // Relabel so that bit i is the i-th element in descending incomparability
  // degree; the search branches on low bits first.
  std::vector<Element> host_of(n);
  std::vector<std::size_t> degree(n, 0);
  for (Element x = 0; x < n; ++x) {
    host_of[x] = x;
    for (Element y = 0; y < n; ++y) degree[x] += p.incomparable(x, y) ? 1 : 0;
  }
  std::stable_sort(host_of.begin(), host_of.end(),
                   [&](Element a, Element b) { return degree[a] > degree[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[host_of[i]] = i;
  const Poset work = relabeled(p, host_of);

  SubsetOracle oracle(work, d, options);
  Mask incumbent = n == 0 ? 0 : mask_of(seed_for(p, d), position);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(incumbent & bit(i)) && oracle.accepts(incumbent | bit(i))) incumbent |= bit(i);
  }
  const SearchOutcome outcome =
      d == 2 ? run_search<ForcingPath>(oracle, n, incumbent, position, options)
             : run_search<OraclePath>(oracle, n, incumbent, position, options);
  const Mask best = outcome.best;
  result.exact = outcome.exact;
  result.value = static_cast<std::size_t>(std::popcount(best));

  result.witness = subset_of(best, host_of);
  result.certificate = certify(p, result.witness, d);
  result.stats.nodes = outcome.nodes;
  result.stats.oracle_calls = oracle.calls();
  result.stats.memo_hits = oracle.memo_hits();
  result.stats.elapsed_ms = elapsed_ms(start);
  return result;
}

ExtremalResult ex_star_max_dim_reference(const Poset& p, std::size_t d,
                                         std::uint64_t oracle_budget) {
  if (d == 0) throw DomainError("ex_star_max_dim_reference requires d >= 1");
  if (p.size() > 64) throw DomainError("reference solver supports at most 64 elements");
  const auto start = Clock::now();
  const std::size_t n = p.size();
  ExtremalResult result;
  std::vector<Element> current;
  std::vector<Element> best;
  bool out_of_budget = false;

  auto accepts = [&](const std::vector<Element>& members) {
    if (++result.stats.oracle_calls > oracle_budget) out_of_budget = true;
    const auto answer = has_dim_at_most(induced(p, Subset(members)), d);
    return answer.yes();
  };
  auto recurse = [&](auto& self, std::size_t i) -> void {
    ++result.stats.nodes;
    if (current.size() > best.size()) best = current;
    if (i == n || out_of_budget || current.size() + (n - i) <= best.size()) return;
    current.push_back(i);
    if (accepts(current)) self(self, i + 1);
    current.pop_back();
    self(self, i + 1);
  };
  recurse(recurse, 0);

  result.exact = !out_of_budget;
  result.witness = Subset(best);
  result.value = best.size();
  result.certificate = certify(p, result.witness, d);
  result.stats.elapsed_ms = elapsed_ms(start);
  return result;
}

LexPowerReport verify_lex_power_instance(const Poset& p, std::size_t d, std::size_t k,
                                        const ExtremalOptions& options) {
  LexPowerReport report;
  const Poset power = lex_power(p, k);
  report.base = ex_star_max_dim(p, d, options);
  report.rhs = 1;
  for (std::size_t i = 0; i < k; ++i) report.rhs *= report.base.value;
  report.lhs = ex_star_max_dim(power, d, options);
  report.holds = report.lhs.value <= report.rhs;
  return report;
}

}  // namespace posetkit
