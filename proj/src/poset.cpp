#include "posetkit/poset.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <string>

#include "posetkit/kernels.hpp"

namespace posetkit {

namespace {

std::atomic<std::size_t> g_element_cap{std::size_t{1} << 20};

void check_cap(std::size_t n, const char* what) {
  if (n > element_cap()) {
    throw SizeCapError(std::string(what) + ": " + std::to_string(n) +
                       " elements exceeds the cap of " + std::to_string(element_cap()));
  }
}

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
  if (a != 0 && b > element_cap() / a) {
    throw SizeCapError(std::string(what) + ": result exceeds the cap of " +
                       std::to_string(element_cap()) + " elements");
  }
  return a * b;
}

}  // namespace

std::size_t element_cap() noexcept { return g_element_cap.load(); }
void set_element_cap(std::size_t cap) noexcept { g_element_cap.store(cap); }

Poset Poset::from_closed_relation(std::vector<Bitset> up) {
  const std::size_t n = up.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (up[x].size() != n) throw DomainError("relation row has wrong length");
    if (up[x].test(x)) {
      throw CycleError("relation is cyclic through element " + std::to_string(x));
    }
  }
  Poset p;
  p.down_ = kernels::transpose(up);
  p.up_ = std::move(up);
  return p;
}

std::size_t Poset::relation_count() const {
  std::size_t total = 0;
  for (const auto& row : up_) total += row.count();
  return total;
}

std::vector<ElementPair> Poset::cover_pairs() const {
  std::vector<ElementPair> covers;
  for (Element x = 0; x < size(); ++x) {
    for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) {
      if (!up_[x].intersects(down_[y])) covers.emplace_back(x, y);
    }
  }
  return covers;
}

bool Poset::satisfies_order_axioms() const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x) {
    if (up_[x].test(x)) return false;
    for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) {
      if (up_[y].test(x)) return false;
      if (!up_[y].is_subset_of(up_[x])) return false;
    }
  }
  return true;
}

Subset::Subset(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw DomainError("subset has duplicate members");
  }
}

Subset Subset::all(std::size_t n) {
  Subset s;
  s.members_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

Subset Subset::from_bits(const Bitset& bits) {
  Subset s;
  s.members_.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    s.members_.push_back(i);
  }
  return s;
}

bool Subset::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

void Subset::check_host(std::size_t n) const {
  if (!members_.empty() && members_.back() >= n) {
    throw IndexError("subset member " + std::to_string(members_.back()) +
                     " out of range for a poset of " + std::to_string(n) + " elements");
  }
}

bool is_linear_extension(const Poset& p, const LinearExtension& ext) {
  const std::size_t n = p.size();
  if (ext.order.size() != n) return false;
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = ext.order[i];
    if (x >= n || rank[x] != n) return false;
    rank[x] = i;
  }
  for (Element x = 0; x < n; ++x) {
    const auto& up = p.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      if (rank[x] > rank[y]) return false;
    }
  }
  return true;
}

Poset from_cover_relations(std::size_t n, const std::vector<ElementPair>& covers) {
  check_cap(n, "from_cover_relations");
  std::vector<Bitset> rows(n, Bitset(n));
  for (const auto& [x, y] : covers) {
    if (x >= n || y >= n) {
      throw IndexError("cover pair (" + std::to_string(x) + ", " + std::to_string(y) +
                       ") out of range for " + std::to_string(n) + " elements");
    }
    if (x == y) throw CycleError("reflexive pair at element " + std::to_string(x));
    rows[x].set(y);
  }
  kernels::transitive_closure(rows);
  return Poset::from_closed_relation(std::move(rows));
}

Poset chain(std::size_t k) {
  check_cap(k, "chain");
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) rows[i].set(j);
  }
  return Poset::from_closed_relation(std::move(rows));
}

Poset antichain(std::size_t k) {
  check_cap(k, "antichain");
  return Poset::from_closed_relation(std::vector<Bitset>(k, Bitset(k)));
}

Poset boolean_lattice(std::size_t k) {
  if (k >= 64 || (std::size_t{1} << k) > element_cap()) {
    throw SizeCapError("boolean_lattice(" + std::to_string(k) + ") exceeds the cap of " +
                       std::to_string(element_cap()) + " elements");
  }
  const std::size_t n = std::size_t{1} << k;
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (i & j) == i) rows[i].set(j);
    }
  }
  return Poset::from_closed_relation(std::move(rows));
}

Poset standard_example(std::size_t m) {
  if (m < 2) throw DomainError("standard_example requires m >= 2");
  const std::size_t n = checked_mul(2, m, "standard_example");
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) rows[i].set(m + j);
    }
  }
  return Poset::from_closed_relation(std::move(rows));
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  const std::size_t np = p.size();
  const std::size_t nq = q.size();
  if (np > element_cap() || nq > element_cap() - np) {
    throw SizeCapError("disjoint_union exceeds the cap of " + std::to_string(element_cap()) +
                       " elements");
  }
  const std::size_t n = np + nq;
  std::vector<Bitset> rows(n, Bitset(n));
  for (Element x = 0; x < np; ++x) {
    const auto& up = p.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) rows[x].set(y);
  }
  for (Element x = 0; x < nq; ++x) {
    const auto& up = q.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      rows[np + x].set(np + y);
    }
  }
  return Poset::from_closed_relation(std::move(rows));
}

Poset lex_product(const Poset& p, const Poset& q) {
  const std::size_t np = p.size();
  const std::size_t nq = q.size();
  const std::size_t n = checked_mul(np, nq, "lex_product");
  std::vector<Bitset> rows(n, Bitset(n));
  for (Element a = 0; a < np; ++a) {
    // Everything in a strictly higher block, independent of the inner coordinate.
    Bitset above_block(n);
    const auto& up_a = p.up_set(a);
    for (auto b = up_a.find_first(); b != Bitset::npos; b = up_a.find_next(b)) {
      for (Element j = 0; j < nq; ++j) above_block.set(b * nq + j);
    }
    for (Element i = 0; i < nq; ++i) {
      Bitset& row = rows[a * nq + i];
      row = above_block;
      const auto& up_i = q.up_set(i);
      for (auto j = up_i.find_first(); j != Bitset::npos; j = up_i.find_next(j)) {
        row.set(a * nq + j);
      }
    }
  }
  return Poset::from_closed_relation(std::move(rows));
}

Poset lex_power(const Poset& p, std::size_t k) {
  if (k == 0) throw DomainError("lex_power requires k >= 1");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total = checked_mul(total, p.size(), "lex_power");
  Poset result = p;
  for (std::size_t i = 1; i < k; ++i) result = lex_product(result, p);
  return result;
}

Poset induced(const Poset& p, const Subset& s) {
  s.check_host(p.size());
  const std::size_t k = s.size();
  std::vector<Bitset> rows(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (p.less(s[i], s[j])) rows[i].set(j);
    }
  }
  return Poset::from_closed_relation(std::move(rows));
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
  check_cap(n, "random_poset");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw DomainError("random_poset density must lie in [0, 1]");
  }
  // Raw engine output only, so the stream is identical on every platform.
  std::mt19937_64 rng(seed);
  std::vector<Element> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng() % i]);
  }
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit() < density) rows[perm[i]].set(perm[j]);
    }
  }
  kernels::transitive_closure(rows);
  return Poset::from_closed_relation(std::move(rows));
}

}  // namespace posetkit
