#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace posetkit {

using Element = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using ElementPair = std::pair<Element, Element>;

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public PosetError {
 public:
  using PosetError::PosetError;
};

class IndexError : public PosetError {
 public:
  using PosetError::PosetError;
};

class SizeCapError : public PosetError {
 public:
  using PosetError::PosetError;
};

class DomainError : public PosetError {
 public:
  using PosetError::PosetError;
};

// Upper limit on the element count of any constructed poset. Defaults to 2^20.
std::size_t element_cap() noexcept;
void set_element_cap(std::size_t cap) noexcept;

// A finite strict partial order on the elements 0..n-1, stored as dense
// up-set and down-set rows. Immutable once built.
class Poset {
 public:
  Poset() = default;

  // Takes ownership of an already transitively closed relation;
  // `up[x]` holds every y with x < y. Throws CycleError if x < x for some x.
  static Poset from_closed_relation(std::vector<Bitset> up);

  std::size_t size() const noexcept { return up_.size(); }
  bool empty() const noexcept { return up_.empty(); }

  bool less(Element x, Element y) const { return up_[x].test(y); }
  bool comparable(Element x, Element y) const {
    return up_[x].test(y) || up_[y].test(x);
  }
  bool incomparable(Element x, Element y) const {
    return x != y && !comparable(x, y);
  }

  const Bitset& up_set(Element x) const { return up_[x]; }
  const Bitset& down_set(Element x) const { return down_[x]; }

  // Number of true entries in the strict relation.
  std::size_t relation_count() const;

  // Transitive reduction: (x, y) with x covered by y, ascending.
  std::vector<ElementPair> cover_pairs() const;

  // Checks irreflexivity, antisymmetry and transitivity exhaustively.
  bool satisfies_order_axioms() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

// Sorted, duplicate-free set of element indices of a host poset.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::vector<Element> members);

  static Subset all(std::size_t n);
  static Subset from_bits(const Bitset& bits);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Element x) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Element operator[](std::size_t i) const { return members_[i]; }

  // Throws IndexError unless every member is below `n`.
  void check_host(std::size_t n) const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::vector<Element> members_;
};

// Permutation of 0..n-1; position in `order` is the rank.
struct LinearExtension {
  std::vector<Element> order;

  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

bool is_linear_extension(const Poset& p, const LinearExtension& ext);

// Constructors. Labelings are fixed: boolean lattices by bit mask, standard
// examples as a_1..a_m then b_1..b_m, lexicographic products row-major.
Poset from_cover_relations(std::size_t n, const std::vector<ElementPair>& covers);
Poset chain(std::size_t k);
Poset antichain(std::size_t k);
Poset boolean_lattice(std::size_t k);
Poset standard_example(std::size_t m);
Poset disjoint_union(const Poset& p, const Poset& q);
Poset lex_product(const Poset& p, const Poset& q);
Poset lex_power(const Poset& p, std::size_t k);
Poset induced(const Poset& p, const Subset& s);
Poset random_poset(std::size_t n, double density, std::uint64_t seed);

}  // namespace posetkit
