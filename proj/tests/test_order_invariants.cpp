#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posetkit/dimension.hpp"
#include "posetkit/order_invariants.hpp"

using namespace posetkit;

namespace {

void check_cover(const Poset& p, const ChainFamily& cover) {
  std::vector<int> seen(p.size(), 0);
  for (const auto& c : cover.chains) {
    CHECK_FALSE(c.empty());
    for (std::size_t i = 0; i < c.size(); ++i) {
      ++seen[c[i]];
      if (i > 0) CHECK(p.less(c[i - 1], c[i]));
    }
  }
  for (int s : seen) CHECK(s == 1);
}

void check_extraction(const Poset& p, std::size_t d, const ExtractionResult& r) {
  CHECK(r.integer_guarantee == ceil_sqrt(d * p.size()));
  if (p.size() >= d) {
    CHECK(r.subset.size() >= r.integer_guarantee);
    CHECK(static_cast<double>(r.subset.size()) >= r.guarantee);
  } else {
    // sqrt(d n) > n here, so no subset can meet it; everything is returned.
    CHECK(r.subset.size() == p.size());
  }
  if (r.kind == ExtractionKind::antichain) {
    CHECK(is_antichain(p, r.subset));
  } else {
    CHECK(r.chains.size() <= d);
    std::set<Element> union_of;
    for (const auto& c : r.chains) {
      CHECK(is_chain(p, c));
      union_of.insert(c.begin(), c.end());
    }
    CHECK(std::vector<Element>(union_of.begin(), union_of.end()) == r.subset.members());
  }
}

}  // namespace

TEST_CASE("height") {
  CHECK(height(Poset{}).height == 0);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(height(antichain(n)).height == 1);
  const auto b3 = height(boolean_lattice(3));
  CHECK(b3.height == 4);
  CHECK(is_chain(boolean_lattice(3), b3.chain));
  for (std::size_t m = 2; m <= 6; ++m) CHECK(height(standard_example(m)).height == 2);
  CHECK(height(chain(7)).height == 7);
}

TEST_CASE("width") {
  CHECK(max_antichain(chain(5)).width() == 1);
  CHECK(max_antichain(standard_example(3)).width() == 3);
  CHECK(oracle::brute_width(standard_example(3)) == 3);
  CHECK(max_antichain(boolean_lattice(4)).width() == 6);
  CHECK(max_antichain(Poset{}).width() == 0);
  const auto b4 = max_antichain(boolean_lattice(4));
  CHECK(is_antichain(boolean_lattice(4), b4.members));
}

TEST_CASE("width of B_4 by exhaustive enumeration") {
  CHECK(oracle::brute_width(boolean_lattice(4)) == 6);
}

TEST_CASE("minimum chain cover") {
  const auto c5 = min_chain_cover(chain(5));
  CHECK(c5.size() == 1);
  CHECK(c5.chains[0] == std::vector<Element>{0, 1, 2, 3, 4});

  const auto a4 = min_chain_cover(antichain(4));
  CHECK(a4.size() == 4);
  for (const auto& c : a4.chains) CHECK(c.size() == 1);

  const Poset b2 = boolean_lattice(2);
  const auto cover = min_chain_cover(b2);
  CHECK(cover.size() == 2);
  CHECK(oracle::brute_width(b2) == 2);
  check_cover(b2, cover);
}

TEST_CASE("Dilworth duality and brute force on random posets") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Poset p = random_poset(n, 0.05 * (rng() % 12), rng());
    const auto [cover, anti] = dilworth(p);
    check_cover(p, cover);
    CHECK(is_antichain(p, anti.members));
    CHECK(cover.size() == anti.width());
    CHECK(anti.width() == oracle::brute_width(p));
    const auto tall = height(p);
    CHECK(tall.height == oracle::brute_height(p));
    CHECK(is_chain(p, tall.chain));
    CHECK(tall.chain.size() == tall.height);
    CHECK(anti.width() * tall.height >= n);
  }
}

TEST_CASE("width times height bounds the size on larger random posets") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 20 + rng() % 200;
    const Poset p = random_poset(n, 0.01 * (rng() % 30), rng());
    const auto [cover, anti] = dilworth(p);
    check_cover(p, cover);
    CHECK(cover.size() == anti.width());
    CHECK(anti.width() * height(p).height >= n);
  }
}

TEST_CASE("largest chains tie-break") {
  ChainFamily cover{{{5}, {1, 2}, {0, 3}, {4}}};
  const auto top = largest_chains(cover, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == std::vector<Element>{0, 3});
  CHECK(top[1] == std::vector<Element>{1, 2});
  CHECK(top[2] == std::vector<Element>{4});
  CHECK(largest_chains(cover, 10).size() == 4);
}

TEST_CASE("Goodwillie extraction examples") {
  const auto a9 = goodwillie_subposet(antichain(9), 2);
  CHECK(a9.kind == ExtractionKind::antichain);
  CHECK(a9.subset.size() == 9);
  CHECK(a9.integer_guarantee == 5);

  const auto c9 = goodwillie_subposet(chain(9), 2);
  CHECK(c9.kind == ExtractionKind::chain_union);
  CHECK(c9.subset.size() == 9);

  const Poset b3 = boolean_lattice(3);
  const auto r = goodwillie_subposet(b3, 2);
  CHECK(max_antichain(b3).width() == 3);
  CHECK(r.kind == ExtractionKind::chain_union);
  CHECK(r.integer_guarantee == 4);
  CHECK(r.subset.size() >= 6);
  check_extraction(b3, 2, r);

  CHECK_THROWS_AS(goodwillie_subposet(chain(3), 1), DomainError);
  CHECK_THROWS_AS(goodwillie_subposet(Poset{}, 2), DomainError);
}

TEST_CASE("Goodwillie threshold uses exact arithmetic") {
  // width 4, n = 8, d = 2: width^2 == d n sits exactly on the boundary.
  const Poset p = disjoint_union(chain(2), disjoint_union(chain(2), disjoint_union(chain(2), chain(2))));
  const auto r = goodwillie_subposet(p, 2);
  CHECK(r.kind == ExtractionKind::antichain);
  CHECK(r.subset.size() == 4);
  CHECK(r.guarantee == doctest::Approx(4.0));
}

TEST_CASE("Goodwillie extraction on random posets") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const Poset p = random_poset(n, 0.05 * (rng() % 15), rng());
    for (std::size_t d : {2, 3, 5}) {
      const auto r = goodwillie_subposet(p, d);
      check_extraction(p, d, r);
      if (n <= 12) CHECK(has_dim_at_most(induced(p, r.subset), d).yes());
    }
  }
}

TEST_CASE("ceil_sqrt") {
  CHECK(ceil_sqrt(0) == 0);
  CHECK(ceil_sqrt(1) == 1);
  CHECK(ceil_sqrt(16) == 4);
  CHECK(ceil_sqrt(17) == 5);
  CHECK(ceil_sqrt(18) == 5);
  CHECK(ceil_sqrt(40) == 7);
  for (std::size_t v = 0; v < 5000; ++v) {
    const std::size_t k = ceil_sqrt(v);
    CHECK(k * k >= v);
    if (k > 0) CHECK((k - 1) * (k - 1) < v);
  }
  const std::size_t big = (std::size_t{1} << 62) + 12345;
  const std::size_t k = ceil_sqrt(big);
  CHECK(k * k >= big);
  CHECK((k - 1) * (k - 1) < big);
}
