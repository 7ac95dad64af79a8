#include <cmath>
#include <random>

#include "doctest.h"
#include "posetkit/bounds.hpp"
#include "posetkit/extremal.hpp"

using namespace posetkit;
using namespace posetkit::bounds;

TEST_CASE("lower bound") {
  const auto a = goodwillie_lower_bound(20, 2);
  CHECK(a.value == doctest::Approx(6.32456).epsilon(1e-6));
  CHECK(a.integer_guarantee == 7);
  CHECK(goodwillie_lower_bound(0, 2).value == 0.0);
  CHECK(goodwillie_lower_bound(0, 2).integer_guarantee == 0);
  CHECK(goodwillie_lower_bound(8, 2).value == 4.0);
  CHECK(goodwillie_lower_bound(8, 2).integer_guarantee == 4);
  CHECK_THROWS_AS(goodwillie_lower_bound(8, 1), DomainError);
}

TEST_CASE("exponent") {
  CHECK(round_half_up(exponent(10, 2)) == doctest::Approx(0.82948).epsilon(1e-12));
  CHECK(round_half_up(exponent(17, 3)) == doctest::Approx(0.84953).epsilon(1e-12));
  CHECK(exponent(2, 2) == 1.0);
  CHECK_THROWS_AS(exponent(1, 2), DomainError);
  CHECK_THROWS_AS(exponent(5, 1), DomainError);
}

TEST_CASE("round half up") {
  CHECK(round_half_up(0.123455, 5) == doctest::Approx(0.12346).epsilon(1e-12));
  CHECK(round_half_up(0.123454, 5) == doctest::Approx(0.12345).epsilon(1e-12));
  CHECK(round_half_up(2.5, 0) == 3.0);
}

TEST_CASE("optimal m") {
  const auto d2 = optimal_m(2);
  CHECK(d2.m == 10);
  CHECK(d2.rounded() == doctest::Approx(0.82948).epsilon(1e-12));
  const auto d4 = optimal_m(4);
  CHECK(d4.m == 25);
  CHECK(d4.rounded() == doctest::Approx(0.86076).epsilon(1e-12));
  const auto d100 = optimal_m(100);
  CHECK(d100.m == 1169);
  CHECK(d100.rounded() == doctest::Approx(0.92122).epsilon(1e-12));
  CHECK(default_m_max(2) == 10'000);
  CHECK(default_m_max(1000) == 100'000);
  CHECK(optimal_m(2, 5).m == 5);
  CHECK_THROWS_AS(optimal_m(1), DomainError);
}

TEST_CASE("optimal m is stable when the scan range grows") {
  for (const auto& row : exponent_table()) {
    const auto wider = optimal_m(row.d, 10 * default_m_max(row.d));
    CHECK(wider.m == row.m);
    CHECK(row.exponent < 1.0);
    CHECK(row.d < row.m);
  }
}

TEST_CASE("exponent table") {
  const auto rows = exponent_table();
  REQUIRE(rows.size() == 5);
  const std::uint64_t d[] = {2, 3, 4, 10, 100};
  const std::uint64_t m[] = {10, 17, 25, 78, 1169};
  const double e[] = {0.82948, 0.84953, 0.86076, 0.88663, 0.92122};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rows[i].d == d[i]);
    CHECK(rows[i].m == m[i]);
    CHECK(rows[i].rounded() == doctest::Approx(e[i]).epsilon(1e-12));
  }
  CHECK(exponent_table_tsv() ==
        "2\t10\t0.82948\n3\t17\t0.84953\n4\t25\t0.86076\n10\t78\t0.88663\n100\t1169\t0.92122\n");
}

TEST_CASE("base digits") {
  CHECK(base_digits(20, 20).digits == std::vector<std::uint64_t>{0, 1});
  CHECK(base_digits(437, 20).digits == std::vector<std::uint64_t>{17, 1, 1});
  CHECK(base_digits(0, 20).digits == std::vector<std::uint64_t>{0});
  CHECK_THROWS_AS(base_digits(5, 1), DomainError);
}

TEST_CASE("digit reconstruction") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<std::uint64_t> n_dist(0, 1'000'000'000);
  std::uniform_int_distribution<std::uint64_t> base_dist(2, 2400);
  for (int i = 0; i < 10'000; ++i) {
    const BigInt n = n_dist(rng);
    const auto digits = base_digits(n, base_dist(rng));
    CHECK(digits.value() == n);
    for (auto a : digits.digits) CHECK(a < digits.base);
    if (n != 0) CHECK(digits.digits.back() != 0);
  }
  const BigInt huge = BigInt(1) << 300;
  CHECK(base_digits(huge, 20).value() == huge);
}

TEST_CASE("digit bound") {
  CHECK(digit_bound_of(20, 2).digit_bound == 12);
  CHECK(digit_bound_of(20, 2).m_star == 10);
  CHECK(digit_bound_of(400, 2).digit_bound == 144);
  CHECK(digit_bound_of(437, 2).digit_bound == 173);
  CHECK(digit_bound_of(8000, 2).digit_bound == 1728);
  CHECK_THROWS_AS(digit_bound_of(0, 2), DomainError);
}

TEST_CASE("pure powers collapse to the power bound") {
  for (std::uint64_t d : {2, 3, 4, 10}) {
    const std::uint64_t m = optimal_m(d).m;
    BigInt n = 1;
    BigInt expected = 1;
    for (int k = 0; k <= 8; ++k) {
      CHECK(digit_bound_of(n, d).digit_bound == expected);
      n *= 2 * m;
      expected *= m + d;
    }
  }
}

TEST_CASE("smoothed form dominates the digit bound") {
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<std::uint64_t> n_dist(1, 1'000'000'000'000);
  for (int i = 0; i < 2000; ++i) {
    const BigInt n = n_dist(rng);
    for (std::uint64_t d : {2, 3}) {
      const auto b = digit_bound_of(n, d);
      CHECK(b.digit_bound <= BigInt(std::ceil(b.smoothed * (1 + 1e-12))));
      CHECK(b.smoothed <= b.digit_count_cap * (1 + 1e-12));
    }
  }
}

TEST_CASE("asymptotic threshold") {
  const auto t = digit_bound_threshold(2, 0.8295);
  CHECK(t.m_star == 10);
  CHECK(t.digits > 1);
  CHECK(digit_bound_sufficient(t.digits, 10, 2, 0.8295));
  CHECK_FALSE(digit_bound_sufficient(t.digits - 1, 10, 2, 0.8295));
  for (std::uint64_t l = t.digits; l < t.digits + 50'000; l += 997) {
    CHECK(digit_bound_sufficient(l, 10, 2, 0.8295));
  }
  CHECK(t.log10_n == doctest::Approx((t.digits - 1) * std::log10(20.0)));
  CHECK_THROWS_AS(digit_bound_threshold(2, 0.8), DomainError);

  // A looser target puts the threshold inside the sampled range, where the
  // condition must imply the bound for every n with enough digits.
  const auto loose = digit_bound_threshold(2, 0.9);
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<std::uint64_t> n_dist(1'000'000, 1'000'000'000'000);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const BigInt n = n_dist(rng);
    const auto b = digit_bound_of(n, 2);
    if (b.digits.digits.size() >= loose.digits) {
      ++checked;
      CHECK(b.smoothed < std::pow(n.convert_to<double>(), 0.9));
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("witness poset") {
  CHECK(build_digit_witness(20, 10) == standard_example(10));
  const Poset seven = build_digit_witness(7, 2);
  CHECK(seven.size() == 7);
  CHECK(seven.relation_count() == 2);
  const Poset q = build_digit_witness(24, 2);
  CHECK(q.size() == 24);
  CHECK(q == disjoint_union(disjoint_union(standard_example(2), standard_example(2)),
                            lex_power(standard_example(2), 2)));
  CHECK_THROWS_AS(build_digit_witness(0, 2), DomainError);
}

TEST_CASE("witness posets attain no more than the digit bound") {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    const Poset q = build_digit_witness(n, 2);
    REQUIRE(q.size() == n);
    const auto r = ex_star_max_dim(q, 2);
    REQUIRE(r.exact);
    CHECK(BigInt(r.value) <= digit_bound_for(n, 2, 2).digit_bound);
  }
}
