#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetkit/poset.hpp"

namespace posetkit::bounds {

using BigInt = boost::multiprecision::cpp_int;

struct LowerBound {
  double value = 0.0;                // sqrt(d n)
  std::uint64_t integer_guarantee = 0;  // ceil(sqrt(d n))
};

// Every n-element poset has an induced subposet of dimension <= d with at
// least sqrt(d n) elements.
LowerBound goodwillie_lower_bound(std::uint64_t n, std::uint64_t d);

// log(m + d) / log(2m): the exponent obtained from powers of S_m.
double exponent(std::uint64_t m, std::uint64_t d);

// Round half up to `places` decimals.
double round_half_up(double value, int places = 5);

struct BoundRow {
  std::uint64_t d = 0;
  std::uint64_t m = 0;
  double exponent = 0.0;

  double rounded() const { return round_half_up(exponent); }
};

std::uint64_t default_m_max(std::uint64_t d);

// Integer scan of m in [2, m_max] minimizing exponent(m, d); ties go to the
// smallest m.
BoundRow optimal_m(std::uint64_t d, std::optional<std::uint64_t> m_max = std::nullopt);

// Rows for d = 2, 3, 4, 10, 100.
std::vector<BoundRow> exponent_table();

// TSV lines "d\tm\texponent" with five decimals.
std::string exponent_table_tsv();

struct DigitVector {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;  // least significant first

  BigInt value() const;
  std::uint64_t digit_sum() const;
};

DigitVector base_digits(const BigInt& n, std::uint64_t base);

struct DigitBound {
  std::uint64_t m_star = 0;
  double exponent = 0.0;
  DigitVector digits;
  // sum_i digit_i (m + d)^i: the size bound realized by the disjoint union of
  // digit_i copies of S_m^i.
  BigInt digit_bound;
  // (sum digits)^(1 - e) n^e, the concavity-smoothed form.
  double smoothed = 0.0;
  // ((2m - 1)(number of digits))^(1 - e) n^e, the cap on `smoothed`.
  double digit_count_cap = 0.0;
};

DigitBound digit_bound_of(const BigInt& n, std::uint64_t d);
DigitBound digit_bound_for(const BigInt& n, std::uint64_t m, std::uint64_t d);

// Disjoint union of digit_i copies of lex_power(S_m, i) over the base-2m
// digits of n (a singleton for i = 0); exactly n elements.
Poset build_digit_witness(std::uint64_t n, std::uint64_t m);

// Smallest digit count L such that every n with at least L base-2m digits
// satisfies smoothed(n) < n^target; reported with log10 of (2m)^(L-1).
struct AsymptoticThreshold {
  std::uint64_t m_star = 0;
  double exponent = 0.0;
  double target = 0.0;
  std::uint64_t digits = 0;
  double log10_n = 0.0;
};

AsymptoticThreshold digit_bound_threshold(std::uint64_t d, double target);

// Log-space form of the sufficient condition at digit count L:
// ((2m - 1) L)^(1 - e) < (2m)^((L - 1)(target - e)).
bool digit_bound_sufficient(std::uint64_t digits, std::uint64_t m, std::uint64_t d, double target);

}  // namespace posetkit::bounds
