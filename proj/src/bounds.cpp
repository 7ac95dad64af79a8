#include "posetkit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "posetkit/order_invariants.hpp"

namespace posetkit::bounds {

LowerBound goodwillie_lower_bound(std::uint64_t n, std::uint64_t d) {
  if (d < 2) throw DomainError("goodwillie_lower_bound requires d >= 2");
  LowerBound out;
  out.value = std::sqrt(static_cast<double>(d) * static_cast<double>(n));
  out.integer_guarantee = ceil_sqrt(static_cast<std::size_t>(d * n));
  return out;
}

double exponent(std::uint64_t m, std::uint64_t d) {
  if (m < 2 || d < 2) throw DomainError("exponent requires m >= 2 and d >= 2");
  return std::log(static_cast<double>(m + d)) / std::log(2.0 * static_cast<double>(m));
}

double round_half_up(double value, int places) {
  const double scale = std::pow(10.0, places);
  return std::floor(value * scale + 0.5) / scale;
}

std::uint64_t default_m_max(std::uint64_t d) { return std::max<std::uint64_t>(10'000, 100 * d); }

BoundRow optimal_m(std::uint64_t d, std::optional<std::uint64_t> m_max) {
  if (d < 2) throw DomainError("optimal_m requires d >= 2");
  const std::uint64_t limit = m_max.value_or(default_m_max(d));
  if (limit < 2) throw DomainError("optimal_m requires m_max >= 2");
  BoundRow best{d, 2, exponent(2, d)};
  for (std::uint64_t m = 3; m <= limit; ++m) {
    const double e = exponent(m, d);
    if (e < best.exponent) best = {d, m, e};
  }
  return best;
}

std::vector<BoundRow> exponent_table() {
  std::vector<BoundRow> rows;
  for (std::uint64_t d : {2, 3, 4, 10, 100}) rows.push_back(optimal_m(d));
  return rows;
}

std::string exponent_table_tsv() {
  std::string out;
  char line[96];
  for (const auto& row : exponent_table()) {
    std::snprintf(line, sizeof line, "%llu\t%llu\t%.5f\n",
                  static_cast<unsigned long long>(row.d), static_cast<unsigned long long>(row.m),
                  row.rounded());
    out += line;
  }
  return out;
}

BigInt DigitVector::value() const {
  BigInt total = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) total = total * base + *it;
  return total;
}

std::uint64_t DigitVector::digit_sum() const {
  std::uint64_t sum = 0;
  for (auto a : digits) sum += a;
  return sum;
}

DigitVector base_digits(const BigInt& n, std::uint64_t base) {
  if (base < 2) throw DomainError("base_digits requires base >= 2");
  if (n < 0) throw DomainError("base_digits requires n >= 0");
  DigitVector out;
  out.base = base;
  BigInt rest = n;
  do {
    out.digits.push_back(static_cast<std::uint64_t>(rest % base));
    rest /= base;
  } while (rest != 0);
  return out;
}

DigitBound digit_bound_for(const BigInt& n, std::uint64_t m, std::uint64_t d) {
  if (n < 1) throw DomainError("digit_bound_of requires n >= 1");
  DigitBound out;
  out.m_star = m;
  out.exponent = exponent(m, d);
  out.digits = base_digits(n, 2 * m);

  // ex*(S_m^i, D_{d+1}) <= (m + d)^i, summed over the digit copies.
  BigInt power = 1;
  for (auto a : out.digits.digits) {
    out.digit_bound += power * a;
    power *= m + d;
  }

  const auto log_n = std::log(n.convert_to<long double>());
  const long double e = out.exponent;
  const auto digit_sum = static_cast<long double>(out.digits.digit_sum());
  out.smoothed = static_cast<double>(std::exp((1 - e) * std::log(digit_sum) + e * log_n));
  const auto most = static_cast<long double>((2 * m - 1) * out.digits.digits.size());
  out.digit_count_cap = static_cast<double>(std::exp((1 - e) * std::log(most) + e * log_n));
  return out;
}

DigitBound digit_bound_of(const BigInt& n, std::uint64_t d) {
  return digit_bound_for(n, optimal_m(d).m, d);
}

Poset build_digit_witness(std::uint64_t n, std::uint64_t m) {
  if (n < 1) throw DomainError("build_digit_witness requires n >= 1");
  if (n > element_cap()) throw SizeCapError("build_digit_witness exceeds the element cap");
  const DigitVector digits = base_digits(n, 2 * m);
  const Poset base = standard_example(m);
  Poset q;
  for (std::size_t i = 0; i < digits.digits.size(); ++i) {
    if (digits.digits[i] == 0) continue;
    const Poset block = i == 0 ? chain(1) : lex_power(base, i);
    for (std::uint64_t copy = 0; copy < digits.digits[i]; ++copy) q = disjoint_union(q, block);
  }
  return q;
}

bool digit_bound_sufficient(std::uint64_t digits, std::uint64_t m, std::uint64_t d, double target) {
  const long double e = exponent(m, d);
  const long double lhs = (1 - e) * std::log(static_cast<long double>((2 * m - 1) * digits));
  const long double rhs = static_cast<long double>(digits - 1) * (target - e) *
                          std::log(static_cast<long double>(2 * m));
  return lhs < rhs;
}

AsymptoticThreshold digit_bound_threshold(std::uint64_t d, double target) {
  AsymptoticThreshold out;
  const BoundRow row = optimal_m(d);
  out.m_star = row.m;
  out.exponent = row.exponent;
  out.target = target;
  if (target <= row.exponent) throw DomainError("target exponent must exceed the optimum");

  // lhs - rhs is concave in L, so past its peak it decreases monotonically;
  // bisect for the last failure beyond the peak.
  const long double slope = (target - row.exponent) * std::log(2.0L * row.m);
  auto lo = static_cast<std::uint64_t>(std::max<long double>(1, (1 - row.exponent) / slope));
  if (digit_bound_sufficient(lo, row.m, d, target)) {
    while (lo > 1 && digit_bound_sufficient(lo - 1, row.m, d, target)) --lo;
    out.digits = lo;
  } else {
    std::uint64_t hi = lo * 2;
    while (!digit_bound_sufficient(hi, row.m, d, target)) hi *= 2;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (digit_bound_sufficient(mid, row.m, d, target) ? hi : lo) = mid;
    }
    out.digits = hi;
  }
  out.log10_n = static_cast<double>(out.digits - 1) * std::log10(2.0 * static_cast<double>(row.m));
  return out;
}

}  // namespace posetkit::bounds
