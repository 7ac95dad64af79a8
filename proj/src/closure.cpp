#include "posetkit/kernels.hpp"

#include <omp.h>

namespace posetkit::kernels {

void transitive_closure_serial(std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Bitset& pivot = rows[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && rows[i].test(k)) rows[i] |= pivot;
    }
  }
}

void transitive_closure_parallel(std::vector<Bitset>& rows) {
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
  // Row k is only read during pivot k (it cannot gain bits from itself), so
  // the inner loop is race-free.
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const Bitset& pivot = rows[static_cast<std::size_t>(k)];
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      if (i != k && row.test(static_cast<std::size_t>(k))) row |= pivot;
    }
  }
}

void transitive_closure(std::vector<Bitset>& rows) {
  if (rows.size() >= 512 && omp_get_max_threads() > 1) {
    transitive_closure_parallel(rows);
  } else {
    transitive_closure_serial(rows);
  }
}

std::vector<Bitset> transpose(const std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  std::vector<Bitset> cols(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = rows[i].find_first(); j != Bitset::npos; j = rows[i].find_next(j)) {
      cols[j].set(i);
    }
  }
  return cols;
}

}  // namespace posetkit::kernels
