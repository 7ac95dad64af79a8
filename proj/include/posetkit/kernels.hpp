#pragma once

#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit::kernels {

// In-place transitive closure of a relation given as rows (`rows[i][j]` means
// i -> j). Warshall's scheme: for each pivot k, every row that reaches k
// absorbs row k. The serial form is the reference the parallel form is
// tested against.
void transitive_closure_serial(std::vector<Bitset>& rows);
void transitive_closure_parallel(std::vector<Bitset>& rows);

// Picks the parallel kernel when the relation is large enough to benefit.
void transitive_closure(std::vector<Bitset>& rows);

// Column view of `rows`: result[j][i] == rows[i][j].
std::vector<Bitset> transpose(const std::vector<Bitset>& rows);

}  // namespace posetkit::kernels
