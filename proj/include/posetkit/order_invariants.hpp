#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit {

// Chains listed bottom-to-top. Produced as a cover the chains partition the
// host's elements.
struct ChainFamily {
  std::vector<std::vector<Element>> chains;

  std::size_t size() const noexcept { return chains.size(); }
};

struct AntichainCertificate {
  Subset members;

  std::size_t width() const noexcept { return members.size(); }
};

struct HeightResult {
  std::size_t height = 0;
  std::vector<Element> chain;  // bottom-to-top witness
};

enum class ExtractionKind { antichain, chain_union };

std::string_view to_string(ExtractionKind kind) noexcept;

struct ExtractionResult {
  Subset subset;
  ExtractionKind kind = ExtractionKind::antichain;
  double guarantee = 0.0;            // sqrt(d n)
  std::size_t integer_guarantee = 0; // ceil(sqrt(d n))
  std::vector<std::vector<Element>> chains;  // populated for chain_union
};

HeightResult height(const Poset& p);
AntichainCertificate max_antichain(const Poset& p);
ChainFamily min_chain_cover(const Poset& p);

// Chain cover plus the antichain from the same matching; the two sizes agree.
struct DilworthPair {
  ChainFamily cover;
  AntichainCertificate antichain;
};
DilworthPair dilworth(const Poset& p);

// The `count` largest chains of a cover, ordered by (size desc, smallest
// member asc).
std::vector<std::vector<Element>> largest_chains(const ChainFamily& cover, std::size_t count);

// Either a maximum antichain (when width^2 >= d n) or the union of the d
// largest chains of a minimum chain cover. The size is at least
// ceil(sqrt(d n)) whenever n >= d; for n < d the whole poset is returned.
ExtractionResult goodwillie_subposet(const Poset& p, std::size_t d);

// Smallest k with k*k >= value.
std::size_t ceil_sqrt(std::size_t value);

bool is_chain(const Poset& p, const std::vector<Element>& elements);
bool is_antichain(const Poset& p, const Subset& s);

}  // namespace posetkit
