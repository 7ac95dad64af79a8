#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "posetkit/bounds.hpp"
#include "posetkit/dimension.hpp"
#include "posetkit/extremal.hpp"
#include "posetkit/poset.hpp"

namespace posetkit::report {

inline constexpr const char* kSchema = "report v1";

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kBudgetExhausted = 3 };

// Result of one CLI command. The text and JSON renderings carry the same
// fields; `result` is the per-command payload.
struct RunReport {
  std::string command;
  std::string input_digest;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;
  bool exact = true;

  int exit_code() const { return exact ? kOk : kBudgetExhausted; }
};

nlohmann::ordered_json to_json(const RunReport& report, bool with_timing = true);
std::string to_text(const RunReport& report, bool with_timing = true);

RunReport analyze(const Poset& p, const SearchOptions& options = {});
RunReport extract(const Poset& p, std::size_t d);
RunReport exact(const Poset& p, std::size_t d, const ExtremalOptions& options = {});

RunReport bounds_table();
RunReport bounds_lower(std::uint64_t n, std::uint64_t d);
RunReport bounds_digit(const bounds::BigInt& n, std::uint64_t d);
RunReport bounds_lex_power(const Poset& p, std::size_t d, std::size_t k,
                      const ExtremalOptions& options = {});

}  // namespace posetkit::report
