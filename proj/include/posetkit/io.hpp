#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "posetkit/dimension.hpp"
#include "posetkit/poset.hpp"

namespace posetkit::io {

enum class ParseErrorKind {
  bad_header,
  bad_element_count,
  bad_covers_header,
  malformed_pair,
  index_out_of_range,
  reflexive_cover,
  duplicate_cover,
  cycle,
  io_failure,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public PosetError {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// `poset v1` text format:
//   poset v1
//   elements: <n>
//   covers:
//   <i> <j>        (i covered by j; 0-indexed; ascending)
// Writers emit the transitive reduction only.
std::string write_poset(const Poset& p);
Poset parse_poset(std::string_view text);

Poset read_poset_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Hasse diagram; elements on the same height level share a rank.
std::string to_dot(const Poset& p);

// One line per extension, whitespace-separated element indices.
std::string write_realizer(const Realizer& r);
Realizer parse_realizer(std::string_view text);

// FNV-1a 64-bit, lowercase hex.
std::string digest(std::string_view bytes);

}  // namespace posetkit::io
