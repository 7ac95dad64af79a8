#include "posetkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace posetkit::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_index(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::bad_header: return "bad header";
    case ParseErrorKind::bad_element_count: return "bad element count";
    case ParseErrorKind::bad_covers_header: return "bad covers header";
    case ParseErrorKind::malformed_pair: return "malformed cover pair";
    case ParseErrorKind::index_out_of_range: return "index out of range";
    case ParseErrorKind::reflexive_cover: return "reflexive cover";
    case ParseErrorKind::duplicate_cover: return "duplicate cover";
    case ParseErrorKind::cycle: return "cyclic covers";
    case ParseErrorKind::io_failure: return "i/o failure";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : PosetError("line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " +
                 detail),
      kind_(kind),
      line_(line) {}

std::string write_poset(const Poset& p) {
  std::string out = "poset v1\nelements: " + std::to_string(p.size()) + "\ncovers:\n";
  for (const auto& [x, y] : p.cover_pairs()) {
    out += std::to_string(x);
    out += ' ';
    out += std::to_string(y);
    out += '\n';
  }
  return out;
}

Poset parse_poset(std::string_view text) {
  const auto lines = split_lines(text);
  auto line_at = [&](std::size_t i) { return i < lines.size() ? trim(lines[i]) : std::string_view{}; };

  if (line_at(0) != "poset v1") {
    throw ParseError(ParseErrorKind::bad_header, 1, "expected 'poset v1'");
  }
  const auto count_line = line_at(1);
  constexpr std::string_view kElements = "elements:";
  std::size_t n = 0;
  if (count_line.substr(0, kElements.size()) != kElements ||
      !parse_index(trim(count_line.substr(kElements.size())), n)) {
    throw ParseError(ParseErrorKind::bad_element_count, 2, "expected 'elements: <n>'");
  }
  if (n > element_cap()) {
    throw ParseError(ParseErrorKind::bad_element_count, 2,
                     std::to_string(n) + " exceeds the element cap");
  }
  if (line_at(2) != "covers:") {
    throw ParseError(ParseErrorKind::bad_covers_header, 3, "expected 'covers:'");
  }

  // reach[u] holds everything strictly above u among the covers read so far,
  // so the first pair closing a cycle is the one reported.
  std::vector<Bitset> reach(n, Bitset(n));
  std::set<ElementPair> seen;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    std::size_t x = 0;
    std::size_t y = 0;
    if (tokens.size() != 2 || !parse_index(tokens[0], x) || !parse_index(tokens[1], y)) {
      throw ParseError(ParseErrorKind::malformed_pair, line_no,
                       "expected two non-negative integers, got '" + std::string(line) + "'");
    }
    if (x >= n || y >= n) {
      throw ParseError(ParseErrorKind::index_out_of_range, line_no,
                       "indices must be below " + std::to_string(n));
    }
    if (x == y) {
      throw ParseError(ParseErrorKind::reflexive_cover, line_no,
                       "element " + std::to_string(x) + " covers itself");
    }
    if (!seen.emplace(x, y).second) {
      throw ParseError(ParseErrorKind::duplicate_cover, line_no,
                       "pair " + std::to_string(x) + " " + std::to_string(y) + " repeated");
    }
    if (reach[y].test(x)) {
      throw ParseError(ParseErrorKind::cycle, line_no,
                       "pair " + std::to_string(x) + " " + std::to_string(y) + " closes a cycle");
    }
    Bitset gained = reach[y];
    gained.set(y);
    for (std::size_t u = 0; u < n; ++u) {
      if (u == x || reach[u].test(x)) reach[u] |= gained;
    }
  }
  return Poset::from_closed_relation(std::move(reach));
}

Poset read_poset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseErrorKind::io_failure, 0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(ParseErrorKind::io_failure, 0, "cannot write " + path.string());
  out << text;
  if (!out) throw ParseError(ParseErrorKind::io_failure, 0, "write failed for " + path.string());
}

std::string to_dot(const Poset& p) {
  const std::size_t n = p.size();
  // Level = length of the longest chain ending just below the element.
  std::vector<std::size_t> level(n, 0);
  std::vector<Element> topo(n);
  for (Element x = 0; x < n; ++x) topo[x] = x;
  std::stable_sort(topo.begin(), topo.end(), [&](Element a, Element b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  std::size_t top = 0;
  for (Element x : topo) {
    const auto& down = p.down_set(x);
    for (auto y = down.find_first(); y != Bitset::npos; y = down.find_next(y)) {
      level[x] = std::max(level[x], level[y] + 1);
    }
    top = std::max(top, level[x]);
  }

  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t l = 0; n > 0 && l <= top; ++l) {
    out += "  { rank=same;";
    for (Element x = 0; x < n; ++x) {
      if (level[x] == l) out += " " + std::to_string(x) + ";";
    }
    out += " }\n";
  }
  for (const auto& [x, y] : p.cover_pairs()) {
    out += "  " + std::to_string(x) + " -> " + std::to_string(y) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string write_realizer(const Realizer& r) {
  std::string out;
  for (const auto& ext : r.extensions) {
    for (std::size_t i = 0; i < ext.order.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(ext.order[i]);
    }
    out += '\n';
  }
  return out;
}

Realizer parse_realizer(std::string_view text) {
  Realizer r;
  std::size_t line_no = 0;
  for (const auto line : split_lines(text)) {
    ++line_no;
    LinearExtension ext;
    for (const auto token : split_ws(trim(line))) {
      std::size_t x = 0;
      if (!parse_index(token, x)) {
        throw ParseError(ParseErrorKind::malformed_pair, line_no,
                         "bad element index '" + std::string(token) + "'");
      }
      ext.order.push_back(x);
    }
    r.extensions.push_back(std::move(ext));
  }
  return r;
}

std::string digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace posetkit::io
