#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "posetkit/bounds.hpp"
#include "posetkit/io.hpp"
#include "posetkit/report.hpp"

using namespace posetkit;

namespace {

std::size_t count_cover_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t count = 0;
  for (int i = 0; std::getline(in, line); ++i) {
    if (i >= 3 && !line.empty()) ++count;
  }
  return count;
}

io::ParseErrorKind rejection(const std::string& text) {
  try {
    io::parse_poset(text);
  } catch (const io::ParseError& e) {
    return e.kind();
  }
  FAIL("input was accepted: " << text);
  return io::ParseErrorKind::io_failure;
}

// Compares against tests/golden/<name>; POSETKIT_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(POSETKIT_GOLDEN_DIR) + "/" + name;
  if (std::getenv("POSETKIT_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::ostringstream expected;
  expected << in.rdbuf();
  CHECK_MESSAGE(expected.str() == actual, "golden mismatch for " << name);
}

}  // namespace

TEST_CASE("write format") {
  CHECK(io::write_poset(chain(3)) == "poset v1\nelements: 3\ncovers:\n0 1\n1 2\n");
  CHECK(io::write_poset(Poset{}) == "poset v1\nelements: 0\ncovers:\n");
  CHECK(count_cover_lines(io::write_poset(chain(4))) == 3);
  CHECK(count_cover_lines(io::write_poset(boolean_lattice(3))) == 12);
  const std::string s10 = io::write_poset(standard_example(10));
  CHECK(s10.rfind("poset v1\nelements: 20\n", 0) == 0);
  CHECK(count_cover_lines(s10) == 90);
}

TEST_CASE("round trip is byte-identical for every constructor") {
  const std::vector<Poset> all = {
      chain(0), chain(1), chain(6), antichain(4), boolean_lattice(4), standard_example(5),
      lex_power(standard_example(2), 2), disjoint_union(chain(3), antichain(2)),
      bounds::build_digit_witness(437, 10), random_poset(30, 0.2, 7)};
  for (const auto& p : all) {
    const std::string text = io::write_poset(p);
    const Poset back = io::parse_poset(text);
    CHECK(back == p);
    CHECK(io::write_poset(back) == text);
  }
}

TEST_CASE("parser accepts non-reduced and unordered covers") {
  const Poset p = io::parse_poset("poset v1\nelements: 3\ncovers:\n1 2\n0 2\n0 1\n\n");
  CHECK(p == chain(3));
  CHECK(io::parse_poset("poset v1\r\nelements: 2\r\ncovers:\r\n0 1\r\n") == chain(2));
}

TEST_CASE("parse rejections carry distinct kinds") {
  using K = io::ParseErrorKind;
  CHECK(rejection("poset v2\nelements: 1\ncovers:\n") == K::bad_header);
  CHECK(rejection("poset v1\nelements: x\ncovers:\n") == K::bad_element_count);
  CHECK(rejection("poset v1\nelements: 2\nedges:\n") == K::bad_covers_header);
  CHECK(rejection("poset v1\nelements: 2\ncovers:\n0\n") == K::malformed_pair);
  CHECK(rejection("poset v1\nelements: 2\ncovers:\n0 -1\n") == K::malformed_pair);
  CHECK(rejection("poset v1\nelements: 2\ncovers:\n0 2\n") == K::index_out_of_range);
  CHECK(rejection("poset v1\nelements: 2\ncovers:\n1 1\n") == K::reflexive_cover);
  CHECK(rejection("poset v1\nelements: 2\ncovers:\n0 1\n0 1\n") == K::duplicate_cover);
  CHECK(rejection("poset v1\nelements: 3\ncovers:\n0 1\n1 2\n2 0\n") == K::cycle);
  CHECK(rejection("") == K::bad_header);

  try {
    io::parse_poset("poset v1\nelements: 3\ncovers:\n0 1\n1 2\n2 0\n");
  } catch (const io::ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).rfind("line 6: cyclic covers", 0) == 0);
  }
  CHECK_THROWS_AS(io::read_poset_file("/nonexistent/poset.txt"), io::ParseError);
}

TEST_CASE("DOT export") {
  const std::string dot = io::to_dot(boolean_lattice(2));
  CHECK(dot ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  node [shape=circle];\n"
        "  { rank=same; 0; }\n"
        "  { rank=same; 1; 2; }\n"
        "  { rank=same; 3; }\n"
        "  0 -> 1;\n"
        "  0 -> 2;\n"
        "  1 -> 3;\n"
        "  2 -> 3;\n"
        "}\n");
  CHECK(io::to_dot(Poset{}) == "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n}\n");
}

TEST_CASE("realizer text") {
  const Realizer r{{{{0, 1, 2}}, {{2, 1, 0}}}};
  const std::string text = io::write_realizer(r);
  CHECK(text == "0 1 2\n2 1 0\n");
  const Realizer back = io::parse_realizer(text);
  REQUIRE(back.size() == 2);
  CHECK(back.extensions[1].order == std::vector<Element>{2, 1, 0});
  CHECK_THROWS_AS(io::parse_realizer("0 x\n"), io::ParseError);
}

TEST_CASE("digest") {
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == "af63dc4c8601ec8c");
  CHECK(io::digest(io::write_poset(chain(3))).size() == 16);
}

TEST_CASE("report rendering is deterministic") {
  const Poset b3 = boolean_lattice(3);
  const auto text = [](report::RunReport r, const std::string& in) {
    r.input_digest = io::digest(in);
    return report::to_text(r, false);
  };
  const std::string b3_text = io::write_poset(b3);
  const std::string s3_text = io::write_poset(standard_example(3));
  const std::string c5_text = io::write_poset(chain(5));
  // Search statistics depend on the thread count; the goldens use one.
  ExtremalOptions serial;
  serial.parallel = false;

  check_golden("analyze_chain5.txt", text(report::analyze(chain(5)), c5_text));
  check_golden("analyze_s3.txt", text(report::analyze(standard_example(3)), s3_text));
  check_golden("analyze_b3.txt", text(report::analyze(b3), b3_text));
  check_golden("extract_b3_d2.txt", text(report::extract(b3, 2), b3_text));
  check_golden("exact_b3_d2.txt", text(report::exact(b3, 2, serial), b3_text));
  check_golden("exact_s4_d2.txt",
               text(report::exact(standard_example(4), 2, serial), io::write_poset(standard_example(4))));
  check_golden("bounds_table.txt", report::to_text(report::bounds_table(), false));
  check_golden("bounds_lower_20_2.txt", report::to_text(report::bounds_lower(20, 2), false));
  check_golden("bounds_digit_400_2.txt", report::to_text(report::bounds_digit(400, 2), false));

  auto json = report::to_json(report::exact(b3, 2, serial), false);
  CHECK(json["schema"] == "report v1");
  CHECK(json["result"]["value"] == 7);
  CHECK(json["exact"] == true);
  CHECK_FALSE(json.contains("elapsed_ms"));
  CHECK(report::to_json(report::exact(b3, 2), true).contains("elapsed_ms"));
  check_golden("exact_b3_d2.json", json.dump(2) + "\n");
}

TEST_CASE("report values") {
  const auto a = report::analyze(standard_example(3));
  CHECK(a.result["width"] == 3);
  CHECK(a.result["height"] == 2);
  CHECK(a.result["dimension"] == 3);
  const auto b = report::analyze(boolean_lattice(3));
  CHECK(b.result["width"] == 3);
  CHECK(b.result["height"] == 4);
  const auto c = report::analyze(chain(5));
  CHECK(c.result["height"] == 5);
  CHECK(c.result["width"] == 1);
  CHECK(c.result["dimension"] == 1);

  CHECK(report::exact(standard_example(4), 2).result["value"] == 6);
  CHECK(report::exact(antichain(6), 2).result["value"] == 6);
  CHECK(report::bounds_lower(20, 2).result["sqrt_dn_4dp"] == "6.3246");
  CHECK(report::bounds_lower(20, 2).result["guarantee"] == 7);
  CHECK(report::bounds_digit(400, 2).result["digit_bound"] == "144");
  CHECK(report::bounds_table().result["rows"].size() == 5);

  const auto e = report::extract(boolean_lattice(3), 2);
  CHECK(e.result["kind"] == "chain-union");
  CHECK(e.result["certified"] == true);
  CHECK(report::extract(antichain(9), 2).result["size"] == 9);
  CHECK(report::extract(chain(9), 2).result["size"] == 9);

  ExtremalOptions tight;
  tight.oracle_budget = 5;
  const auto budget = report::exact(boolean_lattice(4), 2, tight);
  CHECK_FALSE(budget.exact);
  CHECK(budget.exit_code() == report::kBudgetExhausted);
  CHECK(report::exact(chain(3), 2).exit_code() == report::kOk);

  const auto big = report::analyze(antichain(70));
  CHECK(big.result["dimension"] == 2);
}
