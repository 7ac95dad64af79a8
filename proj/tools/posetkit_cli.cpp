// posetkit: construct posets, compute order invariants, and reproduce the
// low-dimension subposet bounds from the command line.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "posetkit/bounds.hpp"
#include "posetkit/io.hpp"
#include "posetkit/report.hpp"

namespace {

using namespace posetkit;

std::uint64_t to_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw DomainError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

Poset construct(const std::vector<std::string>& spec) {
  if (spec.empty()) throw DomainError("missing constructor name");
  const std::string& kind = spec[0];
  auto arg = [&](std::size_t i, const char* what) {
    if (i >= spec.size()) throw DomainError(kind + ": missing " + what);
    return to_count(spec[i], what);
  };
  auto expect = [&](std::size_t count) {
    if (spec.size() != count + 1) {
      throw DomainError(kind + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (kind == "chain") {
    expect(1);
    return chain(arg(1, "k"));
  }
  if (kind == "antichain") {
    expect(1);
    return antichain(arg(1, "k"));
  }
  if (kind == "boolean") {
    expect(1);
    return boolean_lattice(arg(1, "k"));
  }
  if (kind == "standard") {
    expect(1);
    return standard_example(arg(1, "m"));
  }
  if (kind == "lex-standard") {
    expect(2);
    return lex_power(standard_example(arg(1, "m")), arg(2, "k"));
  }
  if (kind == "digit-witness") {
    expect(2);
    return bounds::build_digit_witness(arg(1, "n"), arg(2, "m"));
  }
  if (kind == "random") {
    expect(3);
    double density = 0.0;
    try {
      density = std::stod(spec[2]);
    } catch (const std::exception&) {
      throw DomainError("random: density must be a number");
    }
    return random_poset(arg(1, "n"), density, arg(3, "seed"));
  }
  throw DomainError("unknown constructor '" + kind +
                    "' (chain, antichain, boolean, standard, lex-standard, digit-witness, random)");
}

struct Loaded {
  Poset poset;
  std::string digest;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError(io::ParseErrorKind::io_failure, 0, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return {io::parse_poset(text), io::digest(text)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetkit: finite poset dimension and extremal subposet toolkit"};
  app.require_subcommand(1);

  bool json = false;
  bool no_timing = false;
  int threads = 0;
  app.add_flag("--json", json, "Emit the report as JSON (schema 'report v1')");
  app.add_flag("--no-timing", no_timing, "Omit elapsed time from reports");
  app.add_option("--threads", threads, "Worker threads for the exact search (0 = runtime default)");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a constructed poset in 'poset v1' format");
  std::vector<std::string> gen_spec;
  std::string gen_out;
  std::string gen_dot;
  gen->add_option("spec", gen_spec,
                  "chain k | antichain k | boolean k | standard m | lex-standard m k | "
                  "digit-witness n m | random n density seed")
      ->required();
  gen->add_option("-o,--out", gen_out, "Output path (default: stdout)");
  gen->add_option("--dot", gen_dot, "Also write the Hasse diagram in DOT format");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Height, width, chain cover and dimension");
  std::string analyze_in;
  std::uint64_t analyze_budget = 100'000'000;
  analyze->add_option("input", analyze_in, "Poset file")->required();
  analyze->add_option("--budget", analyze_budget, "Node budget for the dimension search");

  // extract
  auto* extract = app.add_subcommand("extract", "Guaranteed sqrt(dn) subposet of dimension <= d");
  std::string extract_in;
  std::size_t extract_d = 2;
  extract->add_option("input", extract_in, "Poset file")->required();
  extract->add_option("d", extract_d, "Dimension bound (>= 2)")->required();

  // exact
  auto* exact = app.add_subcommand("exact", "Largest induced subposet of dimension <= d");
  std::string exact_in;
  std::size_t exact_d = 2;
  std::uint64_t exact_budget = 10'000'000;
  exact->add_option("input", exact_in, "Poset file")->required();
  exact->add_option("d", exact_d, "Dimension bound (>= 1)")->required();
  exact->add_option("--budget", exact_budget, "Oracle-call budget");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bound arithmetic");
  bounds_cmd->require_subcommand(1);
  auto* table = bounds_cmd->add_subcommand("table", "Minimizing m per d, as TSV");
  auto* lower = bounds_cmd->add_subcommand("lower", "sqrt(dn) lower bound");
  std::uint64_t lower_n = 0;
  std::uint64_t lower_d = 2;
  lower->add_option("n", lower_n)->required();
  lower->add_option("d", lower_d)->required();
  auto* cor2 = bounds_cmd->add_subcommand("cor2", "Digit-decomposition upper bound");
  std::string cor2_n;
  std::uint64_t cor2_d = 2;
  cor2->add_option("n", cor2_n, "Element count (arbitrary precision)")->required();
  cor2->add_option("d", cor2_d)->required();
  auto* thm1 = bounds_cmd->add_subcommand("thm1", "Lexicographic power check on a poset file");
  std::string thm1_in;
  std::size_t thm1_d = 2;
  std::size_t thm1_k = 2;
  std::uint64_t thm1_budget = 10'000'000;
  thm1->add_option("input", thm1_in, "Base poset file")->required();
  thm1->add_option("d", thm1_d)->required();
  thm1->add_option("k", thm1_k)->required();
  thm1->add_option("--budget", thm1_budget, "Oracle-call budget per exact solve");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  auto emit = [&](const report::RunReport& r) {
    if (json) {
      std::cout << report::to_json(r, !no_timing).dump(2) << "\n";
    } else {
      std::cout << report::to_text(r, !no_timing);
    }
    return r.exit_code();
  };

  try {
    if (gen->parsed()) {
      const Poset p = construct(gen_spec);
      const std::string text = io::write_poset(p);
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        io::write_text_file(gen_out, text);
      }
      if (!gen_dot.empty()) io::write_text_file(gen_dot, io::to_dot(p));
      return report::kOk;
    }
    if (analyze->parsed()) {
      const auto [p, digest] = load(analyze_in);
      auto r = report::analyze(p, SearchOptions{analyze_budget});
      r.input_digest = digest;
      return emit(r);
    }
    if (extract->parsed()) {
      const auto [p, digest] = load(extract_in);
      auto r = report::extract(p, extract_d);
      r.input_digest = digest;
      return emit(r);
    }
    if (exact->parsed()) {
      const auto [p, digest] = load(exact_in);
      ExtremalOptions options;
      options.oracle_budget = exact_budget;
      auto r = report::exact(p, exact_d, options);
      r.input_digest = digest;
      return emit(r);
    }
    if (table->parsed()) {
      const auto r = report::bounds_table();
      if (json) return emit(r);
      std::cout << bounds::exponent_table_tsv();
      return report::kOk;
    }
    if (lower->parsed()) return emit(report::bounds_lower(lower_n, lower_d));
    if (cor2->parsed()) {
      bounds::BigInt n;
      try {
        n = bounds::BigInt(cor2_n);
      } catch (const std::exception&) {
        throw DomainError("n must be a non-negative integer, got '" + cor2_n + "'");
      }
      return emit(report::bounds_digit(n, cor2_d));
    }
    if (thm1->parsed()) {
      const auto [p, digest] = load(thm1_in);
      ExtremalOptions options;
      options.oracle_budget = thm1_budget;
      auto r = report::bounds_lex_power(p, thm1_d, thm1_k, options);
      r.input_digest = digest;
      return emit(r);
    }
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return report::kInvalidInput;
  } catch (const PosetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return report::kInvalidInput;
  }
  return report::kOk;
}
