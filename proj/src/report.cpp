#include "posetkit/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "posetkit/order_invariants.hpp"

namespace posetkit::report {

using Json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json realizer_json(const Realizer& r) {
  Json lines = Json::array();
  for (const auto& ext : r.extensions) lines.push_back(ext.order);
  return lines;
}

// Certificate of induced(p, subset) rewritten in host indices.
Json host_realizer_json(const Realizer& r, const Subset& subset) {
  Json lines = Json::array();
  for (const auto& ext : r.extensions) {
    std::vector<Element> host;
    host.reserve(ext.order.size());
    for (Element x : ext.order) host.push_back(subset[x]);
    lines.push_back(std::move(host));
  }
  return lines;
}

std::string scalar_text(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

void render(const Json& value, const std::string& key, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    out += pad + key + ":\n";
    for (const auto& [k, v] : value.items()) render(v, k, indent + 2, out);
    return;
  }
  if (!value.is_array()) {
    out += pad + key + ": " + scalar_text(value) + "\n";
    return;
  }
  const bool flat = std::all_of(value.begin(), value.end(), [](const Json& v) {
    return v.is_primitive();
  });
  if (flat) {
    out += pad + key + ":";
    for (const auto& v : value) out += " " + scalar_text(v);
    out += "\n";
    return;
  }
  out += pad + key + ":\n";
  for (const auto& v : value) {
    if (v.is_array()) {
      std::string line = pad + "  ";
      for (std::size_t i = 0; i < v.size(); ++i) line += (i ? " " : "") + scalar_text(v[i]);
      out += line + "\n";
    } else if (v.is_object()) {
      std::string line = pad + " ";
      for (const auto& [k, inner] : v.items()) line += " " + k + "=" + scalar_text(inner);
      out += line + "\n";
    } else {
      out += pad + "  " + scalar_text(v) + "\n";
    }
  }
}

}  // namespace

Json to_json(const RunReport& report, bool with_timing) {
  Json out;
  out["schema"] = kSchema;
  out["command"] = report.command;
  out["input_digest"] = report.input_digest;
  out["exact"] = report.exact;
  out["result"] = report.result;
  if (with_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string to_text(const RunReport& report, bool with_timing) {
  std::string out;
  const Json json = to_json(report, with_timing);
  for (const auto& [key, value] : json.items()) render(value, key, 0, out);
  return out;
}

RunReport analyze(const Poset& p, const SearchOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "analyze";
  Json& r = report.result;
  const auto tall = height(p);
  auto [cover, antichain] = dilworth(p);
  r["elements"] = p.size();
  r["relations"] = p.relation_count();
  r["height"] = tall.height;
  r["height_chain"] = tall.chain;
  r["width"] = antichain.width();
  r["antichain"] = antichain.members.members();
  r["chain_cover_size"] = cover.size();
  r["chain_cover"] = cover.chains;
  try {
    const std::size_t dim = dimension(p, options);
    r["dimension"] = dim;
    r["dimension_exact"] = true;
    if (dim > 0) r["realizer"] = realizer_json(*has_dim_at_most(p, dim, options).realizer);
  } catch (const BudgetExceeded&) {
    r["dimension"] = nullptr;
    r["dimension_exact"] = false;
    report.exact = false;
  } catch (const DomainError&) {
    // Exact realizer search is limited to 64 elements.
    r["dimension"] = nullptr;
    r["dimension_exact"] = false;
    report.exact = false;
  }
  report.elapsed_ms = since(start);
  return report;
}

RunReport extract(const Poset& p, std::size_t d) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "extract";
  const auto result = goodwillie_subposet(p, d);
  Json& r = report.result;
  r["elements"] = p.size();
  r["d"] = d;
  r["kind"] = std::string(to_string(result.kind));
  r["size"] = result.subset.size();
  r["guarantee"] = result.integer_guarantee;
  r["sqrt_dn"] = result.guarantee;
  r["subset"] = result.subset.members();
  if (result.kind == ExtractionKind::chain_union) r["chains"] = result.chains;
  if (result.subset.size() <= 64) {
    const auto answer = has_dim_at_most(induced(p, result.subset), d);
    r["certified"] = answer.yes();
    if (answer.yes()) r["certificate"] = host_realizer_json(*answer.realizer, result.subset);
  } else {
    r["certified"] = false;
  }
  report.elapsed_ms = since(start);
  return report;
}

RunReport exact(const Poset& p, std::size_t d, const ExtremalOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "exact";
  const auto result = ex_star_max_dim(p, d, options);
  Json& r = report.result;
  r["elements"] = p.size();
  r["d"] = d;
  r["value"] = result.value;
  r["exact"] = result.exact;
  r["witness"] = result.witness.members();
  r["certificate"] = host_realizer_json(result.certificate, result.witness);
  r["nodes"] = result.stats.nodes;
  r["oracle_calls"] = result.stats.oracle_calls;
  report.exact = result.exact;
  report.elapsed_ms = since(start);
  return report;
}

RunReport bounds_table() {
  const auto start = Clock::now();
  RunReport report;
  report.command = "bounds table";
  Json rows = Json::array();
  for (const auto& row : bounds::exponent_table()) {
    char rounded[32];
    std::snprintf(rounded, sizeof rounded, "%.5f", row.rounded());
    rows.push_back(Json{{"d", row.d}, {"m", row.m}, {"exponent", rounded}});
  }
  report.result["rows"] = std::move(rows);
  report.elapsed_ms = since(start);
  return report;
}

RunReport bounds_lower(std::uint64_t n, std::uint64_t d) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "bounds lower";
  const auto bound = bounds::goodwillie_lower_bound(n, d);
  char rounded[32];
  std::snprintf(rounded, sizeof rounded, "%.4f", bound.value);
  report.result["n"] = n;
  report.result["d"] = d;
  report.result["sqrt_dn"] = bound.value;
  report.result["sqrt_dn_4dp"] = rounded;
  report.result["guarantee"] = bound.integer_guarantee;
  report.elapsed_ms = since(start);
  return report;
}

RunReport bounds_digit(const bounds::BigInt& n, std::uint64_t d) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "bounds cor2";
  const auto bound = bounds::digit_bound_of(n, d);
  Json& r = report.result;
  r["n"] = n.str();
  r["d"] = d;
  r["m_star"] = bound.m_star;
  r["exponent"] = bound.exponent;
  r["base"] = bound.digits.base;
  r["digits"] = bound.digits.digits;
  r["digit_bound"] = bound.digit_bound.str();
  r["smoothed"] = bound.smoothed;
  r["digit_count_cap"] = bound.digit_count_cap;
  report.elapsed_ms = since(start);
  return report;
}

RunReport bounds_lex_power(const Poset& p, std::size_t d, std::size_t k, const ExtremalOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "bounds thm1";
  const auto t = verify_lex_power_instance(p, d, k, options);
  Json& r = report.result;
  r["base_elements"] = p.size();
  r["d"] = d;
  r["k"] = k;
  std::size_t power = 1;
  for (std::size_t i = 0; i < k; ++i) power *= p.size();
  r["power_elements"] = power;
  r["base_value"] = t.base.value;
  r["base_exact"] = t.base.exact;
  r["lhs"] = t.lhs.value;
  r["lhs_exact"] = t.lhs.exact;
  r["rhs"] = t.rhs;
  r["holds"] = t.holds;
  report.exact = t.base.exact && t.lhs.exact;
  report.elapsed_ms = since(start);
  return report;
}

}  // namespace posetkit::report
