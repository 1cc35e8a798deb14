// Command-line front end: exact labeled-tree count tables, identity
// verification suites, and series coefficient listings.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 usage or domain error. Data goes to stdout, diagnostics to stderr.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "treecount/oracle.hpp"
#include "treecount/recurrence.hpp"
#include "treecount/series.hpp"

namespace {

using nlohmann::ordered_json;
using treecount::binomial;
using treecount::count_trees_with_edge;
using treecount::edge_count_uniformity;
using treecount::edge_rooted_count;
using treecount::enumerate_labeled_trees;
using treecount::FormalSeries;
using treecount::Natural;
using treecount::Rational;
using treecount::split_profile;
using treecount::to_string;
using treecount::tree_count_closed;
using treecount::tree_count_recursive;
using treecount::tree_egf;
using treecount::TreeCountTable;
using treecount::VerificationReport;

enum class Format { plain, csv, json };

std::optional<Format> parse_format(const std::string& name) {
  if (name == "plain" || name == "plain-table") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit_csv(const TextTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    std::cout << (i ? "," : "") << csv_field(table.header[i]);
  std::cout << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? "," : "") << csv_field(row[i]);
    std::cout << "\n";
  }
}

void emit_plain(const TextTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    std::cout << (i ? "  " : "") << table.header[i];
  std::cout << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? "  " : "") << row[i];
    std::cout << "\n";
  }
}

void emit(Format format, const TextTable& table, const ordered_json& doc) {
  switch (format) {
    case Format::plain: emit_plain(table); break;
    case Format::csv: emit_csv(table); break;
    case Format::json: std::cout << doc.dump(2) << "\n"; break;
  }
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j{{"identity", r.identity}, {"lo", r.lo},   {"hi", r.hi},
                 {"passed", r.passed},     {"lhs", r.lhs}, {"rhs", r.rhs},
                 {"note", r.note}};
  if (r.failure_index)
    j["failure_index"] = *r.failure_index;
  else
    j["failure_index"] = nullptr;
  return j;
}

// ---------------------------------------------------------------- table --

int run_table(long max, std::optional<long> corrupt, Format format) {
  if (max < 1) return usage_error("table: --max must be >= 1");
  TreeCountTable table(max);
  if (corrupt) {
    if (*corrupt < 1 || *corrupt > max)
      return usage_error("table: --corrupt index outside 1..max");
    table.override_value(*corrupt, table.at(*corrupt) + 1);
  }
  bool all_match = true;
  TextTable text{{"n", "recurrence", "closed", "match"}, {}};
  ordered_json results = ordered_json::array();
  for (long n = 1; n <= max; ++n) {
    const std::string rec = to_string(table.at(n));
    const std::string closed = to_string(tree_count_closed(n));
    const bool match = rec == closed;
    all_match = all_match && match;
    text.rows.push_back(
        {std::to_string(n), rec, closed, match ? "ok" : "fail"});
    results.push_back({{"n", n},
                       {"recurrence", rec},
                       {"closed", closed},
                       {"match", match}});
  }
  ordered_json doc{{"command", "table"},
                   {"max", max},
                   {"all_match", all_match},
                   {"results", std::move(results)}};
  emit(format, text, doc);
  return all_match ? 0 : 1;
}

// --------------------------------------------------------------- verify --

VerificationReport closed_form_suite(long max, TreeCountTable& table) {
  VerificationReport r;
  r.identity = "closed-form";
  r.lo = 1;
  r.hi = max;
  for (long n = 1; n <= max; ++n) {
    Natural rec = tree_count_recursive(n, table);
    Natural closed = tree_count_closed(n);
    if (rec != closed) {
      r.passed = false;
      r.failure_index = n;
      r.lhs = to_string(rec);
      r.rhs = to_string(closed);
      break;
    }
  }
  return r;
}

VerificationReport edge_symmetry_suite(long max, TreeCountTable& table) {
  VerificationReport r;
  r.identity = "edge-symmetry";
  r.lo = 2;
  r.hi = max;
  for (long n = 2; n <= max; ++n) {
    VerificationReport single = treecount::verify_edge_symmetry(n, table);
    if (!single.passed) {
      r.passed = false;
      r.failure_index = n;
      r.lhs = single.lhs;
      r.rhs = single.rhs;
      break;
    }
  }
  return r;
}

std::vector<VerificationReport> oracle_suite(long max, TreeCountTable& table) {
  std::vector<VerificationReport> reports;

  VerificationReport counts;
  counts.identity = "enumeration-count";
  counts.lo = 1;
  counts.hi = max;
  std::string tally = "counts";
  for (long n = 1; n <= max; ++n) {
    const Natural seen = enumerate_labeled_trees(static_cast<int>(n)).size();
    tally += " " + to_string(seen);
    const Natural rec = tree_count_recursive(n, table);
    const Natural closed = tree_count_closed(n);
    if (counts.passed && (seen != rec || seen != closed)) {
      counts.passed = false;
      counts.failure_index = n;
      counts.lhs = to_string(seen);
      counts.rhs = to_string(seen != rec ? rec : closed);
    }
  }
  counts.note = tally;
  reports.push_back(counts);

  VerificationReport anchored;
  anchored.identity = "anchored-edge-count";
  anchored.lo = 2;
  anchored.hi = max;
  for (long n = 2; n <= max; ++n) {
    const Natural oracle = count_trees_with_edge(static_cast<int>(n), 1, 2);
    const Natural formula = edge_rooted_count(n, table);
    if (oracle != formula) {
      anchored.passed = false;
      anchored.failure_index = n;
      anchored.lhs = to_string(oracle);
      anchored.rhs = to_string(formula);
      break;
    }
  }
  reports.push_back(anchored);

  VerificationReport uniform;
  uniform.identity = "edge-uniformity";
  uniform.lo = 2;
  uniform.hi = max;
  for (long n = 2; n <= max; ++n) {
    VerificationReport single = edge_count_uniformity(static_cast<int>(n));
    if (!single.passed) {
      uniform.passed = false;
      uniform.failure_index = n;
      uniform.lhs = single.lhs;
      uniform.rhs = single.rhs;
      uniform.note = "per-edge counts differ at n = " + std::to_string(n);
      break;
    }
  }
  reports.push_back(uniform);

  VerificationReport doubled;
  doubled.identity = "edge-double-counting";
  doubled.lo = 2;
  doubled.hi = max;
  for (long n = 2; n <= max; ++n) {
    Natural sum = 0;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        sum += count_trees_with_edge(static_cast<int>(n), u, v);
    const Natural expected = (n - 1) * tree_count_recursive(n, table);
    if (sum != expected) {
      doubled.passed = false;
      doubled.failure_index = n;
      doubled.lhs = to_string(sum);
      doubled.rhs = to_string(expected);
      break;
    }
  }
  reports.push_back(doubled);

  return reports;
}

VerificationReport split_suite(long max, TreeCountTable& table) {
  VerificationReport r;
  r.identity = "split-profile";
  r.lo = 2;
  r.hi = max;
  for (long n = 2; n <= max && r.passed; ++n) {
    const treecount::SplitProfile profile =
        split_profile(static_cast<int>(n));
    table.extend(n);
    for (long k = 0; k <= n - 2; ++k) {
      const Natural expected =
          binomial(n - 2, k) * table.at(k + 1) * table.at(n - k - 1);
      if (profile.counts_by_k[k] != expected) {
        r.passed = false;
        r.failure_index = n;
        r.lhs = to_string(profile.counts_by_k[k]);
        r.rhs = to_string(expected);
        r.note = "k = " + std::to_string(k);
        break;
      }
    }
  }
  return r;
}

VerificationReport residual_report(const std::string& name,
                                   const FormalSeries& residual, long order) {
  VerificationReport r;
  r.identity = name;
  r.lo = 1;
  r.hi = order;
  for (long k = 0; k <= residual.order(); ++k) {
    if (residual[k] != 0) {
      r.passed = false;
      r.failure_index = k;
      r.lhs = to_string(residual[k]);
      r.rhs = "0";
      break;
    }
  }
  return r;
}

std::vector<VerificationReport> series_suite(long order,
                                             TreeCountTable& table) {
  std::vector<VerificationReport> reports;
  const FormalSeries t = tree_egf(order, table);
  reports.push_back(residual_report(
      "residual-square", treecount::square_identity_residual(t, table),
      order));
  reports.push_back(residual_report("residual-log-form",
                                    treecount::log_form_residual(t), order));
  reports.push_back(
      residual_report("residual-ode", treecount::ode_residual(t), order));
  reports.push_back(residual_report(
      "residual-functional", treecount::functional_equation_residual(t),
      order));

  VerificationReport bridge;
  bridge.identity = "lagrange-egf-match";
  bridge.lo = 1;
  bridge.hi = order;
  const FormalSeries phi = treecount::exp(FormalSeries::variable(order - 1));
  const FormalSeries inverted = treecount::lagrange_invert(phi, order);
  for (long n = 1; n <= order; ++n) {
    if (inverted[n] != t[n]) {
      bridge.passed = false;
      bridge.failure_index = n;
      bridge.lhs = to_string(inverted[n]);
      bridge.rhs = to_string(t[n]);
      break;
    }
  }
  reports.push_back(bridge);
  return reports;
}

void emit_verify(Format format, const std::string& suite, bool by_order,
                 long limit, const std::vector<VerificationReport>& reports,
                 bool all_passed) {
  if (format == Format::plain) {
    for (const auto& r : reports) {
      std::cout << r.identity << " [" << r.lo << ".." << r.hi << "] "
                << (r.passed ? "pass" : "FAIL");
      if (r.failure_index)
        std::cout << " at " << *r.failure_index << " lhs=" << r.lhs
                  << " rhs=" << r.rhs;
      if (!r.note.empty()) std::cout << " (" << r.note << ")";
      std::cout << "\n";
    }
    return;
  }
  if (format == Format::csv) {
    TextTable text{
        {"identity", "lo", "hi", "passed", "failure_index", "lhs", "rhs",
         "note"},
        {}};
    for (const auto& r : reports)
      text.rows.push_back({r.identity, std::to_string(r.lo),
                           std::to_string(r.hi), r.passed ? "pass" : "FAIL",
                           r.failure_index ? std::to_string(*r.failure_index)
                                           : "",
                           r.lhs, r.rhs, r.note});
    emit_csv(text);
    return;
  }
  ordered_json results = ordered_json::array();
  for (const auto& r : reports) results.push_back(report_to_json(r));
  ordered_json doc{{"command", "verify"},
                   {"suite", suite},
                   {by_order ? "order" : "max", limit},
                   {"passed", all_passed},
                   {"results", std::move(results)}};
  std::cout << doc.dump(2) << "\n";
}

int run_verify(const std::string& suite, long limit, bool by_order,
               std::optional<long> corrupt, Format format) {
  TreeCountTable table(limit);
  if (corrupt) {
    if (*corrupt < 1 || *corrupt > limit)
      return usage_error("verify: --corrupt index outside table range");
    table.override_value(*corrupt, table.at(*corrupt) + 1);
  }
  std::vector<VerificationReport> reports;
  if (suite == "closed-form") {
    reports.push_back(closed_form_suite(limit, table));
  } else if (suite == "edge-symmetry") {
    reports.push_back(edge_symmetry_suite(limit, table));
  } else if (suite == "oracle") {
    reports = oracle_suite(limit, table);
  } else if (suite == "split") {
    reports.push_back(split_suite(limit, table));
  } else {
    reports = series_suite(limit, table);
  }
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed;
  emit_verify(format, suite, by_order, limit, reports, all_passed);
  return all_passed ? 0 : 1;
}

// --------------------------------------------------------------- series --

int run_series(long order, const std::string& what, Format format) {
  if (order < 1 || order > 200)
    return usage_error("series: --order must be in 1..200");
  if (what == "egf" || what == "lagrange") {
    FormalSeries t(0);
    if (what == "egf") {
      TreeCountTable table(order);
      t = tree_egf(order, table);
    } else {
      const FormalSeries phi =
          treecount::exp(FormalSeries::variable(order - 1));
      t = treecount::lagrange_invert(phi, order);
    }
    TextTable text{{"power", "coefficient"}, {}};
    ordered_json results = ordered_json::array();
    for (long n = 1; n <= order; ++n) {
      text.rows.push_back({std::to_string(n), to_string(t[n])});
      results.push_back({{"power", n}, {"coefficient", to_string(t[n])}});
    }
    ordered_json doc{{"command", "series"},
                     {"what", what},
                     {"order", order},
                     {"results", std::move(results)}};
    emit(format, text, doc);
    return 0;
  }
  if (what != "residuals")
    return usage_error("series: --what must be egf, lagrange, or residuals");

  TreeCountTable table(order);
  const FormalSeries t = tree_egf(order, table);
  const std::vector<std::pair<std::string, FormalSeries>> residuals = {
      {"residual-square", treecount::square_identity_residual(t, table)},
      {"residual-log-form", treecount::log_form_residual(t)},
      {"residual-ode", treecount::ode_residual(t)},
      {"residual-functional", treecount::functional_equation_residual(t)},
  };
  bool all_zero = true;
  TextTable text{{"identity", "max_abs", "zero"}, {}};
  ordered_json results = ordered_json::array();
  for (const auto& [name, residual] : residuals) {
    Rational max_abs = 0;
    for (long k = 0; k <= residual.order(); ++k) {
      Rational a = abs(residual[k]);
      if (a > max_abs) max_abs = a;
    }
    const bool zero = residual.is_zero();
    all_zero = all_zero && zero;
    text.rows.push_back({name, to_string(max_abs), zero ? "yes" : "no"});
    results.push_back({{"identity", name},
                       {"max_abs", to_string(max_abs)},
                       {"zero", zero}});
  }
  ordered_json doc{{"command", "series"},
                   {"what", what},
                   {"order", order},
                   {"all_zero", all_zero},
                   {"results", std::move(results)}};
  emit(format, text, doc);
  return all_zero ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "treecount: exact labeled-tree counts via recurrence, closed form, "
      "generating-function identities, and a brute-force oracle"};
  app.require_subcommand(1);

  auto* table_cmd = app.add_subcommand(
      "table", "Tabulate n, T_n by recurrence, n^(n-2), and a match flag");
  long table_max = 0;
  table_cmd->add_option("--max", table_max, "largest n to tabulate")
      ->required();
  std::string table_format = "plain";
  table_cmd->add_option("--format", table_format,
                        "plain, csv, or json (default plain)");
  long table_corrupt = 0;
  table_cmd->add_option("--corrupt", table_corrupt, "")->group("");

  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Run a verification suite: closed-form, edge-symmetry, oracle, split, "
      "or series");
  std::string suite;
  verify_cmd->add_option("suite", suite, "suite name")->required();
  long verify_max = 0;
  verify_cmd->add_option(
      "--max", verify_max,
      "largest n to check (default 200; oracle/split default 7, cap 8)");
  long verify_order = 0;
  verify_cmd->add_option("--order", verify_order,
                         "series suite truncation order (default 50)");
  std::string verify_format = "plain";
  verify_cmd->add_option("--format", verify_format,
                         "plain, csv, or json (default plain)");
  long verify_corrupt = 0;
  verify_cmd->add_option("--corrupt", verify_corrupt, "")->group("");

  auto* series_cmd = app.add_subcommand(
      "series", "Print series coefficients as exact fractions");
  long series_order = 10;
  series_cmd->add_option("--order", series_order,
                         "truncation order, 1..200 (default 10)");
  std::string what = "egf";
  series_cmd->add_option("--what", what,
                         "egf, lagrange, or residuals (default egf)");
  std::string series_format = "plain";
  series_cmd->add_option("--format", series_format,
                         "plain, csv, or json (default plain)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*table_cmd) {
      const auto format = parse_format(table_format);
      if (!format) return usage_error("unknown format '" + table_format + "'");
      std::optional<long> corrupt;
      if (table_cmd->count("--corrupt")) corrupt = table_corrupt;
      return run_table(table_max, corrupt, *format);
    }
    if (*verify_cmd) {
      const auto format = parse_format(verify_format);
      if (!format)
        return usage_error("unknown format '" + verify_format + "'");
      const bool is_series = suite == "series";
      if (suite != "closed-form" && suite != "edge-symmetry" &&
          suite != "oracle" && suite != "split" && !is_series)
        return usage_error("unknown suite '" + suite +
                           "' (valid: closed-form, edge-symmetry, oracle, "
                           "split, series)");
      if (is_series && verify_cmd->count("--max"))
        return usage_error("the series suite takes --order, not --max");
      if (!is_series && verify_cmd->count("--order"))
        return usage_error("suite '" + suite + "' takes --max, not --order");
      long limit;
      if (is_series) {
        limit = verify_cmd->count("--order") ? verify_order : 50;
        if (limit < 1 || limit > 200)
          return usage_error("verify series: --order must be in 1..200");
      } else if (suite == "oracle" || suite == "split") {
        limit = verify_cmd->count("--max") ? verify_max : 7;
        if (limit < 1) return usage_error("verify: --max must be >= 1");
        if (limit > treecount::kMaxOracleVertices)
          return usage_error("verify " + suite + ": --max is capped at " +
                             std::to_string(treecount::kMaxOracleVertices));
      } else {
        limit = verify_cmd->count("--max") ? verify_max : 200;
        if (limit < 1) return usage_error("verify: --max must be >= 1");
      }
      std::optional<long> corrupt;
      if (verify_cmd->count("--corrupt")) corrupt = verify_corrupt;
      return run_verify(suite, limit, is_series, corrupt, *format);
    }
    const auto format = parse_format(series_format);
    if (!format) return usage_error("unknown format '" + series_format + "'");
    return run_series(series_order, what, *format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
