// Copyright 2026 The qseries Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qseries/coeff_table.hpp"
#include "qseries/dsl/evaluator.hpp"
#include "qseries/dsl/parser.hpp"
#include "qseries/dsl/report.hpp"
#include "qseries/dsl/runner.hpp"

namespace qseries::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

std::int64_t default_order() {
  const char* env = std::getenv(kOrderEnv);
  if (env == nullptr || *env == '\0') return dsl::kDefaultOrder;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used == std::string(env).size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(kOrderEnv) + " must be a positive integer, got '" + env + "'");
}

Ring parse_ring(const std::string& text) {
  try {
    return Ring::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(flag + " is empty");
  return out;
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
}

struct ExpandArgs {
  std::string expr;
  std::optional<std::int64_t> order;
  std::string ring = "int";
  std::string format = "text";
};

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  check_format(a.format);
  const std::int64_t order = a.order.value_or(default_order());
  if (order < 1) throw UsageError("--order must be at least 1");
  const Ring ring = parse_ring(a.ring);
  const dsl::ExprPtr e = dsl::parse_expression(a.expr);
  dsl::Evaluator ev(ring);
  const Series s = ev.eval(*e, order);
  const std::int64_t from = s.is_zero() ? 0 : std::min<std::int64_t>(0, s.valuation());
  const std::vector<Scalar> coeffs = s.coefficients(from, order);
  if (a.format == "json") {
    ordered_json j;
    j["expression"] = dsl::to_string(*e);
    j["ring"] = ring.descriptor();
    j["order"] = order;
    j["valuation"] = s.is_zero() ? ordered_json(nullptr) : ordered_json(s.valuation());
    j["from"] = from;
    ordered_json cs = ordered_json::array();
    for (const Scalar& c : coeffs) cs.push_back(c.get_str());
    j["coefficients"] = std::move(cs);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << "valuation: " << (s.is_zero() ? std::string("none") : std::to_string(s.valuation())) << '\n';
  out << "coefficients q^" << from << "..q^" << order - 1 << ": ";
  for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? ", " : "") << coeffs[i].get_str();
  out << '\n';
  return kSuccess;
}

struct VerifyArgs {
  std::string file;
  std::optional<std::int64_t> order;
  unsigned jobs = 1;
  std::string format = "text";
  std::optional<std::string> ring;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  check_format(a.format);
  dsl::RunOptions options;
  options.default_order = default_order();
  if (a.order) {
    if (*a.order < 1) throw UsageError("--order must be at least 1");
    options.order = a.order;
  }
  if (a.ring) options.ring = parse_ring(*a.ring);
  options.jobs = std::max(1u, a.jobs);
  const std::vector<dsl::Statement> statements = dsl::parse_program(read_file(a.file));
  const std::vector<dsl::Report> reports = dsl::run(statements, options);
  out << (a.format == "json" ? dsl::format_json(reports) : dsl::format_table(reports));
  return dsl::all_pass(reports) ? kSuccess : kVerificationFailure;
}

struct CoeffsArgs {
  std::string expr;
  std::int64_t count = 100;
  std::string ring = "int";
  std::optional<std::string> cache;
  std::optional<std::string> indices;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  std::string format = "text";
};

CoeffTable load_or_compute(const CoeffsArgs& a, const dsl::Expr& e, const Ring& ring) {
  const std::string label = dsl::to_string(e);
  if (a.cache && std::filesystem::exists(*a.cache)) {
    CoeffTable cached = read_cache(*a.cache, label, ring);
    if (cached.count() >= a.count) return cached;
  }
  dsl::Evaluator ev(ring);
  CoeffTable table = make_table(label, ev.eval(e, a.count), a.count);
  if (a.cache) {
    try {
      write_cache(table, *a.cache);
    } catch (const CacheFormatError&) {
      throw;
    } catch (const Error& err) {
      throw IoError(err.what());
    }
  }
  return table;
}

int cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
  check_format(a.format);
  if (a.count < 1) throw UsageError("--count must be at least 1");
  const Ring ring = parse_ring(a.ring);
  const dsl::ExprPtr e = dsl::parse_expression(a.expr);
  const CoeffTable table = load_or_compute(a, *e, ring);
  std::vector<std::int64_t> picks;
  if (a.indices) {
    picks = parse_int_list(*a.indices, "--indices");
  } else {
    const std::int64_t lo = a.from.value_or(0);
    const std::int64_t hi = a.to.value_or(a.count - 1);
    for (std::int64_t n = lo; n <= hi; ++n) picks.push_back(n);
  }
  for (std::int64_t n : picks) {
    if (n < 0 || n >= table.count()) {
      throw UsageError("index " + std::to_string(n) + " outside 0.." + std::to_string(table.count() - 1));
    }
  }
  if (a.format == "json") {
    ordered_json j;
    j["label"] = table.label;
    j["ring"] = table.ring.descriptor();
    j["count"] = table.count();
    ordered_json vs = ordered_json::object();
    for (std::int64_t n : picks) vs[std::to_string(n)] = table.values[static_cast<std::size_t>(n)].get_str();
    j["values"] = std::move(vs);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  for (std::int64_t n : picks) out << n << ' ' << table.values[static_cast<std::size_t>(n)].get_str() << '\n';
  return kSuccess;
}

struct ScanArgs {
  std::string expr;
  std::int64_t max_a = 10;
  std::string moduli = "5";
  std::int64_t min_witnesses = 20;
  std::optional<std::int64_t> count;
  std::optional<std::string> ring;
  std::string format = "text";
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  check_format(a.format);
  if (a.max_a < 1) throw UsageError("--maxA must be at least 1");
  if (a.min_witnesses < 1) throw UsageError("--min-witnesses must be at least 1");
  dsl::Statement s;
  s.label = "scan";
  s.kind = dsl::StatementKind::kScan;
  s.lhs = dsl::parse_expression(a.expr);
  s.max_a = a.max_a;
  s.moduli = parse_int_list(a.moduli, "--moduli");
  for (std::int64_t m : s.moduli) {
    if (m < 2) throw UsageError("--moduli entries must be at least 2");
  }
  s.min_witnesses = a.min_witnesses;
  if (a.count) {
    if (*a.count < 1) throw UsageError("--count must be at least 1");
    s.order = a.count;
  }
  if (a.ring) s.ring = parse_ring(*a.ring);
  const dsl::Report r = dsl::run_statement(s);
  if (r.detail.rfind("error: ", 0) == 0) throw Error(r.detail.substr(7));
  if (a.format == "json") {
    ordered_json j;
    j["expression"] = dsl::to_string(*s.lhs);
    j["ring"] = r.ring;
    j["order"] = r.order;
    j["verdict"] = std::string(dsl::verdict_name(r.verdict));
    ordered_json ps = ordered_json::array();
    for (const dsl::Progression& p : r.progressions) ps.push_back({p.a, p.b, p.modulus});
    j["progressions"] = std::move(ps);
    out << j.dump(2) << '\n';
  } else {
    for (const dsl::Progression& p : r.progressions) out << dsl::to_string(p) << '\n';
  }
  return r.verdict == dsl::Verdict::kPass ? kSuccess : kVerificationFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated q-series toolkit: expand, verify, tabulate and scan."};
  app.name("qseries");
  app.require_subcommand(1);

  ExpandArgs ea;
  CLI::App* expand = app.add_subcommand("expand", "Print the coefficients of an expression");
  expand->add_option("expr", ea.expr, "Expression")->required();
  expand->add_option("--order", ea.order, "Coefficients below q^N (default $" + std::string(kOrderEnv) + " or 120)");
  expand->add_option("--ring", ea.ring, "int, rat or mod:m");
  expand->add_option("--format", ea.format, "text or json");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Check every statement of a .qid file");
  verify->add_option("file", va.file, ".qid file")->required();
  verify->add_option("--order", va.order, "Override every statement's order");
  verify->add_option("--jobs", va.jobs, "Statements evaluated concurrently");
  verify->add_option("--format", va.format, "text or json");
  verify->add_option("--ring", va.ring, "Ring for statements that name none");

  CoeffsArgs ca;
  CLI::App* coeffs = app.add_subcommand("coeffs", "Tabulate coefficients, optionally through a cache file");
  coeffs->add_option("expr", ca.expr, "Builtin name or expression")->required();
  coeffs->add_option("--count", ca.count, "Number of coefficients c(0..N-1)");
  coeffs->add_option("--ring", ca.ring, "int, rat or mod:m");
  coeffs->add_option("--cache", ca.cache, "Cache file to read or write");
  coeffs->add_option("--indices", ca.indices, "Comma-separated indices to print");
  coeffs->add_option("--from", ca.from, "First index to print");
  coeffs->add_option("--to", ca.to, "Last index to print");
  coeffs->add_option("--format", ca.format, "text or json");

  ScanArgs sa;
  CLI::App* scan = app.add_subcommand("scan", "Search for progressions An+B with coefficients 0 mod M");
  scan->add_option("expr", sa.expr, "Expression")->required();
  scan->add_option("--maxA", sa.max_a, "Largest A");
  scan->add_option("--moduli", sa.moduli, "Comma-separated moduli");
  scan->add_option("--min-witnesses", sa.min_witnesses, "Witnesses required per progression");
  scan->add_option("--count", sa.count, "Coefficients examined");
  scan->add_option("--ring", sa.ring, "Evaluation ring");
  scan->add_option("--format", sa.format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "qseries: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (expand->parsed()) return cmd_expand(ea, out);
    if (verify->parsed()) return cmd_verify(va, out);
    if (coeffs->parsed()) return cmd_coeffs(ca, out);
    if (scan->parsed()) return cmd_scan(sa, out);
  } catch (const UsageError& e) {
    err << "qseries: " << e.what() << '\n';
    return kUsageError;
  } catch (const dsl::ParseError& e) {
    err << "qseries: parse error at " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "qseries: " << e.what() << '\n';
    return kIoError;
  } catch (const CacheFormatError& e) {
    err << "qseries: cache: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "qseries: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace qseries::cli
