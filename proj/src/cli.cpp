#include "schreier/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schreier/core.hpp"
#include "schreier/errors.hpp"
#include "schreier/oeis_io.hpp"
#include "schreier/oracle.hpp"
#include "schreier/recurrence.hpp"
#include "schreier/verify.hpp"

namespace schreier::cli {
namespace {

// Thrown for bad flag combinations that CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxListedFailures = 10;

std::string default_fixture_dir() {
  if (const char* env = std::getenv(kFixtureEnv); env && *env) return env;
  return "fixtures";
}

SequenceId make_sequence(const std::string& kind, std::optional<int> k) {
  const auto family = parse_kind(kind);
  if (!family) throw UsageError("unknown kind '" + kind + "'");
  if (*family == Family::Fibonacci) {
    if (k) throw UsageError("--k does not apply to kind fib");
    return SequenceId::fibonacci();
  }
  if (!k) throw UsageError("--k is required for kind " + kind);
  if (*k < 1) throw UsageError("--k must be >= 1");
  return SequenceId{*family, *k};
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::optional<int> k;
  std::size_t count = 0;
  std::string format = "table";
  std::optional<std::int64_t> offset;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const SequenceId id = make_sequence(a.kind, a.k);
  const std::int64_t first = a.offset.value_or(id.first_index());
  if (first < id.first_index()) {
    throw UsageError("kind " + a.kind + " starts at index " +
                     std::to_string(id.first_index()));
  }
  const auto terms = recurrence::sequence_terms(id, first, a.count);

  if (a.format == "csv") {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) out << ',';
      out << terms[i];
    }
    out << '\n';
  } else if (a.format == "table") {
    const std::string header = to_string(id) + "(n)";
    const std::int64_t last = first + static_cast<std::int64_t>(terms.size()) - 1;
    const auto width = std::max({std::to_string(first).size(),
                                 std::to_string(last).size(), std::size_t{1}});
    out << std::left << std::setw(static_cast<int>(width)) << "n" << "  "
        << header << '\n';
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(width))
          << first + static_cast<std::int64_t>(i) << "  " << terms[i] << '\n';
    }
  } else if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = a.kind;
    if (id.family != Family::Fibonacci) j["k"] = id.k;
    j["offset"] = first;
    j["count"] = terms.size();
    auto& arr = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : terms) arr.push_back(t.str());
    out << j.dump() << '\n';
  } else {
    out << oeis::write_bfile(id, first, a.count) << '\n';
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> theorems;
  bool all = false;
  std::optional<int> k_max;
  std::optional<int> n_max;
  std::string format = "text";
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<verify::Theorem> suites;
  if (a.all) {
    if (!a.theorems.empty()) throw UsageError("--all excludes --theorem");
    auto all = verify::all_theorems();
    suites.assign(all.begin(), all.end());
  } else {
    if (a.theorems.empty()) throw UsageError("give --theorem or --all");
    for (const auto& name : a.theorems) {
      const auto t = verify::parse_theorem(name);
      if (!t) throw UsageError("unknown theorem '" + name + "'");
      suites.push_back(*t);
    }
  }

  const verify::Limits limits{a.k_max, a.n_max};
  std::vector<verify::Report> reports;
  for (auto t : suites) {
    try {
      reports.push_back(verify::run(t, limits));
    } catch (const CapExceeded& e) {
      throw UsageError(std::string(verify::theorem_name(t)) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(verify::theorem_name(t)) + ": " + e.what());
    }
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = verify::kReportSchemaVersion;
    j["passed"] = ok;
    auto& arr = j["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(verify::to_json(r, a.timing));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.suite << " k=[" << r.k_range.lo
          << "," << r.k_range.hi << "] n=[" << r.n_range.lo << ","
          << r.n_range.hi << "] checks=" << r.checks
          << " failures=" << r.failures.size();
      if (a.timing) out << " wall_ms=" << r.wall_time.count();
      out << '\n';
      for (std::size_t i = 0; i < r.failures.size() && i < kMaxListedFailures; ++i) {
        const auto& f = r.failures[i];
        out << "  " << f.check << " [" << f.inputs << "] expected " << f.expected
            << ", got " << f.actual << '\n';
      }
    }
  }
  return ok ? kOk : kCheckFailed;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
  int k = 1;
  int n = 1;
  std::string mode = "schreier";
  bool list = false;
  bool any_max = false;
  int cap = oracle::kDefaultCap;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  oracle::Mode mode{};
  if (a.mode == "schreier") {
    mode = oracle::Mode::Schreier;
  } else if (a.mode == "maximal") {
    mode = oracle::Mode::MaximalSchreier;
  } else {
    mode = oracle::Mode::StrictSchreier;
  }
  const oracle::EnumerationQuery q{a.k, a.n, mode, !a.any_max};
  try {
    if (a.list) {
      const auto ws = oracle::enumerate(q, a.cap);
      out << ws.size() << '\n';
      for (const auto& w : ws) out << w << '\n';
    } else {
      out << oracle::count(q, a.cap) << '\n';
    }
  } catch (const CapExceeded& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

// ---- oeis ------------------------------------------------------------------

struct OeisExportArgs {
  std::string kind;
  std::optional<int> k;
  std::optional<std::string> rule;
  std::size_t count = 0;
  std::optional<std::int64_t> offset;
  std::optional<std::string> out_path;
};

int cmd_oeis_export(const OeisExportArgs& a, std::ostream& out) {
  std::string text;
  if (a.rule) {
    if (!a.kind.empty() || a.k || a.offset) {
      throw UsageError("--rule excludes --kind, --k and --offset");
    }
    const auto* rule = oeis::find_rule(*a.rule);
    if (!rule) throw UsageError("unknown rule '" + *a.rule + "'");
    text = oeis::format_bfile(oeis::export_for_rule(*rule, a.count));
  } else {
    if (a.kind.empty()) throw UsageError("give --kind or --rule");
    const SequenceId id = make_sequence(a.kind, a.k);
    const std::int64_t first = a.offset.value_or(id.first_index());
    if (first < id.first_index()) {
      throw UsageError("kind " + a.kind + " starts at index " +
                       std::to_string(id.first_index()));
    }
    text = oeis::write_bfile(id, first, a.count);
  }
  if (a.out_path) {
    std::ofstream f(*a.out_path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) {
      throw std::runtime_error("cannot write " + *a.out_path);
    }
  } else {
    out << text << '\n';
  }
  return kOk;
}

struct OeisCheckArgs {
  std::vector<std::string> rules;
  bool all = false;
  std::string fixtures;
  bool fetch = false;
  std::string base_url = "https://oeis.org";
  std::string format = "text";
  bool rows = false;
};

nlohmann::ordered_json report_json(const oeis::CrossCheckReport& r) {
  nlohmann::ordered_json j;
  j["rule"] = r.rule;
  j["relation"] = r.relation;
  j["remote"] = r.remote;
  j["source"] = std::string(oeis::provenance_name(r.provenance));
  j["self_referential"] = r.self_referential();
  j["window"] = {r.first, r.last};
  j["terms"] = r.rows.size();
  j["mismatches"] = r.mismatches();
  j["passed"] = r.passed();
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({row.local_index, row.remote_index, row.local.str(),
                    row.remote.get_str(), row.match});
  }
  return j;
}

int cmd_oeis_check(const OeisCheckArgs& a, std::ostream& out) {
  std::vector<const oeis::CrossCheckRule*> rules;
  if (a.all) {
    if (!a.rules.empty()) throw UsageError("--all excludes --rule");
    for (const auto& r : oeis::caption_rules()) rules.push_back(&r);
  } else {
    if (a.rules.empty()) throw UsageError("give --rule or --all");
    for (const auto& name : a.rules) {
      const auto* r = oeis::find_rule(name);
      if (!r) throw UsageError("unknown rule '" + name + "'");
      rules.push_back(r);
    }
  }

  const oeis::FixtureStore store(a.fixtures);
  oeis::FetchOptions fetch{a.fixtures, a.fetch, a.base_url};
  std::vector<oeis::CrossCheckReport> reports;
  for (const auto* rule : rules) {
    const oeis::BFile remote = oeis::fetch_bfile(rule->remote, fetch);
    const auto provenance =
        a.fetch ? oeis::Provenance::Oeis : store.provenance(rule->remote);
    reports.push_back(oeis::cross_check(*rule, remote, provenance));
  }

  bool ok = true;
  std::size_t self_ref = 0;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    self_ref += r.self_referential();
  }

  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = verify::kReportSchemaVersion;
    j["passed"] = ok;
    auto& arr = j["rules"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.rule << "  " << r.relation
          << "  n=[" << r.first << "," << r.last << "]  terms=" << r.rows.size()
          << "  source=" << oeis::provenance_name(r.provenance);
      if (r.self_referential()) out << "  [self-referential: not independent]";
      out << '\n';
      for (const auto& row : r.rows) {
        if (a.rows || !row.match) {
          out << "  n=" << row.local_index << " remote(" << row.remote_index
              << ") local=" << row.local << " remote=" << row.remote
              << (row.match ? "" : "  MISMATCH") << '\n';
          if (!a.rows) break;
        }
      }
    }
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed();
    out << passed << "/" << reports.size() << " rules passed, " << self_ref
        << " against self-referential fixtures\n";
  }
  return ok ? kOk : kCheckFailed;
}

struct OeisFetchArgs {
  std::string id;
  std::string fixtures;
  std::string base_url = "https://oeis.org";
};

int cmd_oeis_fetch(const OeisFetchArgs& a, std::ostream& out) {
  if (!oeis::is_valid_id(a.id)) throw UsageError("invalid identifier '" + a.id + "'");
  const auto file =
      oeis::fetch_bfile(a.id, {a.fixtures, /*allow_network=*/true, a.base_url});
  out << a.id << ": " << file.entries.size() << " terms cached in "
      << oeis::FixtureStore(a.fixtures).path_for(a.id).string() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Schreier-set counting sequences: generation, verification, "
               "brute-force enumeration and OEIS cross-checks",
               "schreier"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  const std::vector<std::string> kinds{"s", "sm", "a", "am", "fib"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print the first terms of a sequence");
  gen_cmd->add_option("--kind", gen.kind, "s, sm, a, am or fib")
      ->required()
      ->check(CLI::IsMember(kinds));
  gen_cmd->add_option("--k", gen.k, "Parameter k >= 1");
  gen_cmd->add_option("--count", gen.count, "Number of terms")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  gen_cmd->add_option("--format", gen.format, "table, csv, json or bfile")
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));
  gen_cmd->add_option("--offset", gen.offset,
                      "First index (default: the sequence's first index)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run identity verification suites");
  std::vector<std::string> theorem_names;
  for (auto t : verify::all_theorems()) {
    theorem_names.emplace_back(verify::theorem_name(t));
  }
  ver_cmd->add_option("--theorem", ver.theorems, "Suite name (repeatable)")
      ->check(CLI::IsMember(theorem_names));
  ver_cmd->add_flag("--all", ver.all, "Run every suite with default ranges");
  ver_cmd->add_option("--k-max", ver.k_max, "Upper end of the k range")
      ->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--n-max", ver.n_max, "Upper end of the n range")
      ->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--format", ver.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ver_cmd->add_flag("--timing", ver.timing, "Include wall time in the report");

  OracleArgs orc;
  auto* orc_cmd = app.add_subcommand("oracle", "Brute-force enumeration");
  orc_cmd->add_option("--k", orc.k, "Parameter k >= 1")->required()->check(CLI::PositiveNumber);
  orc_cmd->add_option("--n", orc.n, "Largest index n >= 1")->required()->check(CLI::PositiveNumber);
  orc_cmd->add_option("--mode", orc.mode, "schreier, maximal or strict")
      ->check(CLI::IsMember({"schreier", "maximal", "strict"}));
  orc_cmd->add_flag("--list", orc.list, "Print every witness set");
  orc_cmd->add_flag("--any-max", orc.any_max, "Do not require nk in the set");
  orc_cmd->add_option("--cap", orc.cap, "Enumeration cap on n")
      ->check(CLI::Range(1, oracle::kHardCap));

  auto* oeis_cmd = app.add_subcommand("oeis", "OEIS b-file export and cross-checks");
  oeis_cmd->require_subcommand(1);

  OeisExportArgs exp;
  auto* exp_cmd = oeis_cmd->add_subcommand("export", "Write a b-file");
  exp_cmd->add_option("--kind", exp.kind, "s, sm, a, am or fib")->check(CLI::IsMember(kinds));
  exp_cmd->add_option("--k", exp.k, "Parameter k >= 1");
  exp_cmd->add_option("--rule", exp.rule, "Export in the remote indexing of a rule");
  exp_cmd->add_option("--count", exp.count, "Number of terms")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  exp_cmd->add_option("--offset", exp.offset, "First index");
  exp_cmd->add_option("--out", exp.out_path, "Output file (default stdout)");

  OeisCheckArgs chk;
  chk.fixtures = default_fixture_dir();
  auto* chk_cmd = oeis_cmd->add_subcommand("check", "Cross-check caption identifications");
  chk_cmd->add_option("--rule", chk.rules, "Rule name (repeatable)");
  chk_cmd->add_flag("--all", chk.all, "Check every rule");
  chk_cmd->add_option("--fixtures", chk.fixtures, "Fixture directory");
  chk_cmd->add_flag("--fetch", chk.fetch, "Download b-files from OEIS");
  chk_cmd->add_option("--base-url", chk.base_url, "OEIS server");
  chk_cmd->add_option("--format", chk.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  chk_cmd->add_flag("--rows", chk.rows, "Print every compared term");

  OeisFetchArgs fet;
  fet.fixtures = default_fixture_dir();
  auto* fet_cmd = oeis_cmd->add_subcommand("fetch", "Download and cache a b-file");
  fet_cmd->add_option("--id", fet.id, "OEIS identifier, e.g. A000045")->required();
  fet_cmd->add_option("--fixtures", fet.fixtures, "Fixture directory");
  fet_cmd->add_option("--base-url", fet.base_url, "OEIS server");

  std::vector<std::string> argv_store{"schreier"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*ver_cmd) return cmd_verify(ver, out);
    if (*orc_cmd) return cmd_oracle(orc, out);
    if (*exp_cmd) return cmd_oeis_export(exp, out);
    if (*chk_cmd) return cmd_oeis_check(chk, out);
    if (*fet_cmd) return cmd_oeis_fetch(fet, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidIdentifier& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const WindowOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const NegativeTermDetected& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    // Network, HTTP, parse and file errors.
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace schreier::cli
