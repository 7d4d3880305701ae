#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "schreier/oeis_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <httplib.h>
#include <json.hpp>

#include "schreier/errors.hpp"
#include "schreier/recurrence.hpp"

namespace schreier::oeis {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::string shift_suffix(std::int64_t shift) {
  if (shift == 0) return "n";
  return shift > 0 ? "n+" + std::to_string(shift)
                   : "n-" + std::to_string(-shift);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

}  // namespace

bool is_valid_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::all_of(id.begin() + 1, id.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string fixture_filename(std::string_view id) {
  if (!is_valid_id(id)) throw InvalidIdentifier(std::string(id));
  return "b" + std::string(id.substr(1)) + ".txt";
}

const Int* BFile::find(std::int64_t index) const {
  if (entries.empty() || index < first_index() || index > last_index()) {
    return nullptr;
  }
  return &entries[static_cast<std::size_t>(index - first_index())].value;
}

BFile parse_bfile(std::string_view text, std::string id) {
  if (!id.empty() && !is_valid_id(id)) throw InvalidIdentifier(id);
  BFile out{std::move(id), {}};
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw ParseError(line_no, "expected 'index value'");
    }
    const std::string_view idx_tok = line.substr(0, sep);
    const std::string_view val_tok = trim(line.substr(sep + 1));
    if (!is_integer_token(idx_tok) || !is_integer_token(val_tok)) {
      throw ParseError(line_no, "malformed entry '" + std::string(line) + "'");
    }
    std::int64_t index = 0;
    const auto [ptr, ec] =
        std::from_chars(idx_tok.data(), idx_tok.data() + idx_tok.size(), index);
    if (ec != std::errc{} || ptr != idx_tok.data() + idx_tok.size()) {
      throw ParseError(line_no, "index out of range");
    }
    if (!out.entries.empty() && index != out.last_index() + 1) {
      throw NonContiguousIndex(line_no, out.last_index() + 1, index);
    }
    out.entries.push_back({index, Int(std::string(val_tok), 10)});
  }
  return out;
}

std::string format_bfile(const BFile& file) {
  std::string out;
  for (std::size_t i = 0; i < file.entries.size(); ++i) {
    if (i) out += '\n';
    out += std::to_string(file.entries[i].index);
    out += ' ';
    out += file.entries[i].value.get_str();
  }
  return out;
}

std::string write_bfile(const SequenceId& seq, std::int64_t offset,
                        std::size_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  const auto terms = recurrence::sequence_terms(seq, offset, count);
  BFile f;
  f.entries.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    f.entries.push_back({offset + static_cast<std::int64_t>(i), terms[i].value()});
  }
  return format_bfile(f);
}

const std::vector<CrossCheckRule>& caption_rules() {
  static const std::vector<CrossCheckRule> rules = {
      // s_{k,n}
      {"s1_vs_A000045", SequenceId::schreier(1), "A000045", 0, {}},
      {"s2_vs_A005314", SequenceId::schreier(2), "A005314", 0, {}},
      {"s3_vs_A385106", SequenceId::schreier(3), "A385106", 0, {}},
      {"s4_vs_A385107", SequenceId::schreier(4), "A385107", 0, {}},
      // s^(m)_{k,n}
      {"sm1_vs_A212804", SequenceId::max_schreier(1), "A212804", -1, {}},
      {"sm2_vs_A005251", SequenceId::max_schreier(2), "A005251", -1, {}},
      {"sm3_vs_A375169", SequenceId::max_schreier(3), "A375169", 0, {}},
      {"sm4_vs_A385142", SequenceId::max_schreier(4), "A385142", 0, {}},
      // a_{k,n}
      {"a1_vs_A000045", SequenceId::padovan_like(1), "A000045", 1, {}},
      {"a2_vs_A000931", SequenceId::padovan_like(2), "A000931", 6, {}},
      {"a3_vs_A079398", SequenceId::padovan_like(3), "A079398", 3, {}},
      {"a4_vs_A103372", SequenceId::padovan_like(4), "A103372", 4, {}},
      // a^(m)_{k,n}
      {"am1_vs_A212804", SequenceId::max_padovan_like(1), "A212804", 0, {}},
      {"am2_vs_A000931", SequenceId::max_padovan_like(2), "A000931", 1, {}},
      {"am3_vs_A017817", SequenceId::max_padovan_like(3), "A017817", -2, {}},
      {"am4_vs_A017827", SequenceId::max_padovan_like(4), "A017827", -2, {}},
  };
  return rules;
}

const CrossCheckRule* find_rule(std::string_view name) {
  for (const auto& r : caption_rules()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Oeis:
      return "oeis";
    case Provenance::Definition:
      return "definition";
    case Provenance::SelfReferential:
      return "self-referential";
    case Provenance::Unknown:
      break;
  }
  return "unknown";
}

Provenance parse_provenance(std::string_view name) {
  for (Provenance p : {Provenance::Oeis, Provenance::Definition,
                       Provenance::SelfReferential}) {
    if (provenance_name(p) == name) return p;
  }
  return Provenance::Unknown;
}

bool CrossCheckReport::passed() const {
  return !rows.empty() && mismatches() == 0;
}

std::size_t CrossCheckReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(),
                    [](const CrossCheckRow& r) { return !r.match; }));
}

CrossCheckReport cross_check(const CrossCheckRule& rule, const BFile& remote,
                             Provenance provenance) {
  if (remote.empty()) throw WindowOutOfRange("remote b-file is empty");
  const std::int64_t local_first = rule.local.first_index();
  const std::int64_t remote_lo = remote.first_index() - rule.shift;
  const std::int64_t remote_hi = remote.last_index() - rule.shift;

  std::int64_t lo = std::max(local_first, remote_lo);
  std::int64_t hi = remote_hi;
  if (rule.window) {
    lo = rule.window->first;
    hi = rule.window->second;
    if (lo < local_first || lo < remote_lo || hi > remote_hi) {
      throw WindowOutOfRange("window [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] of rule " + rule.name +
                             " is not covered by both sequences");
    }
  }
  if (hi < lo) {
    throw WindowOutOfRange("rule " + rule.name + " has an empty window");
  }

  CrossCheckReport report;
  report.rule = rule.name;
  report.relation = to_string(rule.local) + "(n) = " + rule.remote + "(" +
                    shift_suffix(rule.shift) + ")";
  report.remote = rule.remote;
  report.provenance = provenance;
  report.first = lo;
  report.last = hi;

  const auto local = recurrence::sequence_terms(
      rule.local, lo, static_cast<std::size_t>(hi - lo + 1));
  report.rows.reserve(local.size());
  for (std::size_t i = 0; i < local.size(); ++i) {
    CrossCheckRow row;
    row.local_index = lo + static_cast<std::int64_t>(i);
    row.remote_index = row.local_index + rule.shift;
    row.local = local[i];
    row.remote = *remote.find(row.remote_index);
    row.match = row.local.value() == row.remote;
    report.rows.push_back(std::move(row));
  }
  return report;
}

BFile export_for_rule(const CrossCheckRule& rule, std::size_t count) {
  const std::int64_t start = std::max(rule.local.first_index(), -rule.shift);
  const auto terms = recurrence::sequence_terms(rule.local, start, count);
  BFile f{rule.remote, {}};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    f.entries.push_back(
        {start + static_cast<std::int64_t>(i) + rule.shift, terms[i].value()});
  }
  return f;
}

std::filesystem::path FixtureStore::path_for(std::string_view id) const {
  return dir_ / fixture_filename(id);
}

bool FixtureStore::contains(std::string_view id) const {
  return std::filesystem::is_regular_file(path_for(id));
}

BFile FixtureStore::load(std::string_view id) const {
  return parse_bfile(read_file(path_for(id)), std::string(id));
}

Provenance FixtureStore::provenance(std::string_view id) const {
  const auto manifest = dir_ / "manifest.json";
  if (!std::filesystem::is_regular_file(manifest)) return Provenance::Unknown;
  const auto j = nlohmann::json::parse(read_file(manifest));
  const auto it = j.find(std::string(id));
  if (it == j.end() || !it->contains("source")) return Provenance::Unknown;
  return parse_provenance(it->at("source").get<std::string>());
}

void FixtureStore::save(const BFile& file, Provenance provenance) const {
  std::filesystem::create_directories(dir_);
  write_file(path_for(file.id), format_bfile(file) + "\n");

  const auto manifest = dir_ / "manifest.json";
  nlohmann::json j = nlohmann::json::object();
  if (std::filesystem::is_regular_file(manifest)) {
    j = nlohmann::json::parse(read_file(manifest));
  }
  j[file.id]["source"] = std::string(provenance_name(provenance));
  write_file(manifest, j.dump(2) + "\n");
}

BFile fetch_bfile(std::string_view id, const FetchOptions& options) {
  if (!is_valid_id(id)) throw InvalidIdentifier(std::string(id));
  const FixtureStore store(options.fixture_dir);
  if (!options.allow_network) {
    if (!store.contains(id)) {
      throw NetworkError("no fixture for " + std::string(id) + " in " +
                         options.fixture_dir.string() +
                         " and network access is disabled");
    }
    return store.load(id);
  }

  const std::string path =
      "/" + std::string(id) + "/" + fixture_filename(id);
  httplib::Client client(options.base_url);
  client.set_follow_location(true);
  client.set_connection_timeout(options.timeout_seconds);
  client.set_read_timeout(options.timeout_seconds);
  const auto res = client.Get(path);
  if (!res) {
    throw NetworkError("GET " + options.base_url + path + " failed: " +
                       httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw HttpStatusError(res->status, options.base_url + path);
  }
  BFile file = parse_bfile(res->body, std::string(id));
  if (options.cache && !options.fixture_dir.empty()) {
    store.save(file, Provenance::Oeis);
  }
  return file;
}

}  // namespace schreier::oeis
