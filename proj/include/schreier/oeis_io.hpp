#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schreier/core.hpp"

// OEIS b-file reading and writing, and comparison of the local sequences
// against OEIS entries.
namespace schreier::oeis {

/// 'A' followed by exactly six digits.
bool is_valid_id(std::string_view id);

/// "A000045" -> "b000045.txt". Throws InvalidIdentifier.
std::string fixture_filename(std::string_view id);

struct BEntry {
  std::int64_t index = 0;
  Int value;

  friend bool operator==(const BEntry&, const BEntry&) = default;
};

/// Entries have contiguous ascending indices.
struct BFile {
  std::string id;  // empty when unknown
  std::vector<BEntry> entries;

  bool empty() const { return entries.empty(); }
  std::int64_t first_index() const { return entries.front().index; }
  std::int64_t last_index() const { return entries.back().index; }
  /// Value at `index`, if covered.
  const Int* find(std::int64_t index) const;
};

/// Parses "index value" lines. Blank lines and lines starting with '#' are
/// skipped. Throws ParseError or NonContiguousIndex (with line numbers), and
/// InvalidIdentifier when a nonempty `id` is malformed.
BFile parse_bfile(std::string_view text, std::string id = {});

/// Serialises entries as "index value" lines joined by '\n', with no
/// newline after the last line.
std::string format_bfile(const BFile& file);

/// `count` terms of `seq` starting at index `offset`, in b-file format.
std::string write_bfile(const SequenceId& seq, std::int64_t offset,
                        std::size_t count);

/// One caption identification: local(n) == remote(n + shift).
struct CrossCheckRule {
  std::string name;
  SequenceId local;
  std::string remote;
  std::int64_t shift = 0;
  /// Inclusive local-index window; derived from the remote b-file when unset.
  std::optional<std::pair<std::int64_t, std::int64_t>> window;
};

/// The caption identifications of all four tables.
const std::vector<CrossCheckRule>& caption_rules();
const CrossCheckRule* find_rule(std::string_view name);

/// Where a fixture's values came from.
enum class Provenance {
  Unknown,
  Oeis,             // downloaded from oeis.org
  Definition,       // generated from the sequence's OEIS definition
  SelfReferential,  // generated by this library
};

std::string_view provenance_name(Provenance p);
Provenance parse_provenance(std::string_view name);

struct CrossCheckRow {
  std::int64_t local_index = 0;
  std::int64_t remote_index = 0;
  Nat local;
  Int remote;
  bool match = false;
};

struct CrossCheckReport {
  std::string rule;
  std::string relation;  // e.g. "a_2(n) = A000931(n+6)"
  std::string remote;
  Provenance provenance = Provenance::Unknown;
  std::int64_t first = 0;  // local window
  std::int64_t last = 0;
  std::vector<CrossCheckRow> rows;

  bool passed() const;
  std::size_t mismatches() const;
  bool self_referential() const {
    return provenance == Provenance::SelfReferential;
  }
};

/// Compares the local sequence with `remote` over the rule's window. Throws
/// WindowOutOfRange if the window is empty or not covered by both sides.
CrossCheckReport cross_check(const CrossCheckRule& rule, const BFile& remote,
                             Provenance provenance = Provenance::Unknown);

/// b-file named by the rule's remote id, re-indexed into remote indices:
/// entries remote(n + shift) = local(n) for `count` local indices starting
/// at the local sequence's first usable index.
BFile export_for_rule(const CrossCheckRule& rule, std::size_t count);

/// One b-file per identifier plus a manifest.json recording provenance.
class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::string_view id) const;
  bool contains(std::string_view id) const;

  /// Throws InvalidIdentifier, ParseError, or std::runtime_error if the file
  /// cannot be read.
  BFile load(std::string_view id) const;
  Provenance provenance(std::string_view id) const;

  void save(const BFile& file, Provenance provenance) const;

 private:
  std::filesystem::path dir_;
};

struct FetchOptions {
  std::filesystem::path fixture_dir;
  bool allow_network = false;
  std::string base_url = "https://oeis.org";
  bool cache = true;
  int timeout_seconds = 20;
};

/// Offline: served from the fixture directory. With allow_network the
/// b-file is downloaded from base_url/Annnnnn/bnnnnnn.txt and cached.
/// The identifier is validated before any I/O. Throws InvalidIdentifier,
/// NetworkError, HttpStatusError, ParseError.
BFile fetch_bfile(std::string_view id, const FetchOptions& options);

}  // namespace schreier::oeis
