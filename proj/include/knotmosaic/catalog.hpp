#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/invariants.hpp"
#include "knotmosaic/pd.hpp"

namespace knotmosaic {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogEntry {
  std::string name;
  int crossing_number = 0;
  PDCode reference_pd;
};

/// Number of prime knots with exactly `c` crossings (up to mirror image,
/// Perko pair counted once), for c = 3..10; 0 otherwise.
int prime_knot_count(int crossings) noexcept;

struct CatalogOptions {
  /// Every crossing number 3..required_through must be fully present.
  /// 0 accepts any subset.
  int required_through = 10;
};

class Catalog {
 public:
  Catalog() = default;

  /// Lines "name;crossing_number;PD[...]"; '#' starts a comment line.
  static Catalog parse(std::string_view text, CatalogOptions options = {});
  static Catalog load(const std::filesystem::path& path, CatalogOptions options = {});

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const CatalogEntry* find(std::string_view name) const;
  /// FNV-1a 64 hash of the source text, as 16 hex digits.
  const std::string& content_hash() const noexcept { return content_hash_; }
  /// Entries with crossing number <= max_crossings.
  Catalog restricted(int max_crossings) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::string content_hash_;
};

std::string fnv1a64_hex(std::string_view bytes);

/// Fingerprints of every catalog entry, indexed by mirror-canonical key.
class FingerprintIndex {
 public:
  FingerprintIndex() = default;
  FingerprintIndex(const Catalog& catalog, std::vector<Fingerprint> fingerprints);

  const Catalog& catalog() const noexcept { return catalog_; }
  const std::vector<Fingerprint>& fingerprints() const noexcept { return fingerprints_; }
  /// Catalog entry indices sharing a canonical key, in catalog order.
  const std::vector<std::size_t>* lookup(const std::string& canonical_key) const;
  const std::map<std::string, std::vector<std::size_t>>& groups() const noexcept { return by_key_; }

  /// Cache text: a header line then "name;<fingerprint>" per entry.
  std::string serialize() const;
  static FingerprintIndex parse(const Catalog& catalog, std::string_view text);

 private:
  Catalog catalog_;
  std::vector<Fingerprint> fingerprints_;
  std::map<std::string, std::vector<std::size_t>> by_key_;
};

/// Computes every fingerprint. With a cache directory, reuses or writes
/// `fingerprints-<catalog hash>.txt` there.
FingerprintIndex bootstrap_fingerprints(const Catalog& catalog,
                                        const std::optional<std::filesystem::path>& cache_dir = std::nullopt);
std::filesystem::path fingerprint_cache_path(const Catalog& catalog, const std::filesystem::path& cache_dir);

enum class Verdict { Unknot, Prime, Ambiguous, Unidentified };

struct Identification {
  Verdict verdict = Verdict::Unidentified;
  /// One name for Prime, two or more for Ambiguous, empty otherwise.
  std::vector<std::string> names;

  /// "3_1", "unknot", "ambiguous:[5_1,10_132]" or "unknown".
  std::string label() const;
  friend bool operator==(const Identification&, const Identification&) = default;
};

/// Identifies a knot diagram up to mirror image.
///
/// Catalog entries whose crossing number exceeds the diagram's crossing
/// count cannot be depicted by it and are dropped from a fingerprint match.
Identification identify(const PDCode& pd, const FingerprintIndex& index);
Identification identify(const Fingerprint& fp, int diagram_crossings, const FingerprintIndex& index);

/// Groups of two or more names sharing a canonical fingerprint, each group
/// in catalog order, groups ordered by their first member.
std::vector<std::vector<std::string>> collision_report(const FingerprintIndex& index);

/// Crossing number encoded in a standard knot name ("10_139" -> 10,
/// "11a_341" -> 11); nullopt when the name does not start with digits.
std::optional<int> crossing_number_from_name(std::string_view name);

/// Orders names by crossing number, then alternating before non-alternating
/// marker, then index.
bool knot_name_less(std::string_view a, std::string_view b);

}  // namespace knotmosaic
