#include "knotmosaic/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace knotmosaic {

int prime_knot_count(int crossings) noexcept {
  switch (crossings) {
    case 3: return 1;
    case 4: return 1;
    case 5: return 2;
    case 6: return 3;
    case 7: return 7;
    case 8: return 21;
    case 9: return 49;
    case 10: return 165;
    default: return 0;
  }
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Catalog Catalog::parse(std::string_view text, CatalogOptions options) {
  Catalog cat;
  cat.content_hash_ = fnv1a64_hex(text);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      throw CatalogError("catalog line " + std::to_string(line_no) + ": " + what);
    };
    const auto s1 = line.find(';');
    const auto s2 = s1 == std::string_view::npos ? s1 : line.find(';', s1 + 1);
    if (s2 == std::string_view::npos) fail("expected name;crossing_number;PD[...]");
    CatalogEntry entry;
    entry.name = std::string(trim(line.substr(0, s1)));
    if (entry.name.empty()) fail("empty knot name");
    const std::string_view cn = trim(line.substr(s1 + 1, s2 - s1 - 1));
    auto [ptr, ec] = std::from_chars(cn.data(), cn.data() + cn.size(), entry.crossing_number);
    if (ec != std::errc() || ptr != cn.data() + cn.size() || entry.crossing_number < 0) fail("bad crossing number");
    try {
      entry.reference_pd = parse_pd(trim(line.substr(s2 + 1)));
    } catch (const InvalidPDError& e) {
      fail(std::string(e.what()) + " (" + entry.name + ")");
    }
    if (entry.reference_pd.crossing_count() != entry.crossing_number) {
      fail("PD of " + entry.name + " has " + std::to_string(entry.reference_pd.crossing_count()) +
           " crossings, expected " + std::to_string(entry.crossing_number));
    }
    if (entry.reference_pd.component_count() != 1) fail("PD of " + entry.name + " is not a knot");
    if (cat.by_name_.contains(entry.name)) fail("duplicate knot name " + entry.name);
    cat.by_name_.emplace(entry.name, cat.entries_.size());
    cat.entries_.push_back(std::move(entry));
  }
  for (int c = 3; c <= options.required_through; ++c) {
    const auto have = std::count_if(cat.entries_.begin(), cat.entries_.end(),
                                    [c](const CatalogEntry& e) { return e.crossing_number == c; });
    if (have != prime_knot_count(c)) {
      throw CatalogError("catalog has " + std::to_string(have) + " knots with " + std::to_string(c) +
                         " crossings, expected " + std::to_string(prime_knot_count(c)));
    }
  }
  return cat;
}

Catalog Catalog::load(const std::filesystem::path& path, CatalogOptions options) {
  return parse(read_file(path), options);
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &entries_[it->second];
}

Catalog Catalog::restricted(int max_crossings) const {
  Catalog out;
  out.content_hash_ = content_hash_ + "-c" + std::to_string(max_crossings);
  for (const CatalogEntry& e : entries_) {
    if (e.crossing_number > max_crossings) continue;
    out.by_name_.emplace(e.name, out.entries_.size());
    out.entries_.push_back(e);
  }
  return out;
}

FingerprintIndex::FingerprintIndex(const Catalog& catalog, std::vector<Fingerprint> fingerprints)
    : catalog_(catalog), fingerprints_(std::move(fingerprints)) {
  if (fingerprints_.size() != catalog_.size()) throw CatalogError("one fingerprint per catalog entry required");
  for (std::size_t i = 0; i < fingerprints_.size(); ++i) by_key_[fingerprints_[i].canonical_key()].push_back(i);
}

const std::vector<std::size_t>* FingerprintIndex::lookup(const std::string& canonical_key) const {
  auto it = by_key_.find(canonical_key);
  return it == by_key_.end() ? nullptr : &it->second;
}

namespace {

constexpr std::string_view kCacheMagic = "# knot-mosaic fingerprint cache v1";

}  // namespace

std::string FingerprintIndex::serialize() const {
  std::string out(kCacheMagic);
  out += "; catalog " + catalog_.content_hash() + "; jones exponents x4\n";
  for (std::size_t i = 0; i < fingerprints_.size(); ++i) {
    out += catalog_.entries()[i].name + ";" + fingerprints_[i].serialize() + "\n";
  }
  return out;
}

FingerprintIndex FingerprintIndex::parse(const Catalog& catalog, std::string_view text) {
  const std::string header = std::string(kCacheMagic) + "; catalog " + catalog.content_hash() + ";";
  if (text.substr(0, header.size()) != header) throw CatalogError("fingerprint cache does not match catalog");
  std::vector<Fingerprint> fps;
  std::size_t pos = text.find('\n');
  while (pos != std::string_view::npos && pos + 1 < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos + 1), text.size());
    std::string_view line = text.substr(pos + 1, end - pos - 1);
    pos = end == text.size() ? std::string_view::npos : end;
    if (line.empty()) continue;
    const auto semi = line.find(';');
    const std::size_t i = fps.size();
    if (semi == std::string_view::npos || i >= catalog.size() || line.substr(0, semi) != catalog.entries()[i].name) {
      throw CatalogError("fingerprint cache entry " + std::to_string(i + 1) + " does not match catalog");
    }
    fps.push_back(Fingerprint::parse(line.substr(semi + 1)));
  }
  return FingerprintIndex(catalog, std::move(fps));
}

std::filesystem::path fingerprint_cache_path(const Catalog& catalog, const std::filesystem::path& cache_dir) {
  return cache_dir / ("fingerprints-" + catalog.content_hash() + ".txt");
}

FingerprintIndex bootstrap_fingerprints(const Catalog& catalog, const std::optional<std::filesystem::path>& cache_dir) {
  if (cache_dir) {
    const auto path = fingerprint_cache_path(catalog, *cache_dir);
    if (std::filesystem::exists(path)) {
      try {
        return FingerprintIndex::parse(catalog, read_file(path));
      } catch (const std::exception&) {
        // Stale or corrupt cache: rebuild below.
      }
    }
  }
  std::vector<Fingerprint> fps;
  fps.reserve(catalog.size());
  for (const CatalogEntry& e : catalog.entries()) {
    try {
      fps.push_back(fingerprint(e.reference_pd));
    } catch (const std::exception& ex) {
      throw CatalogError("fingerprint of " + e.name + " failed: " + ex.what());
    }
  }
  FingerprintIndex index(catalog, std::move(fps));
  if (cache_dir) {
    std::filesystem::create_directories(*cache_dir);
    const auto path = fingerprint_cache_path(catalog, *cache_dir);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      out << index.serialize();
    }
    std::filesystem::rename(tmp, path);
  }
  return index;
}

std::string Identification::label() const {
  switch (verdict) {
    case Verdict::Unknot: return "unknot";
    case Verdict::Prime: return names.front();
    case Verdict::Ambiguous: {
      std::string out = "ambiguous:[";
      for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
      return out + "]";
    }
    case Verdict::Unidentified: return "unknown";
  }
  return "unknown";
}

Identification identify(const Fingerprint& fp, int diagram_crossings, const FingerprintIndex& index) {
  if (fp.is_unknot()) return {Verdict::Unknot, {}};
  const auto* group = index.lookup(fp.canonical_key());
  if (group == nullptr) return {Verdict::Unidentified, {}};
  std::vector<std::string> names;
  for (std::size_t i : *group) {
    const CatalogEntry& e = index.catalog().entries()[i];
    if (e.crossing_number <= diagram_crossings) names.push_back(e.name);
  }
  if (names.empty()) return {Verdict::Unidentified, {}};
  if (names.size() == 1) return {Verdict::Prime, std::move(names)};
  return {Verdict::Ambiguous, std::move(names)};
}

Identification identify(const PDCode& pd, const FingerprintIndex& index) {
  if (pd.empty()) return {Verdict::Unknot, {}};
  return identify(fingerprint(pd), pd.crossing_count(), index);
}

std::vector<std::vector<std::string>> collision_report(const FingerprintIndex& index) {
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& [key, members] : index.groups())
    if (members.size() >= 2) groups.push_back(members);
  std::sort(groups.begin(), groups.end());
  std::vector<std::vector<std::string>> out;
  for (const auto& g : groups) {
    std::vector<std::string> names;
    for (std::size_t i : g) names.push_back(index.catalog().entries()[i].name);
    out.push_back(std::move(names));
  }
  return out;
}

std::optional<int> crossing_number_from_name(std::string_view name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
  if (ec != std::errc() || ptr == name.data()) return std::nullopt;
  return value;
}

namespace {

struct NameKey {
  int crossings = 0;
  std::string family;  // "", "a" or "n"
  int index = 0;
  std::string rest;
  auto operator<=>(const NameKey&) const = default;
};

NameKey name_key(std::string_view name) {
  NameKey k;
  const auto c = crossing_number_from_name(name);
  if (!c) {
    k.crossings = 1 << 30;
    k.rest = std::string(name);
    return k;
  }
  k.crossings = *c;
  std::size_t i = 0;
  while (i < name.size() && name[i] >= '0' && name[i] <= '9') ++i;
  while (i < name.size() && name[i] != '_') k.family += name[i++];
  if (i < name.size()) ++i;
  std::string_view idx = name.substr(i);
  auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), k.index);
  if (ec != std::errc()) k.index = 0;
  k.rest = std::string(idx.substr(static_cast<std::size_t>(ptr - idx.data())));
  return k;
}

}  // namespace

bool knot_name_less(std::string_view a, std::string_view b) {
  const NameKey ka = name_key(a);
  const NameKey kb = name_key(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

}  // namespace knotmosaic
