#include "knotmosaic/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "knotmosaic/trace.hpp"

namespace knotmosaic {

KnotHit KnotHit::make(std::string name, MosaicGrid grid, std::string layout_id) {
  KnotHit hit;
  hit.name = std::move(name);
  hit.nonblank = nonblank_count(grid);
  hit.crossings = crossing_count(grid);
  hit.grid = std::move(grid);
  hit.layout_id = std::move(layout_id);
  return hit;
}

std::string format_hit(const KnotHit& hit) {
  return hit.name + ";" + std::to_string(hit.mosaic_size()) + ";" + std::to_string(hit.nonblank) + ";" +
         std::to_string(hit.crossings) + ";" + hit.layout_id + ";" + serialize_matrix_inline(hit.grid);
}

KnotHit parse_hit(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (int i = 0; i < 5; ++i) {
    const auto semi = line.find(';', pos);
    if (semi == std::string_view::npos) throw ParseError("store record needs 6 ';' separated fields");
    fields.push_back(line.substr(pos, semi - pos));
    pos = semi + 1;
  }
  fields.push_back(line.substr(pos));
  auto number = [](std::string_view s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(std::string("bad ") + what + " in store record");
    return v;
  };
  KnotHit hit = KnotHit::make(std::string(fields[0]), parse_matrix(fields[5]), std::string(fields[4]));
  if (number(fields[1], "size") != hit.mosaic_size() || number(fields[2], "nonblank count") != hit.nonblank ||
      number(fields[3], "crossing count") != hit.crossings) {
    throw ParseError("store record counts do not match its grid");
  }
  return hit;
}

std::vector<KnotHit> load_store(const std::filesystem::path& path) {
  std::vector<KnotHit> hits;
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return hits;
    throw std::runtime_error("cannot read store " + path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      hits.push_back(parse_hit(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return hits;
}

std::size_t append_to_store(const std::filesystem::path& path, const std::vector<KnotHit>& hits) {
  std::unordered_set<std::string> seen;
  for (const KnotHit& h : load_store(path)) seen.insert(serialize_matrix_inline(h.grid));
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot write store " + path.string());
  std::size_t written = 0;
  for (const KnotHit& h : hits) {
    if (!seen.insert(serialize_matrix_inline(h.grid)).second) continue;
    out << format_hit(h) << '\n';
    ++written;
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing store " + path.string());
  return written;
}

RunStats& RunStats::operator+=(const RunStats& o) noexcept {
  enumerated += o.enumerated;
  links += o.links;
  unknots += o.unknots;
  unidentified += o.unidentified;
  ambiguous += o.ambiguous;
  prime_hits += o.prime_hits;
  return *this;
}

namespace {

void classify(const MosaicGrid& grid, const std::string& layout_id, const FingerprintIndex& index, LayoutRun& run) {
  ++run.stats.enumerated;
  const TraceResult t = trace(grid);
  if (t.kind == TraceKind::Link) {
    ++run.stats.links;
    return;
  }
  if (t.kind == TraceKind::NoCrossings) {
    ++run.stats.unknots;
    return;
  }
  const Identification id = identify(to_pd(t), index);
  switch (id.verdict) {
    case Verdict::Unknot: ++run.stats.unknots; break;
    case Verdict::Unidentified: ++run.stats.unidentified; break;
    case Verdict::Ambiguous:
      ++run.stats.ambiguous;
      ++run.ambiguous[id.label()];
      break;
    case Verdict::Prime:
      ++run.stats.prime_hits;
      run.hits.push_back(KnotHit::make(id.names.front(), grid, layout_id));
      break;
  }
}

void merge_into(LayoutRun& total, LayoutRun&& part) {
  total.stats += part.stats;
  for (auto& h : part.hits) total.hits.push_back(std::move(h));
  for (const auto& [label, n] : part.ambiguous) total.ambiguous[label] += n;
}

bool hit_order(const KnotHit& a, const KnotHit& b) { return format_hit(a) < format_hit(b); }

}  // namespace

LayoutRun run_layout(const Layout& layout, const FingerprintIndex& index, int min_crossings, int shard_index,
                     int shard_total, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  // Worker j takes prefixes congruent to shard_index + shard_total * j modulo
  // shard_total * jobs, which partitions this shard's prefixes.
  std::vector<LayoutRun> parts(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  auto work = [&](int j) {
    try {
      FillEnumerator fills(layout, min_crossings, shard_index + shard_total * j, shard_total * jobs);
      while (fills.next()) classify(fills.grid(), layout.id(), index, parts[static_cast<std::size_t>(j)]);
    } catch (...) {
      errors[static_cast<std::size_t>(j)] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(work, j);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  LayoutRun total;
  for (auto& p : parts) merge_into(total, std::move(p));
  std::sort(total.hits.begin(), total.hits.end(), hit_order);
  return total;
}

namespace {

struct Checkpoint {
  std::string layout_id;
  int min_crossings = 0;
  int shard_index = 0;
  int shard_total = 1;
  std::uint64_t next_prefix = 0;
};

std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Checkpoint c;
  if (!(in >> c.layout_id >> c.min_crossings >> c.shard_index >> c.shard_total >> c.next_prefix)) {
    throw std::runtime_error("malformed checkpoint " + path.string());
  }
  return c;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << c.layout_id << ' ' << c.min_crossings << ' ' << c.shard_index << ' ' << c.shard_total << ' '
        << c.next_prefix << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

RunStats run_pipeline(const RunConfig& config) {
  const Layout layout = load_layout_file(config.layout_path.string());
  const Catalog catalog = Catalog::load(config.catalog_path);
  const FingerprintIndex index = bootstrap_fingerprints(catalog, config.fingerprint_cache_dir);
  if (config.min_crossings < 0) throw std::invalid_argument("minimum crossing count must be non-negative");

  if (!config.checkpoint_path) {
    LayoutRun run = run_layout(layout, index, config.min_crossings, config.shard_index, config.shard_total,
                               config.jobs);
    append_to_store(config.store_path, run.hits);
    return run.stats;
  }

  if (config.jobs != 1) throw std::invalid_argument("checkpointed runs use a single job");
  Checkpoint cp{layout.id(), config.min_crossings, config.shard_index, config.shard_total, 0};
  if (auto prev = read_checkpoint(*config.checkpoint_path)) {
    if (prev->layout_id != cp.layout_id || prev->min_crossings != cp.min_crossings ||
        prev->shard_index != cp.shard_index || prev->shard_total != cp.shard_total) {
      throw std::runtime_error("checkpoint belongs to a different run configuration");
    }
    cp.next_prefix = prev->next_prefix;
  }
  LayoutRun run;
  FillEnumerator fills(layout, config.min_crossings, config.shard_index, config.shard_total, cp.next_prefix);
  std::uint64_t current = cp.next_prefix;
  std::uint64_t since_flush = 0;
  auto flush = [&](std::uint64_t next_prefix) {
    std::sort(run.hits.begin(), run.hits.end(), hit_order);
    append_to_store(config.store_path, run.hits);
    run.hits.clear();
    cp.next_prefix = next_prefix;
    write_checkpoint(*config.checkpoint_path, cp);
  };
  while (fills.next()) {
    if (fills.prefix_index() != current) {
      current = fills.prefix_index();
      if (++since_flush >= config.checkpoint_every) {
        flush(current);
        since_flush = 0;
      }
    }
    classify(fills.grid(), layout.id(), index, run);
  }
  flush(fills.plan().prefix_count());
  return run.stats;
}

std::vector<SummaryRecord> best_per_knot(const std::vector<KnotHit>& hits) {
  std::map<std::string, SummaryRecord> by_name;
  auto grid_less = [](const KnotHit& a, const KnotHit& b) {
    return serialize_matrix_inline(a.grid) < serialize_matrix_inline(b.grid);
  };
  for (const KnotHit& h : hits) {
    auto [it, fresh] = by_name.try_emplace(h.name);
    SummaryRecord& r = it->second;
    const int n = h.mosaic_size();
    if (fresh) {
      r.name = h.name;
      r.min_nonblank = h.nonblank;
      r.min_crossings = h.crossings;
      r.mosaic_size = n;
      r.tile_minimal_size = n;
      r.fewest_tiles = r.fewest_crossings = r.smallest_mosaic = h;
      r.min_nonblank_by_size[n] = h.nonblank;
      continue;
    }
    auto [size_it, new_size] = r.min_nonblank_by_size.try_emplace(n, h.nonblank);
    if (!new_size) size_it->second = std::min(size_it->second, h.nonblank);
    r.min_nonblank = std::min(r.min_nonblank, h.nonblank);
    r.min_crossings = std::min(r.min_crossings, h.crossings);
    r.mosaic_size = std::min(r.mosaic_size, n);

    const KnotHit& t = r.fewest_tiles;
    if (std::tuple(h.nonblank, n) < std::tuple(t.nonblank, t.mosaic_size()) ||
        (std::tuple(h.nonblank, n) == std::tuple(t.nonblank, t.mosaic_size()) && grid_less(h, t))) {
      r.fewest_tiles = h;
    }
    const KnotHit& c = r.fewest_crossings;
    if (std::tuple(h.crossings, h.nonblank) < std::tuple(c.crossings, c.nonblank) ||
        (std::tuple(h.crossings, h.nonblank) == std::tuple(c.crossings, c.nonblank) && grid_less(h, c))) {
      r.fewest_crossings = h;
    }
    const KnotHit& s = r.smallest_mosaic;
    if (std::tuple(n, h.nonblank) < std::tuple(s.mosaic_size(), s.nonblank) ||
        (std::tuple(n, h.nonblank) == std::tuple(s.mosaic_size(), s.nonblank) && grid_less(h, s))) {
      r.smallest_mosaic = h;
    }
  }
  std::vector<SummaryRecord> out;
  out.reserve(by_name.size());
  for (auto& [name, r] : by_name) {
    r.tile_minimal_size = r.fewest_tiles.mosaic_size();
    const auto c = crossing_number_from_name(r.name);
    r.crossing_number_realized = c && *c == r.min_crossings;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const SummaryRecord& a, const SummaryRecord& b) { return knot_name_less(a.name, b.name); });
  return out;
}

LayoutComparison compare_layouts(const std::vector<KnotHit>& a, const std::vector<KnotHit>& b) {
  std::set<std::string> na, nb;
  for (const KnotHit& h : a) na.insert(h.name);
  for (const KnotHit& h : b) nb.insert(h.name);
  LayoutComparison out;
  for (const auto& n : na) (nb.contains(n) ? out.both : out.only_a).push_back(n);
  for (const auto& n : nb)
    if (!na.contains(n)) out.only_b.push_back(n);
  for (auto* v : {&out.only_a, &out.only_b, &out.both}) std::sort(v->begin(), v->end(), knot_name_less);
  return out;
}

std::string report_table(const std::vector<SummaryRecord>& summaries) {
  if (summaries.empty()) throw std::invalid_argument("no knots to report");
  std::map<std::pair<int, int>, std::vector<const SummaryRecord*>> rows;
  for (const SummaryRecord& r : summaries) rows[{r.mosaic_size, r.min_nonblank}].push_back(&r);
  bool any_mark = false;
  std::ostringstream out;
  out << "mosaic_number\ttile_number\tknots\n";
  for (auto& [key, records] : rows) {
    std::sort(records.begin(), records.end(),
              [](const SummaryRecord* a, const SummaryRecord* b) { return knot_name_less(a->name, b->name); });
    out << key.first << '\t' << key.second << '\t';
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (i > 0) out << ", ";
      out << records[i]->name;
      if (records[i]->tile_minimal_size > records[i]->mosaic_size) {
        out << '*';
        any_mark = true;
      }
    }
    out << '\n';
  }
  if (any_mark) out << "* tile number realized on a larger mosaic than the mosaic number\n";
  return out.str();
}

std::vector<VerifyFailure> verify_store(const std::vector<KnotHit>& hits, const FingerprintIndex& index) {
  std::vector<VerifyFailure> failures;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::string derived;
    try {
      const TraceResult t = trace(hits[i].grid);
      derived = t.kind == TraceKind::Link ? std::string("link") : identify(to_pd(t), index).label();
    } catch (const std::exception& e) {
      derived = std::string("error: ") + e.what();
    }
    if (derived != hits[i].name) failures.push_back({i + 1, hits[i].name, derived});
  }
  return failures;
}

}  // namespace knotmosaic
