// knot-mosaic: enumerate, identify and report knot mosaics.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "knotmosaic/catalog.hpp"
#include "knotmosaic/describe.hpp"
#include "knotmosaic/layout.hpp"
#include "knotmosaic/pipeline.hpp"
#include "knotmosaic/service.hpp"

namespace km = knotmosaic;

namespace {

const std::string kDefaultCatalog = std::string(KNOTMOSAIC_DATA_DIR) + "/catalog/prime_knots_10.txt";

km::FingerprintIndex load_index(const std::string& catalog_path, const std::string& cache_dir) {
  const km::Catalog catalog = km::Catalog::load(catalog_path);
  std::optional<std::filesystem::path> cache;
  if (!cache_dir.empty()) cache = cache_dir;
  return km::bootstrap_fingerprints(catalog, cache);
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_stats(const km::RunStats& s) {
  std::cout << "enumerated\t" << s.enumerated << "\n"
            << "links\t" << s.links << "\n"
            << "unknots\t" << s.unknots << "\n"
            << "unidentified\t" << s.unidentified << "\n"
            << "ambiguous\t" << s.ambiguous << "\n"
            << "prime_hits\t" << s.prime_hits << "\n";
}

void print_names(const char* label, const std::vector<std::string>& names) {
  std::cout << label << "\t" << names.size() << "\t";
  for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? " " : "") << names[i];
  std::cout << "\n";
}

km::Service* g_service = nullptr;

void handle_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot mosaic enumeration and identification"};
  app.require_subcommand(1);

  std::string catalog_path = kDefaultCatalog;
  std::string cache_dir;

  km::RunConfig run;
  std::string layout_path, out_path;
  auto* run_cmd = app.add_subcommand("run", "Enumerate a layout shard and append prime hits to a store");
  run_cmd->add_option("--layout", layout_path, "Layout file ('*' marks wildcards)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--min-crossings", run.min_crossings, "Minimum crossings among wildcards")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--catalog", catalog_path, "Prime knot catalog")->envname("KNOT_MOSAIC_CATALOG");
  run_cmd->add_option("--out", out_path, "Hit store to append to")->required();
  run_cmd->add_option("--shards", run.shard_total, "Total shard count")->check(CLI::PositiveNumber);
  run_cmd->add_option("--shard-index", run.shard_index, "Shard to run")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--jobs", run.jobs, "Worker threads")->check(CLI::PositiveNumber);
  std::string checkpoint;
  run_cmd->add_option("--checkpoint", checkpoint, "Checkpoint file for resumable runs");
  run_cmd->add_option("--checkpoint-every", run.checkpoint_every, "Prefixes between checkpoints")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--cache-dir", cache_dir, "Fingerprint cache directory")->envname("KNOT_MOSAIC_CACHE");

  std::string store_path;
  auto* report_cmd = app.add_subcommand("report", "Tabulate knots by mosaic number and tile number");
  report_cmd->add_option("--store", store_path, "Hit store")->required()->check(CLI::ExistingFile);

  std::string store_a, store_b;
  auto* compare_cmd = app.add_subcommand("compare", "Compare the knot sets of two stores");
  compare_cmd->add_option("--a", store_a, "First store")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("--b", store_b, "Second store")->required()->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify", "Re-trace and re-identify every stored hit");
  verify_cmd->add_option("--store", store_path, "Hit store")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--catalog", catalog_path, "Prime knot catalog")->envname("KNOT_MOSAIC_CATALOG");
  verify_cmd->add_option("--cache-dir", cache_dir, "Fingerprint cache directory")->envname("KNOT_MOSAIC_CACHE");

  std::string matrix_path;
  auto* identify_cmd = app.add_subcommand("identify", "Describe one mosaic matrix as JSON");
  identify_cmd->add_option("--matrix", matrix_path, "Matrix text file, '-' for stdin")->required();
  identify_cmd->add_option("--catalog", catalog_path, "Prime knot catalog")->envname("KNOT_MOSAIC_CATALOG");
  identify_cmd->add_option("--cache-dir", cache_dir, "Fingerprint cache directory")->envname("KNOT_MOSAIC_CACHE");

  int count_n = 0, count_m = 0;
  auto* count_cmd = app.add_subcommand("count", "Candidate count for n wildcards and m minimum crossings");
  count_cmd->add_option("n", count_n)->required()->check(CLI::Range(0, 63));
  count_cmd->add_option("m", count_m)->check(CLI::NonNegativeNumber);

  km::ServiceConfig service;
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
  serve_cmd->add_option("--bind", service.bind_address, "Bind address")->envname("KNOT_MOSAIC_BIND");
  serve_cmd->add_option("--port", service.port, "Port, 0 for any free port")->envname("KNOT_MOSAIC_PORT");
  serve_cmd->add_option("--store", store_path, "Hit store")->envname("KNOT_MOSAIC_STORE");
  serve_cmd->add_option("--catalog", catalog_path, "Prime knot catalog")->envname("KNOT_MOSAIC_CATALOG");
  serve_cmd->add_option("--max-n", service.max_n, "Largest accepted mosaic")
      ->envname("KNOT_MOSAIC_MAX_N")
      ->check(CLI::PositiveNumber);
  serve_cmd->add_option("--static", static_dir, "UI bundle directory")->envname("KNOT_MOSAIC_STATIC");
  serve_cmd->add_option("--cache-dir", cache_dir, "Fingerprint cache directory")->envname("KNOT_MOSAIC_CACHE");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      run.layout_path = layout_path;
      run.store_path = out_path;
      run.catalog_path = catalog_path;
      if (!cache_dir.empty()) run.fingerprint_cache_dir = cache_dir;
      if (!checkpoint.empty()) run.checkpoint_path = checkpoint;
      print_stats(km::run_pipeline(run));
    } else if (*report_cmd) {
      std::cout << km::report_table(km::best_per_knot(km::load_store(store_path)));
    } else if (*compare_cmd) {
      const auto cmp = km::compare_layouts(km::load_store(store_a), km::load_store(store_b));
      print_names("only_a", cmp.only_a);
      print_names("only_b", cmp.only_b);
      print_names("both", cmp.both);
    } else if (*verify_cmd) {
      const auto hits = km::load_store(store_path);
      const auto failures = km::verify_store(hits, load_index(catalog_path, cache_dir));
      for (const auto& f : failures) {
        std::cout << "record " << f.record << ": stored " << f.stored << ", derived " << f.derived << "\n";
      }
      std::cout << "verified " << hits.size() - failures.size() << "/" << hits.size() << "\n";
      return failures.empty() ? 0 : 1;
    } else if (*identify_cmd) {
      const km::MosaicGrid grid = km::parse_matrix(read_all(matrix_path));
      std::cout << km::describe_mosaic(grid, load_index(catalog_path, cache_dir)).dump(2) << "\n";
    } else if (*count_cmd) {
      std::cout << km::count_candidates(count_n, count_m) << "\n";
    } else if (*serve_cmd) {
      std::vector<km::KnotHit> hits;
      if (!store_path.empty()) hits = km::load_store(store_path);
      if (!static_dir.empty()) service.static_dir = static_dir;
      km::Service server(load_index(catalog_path, cache_dir), hits, service);
      const int port = server.bind();
      if (port < 0) {
        std::cerr << "cannot bind " << service.bind_address << ":" << service.port << "\n";
        return 1;
      }
      g_service = &server;
      std::signal(SIGINT, handle_signal);
      std::signal(SIGTERM, handle_signal);
      std::cerr << "listening on " << service.bind_address << ":" << port << "\n";
      server.serve();
      g_service = nullptr;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
