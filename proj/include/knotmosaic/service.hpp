#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/catalog.hpp"
#include "knotmosaic/pipeline.hpp"

namespace knotmosaic {

struct ServiceConfig {
  std::string bind_address = "127.0.0.1";
  int port = 8080;
  /// Largest accepted mosaic; bigger requests get 413.
  int max_n = 12;
  /// Served at "/" when set.
  std::optional<std::filesystem::path> static_dir;
};

/// Read-only HTTP API over an immutable catalog index and hit store.
///
///   POST /api/identify              {"n":4,"cells":[[...],...]}
///   GET  /api/catalog?knot=3_1[&realize=mosaic|tile|crossing]
///   GET  /api/tiles
class Service {
 public:
  struct Response {
    int status = 200;
    std::string body;
  };

  Service(FingerprintIndex index, const std::vector<KnotHit>& store, ServiceConfig config = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  Response identify(std::string_view body) const;
  Response catalog(std::string_view knot, std::string_view realize = {}) const;
  Response tiles() const;

  /// Binds config.bind_address:config.port (0 picks a free port) and returns
  /// the bound port, or -1 on failure.
  int bind();
  /// Serves on the bound socket until stop(); blocks.
  bool serve();
  void stop();

 private:
  struct Http;
  FingerprintIndex index_;
  std::vector<SummaryRecord> summaries_;
  ServiceConfig config_;
  std::unique_ptr<Http> http_;
};

}  // namespace knotmosaic
