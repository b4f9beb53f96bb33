#include "knotmosaic/service.hpp"

#include <httplib.h>

#include <algorithm>

#include "knotmosaic/describe.hpp"

namespace knotmosaic {

struct Service::Http {
  httplib::Server server;
};

namespace {

Service::Response json_response(int status, const nlohmann::json& body) { return {status, body.dump()}; }

Service::Response error_response(int status, const std::string& message, nlohmann::json extra = nlohmann::json::object()) {
  extra["error"] = message;
  return json_response(status, extra);
}

nlohmann::json hit_json(const KnotHit& hit, const std::vector<std::string>& realizes) {
  nlohmann::json j = grid_to_json(hit.grid);
  j["nonblank"] = hit.nonblank;
  j["crossings"] = hit.crossings;
  j["layout"] = hit.layout_id;
  j["realizes"] = realizes;
  return j;
}

}  // namespace

Service::Service(FingerprintIndex index, const std::vector<KnotHit>& store, ServiceConfig config)
    : index_(std::move(index)),
      summaries_(best_per_knot(store)),
      config_(std::move(config)),
      http_(std::make_unique<Http>()) {
  auto& server = http_->server;
  server.Post("/api/identify", [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = identify(req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
  server.Get("/api/catalog", [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = catalog(req.get_param_value("knot"), req.get_param_value("realize"));
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
  server.Get("/api/tiles", [this](const httplib::Request&, httplib::Response& res) {
    const Response r = tiles();
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
  if (config_.static_dir) server.set_mount_point("/", config_.static_dir->string());
}

Service::~Service() = default;

Service::Response Service::identify(std::string_view body) const {
  nlohmann::json request;
  try {
    request = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    return error_response(400, e.what(), {{"position", e.byte}});
  }
  if (request.is_object() && request.contains("cells") && request["cells"].is_array()) {
    const auto rows = static_cast<long long>(request["cells"].size());
    const long long n = request.contains("n") && request["n"].is_number_integer() ? request["n"].get<long long>() : rows;
    if (std::max(rows, n) > config_.max_n) {
      return error_response(413, "mosaic larger than " + std::to_string(config_.max_n) + "x" +
                                     std::to_string(config_.max_n));
    }
  }
  MosaicGrid grid;
  try {
    grid = grid_from_json(request);
  } catch (const ParseError& e) {
    return error_response(400, e.what(), {{"row", e.row()}, {"col", e.col()}});
  }
  return json_response(200, describe_mosaic(grid, index_));
}

Service::Response Service::catalog(std::string_view knot, std::string_view realize) const {
  if (!realize.empty() && realize != "mosaic" && realize != "tile" && realize != "crossing") {
    return error_response(400, "realize must be one of mosaic, tile, crossing");
  }
  auto it = std::find_if(summaries_.begin(), summaries_.end(),
                         [&](const SummaryRecord& r) { return r.name == knot; });
  if (it == summaries_.end()) return error_response(404, "no stored mosaics for knot '" + std::string(knot) + "'");
  const SummaryRecord& r = *it;

  std::vector<std::pair<const KnotHit*, std::vector<std::string>>> picks;
  auto add = [&](const KnotHit& hit, const char* what) {
    if (!realize.empty() && realize != what) return;
    for (auto& [h, tags] : picks) {
      if (*h == hit) {
        tags.emplace_back(what);
        return;
      }
    }
    picks.push_back({&hit, {what}});
  };
  add(r.smallest_mosaic, "mosaic");
  add(r.fewest_tiles, "tile");
  add(r.fewest_crossings, "crossing");

  nlohmann::json mosaics = nlohmann::json::array();
  for (const auto& [hit, tags] : picks) mosaics.push_back(hit_json(*hit, tags));
  nlohmann::json out = {{"knot", r.name},
                        {"mosaic_size", r.mosaic_size},
                        {"min_nonblank", r.min_nonblank},
                        {"min_crossings", r.min_crossings},
                        {"crossing_number_realized", r.crossing_number_realized},
                        {"mosaics", std::move(mosaics)}};
  if (const CatalogEntry* e = index_.catalog().find(r.name)) out["crossing_number"] = e->crossing_number;
  return json_response(200, out);
}

Service::Response Service::tiles() const { return json_response(200, tile_metadata()); }

int Service::bind() {
  if (config_.port == 0) return http_->server.bind_to_any_port(config_.bind_address);
  return http_->server.bind_to_port(config_.bind_address, config_.port) ? config_.port : -1;
}

bool Service::serve() { return http_->server.listen_after_bind(); }

void Service::stop() { http_->server.stop(); }

}  // namespace knotmosaic
