#include "qosroute/report.h"

#include <cstdio>

#include "json.hpp"

namespace qosroute {

namespace {

constexpr const char* kNoBandwidth = "No sufficient bandwidth available";

std::string Hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::json RangeJson(const Range& r) { return nlohmann::json::array({r.min, r.max}); }

}  // namespace

std::string FormatPath(const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += "->";
    out += std::to_string(path[i]);
  }
  return out;
}

std::string RenderTable(const ComparisonReport& report, Engine which) {
  std::string out = which == Engine::kDv ? "Distance vector Algorithm"
                                         : "Fitness function estimation result";
  out += "\tSource\tDestination\tHop count\tPath\n";
  for (const auto& row : report.rows) {
    std::string hops = "-";
    std::string path;
    if (which == Engine::kDv) {
      if (row.dv_hops) {
        hops = std::to_string(*row.dv_hops);
        path = FormatPath(row.dv_path);
      } else {
        path = "Unreachable";
      }
    } else {
      switch (row.ff.status) {
        case RouteStatus::kRoute:
          hops = std::to_string(row.ff.hops);
          path = FormatPath(row.ff.path);
          break;
        case RouteStatus::kNoSufficientBandwidth:
          path = kNoBandwidth;
          break;
        case RouteStatus::kUnreachable:
          path = "Unreachable";
          break;
      }
    }
    out += "\t" + std::to_string(row.src) + "\t" + std::to_string(row.dst) +
           "\t" + hops + "\t" + path + "\n";
  }
  return out;
}

std::string RenderSummary(const ComparisonReport& report) {
  const Summary& s = report.summary;
  std::string out = "topology n=" + std::to_string(report.config.nodes) +
                    " links=" +
                    std::to_string(report.topology ? report.topology->links().size() : 0) +
                    " fingerprint=" + Hex64(report.fingerprint) + "\n";
  out += "queries=" + std::to_string(report.rows.size()) +
         " ff_wins=" + std::to_string(s.ff_wins) +
         " ties=" + std::to_string(s.ties) +
         " ff_longer=" + std::to_string(s.ff_longer) +
         " refusals=" + std::to_string(s.refusals) +
         " unreachable=" + std::to_string(s.unreachable) +
         " dv_unreachable=" + std::to_string(s.dv_unreachable) +
         " violations=" + std::to_string(s.violations.size()) + "\n";
  for (const auto& v : s.violations) {
    out += "violation row=" + std::to_string(v.row) + " claim=" +
           std::string(ClaimName(v.claim)) + "\n";
  }
  return out;
}

std::string EmitPlotSeries(const ComparisonReport& report) {
  std::string out = "query,src,dst,dv_hops,ff_hops,ff_status\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    out += std::to_string(i + 1) + "," + std::to_string(row.src) + "," +
           std::to_string(row.dst) + "," +
           (row.dv_hops ? std::to_string(*row.dv_hops) : "") + "," +
           (row.ff.is_route() ? std::to_string(row.ff.hops) : "") + "," +
           std::string(StatusName(row.ff.status)) + "\n";
  }
  return out;
}

std::string ToJson(const ComparisonReport& report) {
  using nlohmann::json;
  const ExperimentConfig& c = report.config;

  json config = {
      {"nodes", c.nodes},
      {"seed", c.seed},
      {"edge_prob", c.gen.edge_prob},
      {"bandwidth", RangeJson(c.gen.bandwidth)},
      {"delay", RangeJson(c.gen.delay)},
      {"jitter", RangeJson(c.gen.jitter)},
      {"loss", RangeJson(c.gen.loss)},
      {"query_count", c.query_count},
      {"demand", c.demand},
      {"weights", {{"delay", c.weights.delay},
                   {"jitter", c.weights.jitter},
                   {"loss", c.weights.loss}}},
      {"infinity_metric", c.infinity_metric},
  };
  if (c.explicit_queries) {
    json qs = json::array();
    for (const auto& [s, d] : *c.explicit_queries) qs.push_back({s, d});
    config["queries"] = std::move(qs);
  } else {
    config["queries"] = nullptr;
  }

  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = {
        {"src", row.src},
        {"dst", row.dst},
        {"dv_hops", row.dv_hops ? json(*row.dv_hops) : json(nullptr)},
        {"dv_path", row.dv_path},
        {"ff_status", StatusName(row.ff.status)},
    };
    if (row.ff.is_route()) {
      r["ff_hops"] = row.ff.hops;
      r["ff_path"] = row.ff.path;
      r["ff_cost"] = row.ff.cost;
      r["ff_fitness"] = row.ff.fitness;
    } else {
      r["ff_hops"] = nullptr;
      r["ff_path"] = json::array();
      r["ff_cost"] = nullptr;
      r["ff_fitness"] = nullptr;
    }
    rows.push_back(std::move(r));
  }

  const Summary& s = report.summary;
  json violations = json::array();
  for (const auto& v : s.violations)
    violations.push_back({{"row", v.row}, {"claim", ClaimName(v.claim)}});

  json doc = {
      {"config", std::move(config)},
      {"fingerprint", Hex64(report.fingerprint)},
      {"rows", std::move(rows)},
      {"summary", {{"ff_wins", s.ff_wins},
                   {"ties", s.ties},
                   {"ff_longer", s.ff_longer},
                   {"refusals", s.refusals},
                   {"unreachable", s.unreachable},
                   {"dv_unreachable", s.dv_unreachable},
                   {"violations", std::move(violations)}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace qosroute
