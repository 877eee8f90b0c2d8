#include "qosroute/experiment.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace qosroute {

std::string_view ClaimName(Claim c) {
  switch (c) {
    case Claim::kBandwidthAssurance:
      return "bandwidth_assurance";
    case Claim::kSimplePath:
      return "simple_path";
    case Claim::kMinHop:
      return "min_hop";
    case Claim::kHopDominance:
      return "hop_dominance";
    case Claim::kRefusalSoundness:
      return "refusal_soundness";
  }
  return "unknown";
}

std::vector<Query> DrawQueries(std::size_t n, std::size_t count, SplitMix64& rng) {
  std::vector<Query> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (n == 1) {
      out.emplace_back(0, 0);
      continue;
    }
    const auto src = static_cast<NodeId>(rng.Next() % n);
    const auto offset = static_cast<NodeId>(1 + rng.Next() % (n - 1));
    out.emplace_back(src, static_cast<NodeId>((src + offset) % n));
  }
  return out;
}

namespace {

void ValidateConfig(const ExperimentConfig& cfg, std::size_t n) {
  if (!(cfg.demand >= 0.0) || !std::isfinite(cfg.demand))
    throw ConfigError("demand must be finite and non-negative");
  if (cfg.infinity_metric < 2) throw ConfigError("infinity metric must be >= 2");
  try {
    cfg.weights.Validate();
  } catch (const RouteError& e) {
    throw ConfigError(e.what());
  }
  if (cfg.explicit_queries) {
    for (const auto& [s, d] : *cfg.explicit_queries) {
      if (s >= n || d >= n)
        throw ConfigError("query " + std::to_string(s) + ":" + std::to_string(d) +
                          " references a node outside 0.." + std::to_string(n - 1));
    }
  }
}

void Tally(Summary& s, const ComparisonRow& row) {
  switch (row.ff.status) {
    case RouteStatus::kNoSufficientBandwidth:
      ++s.refusals;
      return;
    case RouteStatus::kUnreachable:
      ++s.unreachable;
      return;
    case RouteStatus::kRoute:
      break;
  }
  if (!row.dv_hops) {
    ++s.dv_unreachable;
  } else if (row.ff.hops < *row.dv_hops) {
    ++s.ff_wins;
  } else if (row.ff.hops == *row.dv_hops) {
    ++s.ties;
  } else {
    ++s.ff_longer;
  }
}

ComparisonReport Run(const ExperimentConfig& cfg, const Topology& t,
                     SplitMix64& rng) {
  const std::size_t n = t.node_count();
  ValidateConfig(cfg, n);

  ComparisonReport report;
  report.config = cfg;
  report.config.nodes = n;
  report.topology = std::make_shared<const Topology>(t);
  report.fingerprint = Fingerprint(t);

  const std::vector<Query> queries =
      cfg.explicit_queries ? *cfg.explicit_queries
                           : DrawQueries(n, cfg.query_count, rng);

  auto dv = Converge(DvState(report.topology, cfg.infinity_metric),
                     static_cast<int>(n) + 1);
  if (!dv.converged) throw DvError("distance vector failed to converge");

  report.rows.reserve(queries.size());
  for (const auto& [src, dst] : queries) {
    ComparisonRow row;
    row.src = src;
    row.dst = dst;
    if (auto path = ExtractPath(dv.state, src, dst)) {
      row.dv_hops = static_cast<int>(path->size()) - 1;
      row.dv_path = std::move(*path);
    }
    row.ff = SelectRoute(t, RouteRequest{src, dst, cfg.demand, cfg.weights});
    Tally(report.summary, row);
    report.rows.push_back(std::move(row));
  }
  report.summary.violations = VerifyClaims(report, t);
  return report;
}

bool Feasible(const Topology& t, const Path& path, double demand) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    const QosLink* l = t.find_link(path[i - 1], path[i]);
    if (l == nullptr || l->bandwidth < demand) return false;
  }
  return true;
}

}  // namespace

ComparisonReport RunComparison(const ExperimentConfig& cfg) {
  if (cfg.nodes == 0) throw ConfigError("node count must be at least 1");
  try {
    cfg.gen.Validate();
  } catch (const TopologyError& e) {
    throw ConfigError(e.what());
  }
  SplitMix64 rng(cfg.seed);
  const Topology t = GenerateTopology(cfg.nodes, cfg.gen, rng);
  return Run(cfg, t, rng);
}

ComparisonReport RunComparison(const ExperimentConfig& cfg, const Topology& t) {
  SplitMix64 rng(cfg.seed);
  return Run(cfg, t, rng);
}

std::vector<Violation> VerifyClaims(const ComparisonReport& report,
                                    const Topology& t) {
  const double demand = report.config.demand;
  const Topology pruned = FeasibleSubgraph(t, demand);
  std::vector<Violation> out;

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ComparisonRow& row = report.rows[i];
    std::set<Claim> failed;
    if (!t.has_node(row.src) || !t.has_node(row.dst)) {
      failed.insert(Claim::kSimplePath);
      for (Claim c : failed) out.push_back({i, c});
      continue;
    }
    const auto full_hops = BfsHops(t, row.src)[row.dst];
    const auto pruned_hops = BfsHops(pruned, row.src)[row.dst];
    const bool ff_route = row.ff.is_route();

    // (b) both engines' paths must be simple src->dst walks along links.
    auto well_formed = [&](const Path& p) {
      return IsSimplePath(t, p) && p.front() == row.src && p.back() == row.dst;
    };
    if (row.dv_hops) {
      if (!well_formed(row.dv_path) ||
          static_cast<int>(row.dv_path.size()) - 1 != *row.dv_hops)
        failed.insert(Claim::kSimplePath);
    }
    if (ff_route && !well_formed(row.ff.path)) failed.insert(Claim::kSimplePath);

    // (a)
    if (ff_route) {
      for (std::size_t k = 1; k < row.ff.path.size(); ++k) {
        const QosLink* l = t.find_link(row.ff.path[k - 1], row.ff.path[k]);
        if (l != nullptr && l->bandwidth < demand)
          failed.insert(Claim::kBandwidthAssurance);
      }
    }

    // (c)
    if (ff_route &&
        (!pruned_hops || row.ff.hops != *pruned_hops ||
         static_cast<int>(row.ff.path.size()) - 1 != row.ff.hops))
      failed.insert(Claim::kMinHop);

    // (d)
    if (row.dv_hops && well_formed(row.dv_path) &&
        Feasible(t, row.dv_path, demand) &&
        (!ff_route || row.ff.hops > *row.dv_hops))
      failed.insert(Claim::kHopDominance);

    // (e)
    RouteStatus expected = RouteStatus::kUnreachable;
    if (pruned_hops) {
      expected = RouteStatus::kRoute;
    } else if (full_hops) {
      expected = RouteStatus::kNoSufficientBandwidth;
    }
    if (row.ff.status != expected) failed.insert(Claim::kRefusalSoundness);

    for (Claim c : failed) out.push_back({i, c});
  }
  return out;
}

}  // namespace qosroute
