#ifndef QOSROUTE_EXPERIMENT_H_
#define QOSROUTE_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "qosroute/dv.h"
#include "qosroute/fitness.h"
#include "qosroute/topology.h"

namespace qosroute {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Query = std::pair<NodeId, NodeId>;

struct ExperimentConfig {
  std::size_t nodes = 64;
  std::uint64_t seed = 1;
  GenParams gen;
  std::size_t query_count = 0;
  // When set, replaces the random query draw.
  std::optional<std::vector<Query>> explicit_queries;
  double demand = 5.0;
  Weights weights;
  int infinity_metric = kDefaultInfinityMetric;
};

struct ComparisonRow {
  NodeId src = 0;
  NodeId dst = 0;
  std::optional<int> dv_hops;  // nullopt when DV reports unreachable
  Path dv_path;                // empty when unreachable
  RouteOutcome ff;
};

enum class Claim {
  kBandwidthAssurance,  // every FF route link carries the demand
  kSimplePath,          // DV and FF paths follow links and never repeat a node
  kMinHop,              // FF hops equal BFS hops on the pruned graph
  kHopDominance,        // FF hops <= DV hops when the DV path is feasible
  kRefusalSoundness,    // FF status agrees with BFS on full and pruned graphs
};

std::string_view ClaimName(Claim c);

struct Violation {
  std::size_t row = 0;
  Claim claim = Claim::kBandwidthAssurance;

  bool operator==(const Violation&) const = default;
};

// Every row lands in exactly one bucket. ff_wins, ties and ff_longer cover
// rows where both engines produced a path. dv_unreachable holds FF routes
// DV could not see because the destination lies beyond the infinity metric.
struct Summary {
  std::size_t ff_wins = 0;
  std::size_t ties = 0;
  std::size_t ff_longer = 0;
  std::size_t refusals = 0;
  std::size_t unreachable = 0;
  std::size_t dv_unreachable = 0;
  std::vector<Violation> violations;

  std::size_t total() const {
    return ff_wins + ties + ff_longer + refusals + unreachable + dv_unreachable;
  }
};

struct ComparisonReport {
  ExperimentConfig config;  // nodes reflects the topology actually used
  std::uint64_t fingerprint = 0;
  std::shared_ptr<const Topology> topology;
  std::vector<ComparisonRow> rows;
  Summary summary;
};

// Draws `count` (src, dst) pairs from rng; src != dst whenever n > 1.
std::vector<Query> DrawQueries(std::size_t n, std::size_t count, SplitMix64& rng);

// Generates the topology from (nodes, gen, seed), converges DV once, then runs
// every query through both engines. Random queries continue the generator's
// RNG stream. Throws ConfigError on invalid configuration.
ComparisonReport RunComparison(const ExperimentConfig& cfg);

// Same, on a supplied topology. Random queries come from a fresh stream
// seeded with cfg.seed.
ComparisonReport RunComparison(const ExperimentConfig& cfg, const Topology& t);

// Re-checks every row against BFS oracles on `t` and its pruned subgraph.
// At most one violation per (row, claim), ordered by row then claim.
std::vector<Violation> VerifyClaims(const ComparisonReport& report,
                                    const Topology& t);

}  // namespace qosroute

#endif  // QOSROUTE_EXPERIMENT_H_
