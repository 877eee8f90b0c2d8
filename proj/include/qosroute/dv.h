#ifndef QOSROUTE_DV_H_
#define QOSROUTE_DV_H_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qosroute/topology.h"

namespace qosroute {

// Internal inconsistency in the distance-vector engine, e.g. a next-hop cycle
// on converged tables.
class DvError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kDefaultInfinityMetric = 16;

// Per-node distance vectors with hop-count metric. Metrics that reach
// infinity_metric are stored as "unreachable" and carry no next hop.
class DvState {
 public:
  // Initial tables: 0 to self, 1 to each neighbor, unreachable elsewhere.
  // Throws std::invalid_argument when infinity_metric < 2.
  DvState(std::shared_ptr<const Topology> topology, int infinity_metric);
  DvState(const Topology& topology, int infinity_metric)
      : DvState(std::make_shared<const Topology>(topology), infinity_metric) {}

  const Topology& topology() const { return *topology_; }
  std::size_t node_count() const { return n_; }
  int infinity_metric() const { return infinity_; }

  std::optional<int> distance(NodeId node, NodeId dest) const;
  std::optional<NodeId> next_hop(NodeId node, NodeId dest) const;

  // One synchronous round: every node recomputes its vector from its
  // neighbors' previous-round vectors. Ties go to the smallest neighbor id.
  // No split horizon or poisoned reverse. Returns true if any entry changed.
  bool ExchangeRound();

  // Same tables on a topology with {a,b} removed. Nothing is recomputed.
  DvState WithoutLink(NodeId a, NodeId b) const;

  bool operator==(const DvState& other) const {
    return n_ == other.n_ && infinity_ == other.infinity_ &&
           dist_ == other.dist_ && next_ == other.next_;
  }

 private:
  static constexpr NodeId kNoHop = static_cast<NodeId>(-1);
  std::size_t at(NodeId node, NodeId dest) const { return node * n_ + dest; }

  std::shared_ptr<const Topology> topology_;
  std::size_t n_;
  int infinity_;
  std::vector<int> dist_;      // == infinity_ means unreachable
  std::vector<NodeId> next_;   // kNoHop when none
};

DvState InitTables(const Topology& t, int infinity_metric = kDefaultInfinityMetric);

struct ConvergeResult {
  DvState state;
  int rounds_used = 0;   // rounds that changed at least one entry
  bool converged = false;
};

// Runs exchange rounds until a round changes nothing or max_rounds rounds have
// run. Throws std::invalid_argument when max_rounds < 1.
ConvergeResult Converge(DvState state, int max_rounds);

// Follows next hops from src to dst. nullopt when dst is unreachable from
// src. Throws DvError on a forwarding loop.
std::optional<Path> ExtractPath(const DvState& s, NodeId src, NodeId dst);

struct DvTraceEntry {
  int round = 0;
  std::optional<int> metric;  // nullopt once capped at infinity

  bool operator==(const DvTraceEntry&) const = default;
};

struct DvTrace {
  NodeId probe = 0;
  NodeId dest = 0;
  std::vector<DvTraceEntry> entries;
  bool capped = false;  // probe metric reached infinity

  bool operator==(const DvTrace&) const = default;
};

// Fails link {a,b} and records dist[probe][dest] after each synchronous
// round. Stops once the probe metric caps at infinity, once a round leaves
// every node's entry for dest unchanged, or after max_rounds rounds.
DvTrace FailLinkAndTrace(const DvState& converged, NodeId a, NodeId b,
                         NodeId probe, NodeId dest, int max_rounds);

// "round,metric" CSV; capped metrics print as INF.
std::string WriteTraceCsv(const DvTrace& trace);

}  // namespace qosroute

#endif  // QOSROUTE_DV_H_
