#ifndef QOSROUTE_TOPOLOGY_H_
#define QOSROUTE_TOPOLOGY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qosroute/rng.h"

namespace qosroute {

// Dense node index in [0, n).
using NodeId = std::uint32_t;

// Node sequence from source to destination.
using Path = std::vector<NodeId>;

// Thrown when a topology, link or query violates its invariants.
class TopologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One undirected link. Stored with a < b.
struct QosLink {
  NodeId a = 0;
  NodeId b = 0;
  double bandwidth = 1.0;  // Mbps, > 0
  double delay = 0.0;      // ms
  double jitter = 0.0;     // ms
  double loss = 0.0;       // probability in [0, 1)

  bool operator==(const QosLink&) const = default;
};

// Immutable node count plus link set. Links are kept sorted by (a, b) and
// adjacency lists are sorted by neighbor id, so every traversal over a
// Topology is deterministic.
class Topology {
 public:
  struct Adjacent {
    NodeId node;
    std::size_t link;  // index into links()
  };

  // Validates every link and canonicalizes endpoint order. Throws
  // TopologyError on n == 0, self-loops, out-of-range endpoints, duplicate
  // pairs or out-of-range attributes.
  Topology(std::size_t n, std::vector<QosLink> links);

  std::size_t node_count() const { return n_; }
  const std::vector<QosLink>& links() const { return links_; }
  const std::vector<Adjacent>& neighbors(NodeId v) const { return adj_.at(v); }

  bool has_node(NodeId v) const { return v < n_; }
  const QosLink* find_link(NodeId u, NodeId v) const;

  bool operator==(const Topology& other) const {
    return n_ == other.n_ && links_ == other.links_;
  }

 private:
  std::size_t n_;
  std::vector<QosLink> links_;
  std::vector<std::vector<Adjacent>> adj_;
};

struct Range {
  double min = 0.0;
  double max = 0.0;
};

struct GenParams {
  double edge_prob = 0.15;
  Range bandwidth{1.0, 6.0};
  Range delay{1.0, 20.0};
  Range jitter{0.0, 5.0};
  Range loss{0.0, 0.05};

  // Throws TopologyError when a range is inverted or out of its domain.
  void Validate() const;
};

// Random connected topology. Draws come from `rng`, which is left positioned
// just after the last draw so callers can keep using the same stream.
//
//   1. Fisher-Yates permutation of 0..n-1 (j = draw mod (i+1), i from n-1 down).
//   2. A link between consecutive permutation entries.
//   3. Each remaining pair (i<j), lexicographic, linked when draw/2^64 < p.
//   4. Per link in (a,b) order: bandwidth, delay, jitter, loss, each
//      min + draw/2^64 * (max - min).
Topology GenerateTopology(std::size_t n, const GenParams& params,
                          SplitMix64& rng);
Topology GenerateTopology(std::size_t n, const GenParams& params,
                          std::uint64_t seed);

// Links with bandwidth >= demand.
Topology FeasibleSubgraph(const Topology& t, double demand);

// Throws TopologyError when {a,b} is not a link.
Topology RemoveLink(const Topology& t, NodeId a, NodeId b);

bool IsConnected(const Topology& t);

// Minimum link count from src; nullopt for unreachable nodes.
std::vector<std::optional<int>> BfsHops(const Topology& t, NodeId src);

// True when consecutive nodes are all linked and no node repeats.
bool IsSimplePath(const Topology& t, const Path& path);

// Canonical text form: "n=<count>" then "a b bandwidth delay jitter loss"
// per link in (a,b) order, numbers with 6 significant digits.
std::string WriteTopology(const Topology& t);
Topology ReadTopology(const std::string& text);

// FNV-1a 64 over the canonical text form.
std::uint64_t Fingerprint(const Topology& t);

}  // namespace qosroute

#endif  // QOSROUTE_TOPOLOGY_H_
