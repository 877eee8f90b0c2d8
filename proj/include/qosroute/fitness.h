#ifndef QOSROUTE_FITNESS_H_
#define QOSROUTE_FITNESS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qosroute/topology.h"

namespace qosroute {

// Bad route query: node out of range, negative demand, invalid weights, or a
// path that does not follow topology links.
class RouteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cost weights. Loss enters the cost as -ln(1 - loss) so that per-link
// delivery probabilities multiply along a path while costs add.
struct Weights {
  double delay = 1.0;   // per ms
  double jitter = 1.0;  // per ms
  double loss = 1.0;

  void Validate() const;
};

struct RouteRequest {
  NodeId src = 0;
  NodeId dst = 0;
  double demand = 0.0;  // Mbps
  Weights weights;
};

enum class RouteStatus { kRoute, kNoSufficientBandwidth, kUnreachable };

std::string_view StatusName(RouteStatus s);  // route | no_bandwidth | unreachable

struct RouteOutcome {
  RouteStatus status = RouteStatus::kUnreachable;
  Path path;           // empty unless kRoute
  int hops = 0;
  double fitness = 0.0;
  double cost = 0.0;

  // Search effort of the single tree build behind this outcome.
  std::size_t settlements = 0;
  std::size_t relaxations = 0;

  bool is_route() const { return status == RouteStatus::kRoute; }
};

// Lexicographic (hops, cost).
struct Label {
  int hops = 0;
  double cost = 0.0;

  friend bool operator<(const Label& x, const Label& y) {
    return x.hops != y.hops ? x.hops < y.hops : x.cost < y.cost;
  }
  friend bool operator==(const Label&, const Label&) = default;
};

struct SpanningTree {
  NodeId root = 0;
  // parent[v] for every settled v != root; nullopt otherwise.
  std::vector<std::optional<NodeId>> parent;
  // Final label of every settled node; nullopt for nodes never settled.
  std::vector<std::optional<Label>> label;
  std::vector<NodeId> settle_order;
  std::size_t relaxations = 0;

  bool settled(NodeId v) const { return v < label.size() && label[v].has_value(); }
  std::size_t settlements() const { return settle_order.size(); }

  // Root-to-v tree path, nullopt when v was never settled.
  std::optional<Path> PathTo(NodeId v) const;
  // True when following parents from every settled node reaches the root
  // without revisiting a node.
  bool IsAcyclic() const;
};

// w.delay * delay + w.jitter * jitter + w.loss * -ln(1 - loss).
// Throws RouteError for loss >= 1.
double EdgeCost(const QosLink& link, const Weights& w);

struct PathScore {
  double cost = 0.0;
  double fitness = 1.0;  // 1 / (1 + cost)
};

// Throws RouteError on an empty path or a hop without a link.
PathScore PathFitness(const Path& path, const Topology& t, const Weights& w);

// Label-setting search from root with lexicographic (hops, cost) labels.
// Each node is settled at most once and never relabeled afterwards, so the
// search performs at most n settlements and at most one relaxation per link
// direction. On equal labels the smaller predecessor id wins; the unsettled
// node with the smallest (label, id) is settled next.
SpanningTree BuildSpanningTree(const Topology& pruned, NodeId root,
                               const Weights& w);

// Prunes links below the demand, grows the tree from src and reads the
// route to dst from it. A dst that is reachable only through pruned links
// yields kNoSufficientBandwidth; one not reachable at all yields
// kUnreachable. Throws RouteError on an invalid request.
RouteOutcome SelectRoute(const Topology& t, const RouteRequest& req);

}  // namespace qosroute

#endif  // QOSROUTE_FITNESS_H_
