#include "qosroute/fitness.h"

#include <cmath>
#include <set>
#include <string>
#include <tuple>

namespace qosroute {

void Weights::Validate() const {
  for (double v : {delay, jitter, loss}) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw RouteError("weights must be finite and non-negative");
  }
  if (delay == 0.0 && jitter == 0.0 && loss == 0.0)
    throw RouteError("at least one weight must be positive");
}

std::string_view StatusName(RouteStatus s) {
  switch (s) {
    case RouteStatus::kRoute:
      return "route";
    case RouteStatus::kNoSufficientBandwidth:
      return "no_bandwidth";
    case RouteStatus::kUnreachable:
      return "unreachable";
  }
  return "unreachable";
}

double EdgeCost(const QosLink& link, const Weights& w) {
  if (!(link.loss < 1.0))
    throw RouteError("link {" + std::to_string(link.a) + "," +
                     std::to_string(link.b) + "} has loss >= 1");
  return w.delay * link.delay + w.jitter * link.jitter +
         w.loss * -std::log1p(-link.loss);
}

PathScore PathFitness(const Path& path, const Topology& t, const Weights& w) {
  if (path.empty()) throw RouteError("empty path");
  double cost = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const QosLink* link = t.find_link(path[i - 1], path[i]);
    if (link == nullptr)
      throw RouteError("no link {" + std::to_string(path[i - 1]) + "," +
                       std::to_string(path[i]) + "} on path");
    cost += EdgeCost(*link, w);
  }
  return {cost, 1.0 / (1.0 + cost)};
}

std::optional<Path> SpanningTree::PathTo(NodeId v) const {
  if (!settled(v)) return std::nullopt;
  Path path;
  for (NodeId cur = v;; cur = *parent[cur]) {
    path.push_back(cur);
    if (cur == root) break;
    if (path.size() > label.size() || !parent[cur])
      throw RouteError("corrupt spanning tree at node " + std::to_string(cur));
  }
  return Path(path.rbegin(), path.rend());
}

bool SpanningTree::IsAcyclic() const {
  if (!settled(root) || parent[root]) return false;
  for (NodeId v = 0; v < label.size(); ++v) {
    if (!settled(v)) {
      if (parent[v]) return false;
      continue;
    }
    std::size_t steps = 0;
    NodeId cur = v;
    while (cur != root) {
      if (!parent[cur] || !settled(*parent[cur]) || ++steps > label.size())
        return false;
      cur = *parent[cur];
    }
  }
  return true;
}

SpanningTree BuildSpanningTree(const Topology& pruned, NodeId root,
                               const Weights& w) {
  if (!pruned.has_node(root)) throw RouteError("tree root out of range");
  const std::size_t n = pruned.node_count();

  std::vector<double> link_cost;
  link_cost.reserve(pruned.links().size());
  for (const auto& l : pruned.links()) link_cost.push_back(EdgeCost(l, w));

  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n, std::nullopt);
  tree.label.assign(n, std::nullopt);

  std::vector<std::optional<Label>> tentative(n);
  using Key = std::tuple<int, double, NodeId>;
  std::set<Key> frontier;
  tentative[root] = Label{0, 0.0};
  frontier.emplace(0, 0.0, root);

  while (!frontier.empty()) {
    const auto [hops, cost, v] = *frontier.begin();
    frontier.erase(frontier.begin());
    tree.label[v] = Label{hops, cost};
    tree.settle_order.push_back(v);

    for (const auto& nb : pruned.neighbors(v)) {
      if (tree.settled(nb.node)) continue;
      ++tree.relaxations;
      const Label cand{hops + 1, cost + link_cost[nb.link]};
      auto& cur = tentative[nb.node];
      const bool better =
          !cur || cand < *cur || (cand == *cur && v < *tree.parent[nb.node]);
      if (!better) continue;
      if (cur) frontier.erase(Key{cur->hops, cur->cost, nb.node});
      cur = cand;
      tree.parent[nb.node] = v;
      frontier.emplace(cand.hops, cand.cost, nb.node);
    }
  }
  return tree;
}

RouteOutcome SelectRoute(const Topology& t, const RouteRequest& req) {
  if (!t.has_node(req.src) || !t.has_node(req.dst))
    throw RouteError("route endpoint out of range");
  if (!(req.demand >= 0.0) || !std::isfinite(req.demand))
    throw RouteError("demand must be finite and non-negative");
  req.weights.Validate();

  RouteOutcome out;
  if (req.src == req.dst) {
    out.status = RouteStatus::kRoute;
    out.path = {req.src};
    out.fitness = 1.0;
    return out;
  }

  const Topology pruned = FeasibleSubgraph(t, req.demand);
  const SpanningTree tree = BuildSpanningTree(pruned, req.src, req.weights);
  out.settlements = tree.settlements();
  out.relaxations = tree.relaxations;

  if (tree.settled(req.dst)) {
    out.status = RouteStatus::kRoute;
    out.path = *tree.PathTo(req.dst);
    out.hops = tree.label[req.dst]->hops;
    const PathScore score = PathFitness(out.path, pruned, req.weights);
    out.cost = score.cost;
    out.fitness = score.fitness;
  } else if (BfsHops(t, req.src)[req.dst]) {
    out.status = RouteStatus::kNoSufficientBandwidth;
  } else {
    out.status = RouteStatus::kUnreachable;
  }
  return out;
}

}  // namespace qosroute
