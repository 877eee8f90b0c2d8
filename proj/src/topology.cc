#include "qosroute/topology.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

namespace qosroute {

namespace {

void CheckLink(const QosLink& l, std::size_t n) {
  const std::string where =
      "link {" + std::to_string(l.a) + "," + std::to_string(l.b) + "}";
  if (l.a == l.b) throw TopologyError(where + ": self-loop");
  if (l.a >= n || l.b >= n) throw TopologyError(where + ": endpoint out of range");
  if (!(l.bandwidth > 0.0) || !std::isfinite(l.bandwidth))
    throw TopologyError(where + ": bandwidth must be positive");
  if (!(l.delay >= 0.0) || !std::isfinite(l.delay))
    throw TopologyError(where + ": delay must be non-negative");
  if (!(l.jitter >= 0.0) || !std::isfinite(l.jitter))
    throw TopologyError(where + ": jitter must be non-negative");
  if (!(l.loss >= 0.0 && l.loss < 1.0))
    throw TopologyError(where + ": loss must lie in [0, 1)");
}

void CheckRange(const Range& r, const char* name) {
  if (!std::isfinite(r.min) || !std::isfinite(r.max) || r.min > r.max)
    throw TopologyError(std::string(name) + " range must satisfy min <= max");
}

double Uniform(SplitMix64& rng, const Range& r) {
  return r.min + rng.NextUnit() * (r.max - r.min);
}

}  // namespace

Topology::Topology(std::size_t n, std::vector<QosLink> links)
    : n_(n), links_(std::move(links)), adj_(n) {
  if (n_ == 0) throw TopologyError("topology needs at least one node");
  for (auto& l : links_) {
    if (l.a > l.b) std::swap(l.a, l.b);
    CheckLink(l, n_);
  }
  std::sort(links_.begin(), links_.end(), [](const QosLink& x, const QosLink& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  for (std::size_t i = 1; i < links_.size(); ++i) {
    if (links_[i].a == links_[i - 1].a && links_[i].b == links_[i - 1].b)
      throw TopologyError("duplicate link {" + std::to_string(links_[i].a) +
                          "," + std::to_string(links_[i].b) + "}");
  }
  for (std::size_t i = 0; i < links_.size(); ++i) {
    adj_[links_[i].a].push_back({links_[i].b, i});
    adj_[links_[i].b].push_back({links_[i].a, i});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(),
              [](const Adjacent& x, const Adjacent& y) { return x.node < y.node; });
  }
}

const QosLink* Topology::find_link(NodeId u, NodeId v) const {
  if (u >= n_ || v >= n_) return nullptr;
  const auto& list = adj_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Adjacent& x, NodeId target) { return x.node < target; });
  if (it == list.end() || it->node != v) return nullptr;
  return &links_[it->link];
}

void GenParams::Validate() const {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw TopologyError("edge probability must lie in [0, 1]");
  CheckRange(bandwidth, "bandwidth");
  CheckRange(delay, "delay");
  CheckRange(jitter, "jitter");
  CheckRange(loss, "loss");
  if (!(bandwidth.min > 0.0)) throw TopologyError("bandwidth range must be positive");
  if (delay.min < 0.0) throw TopologyError("delay range must be non-negative");
  if (jitter.min < 0.0) throw TopologyError("jitter range must be non-negative");
  if (loss.min < 0.0 || !(loss.max < 1.0))
    throw TopologyError("loss range must lie within [0, 1)");
}

Topology GenerateTopology(std::size_t n, const GenParams& params,
                          SplitMix64& rng) {
  if (n == 0) throw TopologyError("topology needs at least one node");
  params.Validate();

  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t j = rng.Next() % (i + 1);
    std::swap(perm[i], perm[j]);
  }

  // linked[a * n + b] for a < b
  std::vector<bool> linked(n * n, false);
  std::vector<QosLink> links;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    NodeId a = perm[i], b = perm[i + 1];
    if (a > b) std::swap(a, b);
    linked[a * n + b] = true;
    links.push_back({a, b});
  }
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (linked[a * n + b]) continue;
      if (rng.NextUnit() < params.edge_prob) {
        linked[a * n + b] = true;
        links.push_back({a, b});
      }
    }
  }
  std::sort(links.begin(), links.end(), [](const QosLink& x, const QosLink& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  for (auto& l : links) {
    l.bandwidth = Uniform(rng, params.bandwidth);
    l.delay = Uniform(rng, params.delay);
    l.jitter = Uniform(rng, params.jitter);
    l.loss = Uniform(rng, params.loss);
  }
  return Topology(n, std::move(links));
}

Topology GenerateTopology(std::size_t n, const GenParams& params,
                          std::uint64_t seed) {
  SplitMix64 rng(seed);
  return GenerateTopology(n, params, rng);
}

Topology FeasibleSubgraph(const Topology& t, double demand) {
  std::vector<QosLink> kept;
  for (const auto& l : t.links()) {
    if (l.bandwidth >= demand) kept.push_back(l);
  }
  return Topology(t.node_count(), std::move(kept));
}

Topology RemoveLink(const Topology& t, NodeId a, NodeId b) {
  if (t.find_link(a, b) == nullptr)
    throw TopologyError("no link {" + std::to_string(a) + "," +
                        std::to_string(b) + "} to remove");
  if (a > b) std::swap(a, b);
  std::vector<QosLink> kept;
  kept.reserve(t.links().size() - 1);
  for (const auto& l : t.links()) {
    if (l.a != a || l.b != b) kept.push_back(l);
  }
  return Topology(t.node_count(), std::move(kept));
}

std::vector<std::optional<int>> BfsHops(const Topology& t, NodeId src) {
  if (!t.has_node(src)) throw TopologyError("BFS source out of range");
  std::vector<std::optional<int>> hops(t.node_count());
  std::deque<NodeId> queue{src};
  hops[src] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (const auto& nb : t.neighbors(v)) {
      if (hops[nb.node]) continue;
      hops[nb.node] = *hops[v] + 1;
      queue.push_back(nb.node);
    }
  }
  return hops;
}

bool IsConnected(const Topology& t) {
  const auto hops = BfsHops(t, 0);
  return std::all_of(hops.begin(), hops.end(),
                     [](const std::optional<int>& h) { return h.has_value(); });
}

bool IsSimplePath(const Topology& t, const Path& path) {
  if (path.empty()) return false;
  std::vector<bool> seen(t.node_count(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!t.has_node(path[i]) || seen[path[i]]) return false;
    seen[path[i]] = true;
    if (i > 0 && t.find_link(path[i - 1], path[i]) == nullptr) return false;
  }
  return true;
}

}  // namespace qosroute
