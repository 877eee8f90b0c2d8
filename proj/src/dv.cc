#include "qosroute/dv.h"

#include <algorithm>

namespace qosroute {

DvState::DvState(std::shared_ptr<const Topology> topology, int infinity_metric)
    : topology_(std::move(topology)),
      n_(topology_->node_count()),
      infinity_(infinity_metric) {
  if (infinity_ < 2) throw std::invalid_argument("infinity metric must be >= 2");
  dist_.assign(n_ * n_, infinity_);
  next_.assign(n_ * n_, kNoHop);
  for (NodeId v = 0; v < n_; ++v) {
    dist_[at(v, v)] = 0;
    for (const auto& nb : topology_->neighbors(v)) {
      dist_[at(v, nb.node)] = 1;
      next_[at(v, nb.node)] = nb.node;
    }
  }
}

std::optional<int> DvState::distance(NodeId node, NodeId dest) const {
  const int d = dist_.at(at(node, dest));
  if (d >= infinity_) return std::nullopt;
  return d;
}

std::optional<NodeId> DvState::next_hop(NodeId node, NodeId dest) const {
  const NodeId h = next_.at(at(node, dest));
  if (h == kNoHop) return std::nullopt;
  return h;
}

bool DvState::ExchangeRound() {
  std::vector<int> dist(n_ * n_, infinity_);
  std::vector<NodeId> next(n_ * n_, kNoHop);
  for (NodeId v = 0; v < n_; ++v) {
    const auto& nbs = topology_->neighbors(v);
    for (NodeId d = 0; d < n_; ++d) {
      if (v == d) {
        dist[at(v, d)] = 0;
        continue;
      }
      int best = infinity_;
      NodeId hop = kNoHop;
      // Neighbors are sorted by id; strict < keeps the smallest on ties.
      for (const auto& nb : nbs) {
        const int via = dist_[at(nb.node, d)] + 1;
        if (via < best) {
          best = via;
          hop = nb.node;
        }
      }
      if (best < infinity_) {
        dist[at(v, d)] = best;
        next[at(v, d)] = hop;
      }
    }
  }
  const bool changed = dist != dist_ || next != next_;
  dist_ = std::move(dist);
  next_ = std::move(next);
  return changed;
}

DvState DvState::WithoutLink(NodeId a, NodeId b) const {
  DvState out = *this;
  out.topology_ = std::make_shared<const Topology>(RemoveLink(*topology_, a, b));
  return out;
}

DvState InitTables(const Topology& t, int infinity_metric) {
  return DvState(t, infinity_metric);
}

ConvergeResult Converge(DvState state, int max_rounds) {
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  int changed_rounds = 0;
  for (int round = 0; round < max_rounds; ++round) {
    if (!state.ExchangeRound()) {
      return {std::move(state), changed_rounds, true};
    }
    ++changed_rounds;
  }
  return {std::move(state), changed_rounds, false};
}

std::optional<Path> ExtractPath(const DvState& s, NodeId src, NodeId dst) {
  if (!s.topology().has_node(src) || !s.topology().has_node(dst))
    throw TopologyError("path endpoint out of range");
  if (!s.distance(src, dst)) return std::nullopt;
  Path path{src};
  std::vector<bool> seen(s.node_count(), false);
  seen[src] = true;
  NodeId v = src;
  while (v != dst) {
    const auto hop = s.next_hop(v, dst);
    if (!hop) return std::nullopt;
    if (seen[*hop])
      throw DvError("forwarding loop at node " + std::to_string(*hop) +
                    " towards " + std::to_string(dst));
    seen[*hop] = true;
    path.push_back(*hop);
    v = *hop;
  }
  return path;
}

DvTrace FailLinkAndTrace(const DvState& converged, NodeId a, NodeId b,
                         NodeId probe, NodeId dest, int max_rounds) {
  if (!converged.topology().has_node(probe) || !converged.topology().has_node(dest))
    throw TopologyError("trace probe or destination out of range");
  DvState state = converged.WithoutLink(a, b);
  DvTrace trace{probe, dest, {}, false};
  auto column = [&](const DvState& s) {
    std::vector<std::pair<std::optional<int>, std::optional<NodeId>>> col;
    col.reserve(s.node_count());
    for (NodeId v = 0; v < s.node_count(); ++v)
      col.emplace_back(s.distance(v, dest), s.next_hop(v, dest));
    return col;
  };
  auto before = column(state);
  for (int round = 1; round <= max_rounds; ++round) {
    state.ExchangeRound();
    const auto metric = state.distance(probe, dest);
    trace.entries.push_back({round, metric});
    if (!metric) {
      trace.capped = true;
      break;
    }
    auto after = column(state);
    if (after == before) break;
    before = std::move(after);
  }
  return trace;
}

std::string WriteTraceCsv(const DvTrace& trace) {
  std::string out = "round,metric\n";
  for (const auto& e : trace.entries) {
    out += std::to_string(e.round) + "," +
           (e.metric ? std::to_string(*e.metric) : std::string("INF")) + "\n";
  }
  return out;
}

}  // namespace qosroute
