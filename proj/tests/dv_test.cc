#include "qosroute/dv.h"

#include <gtest/gtest.h>

namespace qosroute {
namespace {

QosLink L(NodeId a, NodeId b) { return {a, b, 10.0, 1.0, 0.0, 0.0}; }

Topology Line(std::size_t n) {
  std::vector<QosLink> links;
  for (NodeId i = 0; i + 1 < n; ++i) links.push_back(L(i, i + 1));
  return Topology(n, links);
}

Topology Square() { return Topology(4, {L(0, 1), L(0, 2), L(1, 3), L(2, 3)}); }

DvState Converged(const Topology& t, int inf = kDefaultInfinityMetric) {
  auto r = Converge(InitTables(t, inf), static_cast<int>(t.node_count()) + 1);
  EXPECT_TRUE(r.converged);
  return r.state;
}

std::vector<DvTraceEntry> Seq(std::initializer_list<std::optional<int>> metrics) {
  std::vector<DvTraceEntry> out;
  int round = 1;
  for (auto m : metrics) out.push_back({round++, m});
  return out;
}

TEST(InitTablesTest, NeighborsOnly) {
  const DvState s = InitTables(Line(3));
  EXPECT_FALSE(s.distance(0, 2));
  EXPECT_EQ(s.distance(0, 1), 1);
  EXPECT_EQ(s.next_hop(0, 1), 1u);
  for (NodeId v = 0; v < 3; ++v) {
    EXPECT_EQ(s.distance(v, v), 0);
    EXPECT_FALSE(s.next_hop(v, v));
  }
  const DvState single = InitTables(Topology(1, {}));
  EXPECT_EQ(single.node_count(), 1u);
  EXPECT_EQ(single.distance(0, 0), 0);
  EXPECT_THROW(InitTables(Line(3), 1), std::invalid_argument);
}

TEST(ExchangeRoundTest, RelaxesOneHop) {
  DvState s = InitTables(Line(3));
  EXPECT_TRUE(s.ExchangeRound());
  EXPECT_EQ(s.distance(0, 2), 2);
  EXPECT_EQ(s.next_hop(0, 2), 1u);
  EXPECT_FALSE(s.ExchangeRound());
}

TEST(ExchangeRoundTest, TieBreaksOnSmallestNeighbor) {
  const DvState s = Converged(Square());
  EXPECT_EQ(s.distance(0, 3), 2);
  EXPECT_EQ(s.next_hop(0, 3), 1u);
  EXPECT_EQ(s.next_hop(3, 0), 1u);
}

TEST(ConvergeTest, ChainBound) {
  // Longest chain whose diameter stays below the default infinity of 16.
  for (std::size_t n = 1; n <= 16; ++n) {
    auto r = Converge(InitTables(Line(n)), 100);
    ASSERT_TRUE(r.converged);
    EXPECT_LE(r.rounds_used, std::max<int>(0, static_cast<int>(n) - 1));
    EXPECT_EQ(r.state.distance(0, static_cast<NodeId>(n - 1)), static_cast<int>(n) - 1);
  }
  EXPECT_THROW(Converge(InitTables(Line(3)), 0), std::invalid_argument);
}

TEST(ConvergeTest, CompleteGraphIsImmediate) {
  const Topology k4(4, {L(0, 1), L(0, 2), L(0, 3), L(1, 2), L(1, 3), L(2, 3)});
  auto r = Converge(InitTables(k4), 10);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.rounds_used, 0);
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(r.state.distance(u, v), u == v ? 0 : 1);
}

TEST(ConvergeTest, ReportsExhaustedBudget) {
  auto r = Converge(InitTables(Line(10)), 2);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.rounds_used, 2);
}

TEST(ConvergeTest, MatchesBfsOnGeneratedTopologies) {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    p.edge_prob = 0.02 + 0.01 * static_cast<double>(seed % 10);
    const std::size_t n = 2 + seed % 15;
    const Topology t = GenerateTopology(n, p, seed);
    auto r = Converge(InitTables(t), static_cast<int>(n) + 1);
    ASSERT_TRUE(r.converged);
    EXPECT_LE(r.rounds_used, static_cast<int>(n) - 1);
    for (NodeId u = 0; u < n; ++u) {
      const auto bfs = BfsHops(t, u);
      for (NodeId d = 0; d < n; ++d) {
        ASSERT_EQ(r.state.distance(u, d), bfs[d]) << "seed " << seed;
        if (u != d) {
          const NodeId hop = *r.state.next_hop(u, d);
          EXPECT_EQ(*r.state.distance(u, d), 1 + *r.state.distance(hop, d));
        }
      }
    }
  }
}

TEST(ConvergeTest, InfinityCapHidesFarNodes) {
  const DvState s = Converged(Line(8), 4);
  EXPECT_EQ(s.distance(0, 3), 3);
  EXPECT_FALSE(s.distance(0, 4));
  EXPECT_FALSE(s.next_hop(0, 4));
}

TEST(ExtractPathTest, Examples) {
  const DvState s = Converged(Topology(4, {L(0, 1), L(0, 3), L(1, 2)}));
  EXPECT_EQ(ExtractPath(s, 1, 0), (Path{1, 0}));
  EXPECT_EQ(ExtractPath(s, 2, 3), (Path{2, 1, 0, 3}));
  EXPECT_EQ(ExtractPath(s, 2, 2), (Path{2}));

  const DvState split = Converged(Topology(4, {L(0, 1), L(2, 3)}));
  EXPECT_FALSE(ExtractPath(split, 0, 3));
  EXPECT_THROW(ExtractPath(split, 0, 4), TopologyError);
}

TEST(ExtractPathTest, DetectsForwardingLoop) {
  // Mid count-to-infinity, 0 and 1 point at each other for destination 2.
  DvState s = Converged(Line(3)).WithoutLink(1, 2);
  s.ExchangeRound();
  s.ExchangeRound();
  ASSERT_EQ(s.next_hop(0, 2), 1u);
  ASSERT_EQ(s.next_hop(1, 2), 0u);
  EXPECT_THROW(ExtractPath(s, 0, 2), DvError);
}

TEST(ExtractPathTest, PathsAreSimpleAndMinimal) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Topology t = GenerateTopology(24, GenParams{}, seed);
    const DvState s = Converged(t);
    for (NodeId u = 0; u < 24; ++u) {
      const auto bfs = BfsHops(t, u);
      for (NodeId v = 0; v < 24; ++v) {
        const auto path = ExtractPath(s, u, v);
        ASSERT_TRUE(path);
        EXPECT_TRUE(IsSimplePath(t, *path));
        EXPECT_EQ(static_cast<int>(path->size()) - 1, bfs[v]);
      }
    }
  }
}

// Hand simulation of synchronous rounds on 0-1-2 after {1,2} fails:
// r1: d0=1+d1(1)=2, d1=1+d0(2)=3; r2: d0=1+3=4, d1=1+2=3; r3: d0=4, d1=5; ...
TEST(FailLinkAndTraceTest, CountToInfinityFromFarNode) {
  const DvTrace trace = FailLinkAndTrace(Converged(Line(3)), 1, 2, 0, 2, 100);
  EXPECT_EQ(trace.entries,
            Seq({2, 4, 4, 6, 6, 8, 8, 10, 10, 12, 12, 14, 14, std::nullopt}));
  EXPECT_TRUE(trace.capped);
}

TEST(FailLinkAndTraceTest, CountToInfinityFromNearNode) {
  const DvTrace trace = FailLinkAndTrace(Converged(Line(3)), 1, 2, 1, 2, 100);
  EXPECT_EQ(trace.entries,
            Seq({3, 3, 5, 5, 7, 7, 9, 9, 11, 11, 13, 13, 15, 15, std::nullopt}));
  EXPECT_TRUE(trace.capped);
}

TEST(FailLinkAndTraceTest, MonotoneAndBoundedForOtherCaps) {
  for (int inf : {2, 3, 5, 16, 31}) {
    const DvTrace trace =
        FailLinkAndTrace(Converged(Line(3), inf), 1, 2, 0, 2, 2 * inf);
    ASSERT_TRUE(trace.capped) << inf;
    EXPECT_LE(static_cast<int>(trace.entries.size()), 2 * inf);
    int last = 0;
    for (std::size_t i = 0; i < trace.entries.size(); ++i) {
      EXPECT_EQ(trace.entries[i].round, static_cast<int>(i) + 1);
      if (trace.entries[i].metric) {
        EXPECT_GE(*trace.entries[i].metric, last);
        last = *trace.entries[i].metric;
      }
    }
  }
}

TEST(FailLinkAndTraceTest, UnrelatedLinkStopsAfterOneRound) {
  // Triangle: neither 1 nor 2 routes to 0 over {1,2}.
  const Topology tri(3, {L(0, 1), L(0, 2), L(1, 2)});
  const DvTrace trace = FailLinkAndTrace(Converged(tri), 1, 2, 1, 0, 100);
  EXPECT_EQ(trace.entries, Seq({1}));
  EXPECT_FALSE(trace.capped);
}

TEST(FailLinkAndTraceTest, RespectsRoundLimitAndErrors) {
  const DvState s = Converged(Line(3));
  EXPECT_EQ(FailLinkAndTrace(s, 1, 2, 0, 2, 3).entries, Seq({2, 4, 4}));
  EXPECT_THROW(FailLinkAndTrace(s, 0, 2, 0, 2, 3), TopologyError);
  EXPECT_THROW(FailLinkAndTrace(s, 1, 2, 0, 9, 3), TopologyError);
}

TEST(FailLinkAndTraceTest, Deterministic) {
  const DvState s = Converged(GenerateTopology(20, GenParams{}, 4));
  const QosLink l = s.topology().links()[3];
  EXPECT_EQ(FailLinkAndTrace(s, l.a, l.b, 0, 5, 40), FailLinkAndTrace(s, l.a, l.b, 0, 5, 40));
}

TEST(WriteTraceCsvTest, Format) {
  DvTrace t;
  t.entries = Seq({2, 4, std::nullopt});
  EXPECT_EQ(WriteTraceCsv(t), "round,metric\n1,2\n2,4\n3,INF\n");
  EXPECT_EQ(WriteTraceCsv(DvTrace{}), "round,metric\n");
}

}  // namespace
}  // namespace qosroute
