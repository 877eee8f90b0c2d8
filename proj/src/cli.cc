#include "qosroute/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qosroute/dv.h"
#include "qosroute/experiment.h"
#include "qosroute/report.h"
#include "qosroute/topology.h"

namespace qosroute {

namespace {

// Bad flag value found after CLI11 accepted the syntax.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T ParseNumber(std::string_view text, const std::string& what) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Range ParseRange(const std::string& text, const std::string& what) {
  const auto parts = Split(text, ':');
  if (parts.size() != 2) throw UsageError(what + " expects MIN:MAX, got '" + text + "'");
  return {ParseNumber<double>(parts[0], what), ParseNumber<double>(parts[1], what)};
}

Query ParsePair(const std::string& text, const std::string& what) {
  const auto parts = Split(text, ':');
  if (parts.size() != 2) throw UsageError(what + " expects A:B, got '" + text + "'");
  return {ParseNumber<NodeId>(parts[0], what), ParseNumber<NodeId>(parts[1], what)};
}

Weights ParseWeights(const std::string& text) {
  const auto parts = Split(text, ',');
  if (parts.size() != 3)
    throw UsageError("--weights expects WD,WJ,WL, got '" + text + "'");
  return {ParseNumber<double>(parts[0], "weight"),
          ParseNumber<double>(parts[1], "weight"),
          ParseNumber<double>(parts[2], "weight")};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write '" + out_path + "'");
}

// Generator flags shared by compare and gen-topology.
struct GenFlags {
  std::string bw, delay, jitter, loss;

  void Register(CLI::App* cmd, GenParams& gen) {
    cmd->add_option("--edge-prob", gen.edge_prob, "Probability of each extra link")
        ->capture_default_str();
    cmd->add_option("--bw", bw, "Bandwidth range in Mbps, MIN:MAX");
    cmd->add_option("--delay", delay, "Delay range in ms, MIN:MAX");
    cmd->add_option("--jitter", jitter, "Jitter range in ms, MIN:MAX");
    cmd->add_option("--loss", loss, "Loss probability range, MIN:MAX");
  }

  void Apply(GenParams& gen) const {
    if (!bw.empty()) gen.bandwidth = ParseRange(bw, "--bw");
    if (!delay.empty()) gen.delay = ParseRange(delay, "--delay");
    if (!jitter.empty()) gen.jitter = ParseRange(jitter, "--jitter");
    if (!loss.empty()) gen.loss = ParseRange(loss, "--loss");
    try {
      gen.Validate();
    } catch (const TopologyError& e) {
      throw UsageError(e.what());
    }
  }
};

Topology DemoLine() {
  std::vector<QosLink> links = {{0, 1, 10.0, 1.0, 0.0, 0.0},
                                {1, 2, 10.0, 1.0, 0.0, 0.0}};
  return Topology(3, std::move(links));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"QoS routing simulator: distance vector vs fitness-based routing",
               "qosroute"};
  app.require_subcommand(1, 1);

  // compare
  ExperimentConfig cfg;
  cfg.query_count = 10;
  GenFlags cmp_gen;
  std::vector<std::string> queries;
  std::string weights, format = "table", out_path, topology_path;
  auto* compare = app.add_subcommand("compare", "Run both engines on paired queries");
  compare->add_option("--nodes", cfg.nodes, "Node count")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  compare->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  compare->add_option("--queries", cfg.query_count, "Number of random queries")
      ->capture_default_str();
  compare->add_option("--query", queries, "Explicit query SRC:DST (repeatable)");
  compare->add_option("--demand", cfg.demand, "Bandwidth demand in Mbps")
      ->capture_default_str();
  compare->add_option("--weights", weights, "Cost weights WD,WJ,WL");
  cmp_gen.Register(compare, cfg.gen);
  compare->add_option("--infinity", cfg.infinity_metric, "DV infinity metric")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  compare->add_option("--format", format, "Output encoding")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  compare->add_option("--out", out_path, "Write the report to FILE");
  compare->add_option("--topology", topology_path, "Replay a topology file");

  // demo-count-to-infinity
  std::string demo_topology, fail = "1:2";
  NodeId probe = 0, dest = 2;
  int demo_infinity = kDefaultInfinityMetric;
  int max_rounds = 0;
  std::string demo_out;
  auto* demo = app.add_subcommand("demo-count-to-infinity",
                                  "Trace DV metrics after a link failure");
  demo->add_option("--topology", demo_topology, "Topology file (default: line 0-1-2)");
  demo->add_option("--fail", fail, "Link to fail, A:B")->capture_default_str();
  demo->add_option("--probe", probe, "Node whose metric is traced")->capture_default_str();
  demo->add_option("--dest", dest, "Destination of the traced metric")
      ->capture_default_str();
  demo->add_option("--infinity", demo_infinity, "DV infinity metric")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  demo->add_option("--max-rounds", max_rounds, "Round limit (default 2 x infinity)")
      ->check(CLI::NonNegativeNumber);
  demo->add_option("--out", demo_out, "Write the trace to FILE");

  // gen-topology
  std::size_t gen_nodes = 64;
  std::uint64_t gen_seed = 1;
  GenParams gen_params;
  GenFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-topology", "Write a generated topology file");
  gen->add_option("--nodes", gen_nodes, "Node count")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen_flags.Register(gen, gen_params);
  gen->add_option("--out", gen_out, "Write the topology to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (compare->parsed()) {
      cmp_gen.Apply(cfg.gen);
      if (!weights.empty()) cfg.weights = ParseWeights(weights);
      if (!queries.empty()) {
        std::vector<Query> list;
        for (const auto& q : queries) list.push_back(ParsePair(q, "--query"));
        cfg.explicit_queries = std::move(list);
      }
      const ComparisonReport report =
          topology_path.empty()
              ? RunComparison(cfg)
              : RunComparison(cfg, ReadTopology(ReadFile(topology_path)));
      std::string text;
      if (format == "csv") {
        text = EmitPlotSeries(report);
      } else if (format == "json") {
        text = ToJson(report);
      } else {
        text = RenderTable(report, Engine::kDv) + "\n" +
               RenderTable(report, Engine::kFf) + "\n" + RenderSummary(report);
      }
      Emit(text, out_path, out);
      if (!report.summary.violations.empty()) {
        err << "error: " << report.summary.violations.size()
            << " claim violation(s)\n";
        return 1;
      }
      return 0;
    }

    if (demo->parsed()) {
      const Topology t = demo_topology.empty() ? DemoLine()
                                               : ReadTopology(ReadFile(demo_topology));
      const auto [a, b] = ParsePair(fail, "--fail");
      if (!t.has_node(probe) || !t.has_node(dest))
        throw UsageError("--probe and --dest must name nodes of the topology");
      const int rounds = max_rounds > 0 ? max_rounds : 2 * demo_infinity;
      auto converged = Converge(DvState(t, demo_infinity),
                                static_cast<int>(t.node_count()) + 1);
      const DvTrace trace = FailLinkAndTrace(converged.state, a, b, probe, dest, rounds);
      Emit(WriteTraceCsv(trace), demo_out, out);
      return 0;
    }

    if (gen->parsed()) {
      gen_flags.Apply(gen_params);
      Emit(WriteTopology(GenerateTopology(gen_nodes, gen_params, gen_seed)), gen_out,
           out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // TopologyError, RouteError, ConfigError
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qosroute
