#include <cstdio>
#include <locale>
#include <sstream>
#include <string>

#include "qosroute/topology.h"

namespace qosroute {

namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string WriteTopology(const Topology& t) {
  std::string out = "n=" + std::to_string(t.node_count()) + "\n";
  for (const auto& l : t.links()) {
    out += std::to_string(l.a) + " " + std::to_string(l.b) + " " +
           Num(l.bandwidth) + " " + Num(l.delay) + " " + Num(l.jitter) + " " +
           Num(l.loss) + "\n";
  }
  return out;
}

Topology ReadTopology(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
    throw TopologyError("topology file must start with 'n=<count>'");
  std::size_t n = 0;
  {
    std::istringstream head(line.substr(2));
    head.imbue(std::locale::classic());
    long long count = -1;
    if (!(head >> count) || count < 1 || !(head >> std::ws).eof())
      throw TopologyError("bad node count line: '" + line + "'");
    n = static_cast<std::size_t>(count);
  }
  std::vector<QosLink> links;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    row.imbue(std::locale::classic());
    long long a = -1, b = -1;
    QosLink l;
    if (!(row >> a >> b >> l.bandwidth >> l.delay >> l.jitter >> l.loss) ||
        a < 0 || b < 0 || a >= static_cast<long long>(n) ||
        b >= static_cast<long long>(n) || !(row >> std::ws).eof())
      throw TopologyError("malformed link on line " + std::to_string(line_no) +
                          ": '" + line + "'");
    l.a = static_cast<NodeId>(a);
    l.b = static_cast<NodeId>(b);
    links.push_back(l);
  }
  return Topology(n, std::move(links));
}

std::uint64_t Fingerprint(const Topology& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : WriteTopology(t)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace qosroute
