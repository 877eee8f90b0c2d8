#ifndef QOSROUTE_REPORT_H_
#define QOSROUTE_REPORT_H_

#include <string>

#include "qosroute/experiment.h"

namespace qosroute {

enum class Engine { kDv, kFf };

// "a->b->c".
std::string FormatPath(const Path& path);

// Tab-separated table: a title cell, then Source, Destination, Hop count and
// Path. Each row starts with an empty title cell. FF refusals print hop "-"
// and "No sufficient bandwidth available"; unreachable rows print hop "-" and
// "Unreachable".
std::string RenderTable(const ComparisonReport& report, Engine which);

// One line of counts plus the topology fingerprint.
std::string RenderSummary(const ComparisonReport& report);

// query,src,dst,dv_hops,ff_hops,ff_status. query is 1-based; missing hop
// counts are empty fields.
std::string EmitPlotSeries(const ComparisonReport& report);

// {config, fingerprint, rows[], summary{}}, pretty-printed with a trailing
// newline.
std::string ToJson(const ComparisonReport& report);

}  // namespace qosroute

#endif  // QOSROUTE_REPORT_H_
