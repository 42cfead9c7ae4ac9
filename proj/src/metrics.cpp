#include "surveil/metrics.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace surveil::sim {

std::optional<double> RunMetrics::mean_latency() const {
  if (latencies.empty()) return std::nullopt;
  double s = 0.0;
  for (double v : latencies) s += v;
  return s / static_cast<double>(latencies.size());
}

std::optional<double> RunMetrics::latency_variance() const {
  if (latencies.empty()) return std::nullopt;
  double m = *mean_latency();
  double s = 0.0;
  for (double v : latencies) s += (v - m) * (v - m);
  return s / static_cast<double>(latencies.size());
}

RunMetrics metrics_from_trace(const EventTrace& trace, int edge_count) {
  RunMetrics m;
  m.queue_series.resize(edge_count);
  std::map<std::uint64_t, double> capture_time;
  std::vector<long> qlen(edge_count, 0);

  for (const TraceRecord& r : trace) {
    switch (r.kind) {
      case EventKind::detect:
        capture_time[r.pkg] = r.t;
        break;
      case EventKind::enqueue:
        if (r.dev >= 0 && r.dev < edge_count) {
          m.queue_series[r.dev].emplace_back(r.t, ++qlen[r.dev]);
        }
        break;
      case EventKind::infer_end:
        if (r.dev >= 0 && r.dev < edge_count) {
          m.queue_series[r.dev].emplace_back(r.t, --qlen[r.dev]);
        }
        break;
      case EventKind::upload_end:
        m.upload_bytes += r.extra.at("bytes").get<std::uint64_t>();
        break;
      case EventKind::verdict: {
        auto it = capture_time.find(r.pkg);
        if (it == capture_time.end()) {
          throw std::runtime_error("metrics: verdict without detect for pkg " +
                                   std::to_string(r.pkg));
        }
        m.latencies.push_back(r.t - it->second);
        const bool predicted = r.extra.at("decision").get<std::string>() == "positive";
        const bool truth = r.extra.at("truth").get<bool>();
        if (predicted && truth) ++m.tp;
        else if (predicted && !truth) ++m.fp;
        else if (!predicted && truth) ++m.fn;
        else ++m.tn;
        break;
      }
      default:
        break;
    }
  }
  return m;
}

FScoreResult fscore(const RunMetrics& m, const FScoreParams& params) {
  if (!(params.lambda > 0.0)) {
    throw std::invalid_argument("fscore: lambda must be positive");
  }
  if (m.tp + m.fn == 0 || m.tp + m.fp == 0) {
    return {0.0, true};
  }
  const double p = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp);
  const double r = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
  const double l2 = params.lambda * params.lambda;
  if (p == 0.0 && r == 0.0) return {0.0, false};
  return {(1.0 + l2) * p * r / (l2 * p + r), false};
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return {buf, ptr};
}

std::string summary_csv_header() {
  return "scheme,mean_latency_s,var_latency_s2,bandwidth_bytes,f2\n";
}

std::string summary_csv_row(const std::string& scheme, const RunMetrics& m,
                            const FScoreParams& params) {
  std::string row = scheme;
  row += ',';
  if (auto mean = m.mean_latency()) row += format_double(*mean);
  row += ',';
  if (auto var = m.latency_variance()) row += format_double(*var);
  row += ',';
  row += std::to_string(m.upload_bytes);
  row += ',';
  row += format_double(fscore(m, params).value);
  row += '\n';
  return row;
}

}  // namespace surveil::sim
