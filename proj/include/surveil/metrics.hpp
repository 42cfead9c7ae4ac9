#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surveil/trace.hpp"

namespace surveil::sim {

struct FScoreParams {
  double lambda = 2.0;  // > 0; weights recall lambda^2 times precision
};

// Everything below is derived from the event trace alone, so metrics from a
// replayed trace match the ones computed at run time byte for byte.
struct RunMetrics {
  std::vector<double> latencies;  // capture -> final verdict, verdict order
  std::uint64_t upload_bytes = 0;
  std::uint64_t tp = 0, fp = 0, tn = 0, fn = 0;
  // Per edge device: (time, queue length) after each change.
  std::vector<std::vector<std::pair<double, long>>> queue_series;

  std::uint64_t finalized() const { return tp + fp + tn + fn; }
  std::optional<double> mean_latency() const;
  std::optional<double> latency_variance() const;  // population variance
};

RunMetrics metrics_from_trace(const EventTrace& trace, int edge_count);

struct FScoreResult {
  double value = 0.0;
  bool degenerate = false;  // no positives in truth or in predictions
};

// F_lambda = (1 + lambda^2) p r / (lambda^2 p + r).
FScoreResult fscore(const RunMetrics& m, const FScoreParams& params);

// Summary CSV row; doubles use shortest round-trip formatting and absent
// latencies produce empty cells.
std::string format_double(double v);
std::string summary_csv_header();
std::string summary_csv_row(const std::string& scheme, const RunMetrics& m,
                            const FScoreParams& params);

}  // namespace surveil::sim
