#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surveil/classify.hpp"
#include "surveil/estimate.hpp"
#include "surveil/frame.hpp"
#include "surveil/metrics.hpp"
#include "surveil/schedule.hpp"
#include "surveil/trace.hpp"

namespace surveil::sim {

struct LinkSpec {
  double latency_s = 0.0;
  double bandwidth_bps = 0.0;  // bytes per second
};

// Lognormal edge service time: gamma + exp(mu + sigma * z).
struct ServiceSpec {
  double gamma = 0.05;
  double mu = -1.2;
  double sigma = 0.25;
};

struct Topology {
  int edge_count = 1;
  std::vector<std::pair<std::string, int>> cameras;  // (camera_id, edge index)
  std::vector<LinkSpec> edge_cloud;                  // one uplink per edge
  // Empty: edge-to-edge transfer is free and instantaneous (the default).
  // Otherwise a full edge x edge matrix of link parameters.
  std::vector<std::vector<LinkSpec>> edge_edge;
  double cloud_infer_time_s = 0.5;
  std::vector<ServiceSpec> edge_service;
};

struct RatePhase {
  double duration_s = 0.0;
  double rate_per_s = 0.0;  // objects per second
};

struct CameraWorkload {
  std::string camera_id;
  double phase_offset_s = 0.0;
  std::vector<RatePhase> schedule;  // piecewise-constant, cycled
};

struct WorkloadSpec {
  enum class Mode { synthetic, frame_replay };
  Mode mode = Mode::synthetic;
  std::vector<CameraWorkload> cameras;
  double positive_fraction = 0.25;
  double byte_mean = 65536.0;
  double byte_jitter = 16384.0;  // uniform in [mean - jitter, mean + jitter]
  std::string frame_dir;         // frame_replay: <dir>/<camera>/<tick>_{prev,cur,next}.pgm|ppm
  std::string negative_label = "background";
};

enum class Scheme { surveiledge, surveiledge_fixed, edge_only, cloud_only };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);
inline constexpr Scheme kAllSchemes[] = {Scheme::surveiledge, Scheme::surveiledge_fixed,
                                         Scheme::edge_only, Scheme::cloud_only};

struct SchemeConfig {
  Scheme scheme = Scheme::surveiledge;
  double fixed_alpha = 0.8;  // surveiledge_fixed thresholds
  double fixed_beta = 0.1;
};

struct ExperimentConfig {
  Topology topology;
  WorkloadSpec workload;
  SchemeConfig scheme;
  schedule::ControllerConfig controller;
  estimate::EstimatorConfig estimator;
  classify::SyntheticClassifierSpec classifier;
  vision::DetectionConfig detection;  // frame_replay mode only
  double sample_interval_s = 1.0;
  double duration_s = 60.0;
  double store_propagation_delay_s = 0.0;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument on any malformed section; run() calls this
// before touching the event queue.
void validate(const ExperimentConfig& cfg);

struct RunResult {
  EventTrace trace;
  RunMetrics metrics;
};

// Deterministic discrete-event run of one scheme. Arrivals, package sizes,
// labels and confidences are keyed by (seed, entity ids) only, so every
// scheme sees the same workload realization for the same seed.
RunResult run(const ExperimentConfig& cfg);

struct ComparisonRow {
  Scheme scheme;
  RunMetrics pooled;   // latencies and confusion pooled across seeds,
                       // upload_bytes summed
  std::size_t runs = 0;
};

// All four schemes over the same seeds. jobs > 1 fans independent runs out
// to threads; results are identical to the serial order.
std::vector<ComparisonRow> compare_schemes(const ExperimentConfig& base,
                                           const std::vector<std::uint64_t>& seeds,
                                           int jobs = 1);

std::string comparison_csv(const std::vector<ComparisonRow>& rows);

}  // namespace surveil::sim
