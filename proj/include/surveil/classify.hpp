#pragma once

#include <cstdint>
#include <string>

#include "surveil/frame.hpp"

namespace surveil::classify {

// The schedulable unit of work: a cropped foreground image plus metadata.
// true_label is hidden from edge decision logic; the cloud oracle and the
// metrics layer may read it.
struct ImagePackage {
  std::uint64_t package_id = 0;
  std::string camera_id;
  double capture_time = 0.0;
  vision::BoundingBox box;
  std::uint64_t byte_size = 0;
  std::string true_label;
};

struct Confidence {
  double value = 0.0;  // probability in [0, 1]
};

enum class Decision { positive, negative, uncertain };

struct Verdict {
  Decision decision = Decision::uncertain;
  Confidence confidence;
};

// Synthetic stand-in for a per-device edge CNN: confidences are Beta draws,
// one shape pair for packages of the query class and one for the rest.
// Draws are keyed by (seed, package_id), so replays and scheme comparisons
// see identical confidences regardless of dispatch order.
struct SyntheticClassifierSpec {
  double pos_a = 8.0, pos_b = 2.0;  // shape for true positives
  double neg_a = 2.0, neg_b = 8.0;  // shape for true negatives
  std::uint64_t seed = 0;
  std::string query_class;
};

void validate_spec(const SyntheticClassifierSpec& spec);

Confidence edge_classify(const ImagePackage& pkg, const SyntheticClassifierSpec& spec);

// f > alpha -> positive; f < beta -> negative; the closed band [beta, alpha]
// is uncertain. Requires 0 <= beta <= 0.5 <= alpha <= 1.
Verdict decide(Confidence f, double alpha, double beta);

// Ground-truth oracle standing in for the highly accurate cloud CNN.
Verdict cloud_classify(const ImagePackage& pkg, const std::string& query_class);

const char* decision_name(Decision d);

}  // namespace surveil::classify
