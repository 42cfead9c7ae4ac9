#include "surveil/classify.hpp"

#include <stdexcept>

#include "surveil/rng.hpp"

namespace surveil::classify {

void validate_spec(const SyntheticClassifierSpec& spec) {
  if (spec.pos_a <= 0.0 || spec.pos_b <= 0.0 || spec.neg_a <= 0.0 || spec.neg_b <= 0.0) {
    throw std::invalid_argument("classifier spec: beta shape parameters must be > 0");
  }
  if (spec.query_class.empty()) {
    throw std::invalid_argument("classifier spec: query_class must be set");
  }
}

Confidence edge_classify(const ImagePackage& pkg, const SyntheticClassifierSpec& spec) {
  validate_spec(spec);
  const bool positive = pkg.true_label == spec.query_class;
  DetRng rng{spec.seed, 0x65646765636cULL, pkg.package_id};
  double f = positive ? rng.beta(spec.pos_a, spec.pos_b) : rng.beta(spec.neg_a, spec.neg_b);
  if (f < 0.0) f = 0.0;
  if (f > 1.0) f = 1.0;
  return Confidence{f};
}

Verdict decide(Confidence f, double alpha, double beta) {
  if (!(beta >= 0.0 && beta <= 0.5 && alpha >= 0.5 && alpha <= 1.0)) {
    throw std::invalid_argument("decide: need 0 <= beta <= 0.5 <= alpha <= 1");
  }
  if (f.value > alpha) return {Decision::positive, f};
  if (f.value < beta) return {Decision::negative, f};
  return {Decision::uncertain, f};
}

Verdict cloud_classify(const ImagePackage& pkg, const std::string& query_class) {
  if (pkg.true_label.empty()) {
    throw std::invalid_argument("cloud_classify: package has no true_label");
  }
  const bool positive = pkg.true_label == query_class;
  return {positive ? Decision::positive : Decision::negative,
          Confidence{positive ? 1.0 : 0.0}};
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::positive: return "positive";
    case Decision::negative: return "negative";
    case Decision::uncertain: return "uncertain";
  }
  return "uncertain";
}

}  // namespace surveil::classify
