#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace surveil::estimate {

// Ring buffer of recent positive latency samples, oldest evicted first.
class LatencyWindow {
 public:
  explicit LatencyWindow(std::size_t capacity);

  void push(double latency_s);
  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }

  // Samples in insertion order (oldest first).
  std::vector<double> snapshot() const;

 private:
  std::vector<double> buf_;
  std::size_t capacity_;
  std::size_t head_ = 0;  // next write slot
  std::size_t size_ = 0;
};

// Three-parameter lognormal: support (gamma, +inf), ln(X - gamma) ~ N(mu, sigma^2).
struct LognormalFit {
  double gamma = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
};

struct EstimatorConfig {
  std::size_t window_capacity = 100;
  double blend_weight = 0.5;   // w for E(X) vs median in predict()
  std::size_t refit_interval = 50;  // completed inferences between re-fits
  double initial_t = 0.1;      // seconds
};

void validate_config(const EstimatorConfig& cfg);

// Self-adaptive weighted mean of the old estimate and a new observation.
// The squared-weight form damps outliers on either side relative to the
// plain arithmetic mean.
double update_fast(double t_old, double t_new);

// Local-maximum-likelihood fit. The location parameter is the root of the
// single-variable estimating equation obtained by substituting the closed
// forms of mu and sigma^2; roots are bracketed on a 256-point grid over
// [0, min(X)(1 - 1e-6)] and polished by bisection. With several roots the
// one with the highest profile log-likelihood wins; with none (or when the
// two-parameter fit at gamma = 0 beats every root) gamma = 0 is used.
// Returns nullopt for fewer than 8 samples or a degenerate (all-equal) window.
std::optional<LognormalFit> fit_lognormal3(const LatencyWindow& window);

// Value of the gamma estimating equation; exposed for tests.
double gamma_equation(const std::vector<double>& samples, double gamma);

// Profile log-likelihood at (gamma, mu_hat(gamma), sigma_hat(gamma)).
double profile_log_likelihood(const std::vector<double>& samples, double gamma);

// w * E(X) + (1-w) * Median(X) with E(X) = gamma + exp(mu + sigma^2/2) and
// Median(X) = gamma + exp(mu).
double predict(const LognormalFit& fit, const EstimatorConfig& cfg);

}  // namespace surveil::estimate
