#include "surveil/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace surveil::estimate {

LatencyWindow::LatencyWindow(std::size_t capacity) : capacity_(capacity) {
  if (capacity < 8) {
    throw std::invalid_argument("latency window: capacity must be >= 8");
  }
  buf_.resize(capacity);
}

void LatencyWindow::push(double latency_s) {
  if (!(latency_s > 0.0)) {
    throw std::invalid_argument("latency window: samples must be positive");
  }
  buf_[head_] = latency_s;
  head_ = (head_ + 1) % capacity_;
  if (size_ < capacity_) ++size_;
}

std::vector<double> LatencyWindow::snapshot() const {
  std::vector<double> out;
  out.reserve(size_);
  std::size_t start = size_ < capacity_ ? 0 : head_;
  for (std::size_t i = 0; i < size_; ++i) {
    out.push_back(buf_[(start + i) % capacity_]);
  }
  return out;
}

void validate_config(const EstimatorConfig& cfg) {
  if (cfg.window_capacity < 8) {
    throw std::invalid_argument("estimator: window_capacity must be >= 8");
  }
  if (!(cfg.blend_weight >= 0.0 && cfg.blend_weight <= 1.0)) {
    throw std::invalid_argument("estimator: blend_weight outside [0,1]");
  }
  if (cfg.refit_interval == 0) {
    throw std::invalid_argument("estimator: refit_interval must be positive");
  }
  if (!(cfg.initial_t > 0.0)) {
    throw std::invalid_argument("estimator: initial_t must be positive");
  }
}

double update_fast(double t_old, double t_new) {
  if (!(t_old > 0.0) || !(t_new > 0.0)) {
    throw std::invalid_argument("update_fast: inputs must be positive");
  }
  const double sum = t_old + t_new;
  const double w_old = (t_old * t_old + t_new * t_new) / (sum * sum);
  const double w_new = 2.0 * t_old * t_new / (sum * sum);
  return w_old * t_old + w_new * t_new;
}

double gamma_equation(const std::vector<double>& samples, double gamma) {
  const double n = static_cast<double>(samples.size());
  double inv_sum = 0.0;     // sum 1/(x_i - gamma)
  double log_sum = 0.0;     // sum ln(x_i - gamma)
  double log_sq_sum = 0.0;  // sum ln(x_i - gamma)^2
  double log_inv_sum = 0.0; // sum ln(x_i - gamma)/(x_i - gamma)
  for (double x : samples) {
    double u = x - gamma;
    double l = std::log(u);
    inv_sum += 1.0 / u;
    log_sum += l;
    log_sq_sum += l * l;
    log_inv_sum += l / u;
  }
  return inv_sum * (log_sum - log_sq_sum + log_sum * log_sum / n) - n * log_inv_sum;
}

double profile_log_likelihood(const std::vector<double>& samples, double gamma) {
  const double n = static_cast<double>(samples.size());
  double log_sum = 0.0, log_sq_sum = 0.0;
  for (double x : samples) {
    double l = std::log(x - gamma);
    log_sum += l;
    log_sq_sum += l * l;
  }
  double mu = log_sum / n;
  double var = log_sq_sum / n - mu * mu;
  if (!(var > 0.0)) return -std::numeric_limits<double>::infinity();
  // At the closed-form (mu, sigma) the quadratic term collapses to n/2.
  return -0.5 * n * std::log(2.0 * 3.141592653589793 * var) - log_sum - 0.5 * n;
}

namespace {

constexpr int kGridPoints = 256;
constexpr double kUpperShrink = 1.0 - 1e-6;

LognormalFit moments_at(const std::vector<double>& samples, double gamma) {
  const double n = static_cast<double>(samples.size());
  double log_sum = 0.0;
  for (double x : samples) log_sum += std::log(x - gamma);
  double mu = log_sum / n;
  double ss = 0.0;
  for (double x : samples) {
    double d = std::log(x - gamma) - mu;
    ss += d * d;
  }
  return {gamma, mu, std::sqrt(ss / n)};
}

double bisect(const std::vector<double>& samples, double lo, double hi,
              double g_lo) {
  // Relative tolerance 1e-10 on the bracket width.
  const double tol = 1e-10 * std::max(hi, 1.0);
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double g_mid = gamma_equation(samples, mid);
    if (g_mid == 0.0) return mid;
    if ((g_lo < 0.0) == (g_mid < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<LognormalFit> fit_lognormal3(const LatencyWindow& window) {
  const std::vector<double> samples = window.snapshot();
  if (samples.size() < 8) return std::nullopt;
  auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
  if (*mn == *mx) return std::nullopt;

  const double hi = *mn * kUpperShrink;
  std::vector<double> g(kGridPoints);
  const long npts = kGridPoints;
#pragma omp parallel for schedule(static)
  for (long j = 0; j < npts; ++j) {
    double gamma = hi * static_cast<double>(j) / static_cast<double>(kGridPoints - 1);
    g[j] = gamma_equation(samples, gamma);
  }

  double best_gamma = 0.0;
  double best_ll = profile_log_likelihood(samples, 0.0);
  bool root_found = false;
  for (int j = 0; j + 1 < kGridPoints; ++j) {
    double a = hi * static_cast<double>(j) / (kGridPoints - 1);
    double b = hi * static_cast<double>(j + 1) / (kGridPoints - 1);
    double root;
    if (g[j] == 0.0) {
      root = a;
    } else if ((g[j] < 0.0) != (g[j + 1] < 0.0)) {
      root = bisect(samples, a, b, g[j]);
    } else {
      continue;
    }
    root_found = true;
    double ll = profile_log_likelihood(samples, root);
    if (ll > best_ll) {
      best_ll = ll;
      best_gamma = root;
    }
  }
  (void)root_found;

  LognormalFit fit = moments_at(samples, best_gamma);
  if (!(fit.sigma > 0.0)) return std::nullopt;
  return fit;
}

double predict(const LognormalFit& fit, const EstimatorConfig& cfg) {
  const double mean = fit.gamma + std::exp(fit.mu + 0.5 * fit.sigma * fit.sigma);
  const double median = fit.gamma + std::exp(fit.mu);
  return cfg.blend_weight * mean + (1.0 - cfg.blend_weight) * median;
}

}  // namespace surveil::estimate
