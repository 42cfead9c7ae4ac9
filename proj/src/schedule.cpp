#include "surveil/schedule.hpp"

#include <algorithm>
#include <stdexcept>

#include "surveil/estimate.hpp"

namespace surveil::schedule {

void validate_controller(const ControllerConfig& cfg) {
  if (!(cfg.gamma1 > 0.0 && cfg.gamma1 < 1.0)) {
    throw std::invalid_argument("controller: gamma1 must be in (0,1)");
  }
  if (!(cfg.gamma2 > 0.0 && cfg.gamma2 < 1.0)) {
    throw std::invalid_argument("controller: gamma2 must be in (0,1)");
  }
  if (!(cfg.sample_interval_s > 0.0)) {
    throw std::invalid_argument("controller: sample_interval_s must be positive");
  }
}

int dispatch(std::span<const EdgeState> states) {
  if (states.empty()) {
    throw std::invalid_argument("dispatch: no edge devices");
  }
  int best = 0;
  double best_cost = static_cast<double>(states[0].queue_len) * states[0].est_infer_time;
  for (std::size_t i = 1; i < states.size(); ++i) {
    double cost = static_cast<double>(states[i].queue_len) * states[i].est_infer_time;
    if (cost < best_cost) {
      best_cost = cost;
      best = static_cast<int>(i);
    }
  }
  return best;
}

double update_alpha(double alpha_old, long q_d, double t_d, const ControllerConfig& cfg) {
  double drift = cfg.gamma1 * (static_cast<double>(q_d) * t_d - cfg.sample_interval_s);
  return std::max(std::min(alpha_old - drift, 1.0), 0.5);
}

double update_beta(double alpha_new, const ControllerConfig& cfg) {
  return cfg.gamma2 * (1.0 - alpha_new);
}

ParameterStore::ParameterStore(std::vector<EdgeState> initial, double propagation_delay)
    : delay_(propagation_delay) {
  if (initial.empty()) {
    throw std::invalid_argument("parameter store: no devices");
  }
  if (delay_ < 0.0) {
    throw std::invalid_argument("parameter store: negative propagation delay");
  }
  for (std::size_t i = 0; i < initial.size(); ++i) {
    if (initial[i].device_id != static_cast<int>(i)) {
      throw std::invalid_argument("parameter store: device ids must be 0..N-1 in order");
    }
  }
  const std::size_t n = initial.size();
  replicas_.assign(n, initial);
  stamps_.assign(n, std::vector<std::pair<double, std::uint64_t>>(n, {-1.0, 0}));
  pending_.resize(n);
}

void ParameterStore::apply_due(int replica, double now) {
  auto& queue = pending_[replica];
  std::size_t kept = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    PendingWrite& pw = queue[i];
    if (pw.visible_at <= now) {
      int d = pw.state.device_id;
      // Last writer wins per device entry, ordered by write time.
      auto stamp = std::make_pair(pw.written_at, pw.seq);
      if (stamp >= stamps_[replica][d]) {
        replicas_[replica][d] = pw.state;
        stamps_[replica][d] = stamp;
      }
    } else {
      queue[kept++] = pw;
    }
  }
  queue.resize(kept);
}

const std::vector<EdgeState>& ParameterStore::view(int viewer, double now) {
  if (viewer < 0 || viewer >= device_count()) {
    throw std::invalid_argument("parameter store: unknown viewer replica");
  }
  apply_due(viewer, now);
  return replicas_[viewer];
}

void ParameterStore::write(int origin, const EdgeState& state, double now) {
  if (origin < 0 || origin >= device_count()) {
    throw std::invalid_argument("parameter store: unknown origin replica");
  }
  if (state.device_id < 0 || state.device_id >= device_count()) {
    throw std::invalid_argument("parameter store: unknown device entry");
  }
  const std::uint64_t seq = next_seq_++;
  const auto stamp = std::make_pair(now, seq);
  for (int r = 0; r < device_count(); ++r) {
    double visible = r == origin ? now : now + delay_;
    if (visible <= now) {
      if (stamp >= stamps_[r][state.device_id]) {
        replicas_[r][state.device_id] = state;
        stamps_[r][state.device_id] = stamp;
      }
    } else {
      pending_[r].push_back({visible, now, seq, state});
    }
  }
}

void ParameterStore::advance_to(double now) {
  for (int r = 0; r < device_count(); ++r) apply_due(r, now);
}

void on_feedback(ParameterStore& store, int device, double observed_t, long new_q,
                 const ControllerConfig& cfg, double now) {
  validate_controller(cfg);
  if (device < 0 || device >= store.device_count()) {
    throw std::invalid_argument("on_feedback: unknown device");
  }
  if (!(observed_t > 0.0)) {
    throw std::invalid_argument("on_feedback: observed time must be positive");
  }
  if (new_q < 0) {
    throw std::invalid_argument("on_feedback: negative queue length");
  }
  EdgeState s = store.view(device, now)[device];
  s.est_infer_time = estimate::update_fast(s.est_infer_time, observed_t);
  s.queue_len = new_q;
  s.alpha = update_alpha(s.alpha, s.queue_len, s.est_infer_time, cfg);
  s.beta = update_beta(s.alpha, cfg);
  store.write(device, s, now);
}

}  // namespace surveil::schedule
