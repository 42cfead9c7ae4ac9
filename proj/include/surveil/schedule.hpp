#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace surveil::schedule {

// Per-device scheduling state. Each device keeps its own threshold pair;
// the replicated store gives every device a view of all entries.
struct EdgeState {
  int device_id = 0;
  long queue_len = 0;          // packages waiting or in service
  double est_infer_time = 0.1; // seconds, > 0
  double alpha = 0.8;          // in [0.5, 1]
  double beta = 0.1;           // in [0, 0.5]
};

struct ControllerConfig {
  double gamma1 = 0.01;        // drift gain, in (0, 1)
  double gamma2 = 0.5;         // beta coupling, in (0, 1)
  double sample_interval_s = 1.0;
};

void validate_controller(const ControllerConfig& cfg);

// argmin over devices of queue_len * est_infer_time; ties break to the
// lowest device index.
int dispatch(std::span<const EdgeState> states);

// max{min{alpha_old - gamma1 * (Q_d * t_d - s), 1}, 0.5}
double update_alpha(double alpha_old, long q_d, double t_d, const ControllerConfig& cfg);

// gamma2 * (1 - alpha_new); lands in [0, 0.5) for gamma2 in (0, 1).
double update_beta(double alpha_new, const ControllerConfig& cfg);

// Replicated per-device parameter store with last-writer-wins semantics.
// A write becomes visible at its origin immediately and at every other
// replica after propagation_delay. Mutations are serialized by the caller
// (the simulator's event order).
class ParameterStore {
 public:
  ParameterStore(std::vector<EdgeState> initial, double propagation_delay);

  int device_count() const { return static_cast<int>(replicas_.size()); }
  double propagation_delay() const { return delay_; }

  // Replica view as seen by `viewer` at time `now`.
  const std::vector<EdgeState>& view(int viewer, double now);

  // Overwrite the full entry for state.device_id, originating at `origin`.
  void write(int origin, const EdgeState& state, double now);

  // Apply all propagation that is due everywhere.
  void advance_to(double now);

 private:
  struct PendingWrite {
    double visible_at;
    double written_at;
    std::uint64_t seq;
    EdgeState state;
  };

  void apply_due(int replica, double now);

  std::vector<std::vector<EdgeState>> replicas_;
  // applied_stamp_[r][d] = (write time, seq) of the entry applied at replica r.
  std::vector<std::vector<std::pair<double, std::uint64_t>>> stamps_;
  std::vector<std::vector<PendingWrite>> pending_;  // per replica, in seq order
  double delay_;
  std::uint64_t next_seq_ = 0;
};

// Feedback handler: observed_t folds into t_d via the self-adaptive weighted
// mean, Q_d is replaced, then alpha and beta are recomputed from the updated
// (Q_d, t_d). The write originates at `device`.
void on_feedback(ParameterStore& store, int device, double observed_t, long new_q,
                 const ControllerConfig& cfg, double now);

}  // namespace surveil::schedule
