#include "surveil/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "surveil/image_io.hpp"
#include "surveil/rng.hpp"
#include "surveil/vision.hpp"

namespace surveil::sim {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::surveiledge: return "surveiledge";
    case Scheme::surveiledge_fixed: return "surveiledge_fixed";
    case Scheme::edge_only: return "edge_only";
    case Scheme::cloud_only: return "cloud_only";
  }
  throw std::logic_error("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
  for (Scheme s : kAllSchemes) {
    if (name == scheme_name(s)) return s;
  }
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

namespace {

namespace fs = std::filesystem;

// Stream tags for the keyed generators.
constexpr std::uint64_t kArrivalStream = 0x617272ULL;
constexpr std::uint64_t kPackageStream = 0x706b67ULL;
constexpr std::uint64_t kServiceStream = 0x737663ULL;

double rate_at(const CameraWorkload& cam, double t) {
  if (cam.schedule.empty()) return 0.0;
  double period = 0.0;
  for (const RatePhase& p : cam.schedule) period += p.duration_s;
  if (period <= 0.0) return 0.0;
  double tau = std::fmod(t + cam.phase_offset_s, period);
  if (tau < 0.0) tau += period;
  for (const RatePhase& p : cam.schedule) {
    if (tau < p.duration_s) return p.rate_per_s;
    tau -= p.duration_s;
  }
  return cam.schedule.back().rate_per_s;
}

std::string tick_stem(const WorkloadSpec& w, const std::string& camera, long tick) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06ld", tick);
  return w.frame_dir + "/" + camera + "/" + buf;
}

std::string find_frame_file(const std::string& stem, const char* part) {
  std::string pgm = stem + "_" + part + ".pgm";
  if (fs::exists(pgm)) return pgm;
  std::string ppm = stem + "_" + part + ".ppm";
  if (fs::exists(ppm)) return ppm;
  throw std::invalid_argument("frame replay: missing frame file " + pgm + " (or .ppm)");
}

// labels.csv: `tick,box_index,label`, header required. Boxes without an
// entry carry the negative label.
std::map<std::pair<long, std::size_t>, std::string> read_labels(const std::string& path) {
  std::map<std::pair<long, std::size_t>, std::string> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  if (!std::getline(in, line)) return out;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "tick,box_index,label") {
    throw std::invalid_argument("frame replay: bad labels.csv header in " + path);
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tick_s, idx_s, label;
    if (!std::getline(ss, tick_s, ',') || !std::getline(ss, idx_s, ',') ||
        !std::getline(ss, label)) {
      throw std::invalid_argument("frame replay: malformed labels.csv line: " + line);
    }
    out[{std::stol(tick_s), static_cast<std::size_t>(std::stoul(idx_s))}] = label;
  }
  return out;
}

struct Pending {
  classify::ImagePackage pkg;
  int home_edge = 0;
};

enum class EvType {
  tick,         // a = camera index, aux = tick number
  edge_arrive,  // a = device, pkg
  infer_done,   // a = device, pkg, dt = service time
  uplink_done,  // a = device, pkg
  cloud_arrive, // a = uplink device, pkg
  cloud_done,   // pkg
};

struct Ev {
  double t = 0.0;
  std::uint64_t seq = 0;
  EvType type = EvType::tick;
  int a = 0;
  std::uint64_t pkg = 0;
  long aux = 0;
  double dt = 0.0;
};

struct EvLater {
  bool operator()(const Ev& a, const Ev& b) const {
    if (a.t != b.t) return a.t > b.t;
    return a.seq > b.seq;
  }
};

class Runner {
 public:
  explicit Runner(const ExperimentConfig& cfg)
      : cfg_(cfg),
        scheme_(cfg.scheme.scheme),
        edge_count_(cfg.topology.edge_count) {
    classifier_ = cfg_.classifier;
    classifier_.seed ^= cfg_.seed * 0x9e3779b97f4a7c15ULL;

    waiting_.resize(edge_count_);
    busy_.assign(edge_count_, false);
    uplink_waiting_.resize(edge_count_);
    uplink_busy_.assign(edge_count_, false);

    if (scheme_ == Scheme::surveiledge) {
      std::vector<schedule::EdgeState> init;
      for (int d = 0; d < edge_count_; ++d) {
        init.push_back({d, 0, cfg_.estimator.initial_t, 0.8,
                        schedule::update_beta(0.8, cfg_.controller)});
      }
      store_.emplace(std::move(init), cfg_.store_propagation_delay_s);
      for (int d = 0; d < edge_count_; ++d) {
        windows_.emplace_back(cfg_.estimator.window_capacity);
      }
      completed_.assign(edge_count_, 0);
    }
  }

  RunResult run() {
    if (cfg_.workload.mode == WorkloadSpec::Mode::frame_replay) {
      preload_frames();
    }
    for (std::size_t ci = 0; ci < cfg_.workload.cameras.size(); ++ci) {
      push({0.0, 0, EvType::tick, static_cast<int>(ci), 0, 0, 0.0});
    }
    while (!events_.empty()) {
      Ev ev = events_.top();
      events_.pop();
      handle(ev);
    }
    RunResult out;
    out.metrics = metrics_from_trace(trace_, edge_count_);
    out.trace = std::move(trace_);
    return out;
  }

 private:
  void push(Ev ev) {
    ev.seq = next_seq_++;
    events_.push(ev);
  }

  void emit(double t, EventKind kind, std::uint64_t pkg, int dev,
            nlohmann::ordered_json extra = nlohmann::ordered_json::object()) {
    trace_.push_back({t, kind, pkg, dev, std::move(extra)});
  }

  long edge_qlen(int d) const {
    return static_cast<long>(waiting_[d].size()) + (busy_[d] ? 1 : 0);
  }

  void handle(const Ev& ev) {
    switch (ev.type) {
      case EvType::tick: on_tick(ev); break;
      case EvType::edge_arrive: on_edge_arrive(ev); break;
      case EvType::infer_done: on_infer_done(ev); break;
      case EvType::uplink_done: on_uplink_done(ev); break;
      case EvType::cloud_arrive: on_cloud_arrive(ev); break;
      case EvType::cloud_done: on_cloud_done(ev); break;
    }
  }

  // ---- package generation ----

  void preload_frames() {
    const long ticks = static_cast<long>(std::ceil(cfg_.duration_s / cfg_.sample_interval_s));
    for (const CameraWorkload& cam : cfg_.workload.cameras) {
      for (long k = 0; k < ticks; ++k) {
        if (static_cast<double>(k) * cfg_.sample_interval_s >= cfg_.duration_s) break;
        std::string stem = tick_stem(cfg_.workload, cam.camera_id, k);
        find_frame_file(stem, "prev");
        find_frame_file(stem, "cur");
        find_frame_file(stem, "next");
      }
      std::string labels_path = cfg_.workload.frame_dir + "/" + cam.camera_id + "/labels.csv";
      labels_[cam.camera_id] = read_labels(labels_path);
    }
  }

  int home_edge_of(const std::string& camera_id) const {
    for (const auto& [id, edge] : cfg_.topology.cameras) {
      if (id == camera_id) return edge;
    }
    throw std::invalid_argument("workload camera not in topology: " + camera_id);
  }

  std::vector<Pending> generate(int camera_index, long tick, double t) {
    const CameraWorkload& cam = cfg_.workload.cameras[camera_index];
    const int home = home_edge_of(cam.camera_id);
    std::vector<Pending> out;

    if (cfg_.workload.mode == WorkloadSpec::Mode::synthetic) {
      DetRng arr{cfg_.seed, kArrivalStream, static_cast<std::uint64_t>(camera_index),
                 static_cast<std::uint64_t>(tick)};
      long count = arr.poisson(rate_at(cam, t) * cfg_.sample_interval_s);
      for (long j = 0; j < count; ++j) {
        DetRng prng{cfg_.seed, kPackageStream, static_cast<std::uint64_t>(camera_index),
                    static_cast<std::uint64_t>(tick), static_cast<std::uint64_t>(j)};
        classify::ImagePackage pkg;
        pkg.package_id = next_pkg_id_++;
        pkg.camera_id = cam.camera_id;
        pkg.capture_time = t;
        pkg.box = {0, 0, 1, 1};
        double size = cfg_.workload.byte_mean +
                      (2.0 * prng.next_double() - 1.0) * cfg_.workload.byte_jitter;
        pkg.byte_size = static_cast<std::uint64_t>(std::max(1.0, std::round(size)));
        pkg.true_label = prng.next_double() < cfg_.workload.positive_fraction
                             ? classifier_.query_class
                             : cfg_.workload.negative_label;
        out.push_back({std::move(pkg), home});
      }
    } else {
      std::string stem = tick_stem(cfg_.workload, cam.camera_id, tick);
      vision::Frame prev = vision::read_pnm(find_frame_file(stem, "prev"));
      vision::Frame cur = vision::read_pnm(find_frame_file(stem, "cur"));
      vision::Frame next = vision::read_pnm(find_frame_file(stem, "next"));
      prev.camera_id = cur.camera_id = next.camera_id = cam.camera_id;
      cur.capture_time = t;
      auto boxes = vision::detect(prev, cur, next, cfg_.detection);
      const auto& label_map = labels_.at(cam.camera_id);
      for (std::size_t bi = 0; bi < boxes.size(); ++bi) {
        classify::ImagePackage pkg;
        pkg.package_id = next_pkg_id_++;
        pkg.camera_id = cam.camera_id;
        pkg.capture_time = t;
        pkg.box = boxes[bi];
        pkg.byte_size = static_cast<std::uint64_t>(boxes[bi].area()) * cur.channels;
        auto it = label_map.find({tick, bi});
        pkg.true_label = it == label_map.end() ? cfg_.workload.negative_label : it->second;
        out.push_back({std::move(pkg), home});
      }
    }
    return out;
  }

  // ---- event handlers ----

  void on_tick(const Ev& ev) {
    const double t = ev.t;
    if (t >= cfg_.duration_s) return;
    for (Pending& p : generate(ev.a, ev.aux, t)) {
      const std::uint64_t id = p.pkg.package_id;
      emit(t, EventKind::detect, id, p.home_edge,
           {{"camera", p.pkg.camera_id}, {"bytes", p.pkg.byte_size}});
      packages_.emplace(id, std::move(p));
      route(id, t);
    }
    double next_t = t + cfg_.sample_interval_s;
    if (next_t < cfg_.duration_s) {
      push({next_t, 0, EvType::tick, ev.a, 0, ev.aux + 1, 0.0});
    }
  }

  void route(std::uint64_t id, double t) {
    Pending& p = packages_.at(id);
    switch (scheme_) {
      case Scheme::surveiledge: {
        const auto& view = store_->view(p.home_edge, t);
        int d = schedule::dispatch(view);
        emit(t, EventKind::dispatch, id, d);
        // Count the in-flight package so same-instant dispatches spread out.
        schedule::EdgeState claimed = view[d];
        claimed.queue_len += 1;
        store_->write(p.home_edge, claimed, t);
        double delay = transfer_delay(p.home_edge, d, p.pkg.byte_size);
        push({t + delay, 0, EvType::edge_arrive, d, id, 0, 0.0});
        break;
      }
      case Scheme::surveiledge_fixed:
      case Scheme::edge_only:
        emit(t, EventKind::dispatch, id, p.home_edge);
        push({t, 0, EvType::edge_arrive, p.home_edge, id, 0, 0.0});
        break;
      case Scheme::cloud_only:
        emit(t, EventKind::dispatch, id, kCloudDevice);
        emit(t, EventKind::enqueue, id, kCloudDevice);
        uplink_enqueue(p.home_edge, id, t);
        break;
    }
  }

  double transfer_delay(int from, int to, std::uint64_t bytes) const {
    if (from == to || cfg_.topology.edge_edge.empty()) return 0.0;
    const LinkSpec& link = cfg_.topology.edge_edge[from][to];
    return link.latency_s + static_cast<double>(bytes) / link.bandwidth_bps;
  }

  void on_edge_arrive(const Ev& ev) {
    const int d = ev.a;
    waiting_[d].push_back(ev.pkg);
    emit(ev.t, EventKind::enqueue, ev.pkg, d, {{"q", edge_qlen(d)}});
    if (!busy_[d]) start_infer(d, ev.t);
  }

  void start_infer(int d, double t) {
    std::uint64_t id = waiting_[d].front();
    waiting_[d].pop_front();
    busy_[d] = true;
    emit(t, EventKind::infer_start, id, d);
    const ServiceSpec& svc = cfg_.topology.edge_service[d];
    DetRng rng{cfg_.seed, kServiceStream, static_cast<std::uint64_t>(d), id};
    double service = svc.gamma + std::exp(svc.mu + svc.sigma * rng.normal());
    push({t + service, 0, EvType::infer_done, d, id, 0, service});
  }

  void on_infer_done(const Ev& ev) {
    const int d = ev.a;
    const double t = ev.t;
    busy_[d] = false;
    Pending& p = packages_.at(ev.pkg);

    classify::Confidence f = classify::edge_classify(p.pkg, classifier_);
    classify::Verdict v;
    if (scheme_ == Scheme::surveiledge) {
      // Thresholds in force when the classification finishes, before this
      // package's own feedback is applied.
      const schedule::EdgeState& s = store_->view(d, t)[d];
      v = classify::decide(f, s.alpha, s.beta);
    } else if (scheme_ == Scheme::surveiledge_fixed) {
      v = classify::decide(f, cfg_.scheme.fixed_alpha, cfg_.scheme.fixed_beta);
    } else {
      v = {f.value >= 0.5 ? classify::Decision::positive : classify::Decision::negative, f};
    }

    nlohmann::ordered_json extra{{"confidence", f.value},
                                 {"decision", classify::decision_name(v.decision)},
                                 {"observed_t", ev.dt},
                                 {"q", edge_qlen(d)}};

    if (scheme_ == Scheme::surveiledge) {
      schedule::on_feedback(*store_, d, ev.dt, edge_qlen(d), cfg_.controller, t);
      windows_[d].push(ev.dt);
      if (++completed_[d] % cfg_.estimator.refit_interval == 0) {
        if (auto fit = estimate::fit_lognormal3(windows_[d])) {
          double pred = estimate::predict(*fit, cfg_.estimator);
          schedule::EdgeState s = store_->view(d, t)[d];
          s.est_infer_time = estimate::update_fast(s.est_infer_time, pred);
          store_->write(d, s, t);
          extra["fit"] = {{"gamma", fit->gamma}, {"mu", fit->mu},
                          {"sigma", fit->sigma}, {"t", s.est_infer_time}};
        }
      }
    }
    emit(t, EventKind::infer_end, ev.pkg, d, std::move(extra));

    if (v.decision == classify::Decision::uncertain) {
      uplink_enqueue(d, ev.pkg, t);
    } else {
      finalize(ev.pkg, t, d, v);
    }
    if (!waiting_[d].empty()) start_infer(d, t);
  }

  void uplink_enqueue(int d, std::uint64_t id, double t) {
    uplink_waiting_[d].push_back(id);
    if (!uplink_busy_[d]) start_upload(d, t);
  }

  void start_upload(int d, double t) {
    std::uint64_t id = uplink_waiting_[d].front();
    uplink_waiting_[d].pop_front();
    uplink_busy_[d] = true;
    const Pending& p = packages_.at(id);
    emit(t, EventKind::upload_start, id, d, {{"bytes", p.pkg.byte_size}});
    const LinkSpec& link = cfg_.topology.edge_cloud[d];
    double tx = static_cast<double>(p.pkg.byte_size) / link.bandwidth_bps;
    push({t + tx, 0, EvType::uplink_done, d, id, 0, 0.0});
  }

  void on_uplink_done(const Ev& ev) {
    const int d = ev.a;
    uplink_busy_[d] = false;
    push({ev.t + cfg_.topology.edge_cloud[d].latency_s, 0, EvType::cloud_arrive, d, ev.pkg,
          0, 0.0});
    if (!uplink_waiting_[d].empty()) start_upload(d, ev.t);
  }

  void on_cloud_arrive(const Ev& ev) {
    const Pending& p = packages_.at(ev.pkg);
    emit(ev.t, EventKind::upload_end, ev.pkg, ev.a, {{"bytes", p.pkg.byte_size}});
    emit(ev.t, EventKind::infer_start, ev.pkg, kCloudDevice);
    push({ev.t + cfg_.topology.cloud_infer_time_s, 0, EvType::cloud_done, 0, ev.pkg, 0, 0.0});
  }

  void on_cloud_done(const Ev& ev) {
    const Pending& p = packages_.at(ev.pkg);
    classify::Verdict v = classify::cloud_classify(p.pkg, classifier_.query_class);
    emit(ev.t, EventKind::infer_end, ev.pkg, kCloudDevice,
         {{"confidence", v.confidence.value},
          {"decision", classify::decision_name(v.decision)}});
    finalize(ev.pkg, ev.t, kCloudDevice, v);
  }

  void finalize(std::uint64_t id, double t, int dev, const classify::Verdict& v) {
    const Pending& p = packages_.at(id);
    emit(t, EventKind::verdict, id, dev,
         {{"decision", classify::decision_name(v.decision)},
          {"truth", p.pkg.true_label == classifier_.query_class},
          {"confidence", v.confidence.value}});
  }

  const ExperimentConfig& cfg_;
  Scheme scheme_;
  int edge_count_;
  classify::SyntheticClassifierSpec classifier_;

  std::priority_queue<Ev, std::vector<Ev>, EvLater> events_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t next_pkg_id_ = 0;

  std::map<std::uint64_t, Pending> packages_;
  std::vector<std::deque<std::uint64_t>> waiting_;
  std::vector<bool> busy_;
  std::vector<std::deque<std::uint64_t>> uplink_waiting_;
  std::vector<bool> uplink_busy_;

  std::optional<schedule::ParameterStore> store_;
  std::vector<estimate::LatencyWindow> windows_;
  std::vector<std::uint64_t> completed_;

  std::map<std::string, std::map<std::pair<long, std::size_t>, std::string>> labels_;

  EventTrace trace_;
};

}  // namespace

void validate(const ExperimentConfig& cfg) {
  const Topology& topo = cfg.topology;
  if (topo.edge_count < 1) throw std::invalid_argument("topology: edge_count must be >= 1");
  if (topo.cameras.empty()) throw std::invalid_argument("topology: no cameras");
  for (const auto& [id, edge] : topo.cameras) {
    if (edge < 0 || edge >= topo.edge_count) {
      throw std::invalid_argument("topology: camera '" + id + "' attached to unknown edge");
    }
  }
  if (static_cast<int>(topo.edge_cloud.size()) != topo.edge_count) {
    throw std::invalid_argument("topology: need one edge_cloud link per edge");
  }
  for (const LinkSpec& l : topo.edge_cloud) {
    if (!(l.latency_s > 0.0) || !(l.bandwidth_bps > 0.0)) {
      throw std::invalid_argument("topology: edge_cloud link parameters must be > 0");
    }
  }
  if (!topo.edge_edge.empty()) {
    if (static_cast<int>(topo.edge_edge.size()) != topo.edge_count) {
      throw std::invalid_argument("topology: edge_edge matrix must be N x N");
    }
    for (int i = 0; i < topo.edge_count; ++i) {
      if (static_cast<int>(topo.edge_edge[i].size()) != topo.edge_count) {
        throw std::invalid_argument("topology: edge_edge matrix must be N x N");
      }
      for (int j = 0; j < topo.edge_count; ++j) {
        if (i == j) continue;
        const LinkSpec& l = topo.edge_edge[i][j];
        if (!(l.latency_s > 0.0) || !(l.bandwidth_bps > 0.0)) {
          throw std::invalid_argument("topology: edge_edge link parameters must be > 0");
        }
      }
    }
  }
  if (!(topo.cloud_infer_time_s > 0.0)) {
    throw std::invalid_argument("topology: cloud_infer_time_s must be > 0");
  }
  if (static_cast<int>(topo.edge_service.size()) != topo.edge_count) {
    throw std::invalid_argument("topology: need one edge_service spec per edge");
  }
  for (const ServiceSpec& s : topo.edge_service) {
    if (s.gamma < 0.0 || !(s.sigma > 0.0)) {
      throw std::invalid_argument("topology: edge_service needs gamma >= 0, sigma > 0");
    }
  }

  const WorkloadSpec& w = cfg.workload;
  if (w.cameras.empty()) throw std::invalid_argument("workload: no cameras");
  for (const CameraWorkload& cam : w.cameras) {
    bool known = false;
    for (const auto& [id, edge] : topo.cameras) known |= id == cam.camera_id;
    if (!known) {
      throw std::invalid_argument("workload: camera '" + cam.camera_id + "' not in topology");
    }
    for (const RatePhase& p : cam.schedule) {
      if (p.rate_per_s < 0.0 || p.duration_s < 0.0) {
        throw std::invalid_argument("workload: negative rate or phase duration");
      }
    }
  }
  if (!(w.positive_fraction >= 0.0 && w.positive_fraction <= 1.0)) {
    throw std::invalid_argument("workload: positive_fraction outside [0,1]");
  }
  if (!(w.byte_mean > 0.0) || w.byte_jitter < 0.0 || w.byte_jitter > w.byte_mean) {
    throw std::invalid_argument("workload: need byte_mean > 0 and 0 <= jitter <= mean");
  }
  if (w.mode == WorkloadSpec::Mode::frame_replay) {
    if (w.frame_dir.empty()) throw std::invalid_argument("workload: frame_dir required");
    vision::validate_config(cfg.detection);
  }

  if (cfg.scheme.scheme == Scheme::surveiledge_fixed) {
    if (!(cfg.scheme.fixed_beta >= 0.0 && cfg.scheme.fixed_beta <= 0.5 &&
          cfg.scheme.fixed_alpha >= 0.5 && cfg.scheme.fixed_alpha <= 1.0)) {
      throw std::invalid_argument("scheme: fixed thresholds need 0<=beta<=0.5<=alpha<=1");
    }
  }
  schedule::validate_controller(cfg.controller);
  estimate::validate_config(cfg.estimator);
  classify::validate_spec(cfg.classifier);
  if (!(cfg.sample_interval_s > 0.0)) {
    throw std::invalid_argument("sample_interval_s must be > 0");
  }
  if (!(cfg.duration_s > 0.0)) throw std::invalid_argument("duration_s must be > 0");
  if (cfg.store_propagation_delay_s < 0.0) {
    throw std::invalid_argument("store_propagation_delay_s must be >= 0");
  }
}

RunResult run(const ExperimentConfig& cfg) {
  validate(cfg);
  Runner runner(cfg);
  return runner.run();
}

std::vector<ComparisonRow> compare_schemes(const ExperimentConfig& base,
                                           const std::vector<std::uint64_t>& seeds,
                                           int jobs) {
  if (seeds.empty()) throw std::invalid_argument("compare_schemes: need at least one seed");
  struct Job {
    Scheme scheme;
    std::uint64_t seed;
    RunMetrics metrics;
  };
  std::vector<Job> queue;
  for (Scheme s : kAllSchemes) {
    for (std::uint64_t seed : seeds) queue.push_back({s, seed, {}});
  }

  auto work = [&](std::size_t i) {
    ExperimentConfig cfg = base;
    cfg.scheme.scheme = queue[i].scheme;
    cfg.seed = queue[i].seed;
    queue[i].metrics = run(cfg).metrics;
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < queue.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= queue.size()) return;
          work(i);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  std::vector<ComparisonRow> rows;
  for (Scheme s : kAllSchemes) {
    ComparisonRow row;
    row.scheme = s;
    for (const Job& job : queue) {
      if (job.scheme != s) continue;
      ++row.runs;
      const RunMetrics& m = job.metrics;
      row.pooled.latencies.insert(row.pooled.latencies.end(), m.latencies.begin(),
                                  m.latencies.end());
      row.pooled.upload_bytes += m.upload_bytes;
      row.pooled.tp += m.tp;
      row.pooled.fp += m.fp;
      row.pooled.tn += m.tn;
      row.pooled.fn += m.fn;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = summary_csv_header();
  for (const ComparisonRow& row : rows) {
    // Bandwidth reported as mean bytes per run.
    RunMetrics m = row.pooled;
    m.upload_bytes = row.runs ? m.upload_bytes / row.runs : 0;
    out += summary_csv_row(scheme_name(row.scheme), m, FScoreParams{});
  }
  return out;
}

}  // namespace surveil::sim
