#include "surveil/profiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "surveil/rng.hpp"

namespace surveil::profiling {

std::vector<CameraProfile> build_profile(const std::vector<Observation>& observations) {
  std::map<std::string, std::map<std::string, std::uint64_t>> counts;
  for (const auto& [camera, label] : observations) {
    ++counts[camera][label];
  }
  std::vector<CameraProfile> out;
  out.reserve(counts.size());
  for (const auto& [camera, per_label] : counts) {
    CameraProfile p;
    p.camera_id = camera;
    for (const auto& [label, c] : per_label) p.observation_count += c;
    for (const auto& [label, c] : per_label) {
      p.vector[label] = static_cast<double>(c) / static_cast<double>(p.observation_count);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<std::string> union_vocabulary(const std::vector<CameraProfile>& profiles) {
  std::set<std::string> vocab;
  for (const CameraProfile& p : profiles) {
    for (const auto& [label, v] : p.vector) vocab.insert(label);
  }
  return {vocab.begin(), vocab.end()};
}

std::vector<double> densify(const ProportionVector& v, const std::vector<std::string>& vocab) {
  std::vector<double> out(vocab.size(), 0.0);
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    auto it = v.find(vocab[i]);
    if (it != v.end()) out[i] = it->second;
  }
  return out;
}

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

ClusterAssignment kmeans(const std::vector<CameraProfile>& profiles, std::size_t k,
                         std::uint64_t seed, std::size_t max_iters) {
  const std::size_t n = profiles.size();
  if (k == 0 || k > n) {
    throw std::invalid_argument("kmeans: k must be in [1, #profiles]");
  }
  if (max_iters == 0) {
    throw std::invalid_argument("kmeans: max_iters must be positive");
  }
  for (const CameraProfile& p : profiles) {
    if (p.vector.empty()) {
      throw std::invalid_argument("kmeans: camera with empty proportion vector is unclusterable: " +
                                  p.camera_id);
    }
  }

  const std::vector<std::string> vocab = union_vocabulary(profiles);
  std::vector<std::vector<double>> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = densify(profiles[i].vector, vocab);

  // Initial centroids: k indices from a seeded shuffle.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  DetRng rng{seed, 0x6b6d65616e73ULL};  // stream tag
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::vector<double>> centroids(k);
  for (std::size_t c = 0; c < k; ++c) centroids[c] = pts[order[c]];

  std::vector<std::size_t> assign(n, 0), prev_assign(n, std::size_t(-1));
  std::vector<double> wcss_history;

  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    // Assignment step (points are independent).
    auto assign_all = [&]() {
      const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(static)
      for (long i = 0; i < ln; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < k; ++c) {
          double d = dist2(pts[i], centroids[c]);
          if (d < best) {
            best = d;
            best_c = c;
          }
        }
        assign[i] = best_c;
      }
    };
    assign_all();

    // Re-seed empty clusters with the farthest point.
    for (;;) {
      std::vector<std::size_t> count(k, 0);
      for (std::size_t a : assign) ++count[a];
      std::size_t empty_c = k;
      for (std::size_t c = 0; c < k; ++c) {
        if (count[c] == 0) {
          empty_c = c;
          break;
        }
      }
      if (empty_c == k) break;
      double far = -1.0;
      std::size_t far_i = 0;
      for (std::size_t i = 0; i < n; ++i) {
        double d = dist2(pts[i], centroids[assign[i]]);
        if (d > far) {
          far = d;
          far_i = i;
        }
      }
      centroids[empty_c] = pts[far_i];
      assign_all();
    }

    // Update step: centroid = mean of members.
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<double> mean(vocab.size(), 0.0);
      std::size_t members = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (assign[i] != c) continue;
        ++members;
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += pts[i][j];
      }
      for (double& v : mean) v /= static_cast<double>(members);
      centroids[c] = std::move(mean);
    }

    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i) wcss += dist2(pts[i], centroids[assign[i]]);
    wcss_history.push_back(wcss);

    if (assign == prev_assign) break;
    prev_assign = assign;
  }

  ClusterAssignment out;
  out.k = k;
  out.wcss = wcss_history.back();
  out.wcss_history = std::move(wcss_history);
  out.centroids.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t j = 0; j < vocab.size(); ++j) {
      out.centroids[c][vocab[j]] = centroids[c][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.membership[profiles[i].camera_id] = assign[i];
  return out;
}

std::vector<std::size_t> largest_remainder_quotas(const std::vector<double>& weights,
                                                  std::size_t n) {
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::size_t> quota(weights.size(), 0);
  if (weights.empty() || n == 0) return quota;

  std::vector<double> share(weights.size());
  if (total <= 0.0) {
    // All-zero weights: fall back to uniform shares.
    std::fill(share.begin(), share.end(),
              static_cast<double>(n) / static_cast<double>(weights.size()));
  } else {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      share[i] = static_cast<double>(n) * weights[i] / total;
    }
  }

  std::size_t assigned = 0;
  std::vector<std::pair<double, std::size_t>> remainders;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    quota[i] = static_cast<std::size_t>(std::floor(share[i]));
    assigned += quota[i];
    remainders.emplace_back(share[i] - std::floor(share[i]), i);
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::size_t j = 0; assigned < n; ++j, ++assigned) {
    ++quota[remainders[j % remainders.size()].second];
  }
  return quota;
}

std::vector<std::string> select_negative_samples(
    const ProportionVector& cluster_profile, const std::string& query_class,
    const std::map<std::string, std::vector<std::string>>& pool, std::size_t n,
    std::uint64_t seed) {
  std::vector<std::string> classes;
  for (const auto& [label, ids] : pool) {
    if (label == query_class || ids.empty()) continue;
    classes.push_back(label);
  }
  if (classes.empty()) {
    throw std::invalid_argument("select_negative_samples: no non-query classes in pool");
  }

  std::size_t available = 0;
  for (const std::string& c : classes) available += pool.at(c).size();
  if (n >= available) {
    // Saturation: the entire non-query pool, class-sorted.
    std::vector<std::string> all;
    for (const std::string& c : classes) {
      const auto& ids = pool.at(c);
      all.insert(all.end(), ids.begin(), ids.end());
    }
    return all;
  }

  std::vector<double> weights(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto it = cluster_profile.find(classes[i]);
    weights[i] = it == cluster_profile.end() ? 0.0 : it->second;
  }

  // Quotas by largest remainder, capping at pool size and redistributing
  // the deficit over classes with remaining capacity.
  std::vector<std::size_t> quota(classes.size(), 0);
  std::vector<bool> open(classes.size(), true);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::vector<double> w;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (open[i]) {
        w.push_back(weights[i]);
        idx.push_back(i);
      }
    }
    std::vector<std::size_t> q = largest_remainder_quotas(w, remaining);
    remaining = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      std::size_t i = idx[j];
      std::size_t cap = pool.at(classes[i]).size() - quota[i];
      std::size_t take = std::min(q[j], cap);
      quota[i] += take;
      remaining += q[j] - take;
      if (quota[i] == pool.at(classes[i]).size()) open[i] = false;
    }
  }

  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& ids = pool.at(classes[i]);
    std::vector<std::size_t> order(ids.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    DetRng rng{seed, 0x6e6567736d70ULL, static_cast<std::uint64_t>(i)};
    // Partial Fisher-Yates: the first quota[i] slots are the sample.
    for (std::size_t j = 0; j < quota[i]; ++j) {
      std::size_t pick = j + static_cast<std::size_t>(rng.next_below(order.size() - j));
      std::swap(order[j], order[pick]);
      out.push_back(ids[order[j]]);
    }
  }
  return out;
}

std::vector<Observation> read_observations_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("observations csv: empty input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "camera_id,label") {
    throw std::runtime_error("observations csv: expected header 'camera_id,label'");
  }
  std::vector<Observation> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("observations csv: malformed line " + std::to_string(line_no));
    }
    out.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  return out;
}

std::string assignment_to_json(const ClusterAssignment& a) {
  nlohmann::ordered_json j;
  j["k"] = a.k;
  nlohmann::ordered_json membership = nlohmann::ordered_json::object();
  for (const auto& [camera, cluster] : a.membership) membership[camera] = cluster;
  j["membership"] = membership;
  nlohmann::ordered_json centroids = nlohmann::ordered_json::array();
  for (const ProportionVector& c : a.centroids) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    for (const auto& [label, v] : c) e[label] = v;
    centroids.push_back(e);
  }
  j["centroids"] = centroids;
  j["wcss"] = a.wcss;
  return j.dump(2);
}

}  // namespace surveil::profiling
