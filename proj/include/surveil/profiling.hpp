#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace surveil::profiling {

// Normalized histogram of observed object classes for one camera.
// Entries are >= 0 and sum to 1 for any camera with observations.
using ProportionVector = std::map<std::string, double>;

struct CameraProfile {
  std::string camera_id;
  ProportionVector vector;
  std::uint64_t observation_count = 0;
};

struct ClusterAssignment {
  std::size_t k = 0;
  std::vector<ProportionVector> centroids;
  std::map<std::string, std::size_t> membership;  // camera_id -> cluster index
  double wcss = 0.0;
  std::vector<double> wcss_history;  // objective after each Lloyd iteration
};

using Observation = std::pair<std::string, std::string>;  // (camera_id, label)

// Per camera, entry(c) = count(c) / total observations of that camera.
// Output sorted by camera_id. Cameras without observations produce no profile.
std::vector<CameraProfile> build_profile(const std::vector<Observation>& observations);

// Lloyd's iteration, Euclidean distance over the union vocabulary (missing
// classes read as 0). Deterministic given seed. An empty cluster is re-seeded
// with the point farthest from its assigned centroid.
ClusterAssignment kmeans(const std::vector<CameraProfile>& profiles, std::size_t k,
                         std::uint64_t seed, std::size_t max_iters = 100);

// Weighted sampling without replacement: per-class quotas by largest-remainder
// rounding of the cluster-profile weights renormalized over non-query classes,
// then uniform within class. Saturates to the whole pool when n exceeds it.
std::vector<std::string> select_negative_samples(
    const ProportionVector& cluster_profile, const std::string& query_class,
    const std::map<std::string, std::vector<std::string>>& pool, std::size_t n,
    std::uint64_t seed);

// Largest-remainder quota allocation; exposed for tests.
std::vector<std::size_t> largest_remainder_quotas(const std::vector<double>& weights,
                                                  std::size_t n);

// CSV `camera_id,label`, header row required.
std::vector<Observation> read_observations_csv(std::istream& in);

// JSON text: {"k":..,"membership":{...},"centroids":[...]}.
std::string assignment_to_json(const ClusterAssignment& a);

}  // namespace surveil::profiling
