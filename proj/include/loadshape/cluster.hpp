// Partitioning-around-medoids clustering under DTW, the Euclidean K-means
// baseline, and cluster-quality measures (WC, WB, WCBCR, household entropy).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loadshape/curve.hpp"
#include "loadshape/types.hpp"

namespace loadshape {

enum class Metric { Dtw, Euclidean };

const char* to_string(Metric m);
Metric metric_from_string(const std::string& name);

struct ClusterOptions {
  int max_iter = 100;
  int restarts = 5;
  int threads = 0;  // 0 = hardware concurrency
};

struct ClusterModel {
  Metric metric = Metric::Dtw;
  int k = 0;
  std::vector<Vector> prototypes;   // medoid copies (dtw) or centroids (euclidean)
  std::vector<int> medoid_indices;  // dtw only; empty for euclidean
  std::vector<int> assignments;     // cluster index per input curve, 0-based
  std::vector<double> wc_history;   // WC after every (assign, update) sweep
  double wc = 0.0;
  std::uint64_t seed = 0;
};

struct QualityReport {
  double wc = 0.0;
  double wb = 0.0;
  std::optional<double> wcbcr;  // empty when WB == 0 (e.g. K = 1)
  std::vector<std::pair<std::string, double>> household_entropy;
};

// Symmetric pairwise DTW distance matrix; rows/cols follow input order.
Matrix dtw_distance_matrix(const std::vector<NormalizedCurve>& curves, int threads);

// PAM under a precomputed dissimilarity matrix. Alternates nearest-prototype
// assignment with the medoid update (the member minimizing the summed
// dissimilarity to its cluster) until assignments are stable. Ties resolve
// to the lowest cluster / lowest curve index. Empty clusters are reseeded
// with the curve farthest from their current medoid.
ClusterModel kmedoids_from_matrix(const Matrix& dist, int k, std::uint64_t seed,
                                  const ClusterOptions& options);

ClusterModel kmedoids_dtw(const std::vector<NormalizedCurve>& curves, int k,
                          std::uint64_t seed, const ClusterOptions& options = {});

// Lloyd iteration with squared-Euclidean distance and mean centroids.
ClusterModel kmeans_euclidean(const std::vector<NormalizedCurve>& curves, int k,
                              std::uint64_t seed, const ClusterOptions& options = {});

// Squared Euclidean distance; the baseline dissimilarity.
double euclidean_sq(const Vector& a, const Vector& b);

// WC, WB and WCBCR of a fitted model evaluated under its own metric, plus
// the per-household entropy of the assignments. `household_ids` pairs with
// the curves/assignments by position; households with fewer than two curves
// are skipped in the entropy list.
QualityReport quality(const ClusterModel& model, const std::vector<NormalizedCurve>& curves,
                      const std::vector<std::string>& household_ids = {});

// Base-M Shannon entropy of one household's cluster histogram, M = number of
// curves. Requires M >= 2.
double household_entropy(const std::vector<int>& assignments, int k);

// Similarity of two labelings, 1.0 for identical partitions.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace loadshape
