// Constrained dynamic time warping.
//
// The step pattern admits five moves, limiting the warp to a +-2 index
// window around the diagonal: a point of one sequence is compared with at
// most two earlier or two later points of the other. Local cost is the
// squared difference. The accumulated cost of a move includes one local term
// per index the move advances on its longer axis:
//
//   (1,1): d(n, m)
//   (2,1): d(n-1, m) + d(n, m)
//   (1,2): d(n, m-1) + d(n, m)
//   (3,1): d(n-2, m) + d(n-1, m) + d(n, m)
//   (1,3): d(n, m-2) + d(n, m-1) + d(n, m)
//
// The grid anchors at C(0,0) = d(x0, y0); moves referencing indices before
// the start are inadmissible, and cells unreachable from the origin hold
// +infinity.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "loadshape/error.hpp"
#include "loadshape/types.hpp"

namespace loadshape {

struct DtwStep {
  int dn;
  int dm;
};

// Tie-break order is the declaration order: diagonal first.
inline constexpr std::array<DtwStep, 5> kDtwSteps = {{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}}};

inline constexpr int kDtwMinLength = 4;       // pattern reaches back 3 indices
inline constexpr int kDtwBruteMaxLength = 8;  // exhaustive enumeration guard

using WarpPath = std::vector<std::pair<int, int>>;  // 0-based (n, m) cells

namespace detail {

template <typename DX, typename DY>
double dtw_step_cost(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                     int n, int m, const DtwStep& step) {
  auto d = [&](int i, int j) {
    const double diff = static_cast<double>(x[i]) - static_cast<double>(y[j]);
    return diff * diff;
  };
  double cost = 0.0;
  for (int a = step.dn - 1; a >= 1; --a) cost += d(n - a, m);
  for (int b = step.dm - 1; b >= 1; --b) cost += d(n, m - b);
  cost += d(n, m);
  return cost;
}

template <typename DX, typename DY>
void check_dtw_inputs(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::LengthMismatch,
                "sequences have lengths " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  if (x.size() < kDtwMinLength)
    throw Error(ErrorCode::TooShort, "sequences must have at least " +
                                         std::to_string(kDtwMinLength) + " samples");
}

}  // namespace detail

// Accumulated cost grid C with C(0,0) = d(x0,y0) and +inf for cells that no
// admissible path reaches. `step_choice` records the arg-min move per cell
// (index into kDtwSteps, -1 at the origin and unreachable cells).
struct AccumulatedCostMatrix {
  Matrix cost;
  Eigen::MatrixXi step_choice;
};

template <typename DX, typename DY>
AccumulatedCostMatrix dtw_cost_matrix(const Eigen::MatrixBase<DX>& x,
                                      const Eigen::MatrixBase<DY>& y) {
  detail::check_dtw_inputs(x, y);
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();

  AccumulatedCostMatrix acc;
  acc.cost = Matrix::Constant(n, m, kInf);
  acc.step_choice = Eigen::MatrixXi::Constant(n, m, -1);

  const double d00 = (static_cast<double>(x[0]) - static_cast<double>(y[0])) *
                     (static_cast<double>(x[0]) - static_cast<double>(y[0]));
  acc.cost(0, 0) = d00;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == 0 && j == 0) continue;
      double best = kInf;
      int best_step = -1;
      for (int s = 0; s < static_cast<int>(kDtwSteps.size()); ++s) {
        const auto& step = kDtwSteps[s];
        const int pi = i - step.dn;
        const int pj = j - step.dm;
        if (pi < 0 || pj < 0) continue;
        const double prev = acc.cost(pi, pj);
        if (prev == kInf) continue;
        const double candidate = prev + detail::dtw_step_cost(x, y, i, j, step);
        if (candidate < best) {
          best = candidate;
          best_step = s;
        }
      }
      acc.cost(i, j) = best;
      acc.step_choice(i, j) = best_step;
    }
  }
  return acc;
}

// DTW dissimilarity between equal-length sequences (squared-difference local
// cost summed along the optimal admissible path).
template <typename DX, typename DY>
double dtw_distance(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  const AccumulatedCostMatrix acc = dtw_cost_matrix(x, y);
  return acc.cost(acc.cost.rows() - 1, acc.cost.cols() - 1);
}

// Optimal warp path from (0,0) to (n-1,n-1). Ties between moves of equal
// accumulated cost resolve in kDtwSteps order.
template <typename DX, typename DY>
WarpPath dtw_path(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  const AccumulatedCostMatrix acc = dtw_cost_matrix(x, y);
  WarpPath reversed;
  int i = static_cast<int>(acc.cost.rows()) - 1;
  int j = static_cast<int>(acc.cost.cols()) - 1;
  reversed.emplace_back(i, j);
  while (i != 0 || j != 0) {
    const int s = acc.step_choice(i, j);
    if (s < 0) throw Error(ErrorCode::InvalidArgument, "no admissible path to end cell");
    i -= kDtwSteps[s].dn;
    j -= kDtwSteps[s].dm;
    reversed.emplace_back(i, j);
  }
  return WarpPath(reversed.rbegin(), reversed.rend());
}

// Exhaustive enumeration of every admissible path; the independent oracle
// for dtw_distance. Exponential, hence the length guard.
template <typename DX, typename DY>
double dtw_bruteforce(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::LengthMismatch, "sequences must have equal length");
  if (x.size() > kDtwBruteMaxLength)
    throw Error(ErrorCode::TooLong, "brute-force enumeration is limited to length " +
                                        std::to_string(kDtwBruteMaxLength));
  if (x.size() == 0) throw Error(ErrorCode::TooShort, "empty sequence");

  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double best = kInf;

  // Depth-first over moves, accumulating a running cost.
  struct Frame {
    int i, j, step;
    double cost;
  };
  std::vector<Frame> stack;
  const double d00 = (static_cast<double>(x[0]) - static_cast<double>(y[0])) *
                     (static_cast<double>(x[0]) - static_cast<double>(y[0]));
  stack.push_back({0, 0, 0, d00});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.i == n - 1 && top.j == m - 1) {
      best = std::min(best, top.cost);
      stack.pop_back();
      continue;
    }
    if (top.step >= static_cast<int>(kDtwSteps.size())) {
      stack.pop_back();
      continue;
    }
    const auto& step = kDtwSteps[top.step++];
    const int ni = top.i + step.dn;
    const int nj = top.j + step.dm;
    if (ni >= n || nj >= m) continue;
    stack.push_back({ni, nj, 0, top.cost + detail::dtw_step_cost(x, y, ni, nj, step)});
  }
  return best;
}

// Cost of an explicit path under the step-pattern accounting; used to verify
// that dtw_path is consistent with dtw_distance.
template <typename DX, typename DY>
double warp_path_cost(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                      const WarpPath& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "empty path");
  const double d00 = (static_cast<double>(x[path[0].first]) -
                      static_cast<double>(y[path[0].second])) *
                     (static_cast<double>(x[path[0].first]) -
                      static_cast<double>(y[path[0].second]));
  double cost = d00;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const DtwStep step{path[k].first - path[k - 1].first,
                       path[k].second - path[k - 1].second};
    bool admissible = false;
    for (const auto& candidate : kDtwSteps)
      if (candidate.dn == step.dn && candidate.dm == step.dm) admissible = true;
    if (!admissible) throw Error(ErrorCode::InvalidArgument, "inadmissible step in path");
    cost += detail::dtw_step_cost(x, y, path[k].first, path[k].second, step);
  }
  return cost;
}

}  // namespace loadshape
