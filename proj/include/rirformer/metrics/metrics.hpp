#pragma once

#include <span>

#include "rirformer/matrix.hpp"

namespace rirformer::metrics {

// Exact reconstructions report this value instead of −∞.
inline constexpr double kNmseFloorDb = -120.0;

// 10·log10(‖truth − estimate‖²_F / ‖truth‖²_F), clamped below at the floor.
// Throws MetricError for zero-norm ground truth or mismatched shapes.
double nmse_db(const Matrix<double>& truth, const Matrix<double>& estimate);

// Mean over rows of 1 − cos∠(truth_n, estimate_n); in [0, 2].
// Throws MetricError naming the first zero-norm row.
double cosine_distance(const Matrix<double>& truth, const Matrix<double>& estimate);

struct Rt60Estimate {
  double seconds = 0;
  bool reliable = false;  // false when the −25 dB point is never reached
};

// T20: least-squares line through the Schroeder energy decay curve between
// −5 dB and −25 dB, extrapolated to −60 dB.
Rt60Estimate schroeder_rt60(std::span<const double> rir, double fs);

// Backward-integrated energy in dB relative to the total energy.
std::vector<double> energy_decay_curve_db(std::span<const double> rir);

}  // namespace rirformer::metrics
