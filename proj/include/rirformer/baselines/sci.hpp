#pragma once

#include <span>
#include <vector>

#include "rirformer/matrix.hpp"
#include "rirformer/scenario/scenario.hpp"

namespace rirformer::baselines {

// Interpolant through (x, y) pairs: linear for 2 knots, the interpolating
// parabola for 3, a natural cubic spline for 4 or more. Outside the knot
// range it holds the end value.
class Spline {
 public:
  // Knots need not be sorted but must be distinct. Throws FitError.
  static Spline fit(std::span<const double> xs, std::span<const double> ys);

  double operator()(double x) const;
  // First or second derivative inside the hull (0 outside).
  double derivative(double x, int order) const;

  const std::vector<double>& knots() const { return xs_; }
  // Second derivatives at the knots (cubic case; zeros otherwise).
  const std::vector<double>& curvature() const { return m_; }

 private:
  std::size_t interval(double x) const;

  std::vector<double> xs_, ys_, m_;
};

// N × M weights W with spline(targets) = W · values for any knot values.
Matrix<double> spline_weights(std::span<const double> knots, std::span<const double> targets);

// Per-time-sample spline across measured coordinates, evaluated at the
// target coordinates. Throws FitError when fewer than 2 rows are measured.
Matrix<double> sci_reconstruct(const Matrix<double>& measured,
                               std::span<const double> measured_coords,
                               std::span<const double> target_coords);

// SCI on one masked scene, using arc-length coordinates along its array.
// Matches the evaluation predictor signature.
Matrix<double> sci_scene(const scenario::SceneInstance& scene,
                         const scenario::MaskAssignment& mask, const Matrix<double>& measured);

}  // namespace rirformer::baselines
