#pragma once

#include <optional>
#include <span>
#include <vector>

namespace sumrecon {

/// H_b(x) in bits, with 0 log 0 = 0. Rejects x outside [0, 1].
double binary_entropy(double x);

/// The unique x in [0, 1/2] with binary_entropy(x) == y (bisection,
/// absolute tolerance well below 1e-12). Rejects y outside [0, 1].
double inverse_binary_entropy(double y);

/// Binary convolution a(1-b) + (1-a)b: crossover of two cascaded BSCs.
double bconv(double a, double b);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const CurvePoint&) const = default;
};

/// Piecewise-linear function through points with strictly increasing x.
/// A single point is allowed and describes a function on a degenerate
/// domain [x, x].
class PiecewiseLinearCurve {
 public:
  PiecewiseLinearCurve() = default;
  explicit PiecewiseLinearCurve(std::vector<CurvePoint> points);

  const std::vector<CurvePoint>& points() const { return points_; }
  double x_min() const;
  double x_max() const;
  bool contains(double x) const;

  /// Linear interpolation between nodes; throws InvalidArgument outside
  /// [x_min, x_max].
  double operator()(double x) const;
  /// Like operator() but returns nullopt outside the domain.
  std::optional<double> try_eval(double x) const;

 private:
  std::vector<CurvePoint> points_;
};

/// Lower convex hull of the samples (Andrew's monotone chain on the lower
/// side), i.e. the greatest convex function below every sample on
/// [min x, max x]. Vertices are a subset of the input. Collinear interior
/// points are dropped. Needs at least two samples with distinct x.
PiecewiseLinearCurve lower_convex_envelope(std::span<const CurvePoint> samples);

}  // namespace sumrecon
