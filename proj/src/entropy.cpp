#include "sumrecon/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sumrecon/errors.hpp"

namespace sumrecon {

namespace {

void require_probability(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidArgument(std::string(what) + ": value must lie in [0, 1], got " + std::to_string(x));
  }
}

double plogp(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

}  // namespace

double binary_entropy(double x) {
  require_probability(x, "binary_entropy");
  return plogp(x) + plogp(1.0 - x);
}

double inverse_binary_entropy(double y) {
  require_probability(y, "inverse_binary_entropy");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  double lo = 0.0;
  double hi = 0.5;
  // H_b is strictly increasing on [0, 1/2].
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (binary_entropy(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double bconv(double a, double b) {
  require_probability(a, "bconv");
  require_probability(b, "bconv");
  return a * (1.0 - b) + (1.0 - a) * b;
}

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<CurvePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("curve needs at least one point");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i].x > points_[i - 1].x)) throw InvalidArgument("curve x values must be strictly increasing");
  }
}

double PiecewiseLinearCurve::x_min() const {
  if (points_.empty()) throw InvalidArgument("empty curve");
  return points_.front().x;
}

double PiecewiseLinearCurve::x_max() const {
  if (points_.empty()) throw InvalidArgument("empty curve");
  return points_.back().x;
}

bool PiecewiseLinearCurve::contains(double x) const {
  return !points_.empty() && x >= points_.front().x && x <= points_.back().x;
}

std::optional<double> PiecewiseLinearCurve::try_eval(double x) const {
  if (!contains(x)) return std::nullopt;
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const CurvePoint& p, double v) { return p.x < v; });
  if (it->x == x) return it->y;
  const CurvePoint& right = *it;
  const CurvePoint& left = *(it - 1);
  const double t = (x - left.x) / (right.x - left.x);
  return left.y + t * (right.y - left.y);
}

double PiecewiseLinearCurve::operator()(double x) const {
  auto y = try_eval(x);
  if (!y) {
    throw InvalidArgument("curve evaluated at x=" + std::to_string(x) + " outside its domain");
  }
  return *y;
}

namespace {

// > 0 for a counter-clockwise turn o -> a -> b.
double cross(const CurvePoint& o, const CurvePoint& a, const CurvePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

PiecewiseLinearCurve lower_convex_envelope(std::span<const CurvePoint> samples) {
  if (samples.size() < 2) throw InvalidArgument("lower_convex_envelope: need at least two samples");
  std::vector<CurvePoint> pts(samples.begin(), samples.end());
  std::sort(pts.begin(), pts.end(), [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x == pts[i - 1].x) throw InvalidArgument("lower_convex_envelope: duplicate x value");
  }
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidArgument("lower_convex_envelope: non-finite sample");
  }

  std::vector<CurvePoint> hull;
  hull.reserve(pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  return PiecewiseLinearCurve(std::move(hull));
}

}  // namespace sumrecon
