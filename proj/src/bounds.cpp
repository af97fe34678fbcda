#include "sumrecon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sumrecon/errors.hpp"

namespace sumrecon {

namespace {

// Slack for comparisons against curve values computed in floating point.
constexpr double kMembershipSlack = 1e-12;

void require_grid(std::size_t grid_size) {
  if (grid_size < 3) throw InvalidArgument("grid size must be at least 3");
}

void require_distortion(double d) {
  if (!(d >= 0.0) || !std::isfinite(d)) throw InvalidArgument("distortion must be a finite value >= 0");
}

PiecewiseLinearCurve degenerate_curve() { return PiecewiseLinearCurve({{0.0, 0.0}}); }

// Shared construction for the two inner bounds: both are parametrised by
// the per-encoder test-channel crossover q with D = q*q.
template <typename RateFn>
BoundCurve inner_curve(BoundKind kind, SourceParam p, std::size_t grid_size, RateFn rate) {
  require_grid(grid_size);
  const double pv = p.value();
  if (pv == 0.0) return BoundCurve{kind, p, degenerate_curve(), degenerate_curve()};

  const double q_max = self_convolution_root(pv);
  std::vector<CurvePoint> pre;
  pre.reserve(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double q = grid_point(q_max, i, grid_size);
    const double d = (i + 1 == grid_size) ? pv : std::min(bconv(q, q), pv);
    if (!pre.empty() && !(d > pre.back().x)) continue;
    pre.push_back({d, rate(q)});
  }

  std::vector<CurvePoint> samples(pre.begin(), pre.end() - 1);
  samples.push_back({pv, 0.0});
  PiecewiseLinearCurve hulled = lower_convex_envelope(samples);
  return BoundCurve{kind, p, PiecewiseLinearCurve(std::move(pre)), std::move(hulled)};
}

}  // namespace

SourceParam::SourceParam(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 0.5)) throw InvalidArgument("source parameter p must lie in [0, 1/2], got " + std::to_string(p));
}

RegionTriple RegionTriple::make(double r1, double r2, double d) {
  if (!(r1 >= 0.0) || !(r2 >= 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
    throw InvalidArgument("rates must be finite and non-negative");
  }
  if (!(d >= 0.0 && d <= 0.5)) throw InvalidArgument("distortion must lie in [0, 1/2]");
  return RegionTriple{r1, r2, d};
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::steinberg_inner:
      return "steinberg_inner";
    case BoundKind::lkm_inner:
      return "lkm_inner";
    case BoundKind::wz_outer:
      return "wz_outer";
  }
  return "unknown";
}

double grid_point(double p, std::size_t i, std::size_t grid_size) {
  if (i + 1 >= grid_size) return p;
  return p * static_cast<double>(i) / static_cast<double>(grid_size - 1);
}

double rate_cr(SourceParam p, double d) {
  require_distortion(d);
  if (d >= 0.5) return 0.0;
  return std::max(0.0, binary_entropy(bconv(p.value(), d)) - binary_entropy(d));
}

double wz_g(SourceParam p, double d) {
  require_distortion(d);
  if (d >= p.value()) return 0.0;
  return std::max(0.0, binary_entropy(bconv(p.value(), d)) - binary_entropy(d));
}

double lkm_rate(SourceParam p, double q) {
  if (!(q >= 0.0 && q <= 0.5)) throw InvalidArgument("q must lie in [0, 1/2]");
  return std::max(0.0, binary_entropy(bconv(p.value(), bconv(q, q))) - binary_entropy(q));
}

double self_convolution_root(double d) {
  require_distortion(d);
  if (d >= 0.5) return 0.5;
  // 2q(1-q) = d  =>  q = (1 - sqrt(1 - 2d)) / 2, written to avoid cancellation.
  return d / (1.0 + std::sqrt(1.0 - 2.0 * d));
}

BoundCurve wz_outer_curve(SourceParam p, std::size_t grid_size) {
  require_grid(grid_size);
  const double pv = p.value();
  if (pv == 0.0) return BoundCurve{BoundKind::wz_outer, p, degenerate_curve(), degenerate_curve()};
  std::vector<CurvePoint> samples;
  samples.reserve(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double d = grid_point(pv, i, grid_size);
    samples.push_back({d, wz_g(p, d)});
  }
  PiecewiseLinearCurve hulled = lower_convex_envelope(samples);
  return BoundCurve{BoundKind::wz_outer, p, PiecewiseLinearCurve(std::move(samples)), std::move(hulled)};
}

PiecewiseLinearCurve rate_wz_curve(SourceParam p, std::size_t grid_size) {
  return wz_outer_curve(p, grid_size).hulled;
}

BoundCurve steinberg_inner_curve(SourceParam p, std::size_t grid_size) {
  return inner_curve(BoundKind::steinberg_inner, p, grid_size, [p](double q) { return rate_cr(p, q); });
}

BoundCurve lkm_inner_curve(SourceParam p, std::size_t grid_size) {
  return inner_curve(BoundKind::lkm_inner, p, grid_size, [p](double q) { return lkm_rate(p, q); });
}

double inverse_rate_cr(SourceParam p, double rate) {
  if (!(rate >= 0.0)) throw InvalidArgument("rate must be non-negative");
  if (rate_cr(p, 0.0) <= rate) return 0.0;
  // rate_cr is decreasing on [0, 1/2] and vanishes at 1/2.
  double lo = 0.0;
  double hi = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (rate_cr(p, mid) <= rate) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Membership membership(const RegionTriple& t, SourceParam p) {
  const RegionTriple checked = RegionTriple::make(t.r1, t.r2, t.d);
  const double pv = p.value();
  Membership m;

  m.in_r_b = checked.d >= pv;

  const double d1 = inverse_rate_cr(p, checked.r1);
  const double d2 = inverse_rate_cr(p, checked.r2);
  m.in_r_a = checked.d + kMembershipSlack >= bconv(d1, d2);

  // R_C: some q with q*q <= d and H_b(p*q*q) - H_b(q) <= min(r1, r2).
  const double r_min = std::min(checked.r1, checked.r2);
  const double q_limit = self_convolution_root(checked.d);
  constexpr int kScan = 4096;
  for (int i = 0; i <= kScan && !m.in_r_c; ++i) {
    const double q = (i == kScan) ? q_limit : q_limit * static_cast<double>(i) / kScan;
    if (lkm_rate(p, q) <= r_min + kMembershipSlack) m.in_r_c = true;
  }

  double r_wz = 0.0;
  if (checked.d < pv) r_wz = rate_wz_curve(p)(checked.d);
  m.in_tse_outer = checked.r1 + kMembershipSlack >= r_wz && checked.r2 + kMembershipSlack >= r_wz;
  return m;
}

}  // namespace sumrecon
