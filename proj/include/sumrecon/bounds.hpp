#pragma once

#include <cstddef>
#include <string_view>

#include "sumrecon/entropy.hpp"

namespace sumrecon {

/// Crossover probability of a doubly symmetric binary source, 0 <= p <= 1/2.
class SourceParam {
 public:
  explicit SourceParam(double p);
  double value() const { return p_; }

 private:
  double p_;
};

/// A candidate operating point (R1, R2, D). Rates in bits/symbol,
/// D a per-symbol Hamming distortion in [0, 1/2].
struct RegionTriple {
  double r1 = 0.0;
  double r2 = 0.0;
  double d = 0.0;

  static RegionTriple make(double r1, double r2, double d);
};

enum class BoundKind { steinberg_inner, lkm_inner, wz_outer };

std::string_view to_string(BoundKind kind);

/// One bound on the symmetric-rate slice R1 = R2. `prehull` is the curve
/// before time-sharing with the zero-rate point; `hulled` is its lower
/// convex envelope together with (p, 0). Both live on D in [0, p].
struct BoundCurve {
  BoundKind kind;
  SourceParam p;
  PiecewiseLinearCurve prehull;
  PiecewiseLinearCurve hulled;
};

inline constexpr std::size_t kDefaultGridSize = 2001;

/// Uniform grid on [0, p] with both endpoints exact.
double grid_point(double p, std::size_t i, std::size_t grid_size);

/// Common-reconstruction rate-distortion function H_b(p*d) - H_b(d),
/// zero for d >= 1/2.
double rate_cr(SourceParam p, double d);

/// H_b(p*d) - H_b(d) for d < p, zero for d >= p.
double wz_g(SourceParam p, double d);

/// Side-information rate-distortion function: lower convex envelope of
/// wz_g sampled on a uniform grid over [0, p].
PiecewiseLinearCurve rate_wz_curve(SourceParam p, std::size_t grid_size = kDefaultGridSize);

/// The same curve packaged as a BoundCurve, prehull = the sampled wz_g.
BoundCurve wz_outer_curve(SourceParam p, std::size_t grid_size = kDefaultGridSize);

/// Symmetric points (q*q, rate_cr(p, q)) for q in [0, q_max], q_max*q_max = p,
/// hulled together with (p, 0).
BoundCurve steinberg_inner_curve(SourceParam p, std::size_t grid_size = kDefaultGridSize);

/// Points (q*q, H_b(p*q*q) - H_b(q)) on the same q-grid, hulled with (p, 0).
BoundCurve lkm_inner_curve(SourceParam p, std::size_t grid_size = kDefaultGridSize);

/// H_b(p*q*q) - H_b(q), clamped at zero.
double lkm_rate(SourceParam p, double q);

/// Smallest D in [0, 1/2] with rate_cr(p, D) <= rate (bisection).
double inverse_rate_cr(SourceParam p, double rate);

/// q in [0, 1/2] with q*q == d (d clamped to 1/2).
double self_convolution_root(double d);

struct Membership {
  bool in_r_a = false;
  bool in_r_b = false;
  bool in_r_c = false;
  bool in_tse_outer = false;
};

Membership membership(const RegionTriple& t, SourceParam p);

}  // namespace sumrecon
