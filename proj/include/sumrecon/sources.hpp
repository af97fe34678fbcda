#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "sumrecon/bounds.hpp"
#include "sumrecon/gf2.hpp"

namespace sumrecon {

/// SplitMix64 output function (Steele, Lea, Flood 2014):
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
std::uint64_t splitmix64_mix(std::uint64_t z);

/// Child seed for stream `index` of `master`: the (index+1)-th output of a
/// SplitMix64 generator seeded with master, i.e.
///   splitmix64_mix(master + (index + 1) * 0x9E3779B97F4A7C15).
/// Trial k of an experiment uses derive_seed(master_seed, k).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// xoshiro256** 1.0 (Blackman, Vigna). The 256-bit state is filled with
/// four consecutive SplitMix64 outputs starting from the seed.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform double in [0, 1) from the top 53 bits of next().
  double uniform();
  /// One Bernoulli(p) draw: uniform() < p.
  bool bernoulli(double p) { return uniform() < p; }
  /// n independent uniform bits; index i of the result is bit (i % 64) of
  /// the (i / 64)-th call to next().
  BitVector uniform_bits(std::size_t n);
  /// n i.i.d. Bernoulli(p) symbols, one uniform() draw each.
  BitVector bernoulli_bits(std::size_t n, double p);

 private:
  std::array<std::uint64_t, 4> s_{};
};

struct DsbsSample {
  BitVector x;
  BitVector y;
};

struct DitherPair {
  BitVector d_x;
  BitVector d_y;
};

/// X uniform, Y = X xor N with N i.i.d. Bernoulli(p). X is drawn first,
/// then N, from a single Xoshiro256(seed) stream.
DsbsSample sample_dsbs(SourceParam p, std::size_t n, std::uint64_t seed);

/// d_x from Xoshiro256(derive_seed(seed, 0)), d_y from
/// Xoshiro256(derive_seed(seed, 1)).
DitherPair sample_dither(std::size_t n, std::uint64_t seed);

}  // namespace sumrecon
