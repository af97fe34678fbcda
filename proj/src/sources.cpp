#include "sumrecon/sources.hpp"

#include <bit>

#include "sumrecon/errors.hpp"

namespace sumrecon {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64_mix(master + (index + 1) * kGolden);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (std::uint64_t i = 0; i < 4; ++i) s_[i] = derive_seed(seed, i);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

BitVector Xoshiro256::uniform_bits(std::size_t n) {
  BitVector v(n);
  auto words = v.mutable_words();
  for (std::size_t w = 0; w < words.size(); ++w) words[w] = next();
  if (const std::size_t tail = n % 64; tail != 0 && !words.empty()) {
    words.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return v;
}

BitVector Xoshiro256::bernoulli_bits(std::size_t n, double p) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (bernoulli(p)) v.set(i, true);
  }
  return v;
}

DsbsSample sample_dsbs(SourceParam p, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample_dsbs: n must be at least 1");
  Xoshiro256 rng(seed);
  DsbsSample s;
  s.x = rng.uniform_bits(n);
  s.y = s.x ^ rng.bernoulli_bits(n, p.value());
  return s;
}

DitherPair sample_dither(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sample_dither: n must be at least 1");
  Xoshiro256 rx(derive_seed(seed, 0));
  Xoshiro256 ry(derive_seed(seed, 1));
  return DitherPair{rx.uniform_bits(n), ry.uniform_bits(n)};
}

}  // namespace sumrecon
