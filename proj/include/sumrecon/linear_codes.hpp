#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumrecon/gf2.hpp"

namespace sumrecon {

/// Which quantizing codebook to build.
///
///   none        m = 0, C = GF(2)^n, the quantizer is the identity
///   repetition  parity rows e_0 + e_{i+1}, i = 0..n-2; C = {0^n, 1^n}
///   hamming74   n = 7, m = 3; column j (1-based) is j in binary, row 0 the MSB
///   random      m x n with i.i.d. uniform entries, redrawn until full row rank
struct CodeSpec {
  enum class Kind { none, repetition, hamming74, random };

  Kind kind = Kind::none;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;

  static CodeSpec none(std::size_t n) { return {Kind::none, n, 0, 0}; }
  static CodeSpec repetition(std::size_t n) { return {Kind::repetition, n, n == 0 ? 0 : n - 1, 0}; }
  static CodeSpec hamming74() { return {Kind::hamming74, 7, 3, 0}; }
  static CodeSpec random(std::size_t m, std::size_t n, std::uint64_t seed) { return {Kind::random, n, m, seed}; }

  /// Parses "none", "repetition", "hamming7" / "hamming74", or
  /// "random:<m>:<seed>" with block length n supplied separately.
  static CodeSpec parse(const std::string& text, std::size_t n);
  std::string name() const;

  bool operator==(const CodeSpec&) const = default;
};

inline constexpr std::size_t kMaxSyndromeBits = 24;
inline constexpr std::size_t kMaxLeaderSearchLength = 32;
inline constexpr std::size_t kMaxUncodedLength = 64;

/// Binary linear code C = { z : U z = 0 } with its full coset-leader table.
///
/// Leaders are found breadth-first by weight, and within one weight in
/// increasing lexicographic order, so leader(s) is the lexicographically
/// smallest minimum-weight vector of its coset. leader(0) = 0.
class LinearCode {
 public:
  static LinearCode build(const CodeSpec& spec);
  /// Throws ConstructionError unless u has full row rank.
  static LinearCode from_parity_check(BitMatrix u);

  std::size_t n() const { return u_.cols(); }
  std::size_t m() const { return u_.rows(); }
  const BitMatrix& parity_check() const { return u_; }

  BitVector syndrome(const BitVector& x) const;
  BitVector leader(const BitVector& syndrome) const;
  std::size_t coset_count() const { return leaders_.size(); }

  /// Q(x) = x xor leader(U x), the nearest codeword.
  BitVector quantize(const BitVector& x) const;

  /// Mean per-symbol leader weight: the expected quantization distortion
  /// for a uniformly distributed input.
  double q_eff() const { return q_eff_; }
  /// Fraction of coset leaders with a one at each index.
  const std::vector<double>& marginals() const { return marginals_; }
  std::size_t covering_radius() const { return covering_radius_; }

  /// Systematic generator: generator()[j] is the codeword with a one at
  /// information_positions()[j] and zeros at the other information positions.
  const std::vector<BitVector>& generator() const { return generator_; }
  const std::vector<std::size_t>& information_positions() const { return info_positions_; }

  /// Codeword with the given n-m information bits.
  BitVector encode_index(const BitVector& index) const;
  /// Information bits of a codeword; inverse of encode_index on C.
  BitVector extract_index(const BitVector& codeword) const;
  bool contains(const BitVector& z) const;

 private:
  explicit LinearCode(BitMatrix u);
  std::size_t syndrome_key(const BitVector& x) const;

  BitMatrix u_;
  std::vector<std::uint64_t> leaders_;  // indexed by syndrome key, bit i = symbol i
  std::vector<BitVector> generator_;
  std::vector<std::size_t> info_positions_;
  std::vector<double> marginals_;
  double q_eff_ = 0.0;
  std::size_t covering_radius_ = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

/// Minimum-weight z with a z == b, ties broken towards the lexicographically
/// smallest z. nullopt if the system is inconsistent. Throws CapacityError
/// when the solution space has more than `enumeration_cap` elements.
std::optional<BitVector> min_weight_solve(const BitMatrix& a, const BitVector& b,
                                          std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Over v in set.particular + span(set.nullspace_basis), returns the v that
/// minimises weight(v xor offset); ties go to the lexicographically smallest v.
BitVector closest_in_affine_set(const AffineSolution& set, const BitVector& offset,
                                std::uint64_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace sumrecon
