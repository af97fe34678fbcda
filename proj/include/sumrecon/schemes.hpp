#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "sumrecon/gf2.hpp"
#include "sumrecon/linear_codes.hpp"
#include "sumrecon/sources.hpp"

namespace sumrecon {

// ---------------------------------------------------------------------------
// Lossy modulo-two sum scheme
// ---------------------------------------------------------------------------

/// Encoder matrix pair of the dithered lossy Korner-Marton scheme: the
/// quantizing code with parity check U (m x n) and the r x n hash V.
/// Each encoder sends r bits per block of n symbols.
class LkmDesign {
 public:
  LkmDesign(std::shared_ptr<const LinearCode> quantizer, BitMatrix v,
            std::uint64_t enumeration_cap = kDefaultEnumerationCap);

  /// First r rows of an n x n invertible matrix drawn from `seed`, so that
  /// designs with increasing r are nested (each adds rows to the last).
  static BitMatrix nested_random_v(std::size_t r, std::size_t n, std::uint64_t seed);

  const LinearCode& quantizer() const { return *quantizer_; }
  const BitMatrix& v() const { return v_; }
  /// [U; V], the decoder's constraint matrix.
  const BitMatrix& stacked() const { return stacked_; }
  std::size_t n() const { return v_.cols(); }
  std::size_t m() const { return quantizer_->m(); }
  std::size_t r() const { return v_.rows(); }
  double rate_per_encoder() const { return static_cast<double>(r()) / static_cast<double>(n()); }
  /// n - rank([U; V]): log2 of the number of candidates the decoder scans.
  std::size_t enumeration_dimension() const { return enumeration_dimension_; }
  std::uint64_t enumeration_cap() const { return enumeration_cap_; }

 private:
  std::shared_ptr<const LinearCode> quantizer_;
  BitMatrix v_;
  BitMatrix stacked_;
  std::size_t enumeration_dimension_ = 0;
  std::uint64_t enumeration_cap_;
};

struct LkmEncoding {
  BitVector message;  // V x_hat, length r
  BitVector x_hat;    // Q(x xor dither)
};

LkmEncoding lkm_encode(const LkmDesign& design, const BitVector& x, const BitVector& dither);

struct LkmDecoding {
  BitVector z_tilde;
  bool decode_failed = false;
};

/// Minimum-weight z with U z = U(d_x + d_y) and V z = msg_x + msg_y + V(d_x + d_y).
LkmDecoding lkm_decode(const LkmDesign& design, const BitVector& msg_x, const BitVector& msg_y,
                       const DitherPair& dither);

/// What the two terminals produce for one block.
struct SchemeOutput {
  BitVector z_hat_1;
  BitVector z_hat_2;
  bool decode_failed = false;
  bool psi_mismatch = false;
  /// Every decoder recovered its intended target: the dithered sum
  /// x_hat + y_hat + d_x + d_y for the sum scheme, psi for CR codes.
  bool exact_recovery = true;
  /// Quantization errors at the two encoders (input xor reconstruction).
  BitVector w_1;
  BitVector w_2;
};

/// Both terminals run the identical lossy sum decoder on the exchanged
/// messages, so z_hat_1 == z_hat_2 on every block.
SchemeOutput csr_via_lkm(const LkmDesign& design, const DsbsSample& sample, const DitherPair& dither);

// ---------------------------------------------------------------------------
// Common-reconstruction codes
// ---------------------------------------------------------------------------

/// Dithered quantizer whose decoder output the encoder can predict (psi).
///
/// full_index sends the n-m information bits of the quantized word.
/// syndrome_binned sends bin_matrix * x_hat (k bits) and the decoder picks
/// the codeword of that bin closest to its side information.
class CrCode {
 public:
  enum class Variant { full_index, syndrome_binned };

  static CrCode full_index(std::shared_ptr<const LinearCode> quantizer, std::uint64_t dither_seed,
                           bool dither_enabled = true);
  static CrCode syndrome_binned(std::shared_ptr<const LinearCode> quantizer, BitMatrix bin_matrix,
                                std::uint64_t dither_seed, bool dither_enabled = true);

  /// k x n matrix reading the first k information bits of a codeword.
  /// Nested in k, and injective on the code when k = n - m.
  static BitMatrix information_bin_matrix(const LinearCode& code, std::size_t k);

  /// Same code with a different dither realisation.
  CrCode with_dither_seed(std::uint64_t dither_seed) const;
  CrCode with_dither(BitVector dither) const;

  Variant variant() const { return variant_; }
  const LinearCode& quantizer() const { return *quantizer_; }
  const BitMatrix& bin_matrix() const { return bin_matrix_; }
  const BitMatrix& bin_constraints() const { return bin_constraints_; }
  const BitVector& dither() const { return dither_; }
  std::uint64_t dither_seed() const { return dither_seed_; }
  bool dither_enabled() const { return dither_enabled_; }
  std::size_t message_length() const;
  double rate() const;

 private:
  CrCode(Variant variant, std::shared_ptr<const LinearCode> quantizer, BitMatrix bin_matrix,
         std::uint64_t dither_seed, bool dither_enabled);

  Variant variant_;
  std::shared_ptr<const LinearCode> quantizer_;
  BitMatrix bin_matrix_;
  BitMatrix bin_constraints_;  // [U; bin_matrix]
  BitVector dither_;
  std::uint64_t dither_seed_;
  bool dither_enabled_;
};

struct CrEncoding {
  BitVector message;
  BitVector psi;  // x_hat xor dither: what the encoder expects the decoder to output
  BitVector x_hat;
};

CrEncoding cr_encode(const CrCode& code, const BitVector& x);

struct CrDecoding {
  BitVector reconstruction;
  /// Not observable inside the protocol; always false here. Harnesses
  /// detect disagreement by comparing with psi.
  bool decode_failed = false;
};

CrDecoding cr_decode(const CrCode& code, const BitVector& message, const BitVector& side_info);

/// Terminal 1 outputs psi_1(x1) + decode(code2, msg2, x1); terminal 2
/// outputs decode(code1, msg1, x2) + psi_2(x2).
SchemeOutput csr_via_steinberg(const CrCode& code1, const CrCode& code2, const DsbsSample& sample);

}  // namespace sumrecon
