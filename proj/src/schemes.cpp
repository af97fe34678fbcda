#include "sumrecon/schemes.hpp"

#include <stdexcept>
#include <utility>

#include "sumrecon/errors.hpp"

namespace sumrecon {

namespace {

void require_length(const BitVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw InvalidArgument(std::string(what) + ": expected length " + std::to_string(n) + ", got " +
                          std::to_string(v.size()));
  }
}

BitVector make_dither(std::size_t n, std::uint64_t seed, bool enabled) {
  if (!enabled) return BitVector(n);
  return Xoshiro256(seed).uniform_bits(n);
}

}  // namespace

LkmDesign::LkmDesign(std::shared_ptr<const LinearCode> quantizer, BitMatrix v, std::uint64_t enumeration_cap)
    : quantizer_(std::move(quantizer)), v_(std::move(v)), enumeration_cap_(enumeration_cap) {
  if (!quantizer_) throw InvalidArgument("LkmDesign needs a quantizer");
  if (v_.cols() != quantizer_->n()) throw InvalidArgument("V must have n columns");
  if (v_.rows() > v_.cols()) throw InvalidArgument("V must have r <= n rows");
  if (rank(v_) != v_.rows()) throw ConstructionError("V must have full row rank");
  stacked_ = BitMatrix::vstack(quantizer_->parity_check(), v_);
  enumeration_dimension_ = n() - rank(stacked_);
  if (enumeration_dimension_ >= 63 || (std::uint64_t{1} << enumeration_dimension_) > enumeration_cap_) {
    throw CapacityError("decoder would enumerate 2^" + std::to_string(enumeration_dimension_) +
                        " candidates; raise r or lower n");
  }
}

BitMatrix LkmDesign::nested_random_v(std::size_t r, std::size_t n, std::uint64_t seed) {
  if (r > n) throw InvalidArgument("V must have r <= n rows");
  Xoshiro256 rng(seed);
  // Rows are accepted one at a time while they stay independent, which
  // yields an invertible n x n matrix whose prefixes are nested.
  std::vector<BitVector> rows;
  BitMatrix current = BitMatrix::zero(0, n);
  while (rows.size() < r) {
    BitVector candidate = rng.uniform_bits(n);
    BitMatrix trial = BitMatrix::vstack(current, BitMatrix::from_row_vectors({candidate}, n));
    if (rank(trial) == rows.size() + 1) {
      rows.push_back(std::move(candidate));
      current = std::move(trial);
    }
  }
  return BitMatrix::from_row_vectors(std::move(rows), n);
}

LkmEncoding lkm_encode(const LkmDesign& design, const BitVector& x, const BitVector& dither) {
  require_length(x, design.n(), "lkm_encode source");
  require_length(dither, design.n(), "lkm_encode dither");
  LkmEncoding out;
  out.x_hat = design.quantizer().quantize(x ^ dither);
  out.message = design.v() * out.x_hat;
  return out;
}

LkmDecoding lkm_decode(const LkmDesign& design, const BitVector& msg_x, const BitVector& msg_y,
                       const DitherPair& dither) {
  require_length(msg_x, design.r(), "lkm_decode message");
  require_length(msg_y, design.r(), "lkm_decode message");
  require_length(dither.d_x, design.n(), "lkm_decode dither");
  require_length(dither.d_y, design.n(), "lkm_decode dither");

  const BitVector dither_sum = dither.d_x ^ dither.d_y;
  const BitVector s = design.quantizer().parity_check() * dither_sum;
  const BitVector target = msg_x ^ msg_y ^ (design.v() * dither_sum);
  auto z = min_weight_solve(design.stacked(), BitVector::concat(s, target), design.enumeration_cap());

  LkmDecoding out;
  if (z) {
    out.z_tilde = std::move(*z);
  } else {
    out.z_tilde = BitVector(design.n());
    out.decode_failed = true;
  }
  return out;
}

SchemeOutput csr_via_lkm(const LkmDesign& design, const DsbsSample& sample, const DitherPair& dither) {
  const LkmEncoding e1 = lkm_encode(design, sample.x, dither.d_x);
  const LkmEncoding e2 = lkm_encode(design, sample.y, dither.d_y);

  // Each terminal holds both messages after the exchange and runs the same decoder.
  const LkmDecoding at_1 = lkm_decode(design, e1.message, e2.message, dither);
  const LkmDecoding at_2 = lkm_decode(design, e1.message, e2.message, dither);

  SchemeOutput out;
  out.z_hat_1 = at_1.z_tilde;
  out.z_hat_2 = at_2.z_tilde;
  out.decode_failed = at_1.decode_failed || at_2.decode_failed;
  out.psi_mismatch = false;
  out.w_1 = sample.x ^ dither.d_x ^ e1.x_hat;
  out.w_2 = sample.y ^ dither.d_y ^ e2.x_hat;
  const BitVector dithered_sum = e1.x_hat ^ e2.x_hat ^ dither.d_x ^ dither.d_y;
  out.exact_recovery = !out.decode_failed && at_1.z_tilde == dithered_sum;
  return out;
}

CrCode::CrCode(Variant variant, std::shared_ptr<const LinearCode> quantizer, BitMatrix bin_matrix,
               std::uint64_t dither_seed, bool dither_enabled)
    : variant_(variant),
      quantizer_(std::move(quantizer)),
      bin_matrix_(std::move(bin_matrix)),
      dither_seed_(dither_seed),
      dither_enabled_(dither_enabled) {
  if (!quantizer_) throw InvalidArgument("CR code needs a quantizer");
  if (variant_ == Variant::syndrome_binned) {
    if (bin_matrix_.cols() != quantizer_->n()) throw InvalidArgument("bin matrix must have n columns");
    bin_constraints_ = BitMatrix::vstack(quantizer_->parity_check(), bin_matrix_);
  }
  dither_ = make_dither(quantizer_->n(), dither_seed_, dither_enabled_);
}

CrCode CrCode::full_index(std::shared_ptr<const LinearCode> quantizer, std::uint64_t dither_seed,
                          bool dither_enabled) {
  return CrCode(Variant::full_index, std::move(quantizer), BitMatrix(), dither_seed, dither_enabled);
}

CrCode CrCode::syndrome_binned(std::shared_ptr<const LinearCode> quantizer, BitMatrix bin_matrix,
                               std::uint64_t dither_seed, bool dither_enabled) {
  return CrCode(Variant::syndrome_binned, std::move(quantizer), std::move(bin_matrix), dither_seed,
                dither_enabled);
}

BitMatrix CrCode::information_bin_matrix(const LinearCode& code, std::size_t k) {
  const auto& info = code.information_positions();
  if (k > info.size()) throw InvalidArgument("bin size k must not exceed n - m");
  BitMatrix b(k, code.n());
  for (std::size_t j = 0; j < k; ++j) b.set(j, info[j], true);
  return b;
}

CrCode CrCode::with_dither_seed(std::uint64_t dither_seed) const {
  CrCode copy = *this;
  copy.dither_seed_ = dither_seed;
  copy.dither_ = make_dither(quantizer_->n(), dither_seed, dither_enabled_);
  return copy;
}

CrCode CrCode::with_dither(BitVector dither) const {
  require_length(dither, quantizer_->n(), "CR dither");
  CrCode copy = *this;
  copy.dither_ = std::move(dither);
  copy.dither_enabled_ = !copy.dither_.is_zero();
  return copy;
}

std::size_t CrCode::message_length() const {
  return variant_ == Variant::full_index ? quantizer_->n() - quantizer_->m() : bin_matrix_.rows();
}

double CrCode::rate() const {
  return static_cast<double>(message_length()) / static_cast<double>(quantizer_->n());
}

CrEncoding cr_encode(const CrCode& code, const BitVector& x) {
  require_length(x, code.quantizer().n(), "cr_encode source");
  CrEncoding out;
  out.x_hat = code.quantizer().quantize(x ^ code.dither());
  out.psi = out.x_hat ^ code.dither();
  if (code.variant() == CrCode::Variant::full_index) {
    out.message = code.quantizer().extract_index(out.x_hat);
  } else {
    out.message = code.bin_matrix() * out.x_hat;
  }
  return out;
}

CrDecoding cr_decode(const CrCode& code, const BitVector& message, const BitVector& side_info) {
  const LinearCode& q = code.quantizer();
  require_length(message, code.message_length(), "cr_decode message");
  require_length(side_info, q.n(), "cr_decode side information");

  CrDecoding out;
  if (code.variant() == CrCode::Variant::full_index) {
    out.reconstruction = q.encode_index(message) ^ code.dither();
    return out;
  }
  // Codewords c with bin_matrix c = message; pick c minimising
  // d(c + dither, side_info).
  auto bin = solve_affine(code.bin_constraints(), BitVector::concat(BitVector(q.m()), message));
  if (!bin) throw std::logic_error("cr_decode: empty bin for message " + message.to_string());
  const BitVector c = closest_in_affine_set(*bin, code.dither() ^ side_info);
  out.reconstruction = c ^ code.dither();
  return out;
}

SchemeOutput csr_via_steinberg(const CrCode& code1, const CrCode& code2, const DsbsSample& sample) {
  const CrEncoding e1 = cr_encode(code1, sample.x);
  const CrEncoding e2 = cr_encode(code2, sample.y);
  const CrDecoding at_2 = cr_decode(code1, e1.message, sample.y);
  const CrDecoding at_1 = cr_decode(code2, e2.message, sample.x);

  SchemeOutput out;
  out.z_hat_1 = e1.psi ^ at_1.reconstruction;
  out.z_hat_2 = at_2.reconstruction ^ e2.psi;
  out.decode_failed = at_1.decode_failed || at_2.decode_failed;
  out.psi_mismatch = at_1.reconstruction != e2.psi || at_2.reconstruction != e1.psi;
  out.exact_recovery = !out.psi_mismatch;
  out.w_1 = sample.x ^ e1.psi;
  out.w_2 = sample.y ^ e2.psi;
  return out;
}

}  // namespace sumrecon
