#include "sumrecon/linear_codes.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "sumrecon/errors.hpp"
#include "sumrecon/format.hpp"
#include "sumrecon/sources.hpp"

namespace sumrecon {

namespace {

constexpr int kMaxRandomDraws = 10000;

BitMatrix repetition_parity(std::size_t n) {
  BitMatrix u(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    u.set(i, 0, true);
    u.set(i, i + 1, true);
  }
  return u;
}

BitMatrix hamming74_parity() {
  BitMatrix u(3, 7);
  for (std::size_t col = 0; col < 7; ++col) {
    const std::size_t j = col + 1;
    for (std::size_t row = 0; row < 3; ++row) u.set(row, col, (j >> (2 - row)) & 1U);
  }
  return u;
}

BitMatrix random_full_rank(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m > n) throw ConstructionError("random code needs m <= n");
  Xoshiro256 rng(seed);
  for (int attempt = 0; attempt < kMaxRandomDraws; ++attempt) {
    std::vector<BitVector> rows;
    rows.reserve(m);
    for (std::size_t r = 0; r < m; ++r) rows.push_back(rng.uniform_bits(n));
    BitMatrix u = BitMatrix::from_row_vectors(std::move(rows), n);
    if (rank(u) == m) return u;
  }
  throw ConstructionError("could not draw a full-rank random parity-check matrix");
}

// Reverses the low n bits of v.
std::uint64_t reverse_low_bits(std::uint64_t v, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((v >> i) & 1U) out |= std::uint64_t{1} << (n - 1 - i);
  }
  return out;
}

std::uint64_t enumeration_size(std::size_t dimension, std::uint64_t cap) {
  if (dimension >= 63 || (std::uint64_t{1} << dimension) > cap) {
    throw CapacityError("solution space of dimension " + std::to_string(dimension) +
                        " exceeds the enumeration cap of " + std::to_string(cap));
  }
  return std::uint64_t{1} << dimension;
}

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

CodeSpec CodeSpec::parse(const std::string& text, std::size_t n) {
  if (text == "none") return none(n);
  if (text == "repetition") return repetition(n);
  if (text == "hamming7" || text == "hamming74" || text == "hamming(7,4)") {
    if (n != 0 && n != 7) throw InvalidArgument("hamming7 code requires n = 7");
    return hamming74();
  }
  if (text.rfind("random:", 0) == 0) {
    const auto rest = text.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InvalidArgument("random code spec must be random:<m>:<seed>");
    return random(parse_unsigned(rest.substr(0, colon)), n, parse_unsigned(rest.substr(colon + 1)));
  }
  throw InvalidArgument("unknown code kind '" + text + "'");
}

std::string CodeSpec::name() const {
  switch (kind) {
    case Kind::none:
      return "none";
    case Kind::repetition:
      return "repetition";
    case Kind::hamming74:
      return "hamming7";
    case Kind::random:
      return "random:" + std::to_string(m) + ":" + std::to_string(seed);
  }
  return "unknown";
}

LinearCode LinearCode::build(const CodeSpec& spec) {
  switch (spec.kind) {
    case CodeSpec::Kind::none:
      if (spec.n == 0) throw InvalidArgument("code length must be at least 1");
      return from_parity_check(BitMatrix::zero(0, spec.n));
    case CodeSpec::Kind::repetition:
      if (spec.n < 2) throw InvalidArgument("repetition code needs n >= 2");
      if (spec.n - 1 > kMaxSyndromeBits) throw CapacityError("repetition code has too many syndrome bits");
      return from_parity_check(repetition_parity(spec.n));
    case CodeSpec::Kind::hamming74:
      return from_parity_check(hamming74_parity());
    case CodeSpec::Kind::random:
      if (spec.n == 0) throw InvalidArgument("code length must be at least 1");
      if (spec.m > kMaxSyndromeBits) throw CapacityError("random code has too many syndrome bits");
      if (spec.n > kMaxLeaderSearchLength) throw CapacityError("random code is too long for leader search");
      return from_parity_check(random_full_rank(spec.m, spec.n, spec.seed));
  }
  throw InvalidArgument("unknown code kind");
}

LinearCode LinearCode::from_parity_check(BitMatrix u) {
  if (u.cols() == 0) throw InvalidArgument("code length must be at least 1");
  if (u.rows() > kMaxSyndromeBits) {
    throw CapacityError("coset table would need 2^" + std::to_string(u.rows()) + " entries");
  }
  if (u.rows() > 0 && u.cols() > kMaxLeaderSearchLength) {
    throw CapacityError("leader search supports n <= " + std::to_string(kMaxLeaderSearchLength));
  }
  if (u.cols() > kMaxUncodedLength) throw CapacityError("code length exceeds 64");
  if (rank(u) != u.rows()) throw ConstructionError("parity-check matrix is not full row rank");
  return LinearCode(std::move(u));
}

LinearCode::LinearCode(BitMatrix u) : u_(std::move(u)) {
  const std::size_t n = u_.cols();
  const std::size_t m = u_.rows();
  const std::size_t cosets = std::size_t{1} << m;

  // Syndrome of a single flip at index i, keyed the same way as syndrome_key.
  std::vector<std::uint64_t> column_key(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < m; ++r) {
      if (u_.get(r, i)) column_key[i] |= std::uint64_t{1} << r;
    }
  }

  constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();
  leaders_.assign(cosets, kUnset);
  std::size_t remaining = cosets;
  // Patterns are walked as n-bit integers with symbol 0 in the most
  // significant position, so increasing integers are increasing strings.
  for (std::size_t w = 0; w <= n && remaining > 0; ++w) {
    const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
    std::uint64_t v = w == 0 ? 0 : (w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1);
    while (remaining > 0) {
      std::uint64_t key = 0;
      for (std::uint64_t bits = v; bits != 0; bits &= bits - 1) {
        key ^= column_key[n - 1 - static_cast<std::size_t>(std::countr_zero(bits))];
      }
      if (leaders_[key] == kUnset) {
        leaders_[key] = reverse_low_bits(v, n);
        --remaining;
      }
      if (v == 0) break;
      // Gosper's hack: next larger integer with the same popcount.
      const std::uint64_t c = v & (~v + 1);
      const std::uint64_t r = v + c;
      if (r == 0) break;
      v = (((r ^ v) >> 2) / c) | r;
      if (limit != 0 && v >= limit) break;
    }
  }
  if (remaining != 0) throw ConstructionError("coset table incomplete");

  marginals_.assign(n, 0.0);
  std::size_t total_weight = 0;
  std::vector<std::size_t> ones(n, 0);
  for (auto mask : leaders_) {
    const auto w = static_cast<std::size_t>(std::popcount(mask));
    total_weight += w;
    covering_radius_ = std::max(covering_radius_, w);
    for (std::size_t i = 0; i < n; ++i) ones[i] += (mask >> i) & 1U;
  }
  for (std::size_t i = 0; i < n; ++i) marginals_[i] = static_cast<double>(ones[i]) / static_cast<double>(cosets);
  q_eff_ = static_cast<double>(total_weight) / (static_cast<double>(cosets) * static_cast<double>(n));

  auto kernel = solve_affine(u_, BitVector(m));
  generator_ = std::move(kernel->nullspace_basis);
  info_positions_ = std::move(kernel->free_columns);
}

std::size_t LinearCode::syndrome_key(const BitVector& x) const {
  if (x.size() != n()) throw InvalidArgument("input length does not match code length");
  std::size_t key = 0;
  for (std::size_t r = 0; r < m(); ++r) {
    if (u_.row(r).dot(x)) key |= std::size_t{1} << r;
  }
  return key;
}

BitVector LinearCode::syndrome(const BitVector& x) const { return u_ * x; }

BitVector LinearCode::leader(const BitVector& syndrome) const {
  if (syndrome.size() != m()) throw InvalidArgument("syndrome length does not match code");
  std::size_t key = 0;
  for (std::size_t r = 0; r < m(); ++r) {
    if (syndrome.get(r)) key |= std::size_t{1} << r;
  }
  return BitVector::from_mask(leaders_[key], n());
}

BitVector LinearCode::quantize(const BitVector& x) const {
  return x ^ BitVector::from_mask(leaders_[syndrome_key(x)], n());
}

bool LinearCode::contains(const BitVector& z) const { return syndrome_key(z) == 0; }

BitVector LinearCode::encode_index(const BitVector& index) const {
  if (index.size() != generator_.size()) throw InvalidArgument("index length must be n - m");
  BitVector c(n());
  for (std::size_t j = 0; j < generator_.size(); ++j) {
    if (index.get(j)) c ^= generator_[j];
  }
  return c;
}

BitVector LinearCode::extract_index(const BitVector& codeword) const {
  if (codeword.size() != n()) throw InvalidArgument("codeword length does not match code");
  BitVector index(info_positions_.size());
  for (std::size_t j = 0; j < info_positions_.size(); ++j) {
    if (codeword.get(info_positions_[j])) index.set(j, true);
  }
  return index;
}

BitVector closest_in_affine_set(const AffineSolution& set, const BitVector& offset, std::uint64_t enumeration_cap) {
  const std::uint64_t count = enumeration_size(set.nullspace_basis.size(), enumeration_cap);
  BitVector current = set.particular;
  BitVector shifted = current ^ offset;
  BitVector best = current;
  std::size_t best_weight = shifted.weight();
  // Gray-code walk: step i flips basis vector countr_zero(i).
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto& b = set.nullspace_basis[static_cast<std::size_t>(std::countr_zero(i))];
    xor_into(current.mutable_words(), b.words());
    xor_into(shifted.mutable_words(), b.words());
    const std::size_t w = shifted.weight();
    if (w < best_weight || (w == best_weight && lex_less(current, best))) {
      best = current;
      best_weight = w;
    }
  }
  return best;
}

std::optional<BitVector> min_weight_solve(const BitMatrix& a, const BitVector& b, std::uint64_t enumeration_cap) {
  auto set = solve_affine(a, b);
  if (!set) return std::nullopt;
  return closest_in_affine_set(*set, BitVector(a.cols()), enumeration_cap);
}

}  // namespace sumrecon
