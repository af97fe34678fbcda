#include "sumrecon/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "sumrecon/errors.hpp"

namespace sumrecon {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

void require_same_length(const BitVector& a, const BitVector& b, const char* what) {
  if (a.size() != b.size()) {
    throw InvalidArgument(std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c == '1') {
      v.set(i, true);
    } else if (c != '0') {
      throw InvalidArgument("bit literal may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_mask(std::uint64_t mask, std::size_t len) {
  if (len > kWordBits) throw InvalidArgument("from_mask: length exceeds 64");
  BitVector v(len);
  if (len == 0) return v;
  if (len < kWordBits) mask &= (std::uint64_t{1} << len) - 1;
  v.words_[0] = mask;
  return v;
}

BitVector BitVector::concat(const BitVector& head, const BitVector& tail) {
  BitVector out(head.size() + tail.size());
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head.get(i)) out.set(i, true);
  }
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail.get(i)) out.set(head.size() + i, true);
  }
  return out;
}

void BitVector::check_index(std::size_t i) const {
  if (i >= len_) throw InvalidArgument("bit index out of range");
}

bool BitVector::get(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
  check_index(i);
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

void BitVector::flip(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVector::dot(const BitVector& other) const {
  require_same_length(*this, other, "dot");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other, "add");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::uint64_t BitVector::to_mask() const {
  if (len_ > kWordBits) throw InvalidArgument("to_mask: length exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

BitVector add(const BitVector& a, const BitVector& b) { return a ^ b; }

std::size_t weight(const BitVector& v) { return v.weight(); }

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "hamming_distance");
  std::size_t d = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return d;
}

bool lex_less(const BitVector& a, const BitVector& b) {
  require_same_length(a, b, "lex_less");
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff != 0) {
      // The lowest differing index decides; the smaller vector has a zero there.
      const auto bit = std::countr_zero(diff);
      return ((wa[i] >> bit) & 1U) == 0;
    }
  }
  return false;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix();
  std::vector<BitVector> vs;
  vs.reserve(rows.size());
  for (const auto& r : rows) vs.push_back(BitVector::from_string(r));
  const std::size_t cols = vs.front().size();
  return from_row_vectors(std::move(vs), cols);
}

BitMatrix BitMatrix::from_row_vectors(std::vector<BitVector> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument("matrix rows must all have the same length");
  }
  BitMatrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidArgument("vstack: column counts differ");
  std::vector<BitVector> rows = top.data_;
  rows.insert(rows.end(), bottom.data_.begin(), bottom.data_.end());
  return from_row_vectors(std::move(rows), top.cols());
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_) throw InvalidArgument("row index out of range");
  return data_[r].get(c);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_) throw InvalidArgument("row index out of range");
  data_[r].set(c, value);
}

const BitVector& BitMatrix::row(std::size_t r) const {
  if (r >= rows_) throw InvalidArgument("row index out of range");
  return data_[r];
}

BitVector BitMatrix::operator*(const BitVector& v) const {
  if (v.size() != cols_) {
    throw InvalidArgument("matvec: matrix has " + std::to_string(cols_) + " columns but vector has length " +
                          std::to_string(v.size()));
  }
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].dot(v)) out.set(r, true);
  }
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(r.to_string());
  return out;
}

BitVector matvec(const BitMatrix& m, const BitVector& v) { return m * v; }

namespace {

// Reduced row echelon form of [A | b], pivoting on the leftmost column
// first and the topmost unused row first.
struct Echelon {
  std::vector<BitVector> rows;
  std::vector<bool> rhs;
  std::vector<std::size_t> pivots;
};

Echelon reduce(const BitMatrix& a, const BitVector* b) {
  Echelon e;
  e.rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) e.rows.push_back(a.row(r));
  e.rhs.assign(a.rows(), false);
  if (b != nullptr) {
    for (std::size_t r = 0; r < a.rows(); ++r) e.rhs[r] = b->get(r);
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && !e.rows[pivot].get(c)) ++pivot;
    if (pivot == a.rows()) continue;
    std::swap(e.rows[rank], e.rows[pivot]);
    // vector<bool> elements cannot bind to std::swap's references
    const bool tmp = e.rhs[rank];
    e.rhs[rank] = e.rhs[pivot];
    e.rhs[pivot] = tmp;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != rank && e.rows[r].get(c)) {
        e.rows[r] ^= e.rows[rank];
        e.rhs[r] = e.rhs[r] != e.rhs[rank];
      }
    }
    e.pivots.push_back(c);
    ++rank;
  }
  return e;
}

}  // namespace

std::size_t rank(const BitMatrix& m) { return reduce(m, nullptr).pivots.size(); }

std::optional<AffineSolution> solve_affine(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve_affine: right-hand side length must equal row count");
  const Echelon e = reduce(a, &b);
  const std::size_t rk = e.pivots.size();
  for (std::size_t r = rk; r < a.rows(); ++r) {
    if (e.rhs[r]) return std::nullopt;
  }

  AffineSolution sol;
  sol.particular = BitVector(a.cols());
  for (std::size_t i = 0; i < rk; ++i) {
    if (e.rhs[i]) sol.particular.set(e.pivots[i], true);
  }
  sol.pivot_columns = e.pivots;

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    sol.free_columns.push_back(c);
    BitVector basis(a.cols());
    basis.set(c, true);
    for (std::size_t i = 0; i < rk; ++i) {
      if (e.rows[i].get(c)) basis.set(e.pivots[i], true);
    }
    sol.nullspace_basis.push_back(std::move(basis));
  }
  return sol;
}

}  // namespace sumrecon
