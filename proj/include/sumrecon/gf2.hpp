#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumrecon {

/// Dense vector over GF(2). Symbols are packed 64 per word, index i at
/// bit (i % 64) of word (i / 64). Bits past size() are always zero.
///
/// The textual form is a string of '0'/'1' with index 0 leftmost.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len);

  static BitVector from_string(std::string_view bits);
  /// Builds a vector of length len <= 64 from a mask with index i at bit i.
  static BitVector from_mask(std::uint64_t mask, std::size_t len);
  static BitVector concat(const BitVector& head, const BitVector& tail);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  std::size_t weight() const;
  bool is_zero() const;
  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  bool operator==(const BitVector& other) const = default;

  std::string to_string() const;
  /// Index i at bit i; requires size() <= 64.
  std::uint64_t to_mask() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

 private:
  void check_index(std::size_t i) const;

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Coordinate-wise XOR; lengths must match.
BitVector add(const BitVector& a, const BitVector& b);
std::size_t weight(const BitVector& v);
std::size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Lexicographic order on the '0'/'1' string form (index 0 most significant).
/// Both vectors must have the same length.
bool lex_less(const BitVector& a, const BitVector& b);

/// Dense row-major matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix zero(std::size_t rows, std::size_t cols);
  /// Each string is one row; all rows must have the same length. An empty
  /// list needs an explicit column count, so use zero(0, cols) for that case.
  static BitMatrix from_rows(const std::vector<std::string>& rows);
  static BitMatrix from_row_vectors(std::vector<BitVector> rows, std::size_t cols);
  /// Rows of top followed by rows of bottom; column counts must agree.
  static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  const BitVector& row(std::size_t r) const;

  /// Matrix-vector product; rejects v.size() != cols().
  BitVector operator*(const BitVector& v) const;
  bool operator==(const BitMatrix& other) const = default;

  std::vector<std::string> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

BitVector matvec(const BitMatrix& m, const BitVector& v);

std::size_t rank(const BitMatrix& m);

/// Solution set of A z = b written as particular + span(nullspace_basis).
/// pivot_columns/free_columns describe the reduced row echelon form of A
/// (leftmost column first, topmost unused row first). nullspace_basis[j]
/// has a one at free_columns[j] and zeros at every other free column.
struct AffineSolution {
  BitVector particular;
  std::vector<BitVector> nullspace_basis;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;
};

/// Returns std::nullopt when b is outside the column space of A.
std::optional<AffineSolution> solve_affine(const BitMatrix& a, const BitVector& b);

}  // namespace sumrecon
