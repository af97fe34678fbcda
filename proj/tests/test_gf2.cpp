#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sumrecon/errors.hpp"
#include "sumrecon/gf2.hpp"

using namespace sumrecon;

namespace {

BitMatrix hamming74_check() { return BitMatrix::from_rows({"0001111", "0110011", "1010101"}); }

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
  return m;
}

BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
  return v;
}

}  // namespace

TEST_CASE("bit vector literals round-trip and keep padding clear") {
  const auto v = BitVector::from_string("1011000000000000000000000000000000000000000000000000000000000000101");
  CHECK(v.size() == 67);
  CHECK(v.to_string() == "1011000000000000000000000000000000000000000000000000000000000000101");
  CHECK(v.weight() == 5);
  CHECK_THROWS_AS(BitVector::from_string("10a"), InvalidArgument);
  CHECK_THROWS_AS(v.get(67), InvalidArgument);
  CHECK(BitVector::from_mask(0xFF, 3).to_string() == "111");
  CHECK(BitVector::from_mask(0xFF, 3).words()[0] == 0x7);
}

TEST_CASE("matvec") {
  CHECK((BitMatrix::identity(3) * BitVector::from_string("101")).to_string() == "101");
  CHECK((BitMatrix::zero(2, 3) * BitVector::from_string("111")).to_string() == "00");
  CHECK_THROWS_AS(BitMatrix::identity(3) * BitVector::from_string("1010"), InvalidArgument);

  SUBCASE("hamming parity check annihilates every codeword") {
    const auto u = hamming74_check();
    const auto book = oracle::codebook(u);
    REQUIRE(book.size() == 16);
    for (const auto& c : book) CHECK((u * c).is_zero());
  }
}

TEST_CASE("add and weight") {
  CHECK(add(BitVector::from_string("1010"), BitVector::from_string("1010")).to_string() == "0000");
  CHECK(weight(BitVector::from_string("0000")) == 0);
  CHECK(weight(add(BitVector::from_string("1100"), BitVector::from_string("0110"))) == 2);
  CHECK_THROWS_AS(add(BitVector(3), BitVector(4)), InvalidArgument);
}

TEST_CASE("rank") {
  CHECK(rank(BitMatrix::identity(4)) == 4);
  CHECK(rank(BitMatrix::zero(3, 5)) == 0);
  CHECK(rank(hamming74_check()) == 3);
  CHECK(rank(BitMatrix::from_rows({"110", "011", "101"})) == 2);
}

TEST_CASE("lexicographic order follows the string form") {
  CHECK(lex_less(BitVector::from_string("001"), BitVector::from_string("010")));
  CHECK_FALSE(lex_less(BitVector::from_string("010"), BitVector::from_string("001")));
  CHECK_FALSE(lex_less(BitVector::from_string("010"), BitVector::from_string("010")));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_vector(rng, 70);
    const auto b = random_vector(rng, 70);
    CHECK(lex_less(a, b) == (a.to_string() < b.to_string()));
  }
}

TEST_CASE("solve_affine examples") {
  auto unique = solve_affine(BitMatrix::identity(3), BitVector::from_string("011"));
  REQUIRE(unique);
  CHECK(unique->particular.to_string() == "011");
  CHECK(unique->nullspace_basis.empty());

  CHECK_FALSE(solve_affine(BitMatrix::zero(1, 2), BitVector::from_string("1")));

  auto pair = solve_affine(BitMatrix::from_rows({"11"}), BitVector::from_string("1"));
  REQUIRE(pair);
  REQUIRE(pair->nullspace_basis.size() == 1);
  std::vector<std::string> span = {pair->particular.to_string(),
                                   (pair->particular ^ pair->nullspace_basis[0]).to_string()};
  std::sort(span.begin(), span.end());
  CHECK(span == std::vector<std::string>{"01", "10"});
  CHECK(pair->pivot_columns == std::vector<std::size_t>{0});
  CHECK(pair->free_columns == std::vector<std::size_t>{1});
}

TEST_CASE("property: linearity and distance") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 9;
    const std::size_t cols = 1 + rng() % 80;
    const auto m = random_matrix(rng, rows, cols);
    const auto v = random_vector(rng, cols);
    const auto w = random_vector(rng, cols);
    CHECK(m * (v ^ w) == ((m * v) ^ (m * w)));
    CHECK(m * v == oracle::multiply(m, v));
    CHECK(weight(v ^ w) == hamming_distance(v, w));
    CHECK(rank(m) <= std::min(rows, cols));
  }
}

TEST_CASE("property: affine span equals the exhaustive solution set") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + rng() % 8;
    const std::size_t cols = 1 + rng() % 12;
    const auto a = random_matrix(rng, rows, cols);
    const auto b = random_vector(rng, rows);
    const auto exhaustive = oracle::all_solutions(a, b);
    const auto sol = solve_affine(a, b);
    REQUIRE(sol.has_value() == !exhaustive.empty());
    if (!sol) continue;

    const std::size_t dim = sol->nullspace_basis.size();
    CHECK(dim == cols - rank(a));
    std::vector<std::string> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
      BitVector z = sol->particular;
      for (std::size_t j = 0; j < dim; ++j) {
        if ((mask >> j) & 1U) z ^= sol->nullspace_basis[j];
      }
      CHECK(a * z == b);
      span.push_back(z.to_string());
    }
    std::vector<std::string> expected;
    for (const auto& z : exhaustive) expected.push_back(z.to_string());
    std::sort(span.begin(), span.end());
    std::sort(expected.begin(), expected.end());
    CHECK(span == expected);
  }
}

TEST_CASE("vstack") {
  const auto s = BitMatrix::vstack(BitMatrix::from_rows({"10"}), BitMatrix::from_rows({"01", "11"}));
  CHECK(s.to_strings() == std::vector<std::string>{"10", "01", "11"});
  CHECK_THROWS_AS(BitMatrix::vstack(BitMatrix::zero(1, 2), BitMatrix::zero(1, 3)), InvalidArgument);
}
