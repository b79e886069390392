#pragma once

// Dense linear algebra over GF(2).
//
// Vectors are packed least-significant-bit first into 64-bit words; bit i of
// a vector lives in word i / 64 at position i % 64. Matrices are stored row
// major, one BitVector per row, so row operations during elimination are
// word-wise XORs. Bits beyond the logical length are kept at zero.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arfe {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector unit(std::size_t length, std::size_t index);
  // Low `length` bits of `bits`; requires length <= 64.
  static BitVector from_word(std::size_t length, Word bits);
  // Characters '0' and '1' only, index 0 first. Throws ParseError.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool test(std::size_t index) const;
  bool operator[](std::size_t index) const { return test(index); }
  void set(std::size_t index, bool value = true);
  void flip(std::size_t index);

  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  std::size_t count() const noexcept;
  std::optional<std::size_t> first_set() const noexcept;

  // Parity of the bitwise AND, i.e. the standard dot product over GF(2).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  std::span<const Word> words() const noexcept { return words_; }
  // Requires size() <= 64.
  Word to_word() const;
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  // Shorter vectors first; equal lengths compare as '0'/'1' strings.
  friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs);

 private:
  friend class BitMatrix;
  void check_index(std::size_t index) const;
  void check_same_length(const BitVector& other) const;

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }
  // Every row must have the same length; `cols` is used when `rows` is empty.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols = 0);
  // Column j of the result is columns[j].
  static BitMatrix from_columns(std::span<const BitVector> columns, std::size_t rows);
  static BitMatrix from_strings(std::span<const std::string> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const BitVector& row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  bool operator()(std::size_t r, std::size_t c) const { return row(r).test(c); }
  void set(std::size_t r, std::size_t c, bool value = true);
  void set_row(std::size_t r, BitVector value);
  void xor_row(std::size_t target, std::size_t source);
  void swap_rows(std::size_t a, std::size_t b);

  BitMatrix transpose() const;
  // M·v, with v read as a column vector.
  BitVector apply(const BitVector& v) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  bool is_symmetric() const noexcept;

  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) { return lhs += rhs; }
  friend BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs);

  // Rows as '0'/'1' strings separated by `separator`.
  std::string to_string(char separator = '\n') const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
  // Row-major lexicographic order on equal shapes.
  friend std::strong_ordering operator<=>(const BitMatrix& lhs, const BitMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

BitMatrix multiply(const BitMatrix& lhs, const BitMatrix& rhs);

// Row rank by Gaussian elimination.
std::size_t rank(const BitMatrix& m);

// Some x with M·x = v, or nullopt when v is outside the image. Free variables
// of the reduced echelon form are set to zero, which makes the result unique.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& v);

// Null space basis: one vector per free column, in increasing column order,
// with that free variable set and all other free variables clear.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

std::optional<BitMatrix> inverse(const BitMatrix& m);

BitMatrix block_diagonal(const BitMatrix& upper_left, const BitMatrix& lower_right);

// Rank of the matrix whose rows are the given vectors.
std::size_t span_rank(std::span<const BitVector> vectors, std::size_t length);

// True iff both families span the same subspace of GF(2)^length.
bool same_span(std::span<const BitVector> lhs, std::span<const BitVector> rhs, std::size_t length);

}  // namespace arfe
