#include "arfe/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "arfe/error.hpp"

namespace arfe {
namespace {

std::size_t word_count(std::size_t length) {
  return (length + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row, in row order. Only the first `limit` columns are pivoted on.
std::vector<std::size_t> reduce(BitMatrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < limit && next < m.rows(); ++col) {
    std::size_t found = next;
    while (found < m.rows() && !m(found, col)) ++found;
    if (found == m.rows()) continue;
    m.swap_rows(found, next);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next && m(r, col)) m.xor_row(r, next);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::from_word(std::size_t length, Word bits) {
  if (length > kWordBits) throw DimensionError("from_word: length exceeds one word");
  BitVector v(length);
  if (length == 0) return v;
  const Word mask = length == kWordBits ? ~Word{0} : ((Word{1} << length) - 1);
  v.words_[0] = bits & mask;
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

void BitVector::check_index(std::size_t index) const {
  if (index >= length_) {
    throw DimensionError("bit index " + std::to_string(index) + " out of range for length " +
                         std::to_string(length_));
  }
}

void BitVector::check_same_length(const BitVector& other) const {
  if (length_ != other.length_) {
    throw DimensionError("vector lengths differ: " + std::to_string(length_) + " vs " +
                         std::to_string(other.length_));
  }
}

bool BitVector::test(std::size_t index) const {
  check_index(index);
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

void BitVector::set(std::size_t index, bool value) {
  check_index(index);
  const Word bit = Word{1} << (index % kWordBits);
  if (value) {
    words_[index / kWordBits] |= bit;
  } else {
    words_[index / kWordBits] &= ~bit;
  }
}

void BitVector::flip(std::size_t index) {
  check_index(index);
  words_[index / kWordBits] ^= Word{1} << (index % kWordBits);
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

bool BitVector::dot(const BitVector& other) const {
  check_same_length(other);
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector::Word BitVector::to_word() const {
  if (length_ > kWordBits) throw DimensionError("to_word: vector longer than one word");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
  if (auto c = lhs.length_ <=> rhs.length_; c != 0) return c;
  for (std::size_t i = 0; i < lhs.words_.size(); ++i) {
    const BitVector::Word diff = lhs.words_[i] ^ rhs.words_[i];
    if (diff == 0) continue;
    const BitVector::Word lowest = diff & (~diff + 1);
    return (lhs.words_[i] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? cols : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw DimensionError("from_rows: ragged rows");
  }
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns, std::size_t rows) {
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].test(r)) m.set(r, c);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  return from_rows(std::move(parsed));
}

const BitVector& BitMatrix::row(std::size_t r) const {
  if (r >= rows_) throw DimensionError("row index out of range");
  return data_[r];
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].test(c)) out.set(r);
  }
  return out;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_) throw DimensionError("row index out of range");
  data_[r].set(c, value);
}

void BitMatrix::set_row(std::size_t r, BitVector value) {
  if (r >= rows_) throw DimensionError("row index out of range");
  if (value.size() != cols_) throw DimensionError("set_row: length mismatch");
  data_[r] = std::move(value);
}

void BitMatrix::xor_row(std::size_t target, std::size_t source) { data_[target] ^= data_[source]; }

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a != b) std::swap(data_[a], data_[b]);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (data_[r].test(c)) t.data_[c].set(r);
    }
  }
  return t;
}

BitVector BitMatrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw DimensionError("apply: vector length does not match columns");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].dot(v)) out.set(r);
  }
  return out;
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.none(); });
}

bool BitMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].count() != 1 || !data_[r].test(r)) return false;
  }
  return true;
}

bool BitMatrix::is_symmetric() const noexcept { return rows_ == cols_ && *this == transpose(); }

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) data_[r] ^= other.data_[r];
  return *this;
}

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) {
    throw DimensionError("multiply: " + std::to_string(lhs.rows_) + "x" + std::to_string(lhs.cols_) +
                         " by " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  BitMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    const auto words = lhs.data_[r].words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (BitVector::Word bits = words[w]; bits != 0; bits &= bits - 1) {
        const auto k = w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        out.data_[r] ^= rhs.data_[k];
      }
    }
  }
  return out;
}

std::string BitMatrix::to_string(char separator) const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r != 0) out += separator;
    out += data_[r].to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const BitMatrix& lhs, const BitMatrix& rhs) {
  if (auto c = lhs.rows_ <=> rhs.rows_; c != 0) return c;
  if (auto c = lhs.cols_ <=> rhs.cols_; c != 0) return c;
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    if (auto c = lhs.data_[r] <=> rhs.data_[r]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BitMatrix multiply(const BitMatrix& lhs, const BitMatrix& rhs) { return lhs * rhs; }

std::size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  return reduce(work, work.cols()).size();
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  BitMatrix augmented(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c)) augmented.set(r, c);
    }
    if (v.test(r)) augmented.set(r, n);
  }
  const auto pivots = reduce(augmented, n);
  for (std::size_t r = pivots.size(); r < augmented.rows(); ++r) {
    if (augmented(r, n)) return std::nullopt;
  }
  BitVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (augmented(i, n)) x.set(pivots[i]);
  }
  return x;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  BitMatrix work = m;
  const auto pivots = reduce(work, work.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v = BitVector::unit(m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (work(i, free)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  BitMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c)) augmented.set(r, c);
    }
    augmented.set(r, n + r);
  }
  if (reduce(augmented, n).size() != n) return std::nullopt;
  BitMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (augmented(r, n + c)) inv.set(r, c);
    }
  }
  return inv;
}

BitMatrix block_diagonal(const BitMatrix& upper_left, const BitMatrix& lower_right) {
  BitMatrix out(upper_left.rows() + lower_right.rows(), upper_left.cols() + lower_right.cols());
  for (std::size_t r = 0; r < upper_left.rows(); ++r) {
    for (std::size_t c = 0; c < upper_left.cols(); ++c) {
      if (upper_left(r, c)) out.set(r, c);
    }
  }
  for (std::size_t r = 0; r < lower_right.rows(); ++r) {
    for (std::size_t c = 0; c < lower_right.cols(); ++c) {
      if (lower_right(r, c)) out.set(upper_left.rows() + r, upper_left.cols() + c);
    }
  }
  return out;
}

std::size_t span_rank(std::span<const BitVector> vectors, std::size_t length) {
  return rank(BitMatrix::from_rows(std::vector<BitVector>(vectors.begin(), vectors.end()), length));
}

bool same_span(std::span<const BitVector> lhs, std::span<const BitVector> rhs, std::size_t length) {
  std::vector<BitVector> both(lhs.begin(), lhs.end());
  both.insert(both.end(), rhs.begin(), rhs.end());
  const auto joint = span_rank(both, length);
  return joint == span_rank(lhs, length) && joint == span_rank(rhs, length);
}

}  // namespace arfe
