#pragma once

// Square matrices of size <= 8 packed into one 64-bit word, row r in byte r,
// column c at bit c of that byte. Used by the group enumerators, where
// hashing and multiplying millions of small matrices dominates.

#include <bit>
#include <cstddef>
#include <cstdint>

#include "arfe/error.hpp"
#include "arfe/gf2.hpp"

namespace arfe::detail {

inline constexpr std::size_t kPackedMaxDim = 8;

inline std::uint8_t packed_row(std::uint64_t m, std::size_t r) {
  return static_cast<std::uint8_t>(m >> (8 * r));
}

inline std::uint64_t pack(const BitMatrix& m) {
  if (!m.is_square() || m.rows() > kPackedMaxDim) throw DimensionError("pack: matrix larger than 8x8");
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) out |= m.row(r).to_word() << (8 * r);
  return out;
}

inline BitMatrix unpack(std::uint64_t m, std::size_t dim) {
  std::vector<BitVector> rows;
  rows.reserve(dim);
  for (std::size_t r = 0; r < dim; ++r) rows.push_back(BitVector::from_word(dim, packed_row(m, r)));
  return BitMatrix::from_rows(std::move(rows), dim);
}

inline std::uint64_t packed_identity(std::size_t dim) {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < dim; ++r) out |= std::uint64_t{1} << (8 * r + r);
  return out;
}

inline std::uint64_t packed_multiply(std::uint64_t lhs, std::uint64_t rhs, std::size_t dim) {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    std::uint8_t acc = 0;
    for (unsigned bits = packed_row(lhs, r); bits != 0; bits &= bits - 1) {
      acc ^= packed_row(rhs, static_cast<std::size_t>(std::countr_zero(bits)));
    }
    out |= std::uint64_t{acc} << (8 * r);
  }
  return out;
}

}  // namespace arfe::detail
