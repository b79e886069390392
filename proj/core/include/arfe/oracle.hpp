#pragma once

// Brute-force engines that recompute what the algebraic modules derive, by
// routes that share none of their logic: exhaustive filtering of GL(V),
// backtracking over basis images, and direct counting of g-values.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "arfe/gf2.hpp"
#include "arfe/orthogroup.hpp"
#include "arfe/quadform.hpp"

namespace arfe {

inline constexpr std::size_t kFilterMaxDim = 4;
inline constexpr std::size_t kSearchMaxDim = 6;
inline constexpr std::size_t kDemocraticMaxDim = 20;

struct GroupTable {
  QuadraticForm form;
  std::vector<BitMatrix> elements;  // row-major lexicographic order
  std::vector<bool> psi_values;     // psi_values[i] = psi(elements[i])
};

// Sorts `elements` canonically and fills in psi.
GroupTable make_group_table(const QuadraticForm& form, std::vector<BitMatrix> elements);

// Every invertible dim x dim matrix that passes is_orthogonal. Visits all
// 2^(dim^2) matrices, hence the guard.
GroupTable filter_full_linear_group(const QuadraticForm& form, std::size_t max_dim = kFilterMaxDim);

// O(V, g) by choosing the image of each basis vector in turn among vectors
// with the right g-value and pairings against earlier images.
std::vector<BitMatrix> search_orthogonal_group(const QuadraticForm& form, std::size_t max_dim = kSearchMaxDim);

struct ValueCounts {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
};

// Number of v with g(v) = 0 and with g(v) = 1, over all 2^dim vectors.
ValueCounts count_values(const QuadraticForm& form, std::size_t max_dim = kDemocraticMaxDim);

// 0 when g = 0 on a strict majority of vectors, 1 otherwise.
bool democratic_arf(const QuadraticForm& form, std::size_t max_dim = kDemocraticMaxDim);

// psi(S T) = psi(S) + psi(T) for every ordered pair, and psi is not
// identically zero. Uses the stored psi bits.
bool homomorphism_table(const GroupTable& table);

// Contains the identity, is closed under products and inverses, and every
// element preserves the form.
bool is_closed_group(const GroupTable& table);

BitVector random_nonsingular_vector(const QuadraticForm& form, std::mt19937_64& engine);

// Product of `length` random transvections T_a, g(a) = 1, drawn from a
// generator seeded with `seed`.
OrthogonalMap random_orthogonal(const QuadraticForm& form, std::uint64_t seed, std::size_t length);

}  // namespace arfe
