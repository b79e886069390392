#pragma once

// The orthogonal group O(V, g) of a non-degenerate quadratic form over GF(2):
// transvections, fixed spaces, the rank-parity homomorphism psi, U-maps in
// the dimension-4 Arf-0 case, and decomposition into transvections.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "arfe/gf2.hpp"
#include "arfe/quadform.hpp"

namespace arfe {

inline constexpr std::size_t kEnumerateMaxDim = 8;

class OrthogonalMap {
 public:
  // Throws NotOrthogonalError unless `matrix` preserves `form`.
  OrthogonalMap(QuadraticForm form, BitMatrix matrix);
  OrthogonalMap(std::shared_ptr<const QuadraticForm> form, BitMatrix matrix);

  static OrthogonalMap identity(const QuadraticForm& form);

  const QuadraticForm& form() const noexcept { return *form_; }
  const std::shared_ptr<const QuadraticForm>& shared_form() const noexcept { return form_; }
  const BitMatrix& matrix() const noexcept { return matrix_; }

  // (*this) ∘ other. Both maps must preserve the same form.
  OrthogonalMap operator*(const OrthogonalMap& other) const;
  BitVector operator()(const BitVector& v) const { return matrix_.apply(v); }

  friend bool operator==(const OrthogonalMap& lhs, const OrthogonalMap& rhs) {
    return lhs.matrix_ == rhs.matrix_ && *lhs.form_ == *rhs.form_;
  }

 private:
  struct Trusted {};
  OrthogonalMap(std::shared_ptr<const QuadraticForm> form, BitMatrix matrix, Trusted);

  std::shared_ptr<const QuadraticForm> form_;
  BitMatrix matrix_;

  friend OrthogonalMap transvection(const QuadraticForm&, const BitVector&);
};

struct UMapPartition {
  std::vector<BitVector> v1;
  std::vector<BitVector> v2;
};

struct Decomposition {
  bool u_flag = false;
  // Transvection vectors in application order: the first entry acts first.
  std::vector<BitVector> word;
};

// M invertible, g(M e_i) = g(e_i) and B(M e_i, M e_j) = B(e_i, e_j). By
// polarization this is equivalent to g(Mx) = g(x) for every x.
bool is_orthogonal(const QuadraticForm& form, const BitMatrix& m);

// x ↦ x + B(x, a) a, with no check on g(a).
BitMatrix transvection_matrix(const QuadraticForm& form, const BitVector& a);

// T_a as an element of O(V, g); requires g(a) = 1 or a = 0.
OrthogonalMap transvection(const QuadraticForm& form, const BitVector& a);

// rank(M - Id) mod 2 for any square matrix. A homomorphism only on O(V, g).
bool rank_parity(const BitMatrix& m);
bool psi(const OrthogonalMap& t);

std::vector<BitVector> fixed_space(const OrthogonalMap& t);

// Vectors with g = 1 in increasing lexicographic order. Requires dim <= 24.
std::vector<BitVector> nonsingular_vectors(const QuadraticForm& form);

// Dimension 4, Arf 0 only. v1 holds the lexicographically least g = 1 vector.
UMapPartition umap_partition(const QuadraticForm& form);
bool is_u_map(const OrthogonalMap& t);

// Involutive U-map: with p_k < q_k the two least elements of V_k, it swaps
// p_1 with p_2 and q_1 with q_2.
OrthogonalMap canonical_u_map(const QuadraticForm& form);

// Basis-restoration decomposition; see decompose() in orthogroup.cpp.
Decomposition decompose(const OrthogonalMap& t);

// Product of [U_0 if u_flag] then T_{word[0]}, T_{word[1]}, ... in that
// application order.
BitMatrix recompose(const QuadraticForm& form, const Decomposition& decomposition);

// Closure of `generators` under multiplication, sorted row-major
// lexicographically. Square matrices of size dim <= min(max_dim, 8).
std::vector<BitMatrix> generate_group(std::size_t dim, std::span<const BitMatrix> generators,
                                      std::size_t max_dim = kEnumerateMaxDim);

// Subgroup generated by the transvections T_a, g(a) = 1.
std::vector<BitMatrix> transvection_closure(const QuadraticForm& form, std::size_t max_dim = kEnumerateMaxDim);

// O(V, g) as the closure of all transvections, plus U_0 in dimension 4 with
// Arf 0.
std::vector<BitMatrix> enumerate_group(const QuadraticForm& form, std::size_t max_dim = kEnumerateMaxDim);

}  // namespace arfe
