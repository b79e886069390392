#pragma once

// Quadratic forms g: GF(2)^dim -> GF(2) with g(x+y) = g(x) + g(y) + B(x,y).
//
// A form is stored as the Gram matrix of B together with the values g(e_i) on
// the standard basis; g of any vector follows by polarization. Degenerate
// forms can be built, but everything that classifies or searches needs B
// invertible and throws DegenerateFormError otherwise.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arfe/gf2.hpp"

namespace arfe {

class QuadraticForm {
 public:
  // The zero-dimensional form.
  QuadraticForm();
  // Throws DimensionError on shape mismatch, PreconditionError when `gram`
  // is not symmetric with zero diagonal.
  QuadraticForm(BitMatrix gram, BitVector basis_values);

  // Standard hyperbolic Gram on the ordered basis a_1, b_1, ..., a_n, b_n
  // with B(a_i, b_i) = 1 and all other pairings zero.
  static BitMatrix standard_gram(std::size_t pairs);
  static QuadraticForm standard(std::size_t pairs, BitVector basis_values);
  static QuadraticForm standard(std::size_t pairs);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const BitMatrix& gram() const noexcept { return gram_; }
  const BitVector& basis_values() const noexcept { return basis_values_; }
  bool nondegenerate() const noexcept { return nondegenerate_; }

  bool operator()(const BitVector& v) const;

  friend bool operator==(const QuadraticForm& lhs, const QuadraticForm& rhs) {
    return lhs.gram_ == rhs.gram_ && lhs.basis_values_ == rhs.basis_values_;
  }

 private:
  BitMatrix gram_;
  BitVector basis_values_;
  // Row i of the Gram matrix restricted to columns j > i.
  std::vector<BitVector> upper_;
  bool nondegenerate_ = true;
};

struct SymplecticBasis {
  std::vector<BitVector> a;
  std::vector<BitVector> b;
};

bool evaluate(const QuadraticForm& form, const BitVector& v);
bool bilinear(const QuadraticForm& form, const BitVector& x, const BitVector& y);
bool is_nondegenerate(const QuadraticForm& form);

// Throws DegenerateFormError unless the form is non-degenerate.
void require_nondegenerate(const QuadraticForm& form, const char* operation);

// Pairs a_i, b_i with B(a_i, a_j) = B(b_i, b_j) = 0 and B(a_i, b_j) = δ_ij.
// Pivots are the first remaining basis vector and its first partner, so a
// form already in standard Gram returns the standard basis.
SymplecticBasis symplectic_basis(const QuadraticForm& form);

// Given independent mutually B-orthogonal a_1..a_k, returns b_1..b_k with
// B(b_i, b_j) = 0 and B(a_i, b_j) = δ_ij.
std::vector<BitVector> complete_isotropic(const QuadraticForm& form, std::span<const BitVector> isotropic);

bool arf(const QuadraticForm& form);

QuadraticForm direct_sum(const QuadraticForm& first, const QuadraticForm& second);

// The form v ↦ g(P v), i.e. g expressed in the basis given by the columns of P.
QuadraticForm pullback(const QuadraticForm& form, const BitMatrix& change_of_basis);

// Basis of {x : B(x, w) = 0 for every w in `vectors`}.
std::vector<BitVector> orthogonal_complement(const QuadraticForm& form, std::span<const BitVector> vectors);

// First vector in offset + span(basis) with g = target, searching the
// offset, then offset + basis[i], then offset + basis[i] + basis[j] (i < j).
// Those candidates suffice: if none works, g is constant on the coset.
std::optional<BitVector> find_value_in_coset(const QuadraticForm& form, const BitVector& offset,
                                             std::span<const BitVector> basis, bool target);

// Connector for a_1, a_2 relative to an isotropic family w_1..w_k: returns c
// in W^⊥ with g(c) = 1 and B(a_1, c) = B(a_2, c) = 1.
//
// Requires g(w_i) = 1, B(w_i, w_j) = 0, w independent, a_1, a_2 in W^⊥ - W,
// g(a_1) = g(a_2) = 1 and B(a_1, a_2) = 0. Dimension 2 with Arf 0 is always
// refused; dimension 4 with Arf 0 is refused only for k = 0 and a_1 != a_2.
BitVector find_connector(const QuadraticForm& form, std::span<const BitVector> w, const BitVector& a1,
                         const BitVector& a2);

// Vectors c_1 (, c_2) with g(c_i) = 1 such that T_{c_1}, then T_{c_2}, carries
// x to y. Requires x, y nonzero, distinct, with g(x) = g(y).
std::vector<BitVector> find_transvection_path(const QuadraticForm& form, const BitVector& x,
                                              const BitVector& y);

// As above, but every c_i is B-orthogonal to each vector in `fixed`, so the
// transvections leave those vectors in place. Needs B(x, r) = B(y, r) for r in
// `fixed`.
std::vector<BitVector> find_transvection_path(const QuadraticForm& form, const BitVector& x,
                                              const BitVector& y, std::span<const BitVector> fixed);

}  // namespace arfe
