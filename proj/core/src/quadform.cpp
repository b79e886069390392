#include "arfe/quadform.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include "arfe/error.hpp"

namespace arfe {
namespace {

void require_length(const QuadraticForm& form, const BitVector& v, const char* what) {
  if (v.size() != form.dim()) {
    throw DimensionError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                         " for form of dimension " + std::to_string(form.dim()));
  }
}

// Matrix whose row i is the functional B(vectors[i], ·).
BitMatrix functionals(const QuadraticForm& form, std::span<const BitVector> vectors) {
  std::vector<BitVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.push_back(form.gram().apply(v));
  return BitMatrix::from_rows(std::move(rows), form.dim());
}

// Some b with B(constraints[i], b) = rhs[i] for all i.
std::optional<BitVector> solve_pairings(const QuadraticForm& form, std::span<const BitVector> constraints,
                                        const BitVector& rhs) {
  return solve(functionals(form, constraints), rhs);
}

}  // namespace

QuadraticForm::QuadraticForm() = default;

QuadraticForm::QuadraticForm(BitMatrix gram, BitVector basis_values)
    : gram_(std::move(gram)), basis_values_(std::move(basis_values)) {
  if (!gram_.is_square()) throw DimensionError("quadratic form: Gram matrix is not square");
  if (basis_values_.size() != gram_.rows()) {
    throw DimensionError("quadratic form: " + std::to_string(basis_values_.size()) + " basis values for dimension " +
                         std::to_string(gram_.rows()));
  }
  if (!gram_.is_symmetric()) throw PreconditionError("quadratic form: Gram matrix is not symmetric");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (gram_(i, i)) throw PreconditionError("quadratic form: Gram matrix has a nonzero diagonal entry");
  }
  upper_.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    BitVector row = gram_.row(i);
    for (std::size_t j = 0; j <= i; ++j) row.set(j, false);
    upper_.push_back(std::move(row));
  }
  nondegenerate_ = rank(gram_) == dim();
}

BitMatrix QuadraticForm::standard_gram(std::size_t pairs) {
  BitMatrix gram(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    gram.set(2 * i, 2 * i + 1);
    gram.set(2 * i + 1, 2 * i);
  }
  return gram;
}

QuadraticForm QuadraticForm::standard(std::size_t pairs, BitVector basis_values) {
  return QuadraticForm(standard_gram(pairs), std::move(basis_values));
}

QuadraticForm QuadraticForm::standard(std::size_t pairs) {
  return QuadraticForm(standard_gram(pairs), BitVector(2 * pairs));
}

bool QuadraticForm::operator()(const BitVector& v) const {
  require_length(*this, v, "evaluate");
  bool value = v.dot(basis_values_);
  const auto words = v.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (BitVector::Word bits = words[w]; bits != 0; bits &= bits - 1) {
      const auto i = w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      value ^= upper_[i].dot(v);
    }
  }
  return value;
}

bool evaluate(const QuadraticForm& form, const BitVector& v) { return form(v); }

bool bilinear(const QuadraticForm& form, const BitVector& x, const BitVector& y) {
  require_length(form, x, "bilinear");
  require_length(form, y, "bilinear");
  // Sum of rows of the Gram matrix selected by x, dotted with y.
  bool value = false;
  const auto words = x.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (BitVector::Word bits = words[w]; bits != 0; bits &= bits - 1) {
      value ^= form.gram().row(w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(bits))).dot(y);
    }
  }
  return value;
}

bool is_nondegenerate(const QuadraticForm& form) { return form.nondegenerate(); }

void require_nondegenerate(const QuadraticForm& form, const char* operation) {
  if (!form.nondegenerate()) throw DegenerateFormError(std::string(operation) + ": form is degenerate");
}

SymplecticBasis symplectic_basis(const QuadraticForm& form) {
  require_nondegenerate(form, "symplectic_basis");
  // Each remaining vector z travels with its functional G z, so B(z, v) is a
  // single dot product.
  struct Entry {
    BitVector vector;
    BitVector functional;
  };
  std::vector<Entry> remaining;
  remaining.reserve(form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i) remaining.push_back({BitVector::unit(form.dim(), i), form.gram().row(i)});

  SymplecticBasis basis;
  while (!remaining.empty()) {
    const Entry x = remaining.front();
    std::size_t partner = 1;
    while (partner < remaining.size() && !x.functional.dot(remaining[partner].vector)) ++partner;
    if (partner == remaining.size()) throw DegenerateFormError("symplectic_basis: no partner found");
    const Entry y = remaining[partner];

    // z' = z + B(z, y) x + B(z, x) y lies in the complement of <x, y>.
    std::vector<Entry> next;
    next.reserve(remaining.size() - 2);
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (i == partner) continue;
      Entry z = remaining[i];
      const bool with_y = remaining[i].functional.dot(y.vector);
      const bool with_x = remaining[i].functional.dot(x.vector);
      if (with_y) {
        z.vector ^= x.vector;
        z.functional ^= x.functional;
      }
      if (with_x) {
        z.vector ^= y.vector;
        z.functional ^= y.functional;
      }
      next.push_back(std::move(z));
    }
    basis.a.push_back(x.vector);
    basis.b.push_back(y.vector);
    remaining = std::move(next);
  }
  return basis;
}

std::vector<BitVector> complete_isotropic(const QuadraticForm& form, std::span<const BitVector> isotropic) {
  require_nondegenerate(form, "complete_isotropic");
  const std::size_t k = isotropic.size();
  for (std::size_t i = 0; i < k; ++i) {
    require_length(form, isotropic[i], "complete_isotropic");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (bilinear(form, isotropic[i], isotropic[j])) {
        throw PreconditionError("complete_isotropic: B(a_" + std::to_string(i + 1) + ", a_" + std::to_string(j + 1) +
                                ") = 1");
      }
    }
  }
  if (span_rank(isotropic, form.dim()) != k) throw PreconditionError("complete_isotropic: vectors are dependent");

  std::vector<BitVector> partners;
  partners.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    auto b = solve_pairings(form, isotropic, BitVector::unit(k, j));
    if (!b) throw std::logic_error("complete_isotropic: independent functionals must be solvable");
    partners.push_back(std::move(*b));
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bilinear(form, partners[i], partners[j])) partners[j] ^= isotropic[i];
    }
  }
  return partners;
}

bool arf(const QuadraticForm& form) {
  require_nondegenerate(form, "arf");
  const auto basis = symplectic_basis(form);
  bool value = false;
  for (std::size_t i = 0; i < basis.a.size(); ++i) value ^= form(basis.a[i]) && form(basis.b[i]);
  return value;
}

QuadraticForm direct_sum(const QuadraticForm& first, const QuadraticForm& second) {
  BitVector values(first.dim() + second.dim());
  for (std::size_t i = 0; i < first.dim(); ++i) values.set(i, first.basis_values()[i]);
  for (std::size_t i = 0; i < second.dim(); ++i) values.set(first.dim() + i, second.basis_values()[i]);
  return QuadraticForm(block_diagonal(first.gram(), second.gram()), std::move(values));
}

QuadraticForm pullback(const QuadraticForm& form, const BitMatrix& change_of_basis) {
  if (change_of_basis.rows() != form.dim()) throw DimensionError("pullback: basis change has wrong row count");
  const BitMatrix gram = change_of_basis.transpose() * form.gram() * change_of_basis;
  BitVector values(change_of_basis.cols());
  for (std::size_t i = 0; i < change_of_basis.cols(); ++i) values.set(i, form(change_of_basis.column(i)));
  return QuadraticForm(gram, std::move(values));
}

std::vector<BitVector> orthogonal_complement(const QuadraticForm& form, std::span<const BitVector> vectors) {
  for (const auto& v : vectors) require_length(form, v, "orthogonal_complement");
  return kernel_basis(functionals(form, vectors));
}

std::optional<BitVector> find_value_in_coset(const QuadraticForm& form, const BitVector& offset,
                                             std::span<const BitVector> basis, bool target) {
  const bool base = form(offset);
  if (base == target) return offset;
  // shift(k) = g(offset + k) - g(offset) is a quadratic form on span(basis)
  // with the same polar form B, so it is nonzero somewhere iff it is nonzero
  // on a basis vector or B pairs two basis vectors.
  auto shift = [&](const BitVector& k) { return form(k) ^ bilinear(form, offset, k); };
  for (const auto& u : basis) {
    if (shift(u)) return offset ^ u;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (bilinear(form, basis[i], basis[j])) return offset ^ basis[i] ^ basis[j];
    }
  }
  return std::nullopt;
}

BitVector find_connector(const QuadraticForm& form, std::span<const BitVector> w, const BitVector& a1,
                         const BitVector& a2) {
  require_nondegenerate(form, "find_connector");
  require_length(form, a1, "find_connector");
  require_length(form, a2, "find_connector");
  const std::size_t k = w.size();
  for (std::size_t i = 0; i < k; ++i) {
    require_length(form, w[i], "find_connector");
    if (!form(w[i])) throw PreconditionError("find_connector: g(w_" + std::to_string(i + 1) + ") = 0");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (bilinear(form, w[i], w[j])) {
        throw PreconditionError("find_connector: B(w_" + std::to_string(i + 1) + ", w_" + std::to_string(j + 1) +
                                ") = 1");
      }
    }
  }
  if (span_rank(w, form.dim()) != k) throw PreconditionError("find_connector: w vectors are dependent");
  for (const auto* a : {&a1, &a2}) {
    for (const auto& wi : w) {
      if (bilinear(form, *a, wi)) throw PreconditionError("find_connector: a vector is not in W^perp");
    }
    std::vector<BitVector> extended(w.begin(), w.end());
    extended.push_back(*a);
    if (span_rank(extended, form.dim()) != k + 1) throw PreconditionError("find_connector: a vector lies in W");
    if (!form(*a)) throw PreconditionError("find_connector: g(a) = 0");
  }
  if (bilinear(form, a1, a2)) throw PreconditionError("find_connector: B(a_1, a_2) = 1");

  const bool arf_value = arf(form);
  if (form.dim() == 2 && !arf_value) {
    throw PreconditionError("excluded-case", "find_connector: dimension 2 with Arf invariant 0");
  }
  if (form.dim() == 4 && !arf_value && k == 0 && a1 != a2) {
    throw PreconditionError("excluded-case", "find_connector: dimension 4 with Arf invariant 0, k = 0, a_1 != a_2");
  }

  BitVector c;
  if (k > 0) {
    std::vector<BitVector> constraints(w.begin(), w.end());
    BitVector rhs(k + 1);
    rhs.set(k);
    constraints.push_back(a1);
    auto b1 = solve_pairings(form, constraints, rhs);
    constraints.back() = a2;
    auto b2 = solve_pairings(form, constraints, rhs);
    if (!b1 || !b2) throw std::logic_error("find_connector: a outside W must pair with W^perp");
    BitVector b;
    if (bilinear(form, a1, *b2)) {
      b = *b2;
    } else if (bilinear(form, a2, *b1)) {
      b = *b1;
    } else {
      b = *b1 ^ *b2;
    }
    c = form(b) ? b : b ^ w[0];
  } else {
    BitVector b;
    std::vector<BitVector> spanning;
    if (a1 == a2) {
      const BitVector one = BitVector::unit(1, 0);
      auto solved = solve_pairings(form, std::span<const BitVector>(&a1, 1), one);
      if (!solved) throw std::logic_error("find_connector: non-degenerate form must pair with a");
      b = *solved;
      spanning = {a1, b};
    } else {
      const std::vector<BitVector> pair{a1, a2};
      const auto partners = complete_isotropic(form, pair);
      b = partners[0] ^ partners[1];
      spanning = {a1, a2, partners[0], partners[1]};
    }
    if (form(b)) {
      c = b;
    } else {
      const auto complement = orthogonal_complement(form, spanning);
      auto d = find_value_in_coset(form, BitVector(form.dim()), complement, true);
      if (!d) throw PreconditionError("excluded-case", "find_connector: g vanishes on the complement");
      c = b ^ *d;
    }
  }

  if (!form(c) || !bilinear(form, a1, c) || !bilinear(form, a2, c)) {
    throw std::logic_error("find_connector: constructed vector fails its post-condition");
  }
  return c;
}

std::vector<BitVector> find_transvection_path(const QuadraticForm& form, const BitVector& x, const BitVector& y) {
  return find_transvection_path(form, x, y, {});
}

std::vector<BitVector> find_transvection_path(const QuadraticForm& form, const BitVector& x, const BitVector& y,
                                              std::span<const BitVector> fixed) {
  require_length(form, x, "find_transvection_path");
  require_length(form, y, "find_transvection_path");
  if (x.none() || y.none()) throw PreconditionError("find_transvection_path: zero endpoint");
  if (x == y) throw PreconditionError("find_transvection_path: endpoints are equal");
  if (form(x) != form(y)) throw PreconditionError("find_transvection_path: g(x) != g(y)");
  for (const auto& r : fixed) {
    if (bilinear(form, x, r) != bilinear(form, y, r)) {
      throw PreconditionError("find_transvection_path: x and y pair differently with a fixed vector");
    }
  }

  if (bilinear(form, x, y)) return {x ^ y};

  std::vector<BitVector> constraints(fixed.begin(), fixed.end());
  BitVector rhs(fixed.size() + 2);
  for (std::size_t i = 0; i < fixed.size(); ++i) rhs.set(i, bilinear(form, x, fixed[i]));
  constraints.push_back(x);
  constraints.push_back(y);
  rhs.set(fixed.size());
  rhs.set(fixed.size() + 1);

  const BitMatrix system = functionals(form, constraints);
  auto offset = solve(system, rhs);
  if (!offset) throw PreconditionError("no-path", "find_transvection_path: no intermediate vector exists");
  const auto directions = kernel_basis(system);
  auto z = find_value_in_coset(form, *offset, directions, form(x));
  if (!z) throw PreconditionError("no-path", "find_transvection_path: no intermediate vector with matching g");
  return {x ^ *z, *z ^ y};
}

}  // namespace arfe
