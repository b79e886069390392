#pragma once

// Surface-level layer. A closed orientable surface of genus n carries
// H_1(F; Z/2) = GF(2)^{2n} with the intersection form as the standard
// hyperbolic Gram (basis a_1, b_1, ..., a_n, b_n). An immersion into R^3 is
// represented by its Pinkall form g on H_1, and a mapping class h by the
// pair (h_*, ε(h)) of its homology action and orientation bit. Everything
// computed here depends on h only through that pair.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arfe/gf2.hpp"
#include "arfe/quadform.hpp"

namespace arfe {

class SurfacePinkallForm {
 public:
  // `values` holds g on the standard basis and has length 2 * genus.
  SurfacePinkallForm(std::size_t genus, BitVector values);

  std::size_t genus() const noexcept { return genus_; }
  const QuadraticForm& form() const noexcept { return form_; }

  friend bool operator==(const SurfacePinkallForm&, const SurfacePinkallForm&) = default;

 private:
  std::size_t genus_;
  QuadraticForm form_;
};

class MappingClass {
 public:
  // Throws PreconditionError unless `action` preserves the intersection form.
  MappingClass(BitMatrix action, bool epsilon);

  static MappingClass identity(std::size_t genus) { return {BitMatrix::identity(2 * genus), false}; }

  const BitMatrix& action() const noexcept { return action_; }
  bool epsilon() const noexcept { return epsilon_; }
  std::size_t genus() const noexcept { return action_.rows() / 2; }

  // (*this) ∘ other.
  MappingClass operator*(const MappingClass& other) const;

  friend bool operator==(const MappingClass&, const MappingClass&) = default;

 private:
  BitMatrix action_;
  bool epsilon_;
};

enum class TokenKind { twist, square, flip, umap };

struct WordToken {
  TokenKind kind;
  BitVector curve;  // homology class; empty for flip and umap

  static WordToken twist(BitVector c) { return {TokenKind::twist, std::move(c)}; }
  static WordToken square(BitVector c) { return {TokenKind::square, std::move(c)}; }
  static WordToken flip() { return {TokenKind::flip, {}}; }
  static WordToken umap() { return {TokenKind::umap, {}}; }
};

// Tokens act in order: the first token is applied first.
using GeneratorWord = std::vector<WordToken>;

enum class GoodMapType { squared_twist = 1, nonsingular_twist = 2, null_twist = 3 };

MappingClass dehn_twist_action(const SurfacePinkallForm& surface, const BitVector& curve);

// Type of a twist or squared twist token; nullopt for a twist along a
// nonzero class with g = 0. Throws PreconditionError for flip and umap.
std::optional<GoodMapType> good_map_type(const SurfacePinkallForm& surface, const WordToken& token);

MappingClass evaluate_word(const SurfacePinkallForm& surface, const GeneratorWord& word);

bool in_orthogonal_mcg(const SurfacePinkallForm& surface, const MappingClass& h);

// Ψ(h) = rank(h_* - Id) + (genus + 1) ε(h) mod 2. Throws MembershipError
// when h_* does not preserve g.
bool psi_invariant(const SurfacePinkallForm& surface, const MappingClass& h);

// Mod-2 quadruple-point count of any generic regular homotopy from i to i∘h,
// where g^i = surface. Defined exactly when i∘h is regularly homotopic to i.
bool quadruple_point_invariant(const SurfacePinkallForm& surface, const MappingClass& h);

bool regularly_homotopic(const SurfacePinkallForm& first, const SurfacePinkallForm& second);
bool equivalent_up_to_diffeomorphism(const SurfacePinkallForm& first, const SurfacePinkallForm& second);
bool embedding_realizable(const SurfacePinkallForm& surface);

struct CatalogEntry {
  std::string name;
  std::array<int, 4> integer;  // row-major 2x2 integer matrix on H_1(T; Z)
  MappingClass reduced;        // Z/2 reduction, ε = 1 iff det = -1
};

// Genus-1 generators: A_1..A_4 for Arf 0, B_1 and B_2 for Arf 1.
std::vector<CatalogEntry> genus1_catalog(bool arf_value);
std::vector<MappingClass> genus1_generators(bool arf_value);
MappingClass reduce_integer_matrix(const std::array<int, 4>& integer);

// Block sum across a separating circle; requires equal ε.
MappingClass connected_sum(const MappingClass& first, const MappingClass& second);
SurfacePinkallForm connected_sum(const SurfacePinkallForm& first, const SurfacePinkallForm& second);

}  // namespace arfe
