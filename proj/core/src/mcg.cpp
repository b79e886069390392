#include "arfe/mcg.hpp"

#include <string>
#include <utility>

#include "arfe/error.hpp"
#include "arfe/orthogroup.hpp"

namespace arfe {
namespace {

void require_genus(const SurfacePinkallForm& surface, const MappingClass& h, const char* what) {
  if (h.action().rows() != surface.form().dim()) {
    throw DimensionError(std::string(what) + ": mapping class of genus " + std::to_string(h.genus()) +
                         " on a surface of genus " + std::to_string(surface.genus()));
  }
}

void require_same_genus(const SurfacePinkallForm& first, const SurfacePinkallForm& second, const char* what) {
  if (first.genus() != second.genus()) {
    throw DimensionError(std::string(what) + ": genus " + std::to_string(first.genus()) + " vs " +
                         std::to_string(second.genus()));
  }
}

void require_curve(const SurfacePinkallForm& surface, const BitVector& curve) {
  if (curve.size() != surface.form().dim()) {
    throw PreconditionError("invalid-token", "curve class of length " + std::to_string(curve.size()) +
                                                 " on a surface of genus " + std::to_string(surface.genus()));
  }
}

int mod2(int x) { return ((x % 2) + 2) % 2; }

}  // namespace

SurfacePinkallForm::SurfacePinkallForm(std::size_t genus, BitVector values)
    : genus_(genus), form_(QuadraticForm::standard(genus, std::move(values))) {}

MappingClass::MappingClass(BitMatrix action, bool epsilon) : action_(std::move(action)), epsilon_(epsilon) {
  if (!action_.is_square() || action_.rows() % 2 != 0) {
    throw DimensionError("mapping class action must be square of even size");
  }
  const BitMatrix gram = QuadraticForm::standard_gram(action_.rows() / 2);
  if (action_.transpose() * gram * action_ != gram) {
    throw PreconditionError("mapping class action does not preserve the intersection form");
  }
}

MappingClass MappingClass::operator*(const MappingClass& other) const {
  if (action_.rows() != other.action_.rows()) throw DimensionError("composing mapping classes of different genus");
  return MappingClass(action_ * other.action_, epsilon_ != other.epsilon_);
}

MappingClass dehn_twist_action(const SurfacePinkallForm& surface, const BitVector& curve) {
  require_curve(surface, curve);
  return MappingClass(transvection_matrix(surface.form(), curve), false);
}

std::optional<GoodMapType> good_map_type(const SurfacePinkallForm& surface, const WordToken& token) {
  switch (token.kind) {
    case TokenKind::square:
      require_curve(surface, token.curve);
      return GoodMapType::squared_twist;
    case TokenKind::twist:
      require_curve(surface, token.curve);
      if (token.curve.none()) return GoodMapType::null_twist;
      if (surface.form()(token.curve)) return GoodMapType::nonsingular_twist;
      return std::nullopt;
    case TokenKind::flip:
    case TokenKind::umap:
      break;
  }
  throw PreconditionError("invalid-token", "good_map_type: only twist and square tokens are classified");
}

MappingClass evaluate_word(const SurfacePinkallForm& surface, const GeneratorWord& word) {
  MappingClass result = MappingClass::identity(surface.genus());
  for (const auto& token : word) {
    switch (token.kind) {
      case TokenKind::twist:
        result = dehn_twist_action(surface, token.curve) * result;
        break;
      case TokenKind::square:
        // T_c^2 acts trivially on H_1(F; Z/2).
        require_curve(surface, token.curve);
        break;
      case TokenKind::flip:
        result = MappingClass(result.action(), !result.epsilon());
        break;
      case TokenKind::umap:
        if (surface.genus() != 2 || arf(surface.form())) {
          throw PreconditionError("invalid-token", "umap is only defined for genus 2 with Arf invariant 0");
        }
        result = MappingClass(canonical_u_map(surface.form()).matrix(), false) * result;
        break;
    }
  }
  return result;
}

bool in_orthogonal_mcg(const SurfacePinkallForm& surface, const MappingClass& h) {
  require_genus(surface, h, "in_orthogonal_mcg");
  return is_orthogonal(surface.form(), h.action());
}

bool psi_invariant(const SurfacePinkallForm& surface, const MappingClass& h) {
  if (!in_orthogonal_mcg(surface, h)) {
    throw MembershipError("h_* does not preserve the Pinkall form, so i and i∘h are not regularly homotopic");
  }
  const bool orientation_term = ((surface.genus() + 1) % 2 == 1) && h.epsilon();
  return rank_parity(h.action()) != orientation_term;
}

bool quadruple_point_invariant(const SurfacePinkallForm& surface, const MappingClass& h) {
  return psi_invariant(surface, h);
}

bool regularly_homotopic(const SurfacePinkallForm& first, const SurfacePinkallForm& second) {
  require_same_genus(first, second, "regularly_homotopic");
  return first.form().basis_values() == second.form().basis_values();
}

bool equivalent_up_to_diffeomorphism(const SurfacePinkallForm& first, const SurfacePinkallForm& second) {
  require_same_genus(first, second, "equivalent_up_to_diffeomorphism");
  return arf(first.form()) == arf(second.form());
}

bool embedding_realizable(const SurfacePinkallForm& surface) { return !arf(surface.form()); }

MappingClass reduce_integer_matrix(const std::array<int, 4>& integer) {
  const int det = integer[0] * integer[3] - integer[1] * integer[2];
  if (det != 1 && det != -1) throw PreconditionError("integer matrix is not in GL_2(Z)");
  BitMatrix action(2, 2);
  for (std::size_t i = 0; i < 4; ++i) action.set(i / 2, i % 2, mod2(integer[i]) == 1);
  return MappingClass(std::move(action), det == -1);
}

std::vector<CatalogEntry> genus1_catalog(bool arf_value) {
  std::vector<std::pair<std::string, std::array<int, 4>>> matrices;
  if (!arf_value) {
    matrices = {{"A1", {1, 2, 0, 1}}, {"A2", {1, 0, 2, 1}}, {"A3", {-1, 0, 0, 1}}, {"A4", {0, 1, 1, 0}}};
  } else {
    matrices = {{"B1", {-1, 2, 0, 1}}, {"B2", {0, 1, 1, 0}}};
  }
  std::vector<CatalogEntry> out;
  for (auto& [name, integer] : matrices) out.push_back({name, integer, reduce_integer_matrix(integer)});
  return out;
}

std::vector<MappingClass> genus1_generators(bool arf_value) {
  std::vector<MappingClass> out;
  for (auto& entry : genus1_catalog(arf_value)) out.push_back(std::move(entry.reduced));
  return out;
}

MappingClass connected_sum(const MappingClass& first, const MappingClass& second) {
  if (first.epsilon() != second.epsilon()) {
    throw PreconditionError("connected_sum: orientation bits differ");
  }
  return MappingClass(block_diagonal(first.action(), second.action()), first.epsilon());
}

SurfacePinkallForm connected_sum(const SurfacePinkallForm& first, const SurfacePinkallForm& second) {
  const auto& lhs = first.form().basis_values();
  const auto& rhs = second.form().basis_values();
  BitVector values(lhs.size() + rhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) values.set(i, lhs[i]);
  for (std::size_t i = 0; i < rhs.size(); ++i) values.set(lhs.size() + i, rhs[i]);
  return SurfacePinkallForm(first.genus() + second.genus(), std::move(values));
}

}  // namespace arfe
