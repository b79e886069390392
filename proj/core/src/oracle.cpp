#include "arfe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "arfe/error.hpp"
#include "packed.hpp"

namespace arfe {
namespace {

void guard(std::size_t dim, std::size_t max_dim, const char* what) {
  if (dim > max_dim) {
    throw ResourceGuardError(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds the guard of " +
                             std::to_string(max_dim));
  }
}

std::vector<std::uint64_t> gram_words(const QuadraticForm& form) {
  std::vector<std::uint64_t> rows;
  for (std::size_t i = 0; i < form.dim(); ++i) rows.push_back(form.gram().row(i).to_word());
  return rows;
}

bool word_parity(std::uint64_t w) { return std::popcount(w) & 1; }

}  // namespace

GroupTable make_group_table(const QuadraticForm& form, std::vector<BitMatrix> elements) {
  std::sort(elements.begin(), elements.end());
  GroupTable table{form, std::move(elements), {}};
  table.psi_values.reserve(table.elements.size());
  for (const auto& m : table.elements) table.psi_values.push_back(rank_parity(m));
  return table;
}

GroupTable filter_full_linear_group(const QuadraticForm& form, std::size_t max_dim) {
  guard(form.dim(), std::min(max_dim, kFilterMaxDim), "filter_full_linear_group");
  const std::size_t dim = form.dim();
  const std::uint64_t row_mask = (std::uint64_t{1} << dim) - 1;
  const std::uint64_t total = std::uint64_t{1} << (dim * dim);
  std::vector<BitMatrix> elements;
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t packed = 0;
    for (std::size_t r = 0; r < dim; ++r) packed |= ((index >> (dim * r)) & row_mask) << (8 * r);
    BitMatrix m = detail::unpack(packed, dim);
    if (is_orthogonal(form, m)) elements.push_back(std::move(m));
  }
  return make_group_table(form, std::move(elements));
}

std::vector<BitMatrix> search_orthogonal_group(const QuadraticForm& form, std::size_t max_dim) {
  guard(form.dim(), std::min(max_dim, detail::kPackedMaxDim), "search_orthogonal_group");
  const std::size_t dim = form.dim();
  const auto gram = gram_words(form);
  const std::uint64_t count = std::uint64_t{1} << dim;

  auto pairing = [&](std::uint64_t x, std::uint64_t y) {
    bool value = false;
    for (std::size_t i = 0; i < dim; ++i) {
      if ((x >> i) & 1U) value ^= word_parity(gram[i] & y);
    }
    return value;
  };
  std::vector<bool> g_values(count);
  for (std::uint64_t v = 0; v < count; ++v) g_values[v] = form(BitVector::from_word(dim, v));

  std::vector<std::uint64_t> images(dim);
  std::vector<BitMatrix> out;
  auto extend = [&](auto&& self, std::size_t column) -> void {
    if (column == dim) {
      std::uint64_t packed = 0;
      for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
          if ((images[c] >> r) & 1U) packed |= std::uint64_t{1} << (8 * r + c);
        }
      }
      BitMatrix m = detail::unpack(packed, dim);
      if (rank(m) == dim) out.push_back(std::move(m));
      return;
    }
    for (std::uint64_t v = 1; v < count; ++v) {
      if (g_values[v] != form.basis_values()[column]) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < column && consistent; ++j) {
        consistent = pairing(images[j], v) == form.gram()(j, column);
      }
      if (!consistent) continue;
      images[column] = v;
      self(self, column + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ValueCounts count_values(const QuadraticForm& form, std::size_t max_dim) {
  guard(form.dim(), std::min<std::size_t>(max_dim, 62), "count_values");
  const std::size_t dim = form.dim();
  const auto gram = gram_words(form);
  const std::uint64_t basis_values = form.basis_values().to_word();

  // Gray-code walk: flipping bit k changes g by g(e_k) + B(v, e_k).
  ValueCounts counts;
  std::uint64_t v = 0;
  bool value = false;
  counts.zeros = 1;
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto k = static_cast<std::size_t>(std::countr_zero(step));
    value ^= ((basis_values >> k) & 1U) ^ word_parity(gram[k] & v);
    v ^= std::uint64_t{1} << k;
    ++(value ? counts.ones : counts.zeros);
  }
  return counts;
}

bool democratic_arf(const QuadraticForm& form, std::size_t max_dim) {
  require_nondegenerate(form, "democratic_arf");
  const auto counts = count_values(form, max_dim);
  return counts.zeros <= counts.ones;
}

bool homomorphism_table(const GroupTable& table) {
  const auto& elements = table.elements;
  if (table.psi_values.size() != elements.size()) return false;
  bool nontrivial = false;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    nontrivial = nontrivial || table.psi_values[i];
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const bool product = rank_parity(elements[i] * elements[j]);
      if (product != (table.psi_values[i] != table.psi_values[j])) return false;
    }
  }
  return nontrivial;
}

bool is_closed_group(const GroupTable& table) {
  const auto& elements = table.elements;
  if (!std::is_sorted(elements.begin(), elements.end())) return false;
  auto contains = [&](const BitMatrix& m) { return std::binary_search(elements.begin(), elements.end(), m); };
  if (!contains(BitMatrix::identity(table.form.dim()))) return false;
  for (const auto& s : elements) {
    if (!is_orthogonal(table.form, s)) return false;
    const auto inv = inverse(s);
    if (!inv || !contains(*inv)) return false;
    for (const auto& t : elements) {
      if (!contains(s * t)) return false;
    }
  }
  return true;
}

BitVector random_nonsingular_vector(const QuadraticForm& form, std::mt19937_64& engine) {
  require_nondegenerate(form, "random_nonsingular_vector");
  if (form.dim() == 0) throw PreconditionError("random_nonsingular_vector: no vector has g = 1 in dimension 0");
  for (;;) {
    BitVector v(form.dim());
    for (std::size_t i = 0; i < form.dim(); i += 64) {
      const std::uint64_t bits = engine();
      for (std::size_t j = i; j < std::min(form.dim(), i + 64); ++j) v.set(j, (bits >> (j - i)) & 1U);
    }
    if (form(v)) return v;
  }
}

OrthogonalMap random_orthogonal(const QuadraticForm& form, std::uint64_t seed, std::size_t length) {
  require_nondegenerate(form, "random_orthogonal");
  std::mt19937_64 engine(seed);
  BitMatrix product = BitMatrix::identity(form.dim());
  for (std::size_t i = 0; i < length; ++i) {
    product = transvection_matrix(form, random_nonsingular_vector(form, engine)) * product;
  }
  return OrthogonalMap(form, std::move(product));
}

}  // namespace arfe
