#include "arfe/orthogroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "arfe/error.hpp"
#include "packed.hpp"

namespace arfe {
namespace {

void require_square_of(const QuadraticForm& form, const BitMatrix& m, const char* what) {
  if (!m.is_square() || m.rows() != form.dim()) {
    throw DimensionError(std::string(what) + ": expected a " + std::to_string(form.dim()) + "x" +
                         std::to_string(form.dim()) + " matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

bool is_dim4_arf0(const QuadraticForm& form) { return form.dim() == 4 && form.nondegenerate() && !arf(form); }

// Symplectic basis with g(a_i) = 1 for every i: a pair with g(a) = 0 either
// swaps roles with a nonsingular b, or has a replaced by a + b.
SymplecticBasis restoration_basis(const QuadraticForm& form) {
  auto basis = symplectic_basis(form);
  for (std::size_t i = 0; i < basis.a.size(); ++i) {
    if (form(basis.a[i])) continue;
    if (form(basis.b[i])) {
      std::swap(basis.a[i], basis.b[i]);
    } else {
      basis.a[i] ^= basis.b[i];
    }
  }
  return basis;
}

// Left-multiplies `current` by transvections until every basis vector is
// back in place: first the a_i, each moved within the complement of the a's
// already restored via a connector, then the b_i with every earlier vector
// held fixed. Returns the transvection vectors in application order of the
// decomposition of the original `current`.
std::vector<BitVector> restore_basis(const QuadraticForm& form, BitMatrix current) {
  const auto basis = restoration_basis(form);
  std::vector<BitVector> reduction;
  std::vector<BitVector> restored;

  auto restore = [&](const BitVector& target, bool is_a) {
    const BitVector image = current.apply(target);
    if (image != target) {
      std::vector<BitVector> path;
      if (!is_a) {
        path = find_transvection_path(form, image, target, restored);
      } else if (bilinear(form, image, target)) {
        path = {image ^ target};
      } else {
        const BitVector c = find_connector(form, restored, image, target);
        path = {image ^ c, c ^ target};
      }
      for (auto& p : path) {
        current = transvection_matrix(form, p) * current;
        reduction.push_back(std::move(p));
      }
    }
    restored.push_back(target);
  };

  for (const auto& a : basis.a) restore(a, true);
  for (const auto& b : basis.b) restore(b, false);
  if (!current.is_identity()) throw std::logic_error("restore_basis: basis restored but map is not the identity");
  std::reverse(reduction.begin(), reduction.end());
  return reduction;
}

// Shortest transvection word for `target` by breadth-first search over the
// group. Only for dimension <= 4.
std::vector<BitVector> shortest_word(const QuadraticForm& form, const BitMatrix& target) {
  const std::size_t dim = form.dim();
  const auto vectors = nonsingular_vectors(form);
  std::vector<std::uint64_t> generators;
  for (const auto& v : vectors) generators.push_back(detail::pack(transvection_matrix(form, v)));

  const std::uint64_t start = detail::packed_identity(dim);
  const std::uint64_t goal = detail::pack(target);
  // element -> (predecessor, generator index)
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::size_t>> parent;
  parent.emplace(start, std::make_pair(start, vectors.size()));
  std::deque<std::uint64_t> queue{start};
  while (!queue.empty() && !parent.contains(goal)) {
    const auto element = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const auto next = detail::packed_multiply(generators[g], element, dim);
      if (parent.emplace(next, std::make_pair(element, g)).second) queue.push_back(next);
    }
  }
  if (!parent.contains(goal)) throw PreconditionError("no-path", "decompose: map is not a product of transvections");
  std::vector<BitVector> word;
  for (auto node = goal; node != start; node = parent.at(node).first) word.push_back(vectors[parent.at(node).second]);
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

OrthogonalMap::OrthogonalMap(QuadraticForm form, BitMatrix matrix)
    : OrthogonalMap(std::make_shared<const QuadraticForm>(std::move(form)), std::move(matrix)) {}

OrthogonalMap::OrthogonalMap(std::shared_ptr<const QuadraticForm> form, BitMatrix matrix)
    : form_(std::move(form)), matrix_(std::move(matrix)) {
  if (!is_orthogonal(*form_, matrix_)) throw NotOrthogonalError("matrix does not preserve the quadratic form");
}

OrthogonalMap::OrthogonalMap(std::shared_ptr<const QuadraticForm> form, BitMatrix matrix, Trusted)
    : form_(std::move(form)), matrix_(std::move(matrix)) {}

OrthogonalMap OrthogonalMap::identity(const QuadraticForm& form) {
  return OrthogonalMap(std::make_shared<const QuadraticForm>(form), BitMatrix::identity(form.dim()), Trusted{});
}

OrthogonalMap OrthogonalMap::operator*(const OrthogonalMap& other) const {
  if (form_ != other.form_ && !(*form_ == *other.form_)) {
    throw PreconditionError("composition of maps preserving different forms");
  }
  return OrthogonalMap(form_, matrix_ * other.matrix_, Trusted{});
}

bool is_orthogonal(const QuadraticForm& form, const BitMatrix& m) {
  require_square_of(form, m, "is_orthogonal");
  std::vector<BitVector> images;
  images.reserve(form.dim());
  for (std::size_t i = 0; i < form.dim(); ++i) {
    images.push_back(m.column(i));
    if (form(images[i]) != form.basis_values()[i]) return false;
  }
  for (std::size_t i = 0; i < form.dim(); ++i) {
    for (std::size_t j = i + 1; j < form.dim(); ++j) {
      if (bilinear(form, images[i], images[j]) != form.gram()(i, j)) return false;
    }
  }
  return rank(m) == form.dim();
}

BitMatrix transvection_matrix(const QuadraticForm& form, const BitVector& a) {
  const BitVector pairing = form.gram().apply(a);  // B(e_i, a) for each i
  BitMatrix m = BitMatrix::identity(form.dim());
  // Column i gains a exactly when B(e_i, a) = 1, so row r gains `pairing`
  // exactly when a_r = 1.
  for (std::size_t r = 0; r < form.dim(); ++r) {
    if (a[r]) m.set_row(r, m.row(r) ^ pairing);
  }
  return m;
}

OrthogonalMap transvection(const QuadraticForm& form, const BitVector& a) {
  if (a.size() != form.dim()) throw DimensionError("transvection: vector length mismatch");
  if (a.any() && !form(a)) throw NotOrthogonalError("transvection: g(a) = 0 for nonzero a");
  return OrthogonalMap(std::make_shared<const QuadraticForm>(form), transvection_matrix(form, a),
                       OrthogonalMap::Trusted{});
}

bool rank_parity(const BitMatrix& m) {
  if (!m.is_square()) throw DimensionError("rank_parity: matrix is not square");
  return rank(m + BitMatrix::identity(m.rows())) % 2 == 1;
}

bool psi(const OrthogonalMap& t) { return rank_parity(t.matrix()); }

std::vector<BitVector> fixed_space(const OrthogonalMap& t) {
  return kernel_basis(t.matrix() + BitMatrix::identity(t.form().dim()));
}

std::vector<BitVector> nonsingular_vectors(const QuadraticForm& form) {
  if (form.dim() > 24) throw ResourceGuardError("nonsingular_vectors: dimension above 24");
  std::vector<BitVector> out;
  const std::uint64_t total = std::uint64_t{1} << form.dim();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    auto v = BitVector::from_word(form.dim(), bits);
    if (form(v)) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

UMapPartition umap_partition(const QuadraticForm& form) {
  if (form.dim() != 4) throw PreconditionError("umap_partition: dimension must be 4");
  require_nondegenerate(form, "umap_partition");
  if (arf(form)) throw PreconditionError("umap_partition: Arf invariant must be 0");

  const auto ones = nonsingular_vectors(form);
  UMapPartition partition;
  partition.v1.push_back(ones.front());
  for (std::size_t i = 1; i < ones.size(); ++i) {
    (bilinear(form, ones.front(), ones[i]) ? partition.v1 : partition.v2).push_back(ones[i]);
  }
  if (partition.v1.size() != 3 || partition.v2.size() != 3) {
    throw std::logic_error("umap_partition: nonsingular vectors do not split 3 + 3");
  }
  return partition;
}

bool is_u_map(const OrthogonalMap& t) {
  const auto partition = umap_partition(t.form());
  return std::all_of(partition.v1.begin(), partition.v1.end(), [&](const BitVector& v) {
    return std::find(partition.v2.begin(), partition.v2.end(), t(v)) != partition.v2.end();
  });
}

OrthogonalMap canonical_u_map(const QuadraticForm& form) {
  const auto partition = umap_partition(form);
  const std::vector<BitVector> columns{partition.v1[0], partition.v1[1], partition.v2[0], partition.v2[1]};
  const BitMatrix frame = BitMatrix::from_columns(columns, 4);
  const std::vector<BitVector> swapped{columns[2], columns[3], columns[0], columns[1]};
  const auto frame_inverse = inverse(frame);
  if (!frame_inverse) throw std::logic_error("canonical_u_map: V_1 and V_2 do not span V");
  return OrthogonalMap(form, BitMatrix::from_columns(swapped, 4) * *frame_inverse);
}

Decomposition decompose(const OrthogonalMap& t) {
  const auto& form = t.form();
  require_nondegenerate(form, "decompose");
  Decomposition result;
  BitMatrix current = t.matrix();
  if (is_dim4_arf0(form) && is_u_map(t)) {
    result.u_flag = true;
    current = current * canonical_u_map(form).matrix();
  }
  try {
    result.word = restore_basis(form, current);
  } catch (const PreconditionError& failure) {
    if (form.dim() > 4) throw std::logic_error(std::string("decompose: basis restoration failed: ") + failure.what());
    result.word = shortest_word(form, current);
  }
  return result;
}

BitMatrix recompose(const QuadraticForm& form, const Decomposition& decomposition) {
  BitMatrix product = decomposition.u_flag ? canonical_u_map(form).matrix() : BitMatrix::identity(form.dim());
  for (const auto& c : decomposition.word) {
    if (c.size() != form.dim()) throw DimensionError("recompose: word vector length mismatch");
    product = transvection_matrix(form, c) * product;
  }
  return product;
}

std::vector<BitMatrix> generate_group(std::size_t dim, std::span<const BitMatrix> generators, std::size_t max_dim) {
  if (dim > std::min(max_dim, detail::kPackedMaxDim)) {
    throw ResourceGuardError("group enumeration limited to dimension " +
                             std::to_string(std::min(max_dim, detail::kPackedMaxDim)));
  }
  std::vector<std::uint64_t> packed;
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim) throw DimensionError("generate_group: generator has wrong shape");
    packed.push_back(detail::pack(g));
  }
  const std::uint64_t identity = detail::packed_identity(dim);
  std::unordered_set<std::uint64_t> seen{identity};
  std::vector<std::uint64_t> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (const auto element : frontier) {
      for (const auto g : packed) {
        const auto product = detail::packed_multiply(element, g, dim);
        if (seen.insert(product).second) next.push_back(product);
      }
    }
    frontier = std::move(next);
  }
  std::vector<BitMatrix> out;
  out.reserve(seen.size());
  for (const auto element : seen) out.push_back(detail::unpack(element, dim));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BitMatrix> transvection_closure(const QuadraticForm& form, std::size_t max_dim) {
  require_nondegenerate(form, "transvection_closure");
  if (form.dim() > std::min(max_dim, detail::kPackedMaxDim)) {
    throw ResourceGuardError("group enumeration limited to dimension " +
                             std::to_string(std::min(max_dim, detail::kPackedMaxDim)));
  }
  std::vector<BitMatrix> generators;
  for (const auto& v : nonsingular_vectors(form)) generators.push_back(transvection_matrix(form, v));
  return generate_group(form.dim(), generators, max_dim);
}

std::vector<BitMatrix> enumerate_group(const QuadraticForm& form, std::size_t max_dim) {
  require_nondegenerate(form, "enumerate_group");
  if (form.dim() > std::min(max_dim, detail::kPackedMaxDim)) {
    throw ResourceGuardError("group enumeration limited to dimension " +
                             std::to_string(std::min(max_dim, detail::kPackedMaxDim)));
  }
  std::vector<BitMatrix> generators;
  for (const auto& v : nonsingular_vectors(form)) generators.push_back(transvection_matrix(form, v));
  if (is_dim4_arf0(form)) generators.push_back(canonical_u_map(form).matrix());
  return generate_group(form.dim(), generators, max_dim);
}

}  // namespace arfe
