#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arfe/error.hpp"
#include "arfe/oracle.hpp"
#include "arfe/orthogroup.hpp"
#include "support/forms.hpp"
#include "support/naive.hpp"

using arfe::BitMatrix;
using arfe::BitVector;
using arfe::OrthogonalMap;
using arfe::QuadraticForm;
using testing_forms::all_vectors;
using testing_forms::standard;

namespace {

BitVector v(const char* bits) { return BitVector::from_string(bits); }

BitMatrix m(std::initializer_list<const char*> rows) {
  std::vector<BitVector> data;
  for (const char* r : rows) data.push_back(BitVector::from_string(r));
  return BitMatrix::from_rows(std::move(data));
}

std::size_t fixed_dim(const BitMatrix& t) { return t.rows() - arfe::rank(t + BitMatrix::identity(t.rows())); }

std::vector<BitMatrix> naive_group(const QuadraticForm& f) {
  std::vector<BitMatrix> out;
  for (const auto& mat : naive::orthogonal_group(naive::Form(f))) out.push_back(naive::from_mat(mat, f.dim()));
  return out;
}

// Forms of dimension 2 and 4 with both Arf values, in scrambled bases as well
// as the standard one.
std::vector<QuadraticForm> small_forms() {
  std::mt19937_64 rng(20);
  std::vector<QuadraticForm> out;
  for (std::size_t pairs = 1; pairs <= 2; ++pairs) {
    for (int arf_value = 0; arf_value < 2; ++arf_value) {
      out.push_back(standard(pairs, arf_value));
      out.push_back(testing_forms::scrambled(standard(pairs, arf_value), rng));
    }
  }
  return out;
}

}  // namespace

TEST(IsOrthogonal, Examples) {
  const auto f = standard(2, true);
  EXPECT_TRUE(arfe::is_orthogonal(f, BitMatrix::identity(4)));
  for (const auto& a : all_vectors(4)) {
    if (a.none()) continue;
    EXPECT_EQ(arfe::is_orthogonal(f, arfe::transvection_matrix(f, a)), f(a));
  }
  EXPECT_FALSE(arfe::is_orthogonal(f, BitMatrix::zero(4, 4)));
  EXPECT_THROW(arfe::is_orthogonal(f, BitMatrix::identity(3)), arfe::DimensionError);
}

TEST(IsOrthogonal, MatchesExhaustiveDefinition) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t pairs = 1 + rng() % 3;
    const auto f = testing_forms::scrambled(standard(pairs, rng() & 1U), rng);
    // Mix random matrices with genuine group elements.
    const auto t = (trial % 2) ? naive::random_matrix(f.dim(), f.dim(), rng)
                               : arfe::random_orthogonal(f, rng(), rng() % 5).matrix() *
                                     (trial % 4 == 0 ? BitMatrix::identity(f.dim())
                                                     : arfe::transvection_matrix(f, naive::random_vector(f.dim(), rng)));
    EXPECT_EQ(arfe::is_orthogonal(f, t), naive::is_orthogonal(naive::Form(f), naive::to_mat(t)));
  }
}

TEST(Transvection, Examples) {
  const auto f = standard(1, true);
  EXPECT_TRUE(arfe::transvection(f, BitVector(2)).matrix().is_identity());
  // T_{e1+e2}(e1) = e1 + B(e1, e1+e2)(e1+e2) = e2, and symmetrically.
  EXPECT_EQ(arfe::transvection(f, v("11")).matrix(), m({"01", "10"}));
  const auto f0 = standard(2, false);
  EXPECT_THROW(arfe::transvection(f0, v("1000")), arfe::NotOrthogonalError);
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing_forms::scrambled(standard(1 + rng() % 10, rng() & 1U), rng);
    const auto a = arfe::random_nonsingular_vector(g, rng);
    const auto t = arfe::transvection(g, a);
    EXPECT_TRUE((t * t).matrix().is_identity());
    const auto x = naive::random_vector(g.dim(), rng);
    EXPECT_EQ(t(x), arfe::bilinear(g, x, a) ? x ^ a : x);
  }
}

TEST(Psi, Examples) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing_forms::scrambled(standard(1 + rng() % 8, rng() & 1U), rng);
    EXPECT_FALSE(arfe::psi(OrthogonalMap::identity(f)));
    EXPECT_TRUE(arfe::psi(arfe::transvection(f, arfe::random_nonsingular_vector(f, rng))));
    const std::size_t k = rng() % 12;
    EXPECT_EQ(arfe::psi(arfe::random_orthogonal(f, rng(), k)), k % 2 == 1);
  }
}

TEST(FixedSpace, Examples) {
  const auto f = standard(3, false);
  const auto id = arfe::fixed_space(OrthogonalMap::identity(f));
  ASSERT_EQ(id.size(), 6U);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(id[i], BitVector::unit(6, i));

  for (const auto& a : arfe::nonsingular_vectors(f)) {
    const auto fixed = arfe::fixed_space(arfe::transvection(f, a));
    const std::vector<BitVector> one{a};
    EXPECT_EQ(fixed.size(), 5U);
    EXPECT_TRUE(arfe::same_span(fixed, arfe::orthogonal_complement(f, one), 6));
  }

  const auto swap = arfe::fixed_space(arfe::transvection(standard(1, true), v("11")));
  ASSERT_EQ(swap.size(), 1U);
  EXPECT_EQ(swap[0], v("11"));
}

TEST(UMapPartition, StandardDimensionFour) {
  const auto f = standard(2, false);
  const auto p = arfe::umap_partition(f);
  ASSERT_EQ(p.v1.size(), 3U);
  ASSERT_EQ(p.v2.size(), 3U);
  std::set<BitVector> ones;
  for (const auto& x : all_vectors(4)) {
    if (f(x)) ones.insert(x);
  }
  ASSERT_EQ(ones.size(), 6U);
  std::set<BitVector> joined(p.v1.begin(), p.v1.end());
  joined.insert(p.v2.begin(), p.v2.end());
  EXPECT_EQ(joined, ones);
  EXPECT_EQ(p.v1.front(), *ones.begin());
  for (const auto* part : {&p.v1, &p.v2}) {
    for (const auto& x : *part) {
      for (const auto& y : *part) EXPECT_EQ(arfe::bilinear(f, x, y), x != y);
    }
  }
  for (const auto& x : p.v1) {
    for (const auto& y : p.v2) EXPECT_FALSE(arfe::bilinear(f, x, y));
  }
}

TEST(UMapPartition, Preconditions) {
  EXPECT_THROW(arfe::umap_partition(standard(2, true)), arfe::PreconditionError);
  EXPECT_THROW(arfe::umap_partition(standard(1, false)), arfe::PreconditionError);
  EXPECT_THROW(arfe::umap_partition(standard(3, false)), arfe::PreconditionError);
}

TEST(IsUMap, Examples) {
  for (const auto& f : small_forms()) {
    if (f.dim() != 4 || arfe::arf(f)) continue;
    const auto u0 = arfe::canonical_u_map(f);
    EXPECT_TRUE(arfe::is_u_map(u0));
    EXPECT_TRUE((u0 * u0).matrix().is_identity());
    EXPECT_FALSE(arfe::is_u_map(OrthogonalMap::identity(f)));
    const auto ones = arfe::nonsingular_vectors(f);
    ASSERT_EQ(ones.size(), 6U);
    for (const auto& a : ones) EXPECT_FALSE(arfe::is_u_map(arfe::transvection(f, a)));
  }
}

TEST(Decompose, Examples) {
  for (const auto& f : small_forms()) {
    const auto d = arfe::decompose(OrthogonalMap::identity(f));
    EXPECT_FALSE(d.u_flag);
    EXPECT_TRUE(d.word.empty());
  }
  // Dimension 2, Arf 0: the only other element is the swap T_{a+b}.
  const auto f = standard(1, false);
  const auto group = naive_group(f);
  ASSERT_EQ(group.size(), 2U);
  const auto swap = arfe::decompose(OrthogonalMap(f, m({"01", "10"})));
  EXPECT_FALSE(swap.u_flag);
  EXPECT_EQ(swap.word, std::vector<BitVector>{v("11")});

  const auto f4 = standard(2, false);
  const auto u = arfe::decompose(arfe::canonical_u_map(f4));
  EXPECT_TRUE(u.u_flag);
  EXPECT_TRUE(u.word.empty());
}

TEST(EnumerateGroup, OrdersAndOracleAgreement) {
  for (const auto& f : small_forms()) {
    const auto group = arfe::enumerate_group(f);
    const auto expected = naive_group(f);
    EXPECT_EQ(group, expected);
    const std::size_t order = f.dim() == 2 ? (arfe::arf(f) ? 6 : 2) : (arfe::arf(f) ? 120 : 72);
    EXPECT_EQ(group.size(), order);
    const auto closure = arfe::transvection_closure(f);
    if (f.dim() == 4 && !arfe::arf(f)) {
      EXPECT_EQ(closure.size() * 2, group.size());
      EXPECT_TRUE(std::ranges::includes(group, closure));
    } else {
      EXPECT_EQ(closure, group);
    }
  }
}

TEST(EnumerateGroup, DimensionSixAgainstBacktracking) {
  for (int arf_value = 0; arf_value < 2; ++arf_value) {
    const auto f = standard(3, arf_value);
    const auto closure = arfe::transvection_closure(f);
    EXPECT_EQ(closure.size(), arf_value ? 51840U : 40320U);
    EXPECT_EQ(closure, arfe::search_orthogonal_group(f));
  }
}

TEST(EnumerateGroup, Guard) {
  EXPECT_THROW(arfe::enumerate_group(standard(5, false)), arfe::ResourceGuardError);
  EXPECT_THROW(arfe::enumerate_group(standard(2, false), 2), arfe::ResourceGuardError);
}

TEST(PsiHomomorphism, ExhaustiveSmallGroups) {
  for (const auto& f : small_forms()) {
    const auto group = arfe::enumerate_group(f);
    bool nontrivial = false;
    for (const auto& s : group) {
      nontrivial = nontrivial || arfe::rank_parity(s);
      for (const auto& t : group) {
        ASSERT_EQ(arfe::rank_parity(s * t), arfe::rank_parity(s) != arfe::rank_parity(t));
      }
    }
    EXPECT_TRUE(nontrivial);
  }
}

TEST(PsiHomomorphism, RandomLargerDimensions) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t pairs = 3 + trial % 6;
    const auto f = standard(pairs, trial % 2);
    const auto s = arfe::random_orthogonal(f, rng(), 1 + rng() % 20);
    const auto t = arfe::random_orthogonal(f, rng(), 1 + rng() % 20);
    ASSERT_EQ(arfe::psi(s * t), arfe::psi(s) != arfe::psi(t));
  }
}

TEST(Psi, NotAHomomorphismOnSymplecticGroup) {
  // Sp(V) is strictly larger than O(V, g); find S, T in Sp with
  // rank_parity(ST) != rank_parity(S) + rank_parity(T).
  const auto f = standard(2, false);
  std::vector<BitMatrix> sp;
  for (std::uint64_t code = 0; code < (1U << 16); ++code) {
    BitMatrix a(4, 4);
    for (std::size_t k = 0; k < 16; ++k) a.set(k / 4, k % 4, (code >> k) & 1U);
    if (a.transpose() * f.gram() * a == f.gram()) sp.push_back(a);
  }
  ASSERT_EQ(sp.size(), 720U);
  bool witness = false;
  for (const auto& s : sp) {
    for (const auto& t : sp) {
      if (arfe::rank_parity(s * t) != (arfe::rank_parity(s) != arfe::rank_parity(t))) {
        EXPECT_FALSE(arfe::is_orthogonal(f, s) && arfe::is_orthogonal(f, t));
        witness = true;
        break;
      }
    }
    if (witness) break;
  }
  EXPECT_TRUE(witness);
}

TEST(ImageFixedDuality, AllSmallGroupElements) {
  for (const auto& f : small_forms()) {
    for (const auto& t : arfe::enumerate_group(f)) {
      const auto minus = t + BitMatrix::identity(f.dim());
      std::vector<BitVector> image;
      for (std::size_t c = 0; c < f.dim(); ++c) image.push_back(minus.column(c));
      const auto fixed = arfe::kernel_basis(minus);
      ASSERT_TRUE(arfe::same_span(image, arfe::orthogonal_complement(f, fixed), f.dim()));
    }
  }
}

TEST(FixedSpaceStep, AllSmallGroupElements) {
  for (const auto& f : small_forms()) {
    const auto ones = arfe::nonsingular_vectors(f);
    for (const auto& t : arfe::enumerate_group(f)) {
      const auto fixed = arfe::kernel_basis(t + BitMatrix::identity(f.dim()));
      for (const auto& a : ones) {
        const bool inside = std::ranges::none_of(fixed, [&](const BitVector& x) { return arfe::bilinear(f, x, a); });
        const auto after = fixed_dim(t * arfe::transvection_matrix(f, a));
        ASSERT_EQ(after, inside ? fixed.size() + 1 : fixed.size() - 1);
      }
    }
  }
}

TEST(UMaps, InvolutiveUMapsHaveEvenPsi) {
  for (const auto& f : small_forms()) {
    if (f.dim() != 4 || arfe::arf(f)) continue;
    int involutive = 0;
    int u_maps = 0;
    for (const auto& t : arfe::enumerate_group(f)) {
      const OrthogonalMap map(f, t);
      if (!arfe::is_u_map(map)) continue;
      ++u_maps;
      if (!(t * t).is_identity()) continue;
      ++involutive;
      EXPECT_FALSE(arfe::psi(map));
    }
    EXPECT_EQ(u_maps, 36);
    EXPECT_GT(involutive, 0);
  }
}

TEST(Decompose, RoundTripOnEveryEnumeratedElement) {
  std::vector<QuadraticForm> forms = small_forms();
  forms.push_back(standard(3, false));
  forms.push_back(standard(3, true));
  for (const auto& f : forms) {
    for (const auto& t : arfe::enumerate_group(f)) {
      const OrthogonalMap map(f, t);
      const auto d = arfe::decompose(map);
      ASSERT_EQ(arfe::recompose(f, d), t);
      ASSERT_EQ(d.word.size() % 2 == 1, arfe::psi(map));
      for (const auto& c : d.word) ASSERT_TRUE(f(c));
      if (d.u_flag) ASSERT_TRUE(arfe::is_u_map(map));
    }
  }
}

TEST(Decompose, RoundTripRandomLarge) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t pairs = 4 + rng() % 20;
    const auto f = testing_forms::scrambled(standard(pairs, rng() & 1U), rng);
    const auto t = arfe::random_orthogonal(f, rng(), rng() % 60);
    const auto d = arfe::decompose(t);
    ASSERT_FALSE(d.u_flag);
    ASSERT_EQ(arfe::recompose(f, d), t.matrix());
    ASSERT_EQ(d.word.size() % 2 == 1, arfe::psi(t));
    for (const auto& c : d.word) ASSERT_TRUE(f(c));
  }
}

TEST(OrthogonalMap, RejectsNonOrthogonal) {
  const auto f = standard(2, false);
  EXPECT_THROW(OrthogonalMap(f, arfe::transvection_matrix(f, v("1000"))), arfe::NotOrthogonalError);
  const auto g = standard(2, true);
  EXPECT_THROW(OrthogonalMap::identity(f) * OrthogonalMap::identity(g), arfe::PreconditionError);
}
