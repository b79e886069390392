#include <gtest/gtest.h>

#include <random>

#include "arfe/error.hpp"
#include "arfe/oracle.hpp"
#include "arfe/orthogroup.hpp"
#include "support/forms.hpp"
#include "support/naive.hpp"

using arfe::BitMatrix;
using arfe::BitVector;
using arfe::QuadraticForm;
using testing_forms::standard;

TEST(FilterFullLinearGroup, Orders) {
  EXPECT_EQ(arfe::filter_full_linear_group(standard(1, false)).elements.size(), 2U);
  EXPECT_EQ(arfe::filter_full_linear_group(standard(1, true)).elements.size(), 6U);
  EXPECT_EQ(arfe::filter_full_linear_group(standard(2, false)).elements.size(), 72U);
  EXPECT_EQ(arfe::filter_full_linear_group(standard(2, true)).elements.size(), 120U);
  EXPECT_THROW(arfe::filter_full_linear_group(standard(3, false)), arfe::ResourceGuardError);
}

TEST(FilterFullLinearGroup, InvertibleCountInDimensionFour) {
  std::size_t invertible = 0;
  for (std::uint64_t code = 0; code < (1U << 16); ++code) {
    naive::Mat m(4, naive::Vec(4));
    for (std::size_t k = 0; k < 16; ++k) m[k / 4][k % 4] = static_cast<int>((code >> k) & 1U);
    invertible += naive::rank(m) == 4;
  }
  EXPECT_EQ(invertible, 20160U);
}

TEST(FilterFullLinearGroup, EqualsEnumeration) {
  std::mt19937_64 rng(40);
  for (std::size_t pairs = 1; pairs <= 2; ++pairs) {
    for (int arf_value = 0; arf_value < 2; ++arf_value) {
      const auto f = testing_forms::scrambled(standard(pairs, arf_value), rng);
      const auto table = arfe::filter_full_linear_group(f);
      EXPECT_EQ(table.elements, arfe::enumerate_group(f));
      EXPECT_TRUE(arfe::is_closed_group(table));
      for (std::size_t i = 0; i < table.elements.size(); ++i) {
        EXPECT_EQ(table.psi_values[i], arfe::rank_parity(table.elements[i]));
      }
    }
  }
}

TEST(SearchOrthogonalGroup, MatchesFilter) {
  for (std::size_t pairs = 1; pairs <= 2; ++pairs) {
    for (int arf_value = 0; arf_value < 2; ++arf_value) {
      const auto f = standard(pairs, arf_value);
      EXPECT_EQ(arfe::search_orthogonal_group(f), arfe::filter_full_linear_group(f).elements);
    }
  }
}

TEST(DemocraticArf, Counts) {
  auto counts = arfe::count_values(standard(1, false));
  EXPECT_EQ(counts.zeros, 3U);
  EXPECT_EQ(counts.ones, 1U);
  EXPECT_FALSE(arfe::democratic_arf(standard(1, false)));
  counts = arfe::count_values(standard(1, true));
  EXPECT_EQ(counts.zeros, 1U);
  EXPECT_EQ(counts.ones, 3U);
  EXPECT_TRUE(arfe::democratic_arf(standard(1, true)));
  counts = arfe::count_values(standard(2, false));
  EXPECT_EQ(counts.zeros, 10U);
  EXPECT_EQ(counts.ones, 6U);
  EXPECT_FALSE(arfe::democratic_arf(standard(2, false)));
}

TEST(DemocraticArf, MatchesNaiveCount) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing_forms::scrambled(standard(1 + rng() % 5, rng() & 1U), rng);
    const auto counts = arfe::count_values(f);
    const auto [zeros, ones] = naive::count(naive::Form(f));
    EXPECT_EQ(counts.zeros, zeros);
    EXPECT_EQ(counts.ones, ones);
  }
}

TEST(DemocraticArf, AgreesWithArfUpToDimensionTen) {
  for (std::size_t pairs = 1; pairs <= 5; ++pairs) {
    for (std::uint64_t values = 0; values < (std::uint64_t{1} << (2 * pairs)); ++values) {
      const auto f = QuadraticForm::standard(pairs, BitVector::from_word(2 * pairs, values));
      ASSERT_EQ(arfe::democratic_arf(f), arfe::arf(f));
    }
  }
}

TEST(DemocraticArf, Preconditions) {
  EXPECT_THROW(arfe::democratic_arf(standard(11, false)), arfe::ResourceGuardError);
  EXPECT_NO_THROW(arfe::democratic_arf(standard(11, false), 22));
  EXPECT_THROW(arfe::democratic_arf(QuadraticForm(BitMatrix::zero(2, 2), BitVector(2))), arfe::DegenerateFormError);
}

TEST(HomomorphismTable, Examples) {
  const auto t1 = arfe::filter_full_linear_group(standard(1, true));
  EXPECT_TRUE(arfe::homomorphism_table(t1));
  auto t4 = arfe::filter_full_linear_group(standard(2, false));
  EXPECT_TRUE(arfe::homomorphism_table(t4));
  t4.psi_values[5] = !t4.psi_values[5];
  EXPECT_FALSE(arfe::homomorphism_table(t4));
  // Dimension 2, Arf 0 is {Id, swap}; the swap is a transvection.
  EXPECT_TRUE(arfe::homomorphism_table(arfe::filter_full_linear_group(standard(1, false))));
}

TEST(IsClosedGroup, NegativeControls) {
  auto t = arfe::filter_full_linear_group(standard(1, true));
  auto missing = t;
  missing.elements.pop_back();
  missing.psi_values.pop_back();
  EXPECT_FALSE(arfe::is_closed_group(missing));
  auto unsorted = t;
  std::swap(unsorted.elements.front(), unsorted.elements.back());
  EXPECT_FALSE(arfe::is_closed_group(unsorted));
}

TEST(RandomOrthogonal, Examples) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testing_forms::scrambled(standard(1 + rng() % 10, rng() & 1U), rng);
    EXPECT_TRUE(arfe::random_orthogonal(f, rng(), 0).matrix().is_identity());
    const std::size_t length = rng() % 30;
    const auto seed = rng();
    const auto t = arfe::random_orthogonal(f, seed, length);
    EXPECT_TRUE(arfe::is_orthogonal(f, t.matrix()));
    EXPECT_EQ(arfe::psi(t), length % 2 == 1);
    EXPECT_EQ(arfe::random_orthogonal(f, seed, length), t);
  }
}
