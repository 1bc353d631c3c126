#include <gtest/gtest.h>

#include "catmag/errors.hpp"
#include "catmag/generators.hpp"
#include "catmag/linalg.hpp"
#include "catmag/magnitude.hpp"
#include "support.hpp"

namespace catmag {
namespace {

using namespace catmag::literals;
using Vec = std::vector<Rational>;

const Matrix kOnes2{{1, 1}, {1, 1}};
const Matrix kUpper{{1, 1}, {0, 1}};

TEST(WeightingTest, Examples) {
  EXPECT_EQ(weighting_of(Matrix::identity(3)), (Vec{1, 1, 1}));
  EXPECT_EQ(weighting_of(kOnes2), (Vec{"1/2"_q, "1/2"_q}));
  EXPECT_FALSE(weighting_of(Matrix::zeros(2, 2)).has_value());
  EXPECT_EQ(weighting_of(kUpper), (Vec{0, 1}));
  EXPECT_THROW(weighting_of(Matrix(2, 3)), ShapeError);
}

TEST(CoweightingTest, Examples) {
  EXPECT_EQ(coweighting_of(kUpper), (Vec{1, 0}));
  const Matrix sym{{2, 1}, {1, 3}};
  EXPECT_EQ(coweighting_of(sym), weighting_of(sym));
  EXPECT_FALSE(coweighting_of(Matrix::zeros(3, 3)).has_value());
  EXPECT_THROW(coweighting_of(Matrix(3, 2)), ShapeError);
}

TEST(WeightingTest, WeightingWithoutCoweighting) {
  // rows (1,0),(1,0): M w = 1 solvable by w = (1, t); z^T M = (z1+z2, 0) never 1
  const Matrix m{{1, 0}, {1, 0}};
  EXPECT_EQ(weighting_of(m), (Vec{1, 0}));
  EXPECT_FALSE(coweighting_of(m).has_value());
  const MagnitudeReport r = magnitude_of(m);
  EXPECT_TRUE(r.has_weighting);
  EXPECT_FALSE(r.has_coweighting);
  EXPECT_FALSE(r.has_magnitude);
  EXPECT_FALSE(r.magnitude.has_value());
  EXPECT_EQ(r.generalized_magnitude, entry_sum(pinv(m)));
}

TEST(WeightingTest, SolutionSetOfIndiscrete) {
  const auto sol = weighting_solutions(Matrix::ones(3, 3));
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->particular, (Vec{"1/3"_q, "1/3"_q, "1/3"_q}));
  EXPECT_EQ(sol->nullspace.cols(), 2u);
  const Matrix z = Matrix::ones(3, 3);
  EXPECT_EQ(z * sol->nullspace, Matrix::zeros(3, 2));
  // particular + any nullspace combination is still a weighting
  const Matrix w = testing::column(sol->particular) + sol->nullspace * Matrix{{5}, {"-2/7"_q}};
  EXPECT_EQ(z * w, Matrix::ones(3, 1));

  const auto co = coweighting_solutions(Matrix{{1, 0}, {1, 0}});
  EXPECT_FALSE(co.has_value());
  const auto co2 = coweighting_solutions(Matrix{{1, 1}, {0, 0}});
  ASSERT_TRUE(co2.has_value());
  EXPECT_EQ(co2->nullspace.cols(), 1u);
  EXPECT_EQ(transpose(co2->nullspace) * (Matrix{{1, 1}, {0, 0}}), Matrix::zeros(1, 2));
}

TEST(MagnitudeOfTest, Examples) {
  MagnitudeReport r = magnitude_of(Matrix::identity(3));
  EXPECT_TRUE(r.has_magnitude);
  EXPECT_EQ(r.magnitude, Rational(3));

  r = magnitude_of(kOnes2);
  EXPECT_TRUE(r.has_magnitude);
  EXPECT_EQ(r.magnitude, Rational(1));
  EXPECT_FALSE(r.mobius.has_value());
  EXPECT_EQ(r.rank, 1u);

  r = magnitude_of(Matrix{{3}});
  EXPECT_EQ(r.magnitude, "1/3"_q);

  r = magnitude_of(Matrix::zeros(2, 2));
  EXPECT_FALSE(r.has_magnitude);
  EXPECT_FALSE(r.has_weighting);
  EXPECT_FALSE(r.has_coweighting);
  EXPECT_EQ(r.generalized_magnitude, Rational(0));

  r = magnitude_of(kUpper);
  EXPECT_EQ(r.mobius, Matrix({{1, -1}, {0, 1}}));
  EXPECT_EQ(r.magnitude, Rational(1));  // 1 - 1 + 0 + 1
  EXPECT_EQ(entry_sum(*r.mobius), Rational(1));
}

TEST(MagnitudeOfTest, EmptyCategory) {
  const MagnitudeReport r = magnitude_of_category(FinCategory());
  EXPECT_EQ(r.n, 0u);
  EXPECT_TRUE(r.has_magnitude);
  EXPECT_EQ(r.magnitude, Rational(0));
  EXPECT_EQ(r.generalized_magnitude, Rational(0));
}

TEST(MagnitudeOfCategoryTest, Fixtures) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const MagnitudeReport r = magnitude_of_category(gen_indiscrete(n));
    EXPECT_EQ(r.magnitude, Rational(1)) << n;
    // J+ = J / n^2
    EXPECT_EQ(r.pseudo_mobius, Rational::make(1, static_cast<std::int64_t>(n * n)) * Matrix::ones(n, n));
  }
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(magnitude_of_category(gen_chain(n)).magnitude, Rational(1));
  for (std::size_t m = 1; m <= 6; ++m)
    EXPECT_EQ(magnitude_of_category(gen_cyclic_monoid(m)).magnitude, Rational::make(1, static_cast<std::int64_t>(m)));
  const MagnitudeReport r = magnitude_of_category(gen_divisors(6));
  EXPECT_EQ(r.objects, (std::vector<std::string>{"1", "2", "3", "6"}));
  EXPECT_EQ(r.weighting, (Vec{0, 0, 0, 1}));  // row sums of mu: mu(d, .) summed over multiples
}

TEST(RotaTest, Examples) {
  EXPECT_EQ(rota_characteristic(gen_divisors(6)), Rational(2));
  EXPECT_EQ(rota_characteristic(gen_chain(3)), Rational(1));
  EXPECT_EQ(rota_characteristic(gen_chain(2)), Rational(0));
  EXPECT_THROW(rota_characteristic(Poset::close({"a", "b"}, std::vector<std::pair<std::string, std::string>>{})), DomainError);
  EXPECT_THROW(rota_characteristic(gen_chain(1)), DomainError);
  EXPECT_THROW(rota_characteristic(gen_chain(0)), DomainError);
}

TEST(RotaChainOracleTest, Examples) {
  const std::vector<Integer> c = rota_chain_counts(gen_divisors(6));
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c[2], 1);
  EXPECT_EQ(c[3], 2);
  EXPECT_EQ(c[4], 0);
  EXPECT_EQ(rota_chain_oracle(gen_divisors(6)), Rational(2));
  EXPECT_EQ(rota_chain_oracle(gen_chain(2)), Rational(0));
  EXPECT_EQ(rota_chain_oracle(gen_chain(3)), Rational(1));
  EXPECT_THROW(rota_chain_oracle(Poset::close({"a", "b"}, std::vector<std::pair<std::string, std::string>>{})), DomainError);
}

TEST(InteriorCheckTest, Examples) {
  InteriorCheck c = interior_characteristic_check(gen_divisors(6));
  EXPECT_EQ(c.lhs, Rational(2));
  EXPECT_EQ(c.rhs, Rational(2));
  c = interior_characteristic_check(gen_chain(3));
  EXPECT_EQ(c.lhs, Rational(1));
  EXPECT_EQ(c.rhs, Rational(1));
  c = interior_characteristic_check(gen_chain(2));
  EXPECT_EQ(c.lhs, Rational(0));
  EXPECT_EQ(c.rhs, Rational(0));
}

TEST(ProductCheckTest, Examples) {
  const FinCategory arrow = gen_chain(2).as_category();
  EXPECT_TRUE(pseudo_mobius_product_check(arrow, arrow).ok());
  EXPECT_TRUE(pseudo_mobius_product_check(gen_indiscrete(2), gen_cyclic_monoid(2)).ok());
  EXPECT_TRUE(pseudo_mobius_product_check(gen_indiscrete(3), gen_discrete(1)).ok());
  EXPECT_TRUE(pseudo_mobius_product_check(kOnes2, Matrix::zeros(2, 3)).ok());
}

// ---------------------------------------------------------------------------

TEST(MagnitudeProperty, ReportInvariantsOnRandomCategories) {
  testing::Rng rng(99);
  int without_weighting = 0;
  for (int t = 0; t < 60; ++t) {
    const FinCategory c = testing::random_category(rng);
    const MagnitudeReport r = magnitude_of_category(c);
    EXPECT_EQ(r.has_magnitude, r.has_weighting && r.has_coweighting);
    if (r.has_magnitude) {
      Rational w, z;
      for (const auto& x : *r.weighting) w += x;
      for (const auto& x : *r.coweighting) z += x;
      EXPECT_EQ(w, z);
      EXPECT_EQ(*r.magnitude, w);
      EXPECT_EQ(*r.magnitude, r.generalized_magnitude);
    }
    if (r.mobius) {
      EXPECT_EQ(*r.mobius, r.pseudo_mobius);
      EXPECT_TRUE(r.has_magnitude);
    }
    // unique weighting <=> Mobius inversion
    if (r.has_weighting) EXPECT_EQ(nullspace(zeta_of(c).z).cols() == 0, r.mobius.has_value());
    if (!r.has_weighting) ++without_weighting;
  }
  RecordProperty("without_weighting", without_weighting);
}

TEST(MagnitudeProperty, WeightingAbsenceMeansUnsolvable) {
  testing::Rng rng(100);
  for (int t = 0; t < 80; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const std::size_t n = dim(rng);
    std::uniform_int_distribution<std::size_t> r(0, n);
    const Matrix m = testing::random_matrix_with_rank(rng, n, n, r(rng));
    const auto w = weighting_of(m);
    EXPECT_EQ(w.has_value(), testing::solvable(m, Matrix::ones(n, 1)));
    const auto z = coweighting_of(m);
    EXPECT_EQ(z.has_value(), testing::solvable(transpose(m), Matrix::ones(n, 1)));
  }
}

}  // namespace
}  // namespace catmag
