#include "bellhopf/hopf_axioms.hpp"

#include <gtest/gtest.h>

#include "bellhopf/errors.hpp"
#include "bellhopf/hopf_text.hpp"

namespace bellhopf {
namespace {

TEST(Axioms, AllPassToWeightSix) {
  const auto reports = check_all_axioms(AxiomConfig{});
  ASSERT_EQ(reports.size(), 7u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.axiom << ": " << r.counterexample.value_or("");
    EXPECT_GT(r.cases, 100u) << r.axiom;
    EXPECT_FALSE(r.counterexample.has_value());
  }
}

TEST(Axioms, WeightZeroIsTrivialButPasses) {
  AxiomConfig c;
  c.max_weight = 0;
  c.random_elements = 0;
  for (const auto& r : check_all_axioms(c)) EXPECT_TRUE(r.passed) << r.axiom;
}

TEST(Axioms, WeightEightWithinLimit) {
  AxiomConfig c;
  c.max_weight = 8;
  c.random_elements = 10;
  EXPECT_TRUE(check_coassociativity(c).passed);
  EXPECT_TRUE(check_antipode(c).passed);
  c.max_weight = 9;
  EXPECT_THROW(check_coassociativity(c), ResourceLimitError);
}

TEST(Axioms, CorruptedAntipodeIsCaught) {
  AxiomConfig c;
  c.antipode = corrupted_antipode;
  const auto r = check_antipode(c);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->find("y1"), std::string::npos);
  // The other axioms do not involve S.
  EXPECT_TRUE(check_coassociativity(c).passed);
}

TEST(Axioms, CorruptedAntipodeAgreesOnGenerators) {
  EXPECT_EQ(corrupted_antipode(generator(4)), antipode(generator(4)));
  EXPECT_EQ(corrupted_antipode(unit_element()), unit_element());
  EXPECT_EQ(corrupted_antipode(parse_hopf_element("y1^2")), parse_hopf_element("-y1^2"));
}

TEST(Axioms, CoassociativityOnSmallCases) {
  const auto unit_left = coproduct_left(unit_element());
  ASSERT_EQ(unit_left.size(), 1u);
  EXPECT_EQ(unit_left, coproduct_right(unit_element()));
  for (Monomial::Letter k = 1; k <= 5; ++k) {
    EXPECT_EQ(coproduct_left(generator(k)).size(), 3u);
    EXPECT_EQ(coproduct_left(generator(k)), coproduct_right(generator(k)));
  }
}

TEST(Axioms, DeterministicForFixedSeed) {
  AxiomConfig c;
  c.random_elements = 20;
  const auto a = check_bialgebra(c);
  const auto b = check_bialgebra(c);
  EXPECT_EQ(a.cases, b.cases);
  std::mt19937_64 r1(5), r2(5);
  EXPECT_EQ(random_element(r1, 6, 4), random_element(r2, 6, 4));
}

TEST(Axioms, PolySpecializationIsAHopfMorphism) {
  const auto r = check_poly_specialization(AxiomConfig{});
  EXPECT_TRUE(r.passed) << r.counterexample.value_or("");
}

}  // namespace
}  // namespace bellhopf
