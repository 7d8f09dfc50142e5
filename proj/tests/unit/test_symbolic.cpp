#include <gtest/gtest.h>

#include "trinomial/symbolic.hpp"
#include "trinomial/verification.hpp"

using namespace trinomial;

TEST(Symbolic, CoefficientsPrintInCanonicalOrder) {
  const SymbolicCoeffs c = symbolic_coefficients();
  EXPECT_EQ(to_string(c.A), "α²+α+2β+3");
  EXPECT_EQ(to_string(c.P), "αγ-β+3γ");
  EXPECT_EQ(to_string(c.Q), "αβ-2αγ+βγ-α+2β");
}

TEST(Symbolic, ClosedInitialTransformTerms) {
  const auto t = symbolic_triangle(2, 2);
  EXPECT_EQ(to_grouped_string(t.at(0, 0)), "x");
  EXPECT_EQ(to_grouped_string(t.at(1, 1)), "x + y + z");
  EXPECT_EQ(to_grouped_string(t.at(2, 2)), "(αγ+2γ+1)x + (αβ+2β+γ+2)y + (α²+2α+β+3)z");
}

TEST(Symbolic, SizeCap) {
  EXPECT_NO_THROW(symbolic_triangle(8, 8));
  EXPECT_THROW(symbolic_triangle(3, 9), std::length_error);
  EXPECT_THROW(symbolic_triangle(4, 3), std::invalid_argument);
}

TEST(Symbolic, DiagonalBaseCasesHold) {
  for (std::size_t l = 0; l <= 3; ++l) EXPECT_TRUE(verify_diagonal_base(l).holds()) << l;
  EXPECT_THROW(verify_diagonal_base(4), std::out_of_range);
}

TEST(Symbolic, ColumnBaseCasesHold) {
  for (std::size_t k = 3; k <= 5; ++k) EXPECT_TRUE(verify_column_base(k).holds()) << k;
  EXPECT_THROW(verify_column_base(2), std::out_of_range);
  EXPECT_THROW(verify_column_base(6), std::out_of_range);
}

TEST(Symbolic, SumBaseCasesHold) {
  EXPECT_TRUE(verify_sum_base().holds());
  EXPECT_TRUE(verify_alt_sum_base().holds());
}

TEST(Symbolic, PerturbedCoefficientsFail) {
  SymbolicCoeffs c = symbolic_coefficients();
  c.B -= MultiPoly(1);
  EXPECT_FALSE(verify_diagonal_base(2, c).holds());
  EXPECT_FALSE(verify_diagonal_base(2, c).residual().is_zero());

  SymbolicCoeffs p = symbolic_coefficients();
  p.P += MultiPoly::variable(Var::alpha);
  EXPECT_FALSE(verify_column_base(4, p).holds());

  SymbolicCoeffs s = symbolic_coefficients();
  s.alt6[3] = -s.alt6[3];
  EXPECT_FALSE(verify_alt_sum_base(s).holds());
}

TEST(Symbolic, SubstitutionGivesNumericCoefficients) {
  const TernarySpec fib(2, 0, -1, 0, 1, 1);
  const Assignment at = assignment_for(fib);
  const SymbolicCoeffs c = symbolic_coefficients();
  const DerivedCoeffs d = derive(fib);
  EXPECT_EQ(c.A.evaluate(at), d.A);
  EXPECT_EQ(c.B.evaluate(at), d.B);
  EXPECT_EQ(c.C.evaluate(at), d.C);
  for (std::size_t j = 0; j < 6; ++j) {
    EXPECT_EQ(c.sum6[j].evaluate(at), d.sum6[j]);
    EXPECT_EQ(c.alt6[j].evaluate(at), d.alt6[j]);
  }
}

TEST(Symbolic, SuiteReportsEveryIdentity) {
  const auto checks = symbolic_suite();
  EXPECT_EQ(checks.size(), 12u);
  EXPECT_TRUE(all_passed(checks));
}
