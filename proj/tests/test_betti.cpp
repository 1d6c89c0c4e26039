#include <gtest/gtest.h>

#include "moduli/betti.hpp"

using namespace moduli;

namespace {

const auto Q = CoefficientRing::rationals();

Series from(std::initializer_list<long long> cs, int trunc) {
  std::vector<Rational> v;
  for (auto c : cs) v.emplace_back(c);
  return Series(Q, trunc, v);
}

PoincarePolynomial poly(std::initializer_list<long long> cs) { return PoincarePolynomial::from_integers(Q, cs); }

bool has_warning(const BettiResult& r, const std::string& fragment) {
  for (const auto& w : r.warnings)
    if (w.find(fragment) != std::string::npos) return true;
  return false;
}

} // namespace

TEST(Mod2, BGRankOneIsTheTorus) {
  for (int g = 2; g <= 5; ++g) EXPECT_EQ(bg_z2(1, g, 1, 10).series, factor_q(10, 1, 1, g) * factor_q(10, -1, 1, -1));
}

TEST(Mod2, BGLowDegrees) {
  // (1+t)^2 (1+t)(1+t^2)(1+t^3)^2 / ((1-t)(1-t^2)(1-t^4)), hand expanded.
  auto s = bg_z2(2, 2, 1, 2).series;
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[1], 4); // g + a + 1
  EXPECT_EQ(s[2], 9);
  for (int g = 2; g <= 6; ++g)
    for (int a = 0; a <= g + 1; ++a) EXPECT_EQ(bg_z2(3, g, a, 1).series[1], g + a + 1);
}

TEST(Mod2, BSGAndBCG) {
  EXPECT_EQ(bsg_z2(1, 3, 2, 5).series, Series::one(Q, 5));
  EXPECT_EQ(bsg_z2(2, 2, 1, 3).series, from({1, 1, 2, 4}, 3));
  for (int a = 0; a <= 5; ++a) {
    EXPECT_EQ(bcg_z2(2, 4, a, 2).series[0], 1);
    EXPECT_EQ(bcg_z2(2, 4, a, 2).series[1], a + 1);
  }
  EXPECT_THROW(bcg_z2(2, 1, 0, 4), invalid_parameters);
  EXPECT_THROW(bcg_z2(2, 3, 5, 4), invalid_parameters);
}

TEST(OddChar, OddRank) {
  auto expected = factor_q(8, 1, 3, 2) * factor_q(8, 1, 5, 2) * factor_q(8, -1, 4, -2);
  for (const auto& curve : enumerate_curves(2))
    for (int c = 0; c <= curve.a; ++c) {
      auto r = bcg_odd(3, curve, c, 8);
      EXPECT_EQ(r.series, expected);
      EXPECT_EQ(r.case_label, case_labels::odd_rank);
    }
}

TEST(OddChar, EvenRankCases) {
  auto r = bcg_odd(2, validate_curve(3, 3, 1), 2, 10);
  EXPECT_EQ(r.case_label, case_labels::connected_a_gt_c);
  ASSERT_TRUE(r.polynomial);
  EXPECT_EQ(*r.polynomial, poly({1, 0, 1, 4, 1, 0, 1}));
  EXPECT_EQ(r.factors.at("F"), Series::one(Q, 10));

  auto z = bcg_odd(2, validate_curve(3, 0, 1), 0, 12);
  EXPECT_EQ(z.case_label, case_labels::a_zero);
  EXPECT_EQ(z.factors.at("G"), factor_q(12, 1, 3, 3) * factor_q(12, -1, 4, -1));
}

TEST(OddChar, CaseLabels) {
  using namespace case_labels;
  EXPECT_EQ(g_case_label({4, 3, 1}, 3), connected_a_eq_c);
  EXPECT_EQ(g_case_label({4, 3, 0}, 0), disconnected_c_zero);
  EXPECT_EQ(g_case_label({4, 5, 0}, 1), disconnected_c_odd);
  EXPECT_EQ(g_case_label({4, 5, 0}, 2), disconnected_c_even);
  EXPECT_EQ(g_case_label({4, 5, 0}, 5), disconnected_a_eq_c);
}

TEST(OddChar, NegativeExponentIsFlagged) {
  // c = g on a disconnected curve with a = g + 1: exponent g - c - 1 = -1.
  auto r = g_series(2, validate_curve(3, 4, 0), 3, 12);
  EXPECT_TRUE(has_warning(r, "negative formal exponent -1"));
  EXPECT_FALSE(r.polynomial);
}

TEST(OddChar, ReconciledDisconnectedEvenCarriesWarning) {
  auto r = g_series(2, validate_curve(3, 2, 0), 2, 8);
  EXPECT_TRUE(has_warning(r, "known discrepancy"));
  auto odd = g_series(2, validate_curve(4, 3, 0), 3, 8);
  EXPECT_FALSE(has_warning(odd, "known discrepancy"));
}

TEST(Beta, TableValues) {
  EXPECT_EQ(beta_leading(2, {6, 3, 1}, 2), (BetaPair{1, 7}));
  EXPECT_EQ(beta_leading(2, {6, 1, 1}, 0), (BetaPair{1, 5}));
  EXPECT_EQ(beta_leading(2, {5, 0, 1}, 0), (BetaPair{0, 5}));
  EXPECT_THROW(beta_leading(3, {5, 0, 1}, 0), invalid_parameters);
}

TEST(Beta, SeriesValues) {
  EXPECT_EQ(beta_from_series(2, {6, 3, 1}, 2, FormulaMode::reconciled), (BetaPair{1, 7}));
  EXPECT_EQ(beta_from_series(2, {5, 0, 1}, 0, FormulaMode::reconciled), (BetaPair{0, 5}));
  // The connected a > c = 0 bullet has no t^{2r-2} term.
  EXPECT_EQ(beta_from_series(2, {6, 1, 1}, 0, FormulaMode::reconciled), (BetaPair{0, 5}));
  // Pairs differing only in eps separate at degree 2r - 1.
  for (int a : {1, 3, 5}) {
    EXPECT_EQ(beta_leading(2, {6, a, 1}, 0).high, 5);
    EXPECT_EQ(beta_leading(2, {6, a, 0}, 0).high, 6);
  }
}

TEST(Rank2Mod2, TableReconciled) {
  EXPECT_EQ(*fixed_det_rank2_z2(2, 1).polynomial, poly({1, 1, 1, 1}));
  EXPECT_EQ(*fixed_det_rank2_z2(3, 4).polynomial, poly({1, 4, 11, 16, 11, 4, 1}));
  EXPECT_EQ(*fixed_det_rank2_z2(4, 5).polynomial, poly({1, 5, 16, 40, 66, 66, 40, 16, 5, 1}));
}

TEST(Rank2Mod2, AsPrintedLeavesRemainder) {
  auto r = fixed_det_rank2_z2(2, 1, Rank2Mode::as_printed);
  EXPECT_FALSE(r.polynomial);
  EXPECT_TRUE(has_warning(r, "remainder"));
  EXPECT_THROW(fixed_det_rank2_z2(1, 1), invalid_parameters);
  EXPECT_THROW(fixed_det_rank2_z2(3, 0), invalid_parameters);
}

TEST(Rank2Mod2, PalindromicOfDimension) {
  for (int g = 2; g <= 7; ++g)
    for (int a = 1; a <= g + 1; ++a) {
      auto r = fixed_det_rank2_z2(g, a);
      ASSERT_TRUE(r.polynomial);
      EXPECT_TRUE(palindrome_check(*r.polynomial, 3 * g - 3)) << g << "," << a;
      EXPECT_TRUE(r.warnings.empty());
    }
}

TEST(Rank3Mod2, TerminatesAtDimension) {
  auto r = fixed_det_rank3_z2(2, 0, 8);
  ASSERT_TRUE(r.polynomial);
  EXPECT_EQ(*r.polynomial, poly({1, 1, 3, 5, 4, 5, 3, 1, 1}));
  EXPECT_EQ(*fixed_det_rank3_z2(2, 1, 8).polynomial, poly({1, 2, 6, 11, 12, 11, 6, 2, 1}));
  EXPECT_EQ(*fixed_det_rank3_z2(2, 2, 8).polynomial, poly({1, 3, 10, 21, 26, 21, 10, 3, 1}));
}

TEST(Rank2Odd, Polynomials) {
  EXPECT_EQ(*fixed_det_rank2_odd(3, 0).polynomial, poly({1, 0, 0, 2, 0, 0, 1}));
  EXPECT_EQ(*fixed_det_rank2_odd(3, 1).polynomial, poly({1, 0, 0, 2, 0, 0, 1}));
  EXPECT_EQ(*fixed_det_rank2_odd(5, 0).polynomial, poly({1, 0, 0, 4, 0, 0, 6, 0, 0, 4, 0, 0, 1}));
  auto boundary = fixed_det_rank2_odd(3, 3);
  EXPECT_TRUE(has_warning(boundary, "negative formal exponent"));
  EXPECT_THROW(fixed_det_rank2_odd(4, 0), invalid_parameters);
}

TEST(Rank2Odd, AgreesWithGWhereApplicable) {
  for (int g = 3; g <= 9; g += 2)
    for (const auto& curve : enumerate_curves(g))
      for (int c = 0; c < curve.a && c <= g - 1; ++c) {
        auto label = g_case_label(curve, c);
        if (label != case_labels::connected_a_gt_c && label != case_labels::disconnected_c_odd) continue;
        auto G = g_series(2, curve, c, 3 * g);
        ASSERT_TRUE(G.polynomial);
        EXPECT_EQ(*G.polynomial, *fixed_det_rank2_odd(g, c).polynomial);
      }
}

TEST(LoopGroups, Series) {
  auto blsu = loop_group_series("BLSU", 2, 6);
  EXPECT_EQ(blsu, factor_q(6, 1, 3, 1) * factor_q(6, -1, 4, -1));
  EXPECT_EQ(loop_group_series(LoopKind::BLSO_invariant, 2, 8), factor_q(8, 1, 3, 1) * factor_q(8, -1, 4, -1));
  EXPECT_EQ(loop_group_series(LoopKind::tau_gamma_z2_fiber, 3, 8), factor_q(8, 1, 3, 1) * factor_q(8, 1, 5, 1));
  EXPECT_THROW(loop_group_series("nope", 2, 4), invalid_parameters);
}
