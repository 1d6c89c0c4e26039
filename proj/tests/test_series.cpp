#include <gtest/gtest.h>

#include "moduli/series.hpp"

using namespace moduli;

namespace {

const auto Q = CoefficientRing::rationals();

Series from(std::initializer_list<long long> cs, int trunc) {
  std::vector<Rational> v;
  for (auto c : cs) v.emplace_back(c);
  return Series(Q, trunc, v);
}

} // namespace

TEST(Series, ProductOfBinomials) {
  // (1+t)^2 (1-t)^{-1} = 1 + 3t + 4t^2 + 4t^3 + ...
  auto s = factor_q(5, 1, 1, 2) * factor_q(5, -1, 1, -1);
  EXPECT_EQ(s, from({1, 3, 4, 4, 4, 4}, 5));
}

TEST(Series, GeometricInverseRoundTrip) {
  auto inv = factor_q(12, -1, 4, -2);
  EXPECT_EQ(inv * factor_q(12, -1, 4, 2), Series::one(Q, 12));
  // 1/(1-t^4)^2 = sum (k+1) t^{4k}
  EXPECT_EQ(inv[8], 3);
  EXPECT_EQ(inv[9], 0);
}

TEST(Series, DivisionNeedsInvertibleConstant) {
  auto a = from({1, 2, 3}, 4);
  auto t = Series::monomial(Q, 4, 1, Integer(1));
  EXPECT_THROW(a / t, not_invertible);
  auto q = a / factor_q(4, 1, 1, 1);
  EXPECT_EQ(q * factor_q(4, 1, 1, 1), a);
}

TEST(Series, TruncationIsMinimumOfOperands) {
  auto s = from({1, 1}, 3) + from({1, 1, 1, 1, 1, 1}, 5);
  EXPECT_EQ(s.truncation(), 3);
  EXPECT_EQ((from({1}, 7) * from({1}, 2)).truncation(), 2);
}

TEST(Series, RingMismatchThrows) {
  auto a = Series::one(Q, 3);
  auto p = TruncatedSeries<Zp>::one(CoefficientRing::prime_field(3), 3);
  auto p5 = TruncatedSeries<Zp>::one(CoefficientRing::prime_field(5), 3);
  EXPECT_THROW(p + p5, ring_mismatch);
  EXPECT_THROW(Series(CoefficientRing::prime_field(3), 1), ring_mismatch);
  (void)a;
}

TEST(Series, PrimeFieldArithmetic) {
  const auto F3 = CoefficientRing::prime_field(3);
  auto s = binomial_factor<Zp>(F3, 6, 1, 1, 3, Zp(1, 3));
  // (1+t)^3 = 1 + t^3 mod 3
  EXPECT_EQ(s[0].value(), 1u);
  EXPECT_EQ(s[1].value(), 0u);
  EXPECT_EQ(s[2].value(), 0u);
  EXPECT_EQ(s[3].value(), 1u);
  EXPECT_EQ(Zp(2, 5).inverse().value(), 3u);
  EXPECT_THROW(Zp(0, 5).inverse(), not_invertible);
  EXPECT_THROW(CoefficientRing::prime_field(4), std::invalid_argument);
}

TEST(Series, CharacterRing) {
  Character chi(0, 1);
  EXPECT_EQ(chi * chi, Character(1));
  Character u(2, 1); // 2 + chi has inverse (2 - chi)/3
  EXPECT_EQ(u * u.inverse(), Character(1));
  EXPECT_THROW(Character(1, 1).inverse(), not_invertible);
  EXPECT_EQ(to_string(Character(0, 2)), "2chi");
  EXPECT_EQ(to_string(Character(1, -1)), "(1 - chi)");
}

TEST(Series, CharacterProjection) {
  const auto C = CoefficientRing::character();
  // 1/(1 - chi t): invariant part is 1/(1 - t^2)
  auto f = TruncatedSeries<Character>::one(C, 8) - TruncatedSeries<Character>::term(C, 8, 1, Character(0, 1));
  auto inv = TruncatedSeries<Character>::one(C, 8) / f;
  EXPECT_EQ(char_invariant_part(inv), factor_q(8, -1, 2, -1));
  auto plus = evaluate_character(inv, 1), minus = evaluate_character(inv, -1);
  EXPECT_EQ(plus, factor_q(8, -1, 1, -1));
  EXPECT_EQ(minus, factor_q(8, 1, 1, -1));
  EXPECT_EQ(char_invariant_part(embed_character(plus)), plus);
}

TEST(Polynomial, ExactDivision) {
  auto num = PoincarePolynomial::from_integers(Q, {1, 0, 0, 1}); // 1 + t^3
  auto den = PoincarePolynomial::from_integers(Q, {1, 1});
  auto r = exact_poly_division(num, den);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_EQ(r.quotient, PoincarePolynomial::from_integers(Q, {1, -1, 1}));
  auto r2 = exact_poly_division(PoincarePolynomial::from_integers(Q, {1, 0, 1}), den);
  EXPECT_EQ(r2.remainder, PoincarePolynomial::from_integers(Q, {2}));
  EXPECT_EQ(r2.quotient * den + r2.remainder, PoincarePolynomial::from_integers(Q, {1, 0, 1}));
}

TEST(Polynomial, PalindromeAndEvaluation) {
  auto p = PoincarePolynomial::from_integers(Q, {1, 0, 1, 4, 1, 0, 1});
  EXPECT_TRUE(palindrome_check(p, 6));
  EXPECT_FALSE(palindrome_check(p, 7));
  EXPECT_EQ(evaluate(p, Rational(1)), 8);
  EXPECT_EQ(evaluate(p, Rational(-1)), 0);
}

TEST(Series, RenderingShowsOrder) {
  EXPECT_EQ(from({1, -2, 0, 1}, 3).str(), "1 - 2*t + t^3 + O(t^4)");
  EXPECT_EQ(PoincarePolynomial::from_integers(Q, {0, 0, 3}).str(), "3*t^2");
}

TEST(Series, PowerMatchesRepeatedProduct) {
  auto base = from({1, 1, 0, 2}, 9);
  auto p = Series::one(Q, 9);
  for (int i = 0; i < 4; ++i) p *= base;
  EXPECT_EQ(base.pow(4), p);
  EXPECT_EQ(base.pow(-2) * base.pow(2), Series::one(Q, 9));
}
