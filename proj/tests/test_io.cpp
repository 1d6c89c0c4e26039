#include <gtest/gtest.h>

#include "moduli/complexes.hpp"
#include "moduli/io.hpp"

using namespace moduli;
using io::json;

TEST(Json, IntegersBeyondInt64AreStrings) {
  Integer big = Integer(1) << 80;
  auto j = io::integer_to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(io::integer_from_json(j), big);
  EXPECT_TRUE(io::integer_to_json(Integer(-7)).is_number_integer());
  EXPECT_EQ(io::rational_to_json(Rational(3, 4)).dump(), "[3,4]");
  EXPECT_EQ(io::rational_from_json(json::parse("[-3,4]")), Rational(-3, 4));
}

TEST(Json, SeriesRoundTrip) {
  auto s = factor_q(10, -1, 1, -3).scaled(Rational(1, 3));
  auto j = io::to_json(s);
  EXPECT_EQ(j["ring"], "Q");
  EXPECT_EQ(j["trunc"], 10);
  EXPECT_EQ(io::series_from_json<Rational>(j), s);
  EXPECT_EQ(io::to_json(io::series_from_json<Rational>(json::parse(j.dump()))).dump(), j.dump());

  const auto F5 = CoefficientRing::prime_field(5);
  auto z = binomial_factor<Zp>(F5, 6, 1, 2, 7, Zp(1, 5));
  EXPECT_EQ(io::series_from_json<Zp>(io::to_json(z)), z);

  const auto C = CoefficientRing::character();
  auto c = TruncatedSeries<Character>::one(C, 4) + TruncatedSeries<Character>::term(C, 4, 2, Character(Rational(1, 2), -3));
  EXPECT_EQ(io::series_from_json<Character>(io::to_json(c)), c);
}

TEST(Json, PolynomialRoundTrip) {
  auto p = PoincarePolynomial::from_integers(CoefficientRing::rationals(), {1, 0, 3, 8, 3, 0, 1});
  auto j = io::to_json(p);
  EXPECT_TRUE(j["trunc"].is_null());
  EXPECT_EQ(io::polynomial_from_json<Rational>(j), p);
  EXPECT_THROW(io::polynomial_from_json<Rational>(io::to_json(p.to_series(6))), std::invalid_argument);
}

TEST(Json, TopologyRoundTrip) {
  auto curve = validate_curve(3, 3, 1);
  EXPECT_EQ(io::to_json(curve).dump(), R"({"g":3,"a":3,"eps":1})");
  EXPECT_EQ(io::curve_from_json(io::to_json(curve)), curve);
  EXPECT_THROW(io::curve_from_json(json::parse(R"({"g":2,"a":3,"eps":1})")), invalid_parameters);
  auto b = validate_bundle(curve, 2, 1, {1, 0, 0});
  auto back = io::bundle_from_json(curve, io::to_json(b));
  EXPECT_EQ(back.b, 1);
  EXPECT_EQ(back.circle_classes, b.circle_classes);
}

TEST(Json, GroupsRoundTrip) {
  auto d = pi1_fixed_det_moduli(2, 3, 3, 1);
  auto j = io::to_json(d);
  EXPECT_EQ(j.dump(), R"({"kind":"semidirect","base":{"z2":1,"z":2},"action":[1,-1,-1]})");
  EXPECT_EQ(io::group_from_json(j), d);
  j["kind"] = "direct";
  EXPECT_THROW(io::group_from_json(j), std::invalid_argument);
  auto h = h1_fixed_det_moduli(2, 3, 3, 1);
  EXPECT_EQ(io::abelian_group_from_json(io::to_json(h)), h);
}

TEST(Json, BettiResultShape) {
  auto r = bcg_odd(2, validate_curve(3, 3, 1), 2, 8);
  auto j = io::to_json(r);
  EXPECT_EQ(j["case"], case_labels::connected_a_gt_c);
  EXPECT_TRUE(j["factors"].contains("F"));
  EXPECT_TRUE(j["factors"].contains("G"));
  EXPECT_TRUE(j["warnings"].is_array());
  EXPECT_TRUE(j["series"]["trunc"].is_null()); // polynomial result
}

TEST(Json, ManifestRoundTripPreservesHomology) {
  std::vector<PresentedDGA> complexes = {case1(3, 2, 0, CoefficientRing::rationals(), 10),
                                         lemma314_S(2, 3, 1, CoefficientRing::prime_field(3), 8),
                                         prop38(2, 2, 1, 0, 10)};
  for (const auto& dga : complexes) {
    auto j = io::to_json(dga);
    auto back = io::dga_from_json(json::parse(j.dump()));
    EXPECT_EQ(io::to_json(back).dump(), j.dump());
    EXPECT_EQ(homology_hilbert(back, back.cap).dims, homology_hilbert(dga, dga.cap).dims);
  }
}
