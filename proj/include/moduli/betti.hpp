#ifndef MODULI_BETTI_HPP
#define MODULI_BETTI_HPP

// Closed-form Poincare series of the real gauge group classifying spaces and
// of the fixed determinant real moduli spaces.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/series.hpp"
#include "moduli/topology.hpp"

namespace moduli {

struct BettiResult {
  Series series;
  std::optional<PoincarePolynomial> polynomial;
  std::string case_label;
  std::map<std::string, Series> factors;
  std::vector<std::string> warnings;

  explicit BettiResult(Series s, std::string label = {}) : series(std::move(s)), case_label(std::move(label)) {}
};

// as_printed evaluates the formulas exactly as written; reconciled swaps in
// the forms that agree with the complex homology (see the a = c branches).
enum class FormulaMode { as_printed, reconciled };

inline std::string to_string(FormulaMode m) { return m == FormulaMode::as_printed ? "as_printed" : "reconciled"; }

inline FormulaMode parse_formula_mode(const std::string& s) {
  if (s == "as_printed") return FormulaMode::as_printed;
  if (s == "reconciled") return FormulaMode::reconciled;
  throw std::invalid_argument("unknown formula mode '" + s + "'");
}

namespace detail {

inline Series tpow(int trunc, int degree) { return Series::monomial(CoefficientRing::rationals(), trunc, degree, Integer(1)); }

inline Series half(const Series& s) { return s.scaled(Rational(1, 2)); }

inline bool has_negative(const Series& s) {
  for (const auto& c : s.coefficients())
    if (c < 0) return true;
  return false;
}

inline void note_negative(BettiResult& r) {
  if (has_negative(r.series)) r.warnings.push_back("negative coefficients in the truncated series");
}

inline void check_trunc(int D) {
  if (D < 0) throw invalid_parameters("truncation D >= 0 violated (D = " + std::to_string(D) + ")");
}

// prod_{k=2}^r (1+t^{k-1})^a (1+t^k)^a (1+t^{2k-1})^{g+1-a} / ((1-t^{2k})(1-t^{2k-2}))
inline Series bsg_product(int r, int g, int a, int D) {
  auto s = Series::one(CoefficientRing::rationals(), D);
  for (int k = 2; k <= r; ++k)
    s *= factor_q(D, 1, k - 1, a) * factor_q(D, 1, k, a) * factor_q(D, 1, 2 * k - 1, g + 1 - a) *
         factor_q(D, -1, 2 * k, -1) * factor_q(D, -1, 2 * k - 2, -1);
  return s;
}

inline void check_bg(int r, int g, int a, int D) {
  if (r < 1) throw invalid_parameters("rank r >= 1 violated (r = " + std::to_string(r) + ")");
  if (g < 2) throw invalid_parameters("g >= 2 violated (g = " + std::to_string(g) + ")");
  if (a < 0 || a > g + 1) throw invalid_parameters("0 <= a <= g + 1 violated (a = " + std::to_string(a) + ")");
  check_trunc(D);
}

// (1/2)((1+t^{r-1})^c (1+t^r)^m + (1-t^{r-1})^c (1-t^r)^m)
inline Series symmetric_pair(int r, int c, int m, int D) {
  return half(factor_q(D, 1, r - 1, c) * factor_q(D, 1, r, m) + factor_q(D, -1, r - 1, c) * factor_q(D, -1, r, m));
}

// Chi-invariant part of (1+chi t^{r-1})^c (1+chi t^r)^{c-1} / (1 - chi t^r).
inline Series character_projected_pair(int r, int c, int D) {
  return half(factor_q(D, 1, r - 1, c) * factor_q(D, 1, r, c - 1) * factor_q(D, -1, r, -1) +
              factor_q(D, -1, r - 1, c) * factor_q(D, -1, r, c - 1) * factor_q(D, 1, r, -1));
}

} // namespace detail

// Mod 2 series of BG_R in the second (factored) form.
inline BettiResult bg_z2(int r, int g, int a, int D) {
  detail::check_bg(r, g, a, D);
  BettiResult out(factor_q(D, 1, 1, g) * factor_q(D, -1, 1, -1) * detail::bsg_product(r, g, a, D), "bg");
  return out;
}

// The first displayed form of the same series, kept as an independent
// expression for the identity suite.
inline BettiResult bg_z2_first_form(int r, int g, int a, int D) {
  detail::check_bg(r, g, a, D);
  auto s = factor_q(D, -1, 2 * r, 1) * factor_q(D, 1, r, -a);
  for (int k = 1; k <= r; ++k) s *= factor_q(D, 1, k, 2 * a) * factor_q(D, 1, 2 * k - 1, g + 1 - a) * factor_q(D, -1, 2 * k, -2);
  return BettiResult(std::move(s), "bg first form");
}

inline BettiResult bsg_z2(int r, int g, int a, int D) {
  detail::check_bg(r, g, a, D);
  return BettiResult(detail::bsg_product(r, g, a, D), "bsg");
}

inline BettiResult bcg_z2(int r, int g, int a, int D) {
  detail::check_bg(r, g, a, D);
  return BettiResult(factor_q(D, -1, 1, -1) * detail::bsg_product(r, g, a, D), "bcg");
}

namespace case_labels {
inline const std::string odd_rank = "odd rank";
inline const std::string a_zero = "a = 0";
inline const std::string connected_a_gt_c = "a > c >= 0 connected";
inline const std::string connected_a_eq_c = "a = c > 0 connected";
inline const std::string disconnected_c_zero = "a > c = 0 disconnected";
inline const std::string disconnected_c_odd = "a > c > 0, c odd, disconnected";
inline const std::string disconnected_c_even = "a > c > 0, c even, disconnected";
inline const std::string disconnected_a_eq_c = "a = c > 0 disconnected";
} // namespace case_labels

inline std::string g_case_label(const RealCurveType& curve, int c) {
  using namespace case_labels;
  if (curve.a == 0) return a_zero;
  if (curve.eps == 1) return curve.a > c ? connected_a_gt_c : connected_a_eq_c;
  if (curve.a == c) return disconnected_a_eq_c;
  if (c == 0) return disconnected_c_zero;
  return c % 2 ? disconnected_c_odd : disconnected_c_even;
}

inline void check_even_circles(const RealCurveType& curve, int c) {
  if (c < 0 || c > curve.a)
    throw invalid_parameters("0 <= c <= a violated (c = " + std::to_string(c) + ", a = " + std::to_string(curve.a) + ")");
}

// F_t for even r = 2r': prod_{k''=1}^{r'-1} (1+t^{4k''-1})^g (1+t^{4k''+1})^g / (1-t^{4k''})^2.
// For odd r = 2r'+1 the same product up to r' is the whole answer.
inline Series odd_char_product(int upto, int g, int D) {
  auto s = Series::one(CoefficientRing::rationals(), D);
  for (int k = 1; k <= upto; ++k) s *= factor_q(D, 1, 4 * k - 1, g) * factor_q(D, 1, 4 * k + 1, g) * factor_q(D, -1, 4 * k, -2);
  return s;
}

// G_t of the even rank factorization, one branch per (a, c, eps) case.
inline BettiResult g_series(int r, const RealCurveType& curve, int c, int D, FormulaMode mode = FormulaMode::reconciled) {
  using namespace case_labels;
  if (r < 2 || r % 2) throw invalid_parameters("G_t needs even r >= 2 (r = " + std::to_string(r) + ")");
  validate_curve(curve.g, curve.a, curve.eps);
  check_even_circles(curve, c);
  detail::check_trunc(D);
  const int g = curve.g;
  const std::string label = g_case_label(curve, c);
  auto Q = CoefficientRing::rationals();
  std::optional<int> exponent;
  Series s = Series::one(Q, D);
  bool polynomial_shape = false;
  if (label == a_zero) {
    s = factor_q(D, 1, 2 * r - 1, g) * factor_q(D, -1, 2 * r, -1);
  } else if (label == connected_a_gt_c || label == disconnected_c_odd) {
    exponent = g - c - 1;
    s = detail::symmetric_pair(r, c, c, D) * factor_q(D, 1, 2 * r - 1, *exponent);
    polynomial_shape = true;
  } else if (label == disconnected_c_zero) {
    s = factor_q(D, 1, 2 * r - 1, g) * factor_q(D, -1, 2 * r - 2, -1);
  } else if (label == disconnected_c_even) {
    exponent = g - c - 1;
    auto tower = detail::tpow(D, (r - 1) * (c + 2)) * factor_q(D, 1, 1, c + 1) * factor_q(D, -1, 2 * r - 2, -1);
    s = (tower + detail::symmetric_pair(r, c, c, D)) * factor_q(D, 1, 2 * r - 1, *exponent);
  } else {
    exponent = g - c;
    Series head = Series::one(Q, D);
    if (mode == FormulaMode::reconciled) head = detail::character_projected_pair(r, c, D);
    else if (label == connected_a_eq_c) head = detail::symmetric_pair(r, c, c - 1, D) * factor_q(D, -1, r, -1);
    else head = detail::symmetric_pair(r, c, c - 1, D) * factor_q(D, -1, 2 * r, -1);
    s = head * factor_q(D, 1, 2 * r - 1, *exponent);
  }
  BettiResult out(std::move(s), label);
  if (exponent && *exponent < 0)
    out.warnings.push_back("negative formal exponent " + std::to_string(*exponent) + " on (1+t^" + std::to_string(2 * r - 1) +
                           "); expanded as a series");
  if (polynomial_shape && *exponent >= 0) {
    const int top = (2 * r - 1) * c + (2 * r - 1) * *exponent;
    if (top <= D) out.polynomial = PoincarePolynomial::from_series(out.series, top);
  }
  if (mode == FormulaMode::reconciled && label == disconnected_a_eq_c && c % 2 == 0)
    out.warnings.push_back("known discrepancy: no closed form matches the complex homology for disconnected a = c with c even");
  detail::note_negative(out);
  return out;
}

// Odd or zero characteristic series of BCG_R. The bundle only enters through
// its even circle count c.
inline BettiResult bcg_odd(int r, const RealCurveType& curve, int c, int D, FormulaMode mode = FormulaMode::reconciled) {
  if (r < 2) throw invalid_parameters("rank r >= 2 violated (r = " + std::to_string(r) + ")");
  validate_curve(curve.g, curve.a, curve.eps);
  check_even_circles(curve, c);
  detail::check_trunc(D);
  if (r % 2) {
    BettiResult out(odd_char_product((r - 1) / 2, curve.g, D), case_labels::odd_rank);
    return out;
  }
  auto F = odd_char_product(r / 2 - 1, curve.g, D);
  auto G = g_series(r, curve, c, D, mode);
  BettiResult out(F * G.series, G.case_label);
  out.factors.emplace("F", F);
  out.factors.emplace("G", G.series);
  out.warnings = G.warnings;
  if (r == 2) out.polynomial = G.polynomial;
  return out;
}

inline BettiResult bcg_odd(int r, const RealCurveType& curve, const RealBundleTopType& bundle, int D,
                           FormulaMode mode = FormulaMode::reconciled) {
  if (!(bundle.curve == curve)) throw invalid_parameters("bundle is over a different curve");
  return bcg_odd(r, curve, bundle.c, D, mode);
}

struct BetaPair {
  long long low = 0;  // beta_{2r-2}
  long long high = 0; // beta_{2r-1}
  friend bool operator==(const BetaPair&, const BetaPair&) = default;
};

// The case table for the two leading coefficients of G_t.
inline BetaPair beta_leading(int r, const RealCurveType& curve, int c) {
  if (r < 2 || r % 2) throw invalid_parameters("beta_leading needs even r >= 2 (r = " + std::to_string(r) + ")");
  validate_curve(curve.g, curve.a, curve.eps);
  check_even_circles(curve, c);
  const long long g = curve.g, a = curve.a, cc = c;
  BetaPair b;
  if (c >= 1) b.low = cc * (cc - 1) / 2;
  else b.low = a >= 1 ? 1 : 0;
  if (a > c && c > 0) b.high = g + cc * cc - cc - 1;
  else if (a > c) b.high = curve.eps == 1 ? g - 1 : g;
  else if (c > 0) b.high = curve.eps == 1 ? g + cc * cc - cc : g + cc * cc - 2 * cc;
  else b.high = g;
  return b;
}

// The same pair read off an expansion of G_t.
inline BetaPair beta_from_series(int r, const RealCurveType& curve, int c, FormulaMode mode) {
  auto G = g_series(r, curve, c, 2 * r - 1, mode).series;
  return {static_cast<long long>(numerator(G[2 * r - 2])), static_cast<long long>(numerator(G[2 * r - 1]))};
}

enum class Rank2Mode { as_printed, table_reconciled };

inline std::string to_string(Rank2Mode m) { return m == Rank2Mode::as_printed ? "as_printed" : "table_reconciled"; }

class inexact_division : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Mod 2 Poincare polynomial of the rank two moduli space, by exact division
// of the numerator by (1-t)(1-t^2).
inline BettiResult fixed_det_rank2_z2(int g, int a, Rank2Mode mode = Rank2Mode::table_reconciled) {
  if (g < 2) throw invalid_parameters("g >= 2 violated (g = " + std::to_string(g) + ")");
  if (a < 1 || a > g + 1) throw invalid_parameters("1 <= a <= g + 1 violated (a = " + std::to_string(a) + ")");
  const int E = mode == Rank2Mode::as_printed ? g - a : g - a + 1;
  const int dim = 3 * g - 3;
  const int D = 4 * g + 4;
  auto Q = CoefficientRing::rationals();
  Integer two_pow = Integer(1) << (a - 1);
  auto tail = detail::tpow(D, g).scaled(Rational(two_pow)) * factor_q(D, 1, 1, g);
  auto head = factor_q(D, 1, 1, a - 1) * factor_q(D, 1, 2, a - 1) * factor_q(D, 1, 3, E);
  auto denominator = PoincarePolynomial::from_integers(Q, {1, -1, -1, 1}); // (1-t)(1-t^2)
  BettiResult out((head - tail) / denominator.to_series(D), "rank 2 mod 2, " + to_string(mode));
  out.series = out.series.truncate(dim);
  if (E < 0) {
    out.warnings.push_back("negative formal exponent " + std::to_string(E) + " on (1+t^3); numerator is not a polynomial");
  } else {
    auto numerator_poly = PoincarePolynomial::from_series(head - tail, std::max(3 * E + 3 * (a - 1), 2 * g));
    auto div = exact_poly_division(numerator_poly, denominator);
    if (!div.remainder.is_zero()) {
      if (mode == Rank2Mode::table_reconciled)
        throw inexact_division("rank 2 numerator not divisible by (1-t)(1-t^2) at g = " + std::to_string(g) +
                               ", a = " + std::to_string(a) + ": remainder " + div.remainder.str());
      out.warnings.push_back("division by (1-t)(1-t^2) leaves remainder " + div.remainder.str());
    } else {
      out.polynomial = div.quotient;
      out.series = div.quotient.to_series(dim);
    }
  }
  detail::note_negative(out);
  return out;
}

// Three-term mod 2 formula for rank three, expanded as a series. The
// result should be a polynomial of degree 8(g-1).
inline BettiResult fixed_det_rank3_z2(int g, int b, int D) {
  if (g < 2) throw invalid_parameters("g >= 2 violated (g = " + std::to_string(g) + ")");
  if (b < 0) throw invalid_parameters("b >= 0 violated (b = " + std::to_string(b) + ")");
  detail::check_trunc(D);
  const int dim = 8 * (g - 1);
  const int M = std::max(D, dim + 8);
  const Rational two_b(Integer(1) << b), four_b(Integer(1) << (2 * b));
  auto first = factor_q(M, 1, 1, b) * factor_q(M, 1, 2, 2 * b) * factor_q(M, 1, 3, g) * factor_q(M, 1, 5, g - b) *
               factor_q(M, -1, 1, -1) * factor_q(M, -1, 2, -2) * factor_q(M, -1, 3, -1);
  auto second = detail::tpow(M, 2 * g - 1) * factor_q(M, 1, 1, g + b) * factor_q(M, 1, 2, b) * factor_q(M, 1, 3, g - b) *
                factor_q(M, -1, 1, -3) * factor_q(M, -1, 3, -1);
  auto quartic = Series::one(CoefficientRing::rationals(), M) + detail::tpow(M, 2) + detail::tpow(M, 4);
  auto third = detail::tpow(M, 3 * g - 1) * factor_q(M, 1, 1, 2 * g) * quartic * factor_q(M, -1, 1, -2) *
               factor_q(M, -1, 2, -1) * factor_q(M, -1, 6, -1);
  auto full = first - second.scaled(two_b) + third.scaled(four_b);
  BettiResult out(full.truncate(D), "rank 3 mod 2");
  bool tail_vanishes = true;
  for (int k = dim + 1; k <= M; ++k)
    if (full[k] != 0) tail_vanishes = false;
  if (!tail_vanishes)
    out.warnings.push_back("series does not terminate at degree " + std::to_string(dim) + " (checked through " +
                           std::to_string(M) + ")");
  else
    out.polynomial = PoincarePolynomial::from_series(full, dim);
  detail::note_negative(out);
  return out;
}

// Odd characteristic rank two polynomial for odd genus.
inline BettiResult fixed_det_rank2_odd(int g, int c) {
  if (g < 3 || g % 2 == 0) throw invalid_parameters("odd g >= 3 violated (g = " + std::to_string(g) + ")");
  if (c < 0 || c > g) throw invalid_parameters("0 <= c <= g violated (c = " + std::to_string(c) + ")");
  const int e = g - c - 1;
  const int dim = 3 * g - 3;
  auto Q = CoefficientRing::rationals();
  auto head = PoincarePolynomial::from_series(detail::symmetric_pair(2, c, c, 3 * c), 3 * c);
  auto cube = PoincarePolynomial::from_integers(Q, {1, 0, 0, 1});
  BettiResult out(Series::zero(Q, dim), "rank 2 odd characteristic");
  if (e >= 0) {
    out.polynomial = head * cube.pow(static_cast<unsigned>(e));
    out.series = out.polynomial->to_series(dim);
    return out;
  }
  out.warnings.push_back("negative formal exponent " + std::to_string(e) + " on (1+t^3)");
  auto div = exact_poly_division(head, cube.pow(static_cast<unsigned>(-e)));
  if (div.remainder.is_zero()) {
    out.polynomial = div.quotient;
    out.series = div.quotient.to_series(dim);
  } else {
    out.series = (head.to_series(dim) * factor_q(dim, 1, 3, e));
    out.warnings.push_back("division by (1+t^3)^" + std::to_string(-e) + " leaves remainder " + div.remainder.str());
  }
  detail::note_negative(out);
  return out;
}

enum class LoopKind { BLSU, BLSO, BLSO_invariant, tau_alpha_z2_fiber, tau_gamma_z2_fiber, tau_alpha_oddchar, tau_beta, tau_gamma_oddchar };

inline const std::vector<std::pair<LoopKind, std::string>>& loop_kind_names() {
  static const std::vector<std::pair<LoopKind, std::string>> names = {
      {LoopKind::BLSU, "BLSU"},
      {LoopKind::BLSO, "BLSO"},
      {LoopKind::BLSO_invariant, "BLSO_invariant"},
      {LoopKind::tau_alpha_z2_fiber, "tau_alpha_z2_fiber"},
      {LoopKind::tau_gamma_z2_fiber, "tau_gamma_z2_fiber"},
      {LoopKind::tau_alpha_oddchar, "tau_alpha_oddchar"},
      {LoopKind::tau_beta, "tau_beta"},
      {LoopKind::tau_gamma_oddchar, "tau_gamma_oddchar"},
  };
  return names;
}

inline LoopKind parse_loop_kind(const std::string& s) {
  for (const auto& [k, n] : loop_kind_names())
    if (n == s) return k;
  throw invalid_parameters("unknown loop group kind '" + s + "'");
}

namespace detail {

// prod_{k=1}^{m} (1+t^{4k-1})/(1-t^{4k})
inline Series pontryagin_block(int m, int D) {
  auto s = Series::one(CoefficientRing::rationals(), D);
  for (int k = 1; k <= m; ++k) s *= factor_q(D, 1, 4 * k - 1, 1) * factor_q(D, -1, 4 * k, -1);
  return s;
}

inline Series blso(int r, int D) {
  if (r % 2) return pontryagin_block((r - 1) / 2, D);
  const int rp = r / 2;
  return pontryagin_block(rp - 1, D) * factor_q(D, 1, 2 * rp - 1, 1) * factor_q(D, -1, 2 * rp, -1);
}

} // namespace detail

inline Series loop_group_series(LoopKind kind, int r, int D) {
  if (r < 2) throw invalid_parameters("rank r >= 2 violated (r = " + std::to_string(r) + ")");
  detail::check_trunc(D);
  auto s = Series::one(CoefficientRing::rationals(), D);
  switch (kind) {
  case LoopKind::BLSU:
    for (int k = 2; k <= r; ++k) s *= factor_q(D, 1, 2 * k - 1, 1) * factor_q(D, -1, 2 * k, -1);
    return s;
  case LoopKind::BLSO:
  case LoopKind::tau_alpha_oddchar: return detail::blso(r, D);
  case LoopKind::BLSO_invariant: return detail::pontryagin_block(r / 2, D);
  case LoopKind::tau_alpha_z2_fiber:
    for (int k = 2; k <= r; ++k) s *= factor_q(D, 1, k - 1, 1) * factor_q(D, 1, k, 1);
    return s;
  case LoopKind::tau_gamma_z2_fiber:
    for (int k = 2; k <= r; ++k) s *= factor_q(D, 1, 2 * k - 1, 1);
    return s;
  case LoopKind::tau_beta: return r % 2 ? detail::blso(r, D) : detail::blso(r - 1, D);
  case LoopKind::tau_gamma_oddchar: return r % 2 ? detail::blso(r, D) : detail::pontryagin_block(r / 2, D);
  }
  throw invalid_parameters("unknown loop group kind");
}

inline Series loop_group_series(const std::string& kind, int r, int D) { return loop_group_series(parse_loop_kind(kind), r, D); }

} // namespace moduli

#endif // MODULI_BETTI_HPP
