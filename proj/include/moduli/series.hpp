#ifndef MODULI_SERIES_HPP
#define MODULI_SERIES_HPP

// Exact truncated power series and polynomials in one variable t.
//
// Three coefficient types are supported:
//   Rational   - arbitrary precision rationals,
//   Zp         - residues modulo a prime (runtime modulus),
//   Character  - a + b*chi with a, b rational and chi^2 = 1 (the character
//                ring of Z/2 tensored with Q).

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace moduli {

// Expression templates off: values are stored and compared far more often
// than they are chained.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

class ring_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class not_invertible : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct CoefficientRing {
  enum class Kind { rationals, prime_field, character };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static CoefficientRing rationals() { return {}; }
  static CoefficientRing character() { return {Kind::character, 0}; }
  static CoefficientRing prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    return {Kind::prime_field, p};
  }

  std::uint32_t characteristic() const { return kind == Kind::prime_field ? p : 0; }

  std::string name() const {
    switch (kind) {
    case Kind::rationals: return "Q";
    case Kind::prime_field: return "GF(" + std::to_string(p) + ")";
    case Kind::character: return "Q[chi]";
    }
    return "?";
  }

  static CoefficientRing parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "Q[chi]") return character();
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')')
      return prime_field(static_cast<std::uint32_t>(std::stoul(s.substr(3, s.size() - 4))));
    throw std::invalid_argument("unknown coefficient ring '" + s + "'");
  }

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

// Residue class modulo a prime. The modulus travels with the value so
// that mixed-modulus arithmetic is caught instead of silently wrapping.
class Zp {
public:
  Zp() = default;
  Zp(std::int64_t v, std::uint32_t p) : p_(p) {
    auto m = static_cast<std::int64_t>(p);
    v %= m;
    if (v < 0) v += m;
    v_ = static_cast<std::uint64_t>(v);
  }
  Zp(const Integer& v, std::uint32_t p) : p_(p) {
    Integer r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  Zp operator-() const { return v_ == 0 ? *this : Zp(static_cast<std::int64_t>(p_ - v_), p_); }

  Zp& operator+=(const Zp& o) {
    check(o);
    v_ = (v_ + o.v_) % p_;
    return *this;
  }
  Zp& operator-=(const Zp& o) {
    check(o);
    v_ = (v_ + p_ - o.v_) % p_;
    return *this;
  }
  Zp& operator*=(const Zp& o) {
    check(o);
    v_ = (v_ * o.v_) % p_;
    return *this;
  }

  Zp inverse() const {
    if (v_ == 0) throw not_invertible("zero has no inverse in GF(" + std::to_string(p_) + ")");
    std::int64_t a = static_cast<std::int64_t>(v_), m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::tie(a, m) = std::make_pair(m, a - q * m);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    return Zp(x0, p_);
  }

  friend bool operator==(const Zp& a, const Zp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

private:
  void check(const Zp& o) {
    if (p_ == 0) p_ = o.p_;
    if (o.p_ != p_ && o.p_ != 0) throw ring_mismatch("residues modulo different primes");
  }

  std::uint32_t p_ = 0;
  std::uint64_t v_ = 0;
};

struct Character {
  Rational one;
  Rational chi;

  Character() = default;
  Character(Rational a, Rational b = 0) : one(std::move(a)), chi(std::move(b)) {}

  bool is_zero() const { return one == 0 && chi == 0; }

  Character& operator+=(const Character& o) {
    one += o.one;
    chi += o.chi;
    return *this;
  }
  Character& operator-=(const Character& o) {
    one -= o.one;
    chi -= o.chi;
    return *this;
  }
  Character& operator*=(const Character& o) {
    Rational a = one * o.one + chi * o.chi;
    Rational b = one * o.chi + chi * o.one;
    one = std::move(a);
    chi = std::move(b);
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Character a, const Character& b) { return a *= b; }
  Character operator-() const { return {-one, -chi}; }

  // (a + b chi)^-1 = (a - b chi) / (a^2 - b^2); fails exactly when the
  // element vanishes at chi = 1 or chi = -1.
  Character inverse() const {
    Rational n = one * one - chi * chi;
    if (n == 0) throw not_invertible("character ring element is a zero divisor");
    return {one / n, -chi / n};
  }

  friend bool operator==(const Character&, const Character&) = default;
};

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<Rational> {
  static bool accepts(const CoefficientRing& r) { return r.kind == CoefficientRing::Kind::rationals; }
  static Rational from_integer(const CoefficientRing&, const Integer& n) { return Rational(n); }
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational inverse(const Rational& c) {
    if (c == 0) throw not_invertible("division by zero rational");
    return 1 / c;
  }
};

template <>
struct coefficient_traits<Zp> {
  static bool accepts(const CoefficientRing& r) { return r.kind == CoefficientRing::Kind::prime_field; }
  static Zp from_integer(const CoefficientRing& r, const Integer& n) { return Zp(n, r.p); }
  static bool is_zero(const Zp& c) { return c.is_zero(); }
  static Zp inverse(const Zp& c) { return c.inverse(); }
};

template <>
struct coefficient_traits<Character> {
  static bool accepts(const CoefficientRing& r) { return r.kind == CoefficientRing::Kind::character; }
  static Character from_integer(const CoefficientRing&, const Integer& n) { return Character(Rational(n)); }
  static bool is_zero(const Character& c) { return c.is_zero(); }
  static Character inverse(const Character& c) { return c.inverse(); }
};

template <class C>
concept Coefficient = requires(const C& a, const C& b, const CoefficientRing& r, const Integer& n) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { coefficient_traits<C>::from_integer(r, n) } -> std::convertible_to<C>;
  { coefficient_traits<C>::is_zero(a) } -> std::convertible_to<bool>;
};

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Zp& z) { return std::to_string(z.value()); }
inline std::string to_string(const Character& c) {
  if (c.chi == 0) return c.one.str();
  std::string chi = c.chi == 1 ? "chi" : c.chi == -1 ? "-chi" : c.chi.str() + "chi";
  if (c.one == 0) return chi;
  return "(" + c.one.str() + (chi.front() == '-' ? " - " + chi.substr(1) : " + " + chi) + ")";
}

namespace detail {

template <Coefficient C>
void check_ring(const CoefficientRing& ring) {
  if (!coefficient_traits<C>::accepts(ring))
    throw ring_mismatch("coefficient type does not match ring " + ring.name());
}

template <Coefficient C>
std::string render(const std::vector<C>& cs, bool with_order, int trunc) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (coefficient_traits<C>::is_zero(cs[k])) continue;
    std::string c = to_string(cs[k]);
    bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (k == 0) os << c;
    else {
      if (c != "1") os << c << "*";
      os << (k == 1 ? std::string("t") : "t^" + std::to_string(k));
    }
  }
  if (first) os << "0";
  if (with_order) os << " + O(t^" << trunc + 1 << ")";
  return os.str();
}

} // namespace detail

// Power series c_0 + c_1 t + ... + c_D t^D + O(t^{D+1}).
template <Coefficient C>
class TruncatedSeries {
public:
  using coefficient_type = C;
  using traits = coefficient_traits<C>;

  TruncatedSeries(CoefficientRing ring, int trunc) : ring_(ring), trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("truncation degree must be non-negative");
    detail::check_ring<C>(ring_);
    coeffs_.assign(static_cast<std::size_t>(trunc) + 1, traits::from_integer(ring_, 0));
  }

  TruncatedSeries(CoefficientRing ring, int trunc, std::vector<C> coeffs) : TruncatedSeries(ring, trunc) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
  }

  static TruncatedSeries zero(CoefficientRing ring, int trunc) { return {ring, trunc}; }
  static TruncatedSeries one(CoefficientRing ring, int trunc) { return monomial(ring, trunc, 0, Integer(1)); }

  static TruncatedSeries monomial(CoefficientRing ring, int trunc, int degree, const Integer& c) {
    TruncatedSeries s(ring, trunc);
    if (degree >= 0 && degree <= trunc) s.coeffs_[static_cast<std::size_t>(degree)] = traits::from_integer(ring, c);
    return s;
  }
  static TruncatedSeries term(CoefficientRing ring, int trunc, int degree, const C& c) {
    TruncatedSeries s(ring, trunc);
    if (degree >= 0 && degree <= trunc) s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
  }

  const CoefficientRing& ring() const { return ring_; }
  int truncation() const { return trunc_; }
  const std::vector<C>& coefficients() const { return coeffs_; }

  const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  C coefficient(int k) const {
    if (k < 0 || k > trunc_) return traits::from_integer(ring_, 0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  void set(int k, C c) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(c); }

  TruncatedSeries truncate(int d) const {
    TruncatedSeries s(ring_, std::min(d, trunc_));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
  }

  // Smallest degree with a nonzero coefficient, or nullopt for O(t^{D+1}).
  std::optional<int> order() const {
    for (int k = 0; k <= trunc_; ++k)
      if (!traits::is_zero(coeffs_[static_cast<std::size_t>(k)])) return k;
    return std::nullopt;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a.same_shape(b);
    for (int k = 0; k <= r.trunc_; ++k) r.at(k) = a[k] + b[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a.same_shape(b);
    for (int k = 0; k <= r.trunc_; ++k) r.at(k) = a[k] - b[k];
    return r;
  }
  TruncatedSeries operator-() const { return zero(ring_, trunc_) - *this; }

  // Cauchy product truncated at min(D1, D2).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a.same_shape(b);
    const int D = r.trunc_;
    for (int i = 0; i <= D; ++i) {
      if (traits::is_zero(a[i])) continue;
      for (int j = 0; j <= D - i; ++j) {
        if (traits::is_zero(b[j])) continue;
        r.at(i + j) += a[i] * b[j];
      }
    }
    return r;
  }

  TruncatedSeries scaled(const C& c) const {
    TruncatedSeries r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }

  // a / b for b with invertible constant term.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a.same_shape(b);
    if (traits::is_zero(b[0])) throw not_invertible("series division: divisor has zero constant term");
    const C inv = traits::inverse(b[0]);
    for (int k = 0; k <= r.trunc_; ++k) {
      C acc = a[k];
      for (int j = 1; j <= k; ++j) {
        if (traits::is_zero(b[j])) continue;
        acc -= b[j] * r[k - j];
      }
      r.at(k) = acc * inv;
    }
    return r;
  }

  TruncatedSeries pow(long n) const {
    if (n < 0) return one(ring_, trunc_) / pow(-n);
    TruncatedSeries result = one(ring_, trunc_), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  std::string str() const { return detail::render(coeffs_, true, trunc_); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ring_ == b.ring_ && a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.str(); }

private:
  C& at(int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  TruncatedSeries same_shape(const TruncatedSeries& o) const {
    if (!(ring_ == o.ring_)) throw ring_mismatch("series over " + ring_.name() + " and " + o.ring_.name());
    return TruncatedSeries(ring_, std::min(trunc_, o.trunc_));
  }

  CoefficientRing ring_;
  int trunc_;
  std::vector<C> coeffs_;
};

// Exact polynomial; the coefficient list never ends in a zero, so the zero
// polynomial has an empty list and degree -1.
template <Coefficient C>
class Polynomial {
public:
  using traits = coefficient_traits<C>;

  explicit Polynomial(CoefficientRing ring) : ring_(ring) { detail::check_ring<C>(ring_); }
  Polynomial(CoefficientRing ring, std::vector<C> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    detail::check_ring<C>(ring_);
    normalize();
  }

  static Polynomial from_integers(CoefficientRing ring, const std::vector<long long>& cs) {
    std::vector<C> v;
    v.reserve(cs.size());
    for (auto c : cs) v.push_back(traits::from_integer(ring, c));
    return {ring, std::move(v)};
  }
  static Polynomial monomial(CoefficientRing ring, int degree, const Integer& c) {
    std::vector<C> v(static_cast<std::size_t>(degree) + 1, traits::from_integer(ring, 0));
    v.back() = traits::from_integer(ring, c);
    return {ring, std::move(v)};
  }

  // Lossless when the series vanishes beyond max_degree.
  static Polynomial from_series(const TruncatedSeries<C>& s, int max_degree) {
    std::vector<C> v;
    for (int k = 0; k <= std::min(max_degree, s.truncation()); ++k) v.push_back(s[k]);
    return {s.ring(), std::move(v)};
  }

  const CoefficientRing& ring() const { return ring_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  C coefficient(int k) const {
    if (k < 0 || k > degree()) return traits::from_integer(ring_, 0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  TruncatedSeries<C> to_series(int trunc) const { return TruncatedSeries<C>(ring_, trunc, coeffs_); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()), traits::from_integer(a.ring_, 0));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
    return {a.ring_, std::move(v)};
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()), traits::from_integer(a.ring_, 0));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
    return {a.ring_, std::move(v)};
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, traits::from_integer(a.ring_, 0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return {a.ring_, std::move(v)};
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = from_integers(ring_, {1});
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Horner evaluation.
  C evaluate(const C& x) const {
    C acc = traits::from_integer(ring_, 0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string str() const { return detail::render(coeffs_, false, 0); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
  void normalize() {
    while (!coeffs_.empty() && traits::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  void check(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw ring_mismatch("polynomials over " + ring_.name() + " and " + o.ring_.name());
  }

  CoefficientRing ring_;
  std::vector<C> coeffs_;
};

using PoincarePolynomial = Polynomial<Rational>;
using Series = TruncatedSeries<Rational>;

template <Coefficient C>
struct DivisionResult {
  Polynomial<C> quotient;
  Polynomial<C> remainder;
};

// numerator = quotient * denominator + remainder, deg(remainder) < deg(denominator).
template <Coefficient C>
DivisionResult<C> exact_poly_division(const Polynomial<C>& numerator, const Polynomial<C>& denominator) {
  using traits = coefficient_traits<C>;
  if (denominator.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& ring = numerator.ring();
  if (!(ring == denominator.ring())) throw ring_mismatch("polynomial division across rings");
  const C lead_inv = traits::inverse(denominator.coefficients().back());
  const int dd = denominator.degree();
  std::vector<C> rem = numerator.coefficients();
  std::vector<C> quo(static_cast<std::size_t>(std::max(0, numerator.degree() - dd + 1)), traits::from_integer(ring, 0));
  for (int k = numerator.degree(); k >= dd; --k) {
    const C c = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (traits::is_zero(c)) continue;
    quo[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * denominator.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial<C>(ring, std::move(quo)), Polynomial<C>(ring, std::move(rem))};
}

// True iff deg(p) <= dim and coefficient(k) == coefficient(dim - k) for all k.
template <Coefficient C>
bool palindrome_check(const Polynomial<C>& p, int dim) {
  if (p.degree() > dim) return false;
  for (int k = 0; k <= dim; ++k)
    if (!(p.coefficient(k) == p.coefficient(dim - k))) return false;
  return true;
}

template <Coefficient C>
C evaluate(const Polynomial<C>& p, const C& x) {
  return p.evaluate(x);
}

// Coefficientwise a + b chi -> a, i.e. half the sum of the evaluations at
// chi = 1 and chi = -1.
inline Series char_invariant_part(const TruncatedSeries<Character>& s) {
  Series out(CoefficientRing::rationals(), s.truncation());
  for (int k = 0; k <= s.truncation(); ++k) out.set(k, s[k].one);
  return out;
}

inline TruncatedSeries<Character> embed_character(const Series& s) {
  TruncatedSeries<Character> out(CoefficientRing::character(), s.truncation());
  for (int k = 0; k <= s.truncation(); ++k) out.set(k, Character(s[k]));
  return out;
}

// Evaluates a series over Q[chi] at chi = +1 or chi = -1.
inline Series evaluate_character(const TruncatedSeries<Character>& s, int chi_sign) {
  Series out(CoefficientRing::rationals(), s.truncation());
  for (int k = 0; k <= s.truncation(); ++k) out.set(k, chi_sign > 0 ? s[k].one + s[k].chi : s[k].one - s[k].chi);
  return out;
}

// One factor (1 + sign * t^k)^exponent of a product expression.
struct ProductFactor {
  int sign = 1;
  int k = 1;
  long exponent = 1;
};

template <Coefficient C>
TruncatedSeries<C> binomial_factor(const CoefficientRing& ring, int trunc, int sign, int k, long exponent,
                                  const C& scale) {
  auto base = TruncatedSeries<C>::one(ring, trunc) + TruncatedSeries<C>::term(ring, trunc, k, scale * coefficient_traits<C>::from_integer(ring, sign));
  return base.pow(exponent);
}

template <Coefficient C = Rational>
TruncatedSeries<C> series_from_product(const std::vector<ProductFactor>& factors, const CoefficientRing& ring, int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation degree must be non-negative");
  auto result = TruncatedSeries<C>::one(ring, trunc);
  const C unit = coefficient_traits<C>::from_integer(ring, 1);
  for (const auto& f : factors) {
    if (f.k <= 0) throw std::invalid_argument("product factor degree must be positive");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("product factor sign must be +1 or -1");
    result *= binomial_factor<C>(ring, trunc, f.sign, f.k, f.exponent, unit);
  }
  return result;
}

// (1 + sign t^k)^e over Q, the building block of every closed form.
inline Series factor_q(int trunc, int sign, int k, long exponent) {
  return series_from_product<Rational>({{sign, k, exponent}}, CoefficientRing::rationals(), trunc);
}

} // namespace moduli

#endif // MODULI_SERIES_HPP
