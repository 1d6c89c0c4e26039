#ifndef MODULI_IO_HPP
#define MODULI_IO_HPP

// JSON encodings for every value the CLI prints. Integers that do not fit
// in 64 bits are written as decimal strings.

#include <algorithm>
#include <limits>

#include "json.hpp"

#include "moduli/betti.hpp"
#include "moduli/dga.hpp"
#include "moduli/groups.hpp"
#include "moduli/topology.hpp"

namespace moduli::io {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

// n for integers, [num, den] otherwise.
inline json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) return integer_to_json(numerator(q));
  return json::array({integer_to_json(numerator(q)), integer_to_json(denominator(q))});
}

inline Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
    return Rational(integer_from_json(j[0]), integer_from_json(j[1]));
  }
  return Rational(integer_from_json(j));
}

inline json coefficient_to_json(const Rational& q) { return rational_to_json(q); }
inline json coefficient_to_json(const Zp& z) { return static_cast<std::int64_t>(z.value()); }
inline json coefficient_to_json(const Character& c) { return json::array({rational_to_json(c.one), rational_to_json(c.chi)}); }

template <Coefficient C>
C coefficient_from_json(const CoefficientRing& ring, const json& j);

template <>
inline Rational coefficient_from_json<Rational>(const CoefficientRing&, const json& j) {
  return rational_from_json(j);
}

template <>
inline Zp coefficient_from_json<Zp>(const CoefficientRing& ring, const json& j) {
  return Zp(integer_from_json(j), ring.p);
}

// a + b chi as [a, b]; a bare number is read as b = 0.
template <>
inline Character coefficient_from_json<Character>(const CoefficientRing&, const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("character coefficient must be [a, b]");
    return Character(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  return Character(rational_from_json(j));
}

template <Coefficient C>
json to_json(const TruncatedSeries<C>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(coefficient_to_json(c));
  return {{"ring", s.ring().name()}, {"trunc", s.truncation()}, {"coeffs", coeffs}};
}

template <Coefficient C>
json to_json(const Polynomial<C>& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(coefficient_to_json(c));
  return {{"ring", p.ring().name()}, {"trunc", nullptr}, {"coeffs", coeffs}};
}

template <Coefficient C>
TruncatedSeries<C> series_from_json(const json& j) {
  auto ring = CoefficientRing::parse(j.at("ring").get<std::string>());
  const auto& cs = j.at("coeffs");
  int trunc = j.at("trunc").is_null() ? static_cast<int>(cs.size()) - 1 : j.at("trunc").get<int>();
  if (trunc < 0) trunc = 0;
  std::vector<C> coeffs;
  for (const auto& c : cs) coeffs.push_back(coefficient_from_json<C>(ring, c));
  return TruncatedSeries<C>(ring, trunc, std::move(coeffs));
}

template <Coefficient C>
Polynomial<C> polynomial_from_json(const json& j) {
  auto ring = CoefficientRing::parse(j.at("ring").get<std::string>());
  if (!j.at("trunc").is_null()) throw std::invalid_argument("polynomials carry \"trunc\": null");
  std::vector<C> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(coefficient_from_json<C>(ring, c));
  return Polynomial<C>(ring, std::move(coeffs));
}

inline json to_json(const RealCurveType& c) { return {{"g", c.g}, {"a", c.a}, {"eps", c.eps}}; }

inline RealCurveType curve_from_json(const json& j) {
  return validate_curve(j.at("g").get<int>(), j.at("a").get<int>(), j.at("eps").get<int>());
}

inline json to_json(const RealBundleTopType& b) {
  return {{"r", b.r}, {"d", b.d}, {"classes", b.circle_classes}, {"b", b.b}, {"c", b.c}, {"gcd", b.gcd_rd},
          {"coprime", b.coprime()}};
}

inline RealBundleTopType bundle_from_json(const RealCurveType& curve, const json& j) {
  return validate_bundle(curve, j.at("r").get<int>(), j.at("d").get<int>(), j.at("classes").get<std::vector<int>>());
}

inline json to_json(const BettiResult& r) {
  json factors = json::object();
  for (const auto& [name, s] : r.factors) factors[name] = to_json(s);
  json out = {{"series", r.polynomial ? to_json(*r.polynomial) : to_json(r.series)}, {"case", r.case_label}};
  out["factors"] = factors;
  out["warnings"] = r.warnings;
  return out;
}

inline json to_json(const FGAbelianGroup& g) { return {{"free_rank", g.free_rank}, {"torsion", g.torsion}}; }

inline FGAbelianGroup abelian_group_from_json(const json& j) {
  return make_group(j.at("free_rank").get<int>(), j.at("torsion").get<std::vector<int>>());
}

inline json to_json(const GroupDescriptor& d) {
  return {{"kind", d.kind == GroupDescriptor::Kind::direct ? "direct" : "semidirect"},
          {"base", {{"z2", d.z2}, {"z", d.z}}},
          {"action", d.action}};
}

inline GroupDescriptor group_from_json(const json& j) {
  GroupDescriptor d;
  d.z2 = j.at("base").at("z2").get<int>();
  d.z = j.at("base").at("z").get<int>();
  d.action = j.at("action").get<std::vector<int>>();
  if (d.action.size() != static_cast<std::size_t>(d.z2 + d.z)) throw std::invalid_argument("action length must be z2 + z");
  const auto kind = j.at("kind").get<std::string>();
  d.kind = kind == "direct" ? GroupDescriptor::Kind::direct : GroupDescriptor::Kind::semidirect;
  bool trivial = std::all_of(d.action.begin(), d.action.end(), [](int s) { return s == 1; });
  if (trivial != (d.kind == GroupDescriptor::Kind::direct)) throw std::invalid_argument("kind must be direct iff the action is trivial");
  return d;
}

namespace detail {

inline json terms_to_json(const PresentedDGA& dga, const std::vector<DiffTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) {
    json factors = json::array();
    for (auto [i, e] : t.factors) factors.push_back({dga.generators.at(i).name, e});
    out.push_back({{"coef", t.coef}, {"monomial", factors}});
  }
  return out;
}

inline std::vector<DiffTerm> terms_from_json(const PresentedDGA& dga, const json& j) {
  std::vector<DiffTerm> out;
  for (const auto& t : j) {
    DiffTerm d;
    d.coef = t.at("coef").get<std::int64_t>();
    for (const auto& f : t.at("monomial")) d.factors.emplace_back(dga.index(f.at(0).get<std::string>()), f.at(1).get<int>());
    out.push_back(std::move(d));
  }
  return out;
}

} // namespace detail

// Manifest: generators with bidegrees, flavors, weights and differentials
// as lists of {coef, monomial: [[name, exponent], ...]}.
inline json to_json(const PresentedDGA& dga) {
  json gens = json::array();
  for (const auto& g : dga.generators)
    gens.push_back({{"name", g.name},
                    {"bidegree", {g.s, g.q}},
                    {"flavor", to_string(g.flavor)},
                    {"chi", g.chi},
                    {"differential", detail::terms_to_json(dga, g.differential)}});
  json out = {{"id", dga.id}, {"params", dga.params}, {"field", dga.ring.name()}, {"cap", dga.cap}, {"generators", gens}};
  if (dga.multiplier) out["multiplier"] = detail::terms_to_json(dga, *dga.multiplier);
  return out;
}

inline PresentedDGA dga_from_json(const json& j) {
  PresentedDGA dga;
  dga.id = j.at("id").get<std::string>();
  dga.params = j.at("params").get<std::map<std::string, int>>();
  dga.ring = CoefficientRing::parse(j.at("field").get<std::string>());
  dga.cap = j.at("cap").get<int>();
  // Names first so differentials may reference later generators.
  for (const auto& g : j.at("generators")) {
    Generator gen;
    gen.name = g.at("name").get<std::string>();
    gen.s = g.at("bidegree").at(0).get<int>();
    gen.q = g.at("bidegree").at(1).get<int>();
    gen.flavor = parse_flavor(g.at("flavor").get<std::string>());
    gen.chi = g.at("chi").get<int>();
    dga.add(std::move(gen));
  }
  std::size_t i = 0;
  for (const auto& g : j.at("generators")) dga.generators[i++].differential = detail::terms_from_json(dga, g.at("differential"));
  if (j.contains("multiplier")) dga.multiplier = detail::terms_from_json(dga, j.at("multiplier"));
  return dga;
}

inline json to_json(const HilbertTable& t) {
  json dims = json::array();
  for (const auto& [key, dim] : t.dims) {
    auto [s, q, chi] = key;
    dims.push_back({{"s", s}, {"q", q}, {"chi", chi}, {"dim", dim}});
  }
  return {{"cap", t.cap}, {"dims", dims}};
}

} // namespace moduli::io

#endif // MODULI_IO_HPP
