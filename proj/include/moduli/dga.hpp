#ifndef MODULI_DGA_HPP
#define MODULI_DGA_HPP

// Brute-force homology of finitely presented bigraded graded-commutative
// differential algebras. Generators are exterior, polynomial or divided
// power; a basis is enumerated up to a total degree cap and homology ranks
// are computed by exact elimination, one (internal degree, weight) block at
// a time.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "moduli/series.hpp"

namespace moduli {

class basis_cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class invalid_complex : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Flavor { exterior, polynomial, divided_power };

inline std::string to_string(Flavor f) {
  switch (f) {
  case Flavor::exterior: return "exterior";
  case Flavor::polynomial: return "polynomial";
  case Flavor::divided_power: return "divided_power";
  }
  return "?";
}

inline Flavor parse_flavor(const std::string& s) {
  if (s == "exterior") return Flavor::exterior;
  if (s == "polynomial") return Flavor::polynomial;
  if (s == "divided_power") return Flavor::divided_power;
  throw std::invalid_argument("unknown flavor '" + s + "'");
}

// coef * prod generator^exponent, generators referenced by index.
struct DiffTerm {
  std::int64_t coef = 1;
  std::vector<std::pair<std::size_t, int>> factors;

  friend bool operator==(const DiffTerm&, const DiffTerm&) = default;
};

struct Generator {
  std::string name;
  int s = 0; // column, <= 0
  int q = 1; // internal degree
  Flavor flavor = Flavor::exterior;
  int chi = 0;
  std::vector<DiffTerm> differential;

  int total() const { return s + q; }
  bool odd() const { return (total() & 1) != 0; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

// A complex to be fed to the oracle. When `multiplier` is set the complex
// is the two-step complex "multiply by that element" on a column-0
// algebra instead of the algebra's own differential.
struct PresentedDGA {
  std::string id;
  std::map<std::string, int> params;
  CoefficientRing ring = CoefficientRing::rationals();
  int cap = 12;
  std::vector<Generator> generators;
  std::optional<std::vector<DiffTerm>> multiplier;

  std::size_t add(Generator g) {
    generators.push_back(std::move(g));
    return generators.size() - 1;
  }

  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return i;
    throw std::out_of_range("no generator named " + name);
  }
};

using Monomial = std::vector<int>;

struct MonomialDegree {
  int s = 0;
  int q = 0;
  int chi = 0;
};

inline MonomialDegree degree_of(const PresentedDGA& dga, const Monomial& m) {
  MonomialDegree d;
  for (std::size_t i = 0; i < m.size(); ++i) {
    d.s += m[i] * dga.generators[i].s;
    d.q += m[i] * dga.generators[i].q;
    d.chi += m[i] * dga.generators[i].chi;
  }
  d.chi &= 1;
  return d;
}

inline MonomialDegree term_degree(const PresentedDGA& dga, const DiffTerm& t) {
  Monomial m(dga.generators.size(), 0);
  for (auto [i, e] : t.factors) m.at(i) += e;
  return degree_of(dga, m);
}

// Structural checks: bidegree ranges, parity rules for the field, and that
// every differential term lies in bidegree (s + 1, q) with the same weight.
inline void validate(const PresentedDGA& dga) {
  const bool char2 = dga.ring.characteristic() == 2;
  if (dga.ring.kind == CoefficientRing::Kind::character) throw invalid_complex("oracle fields are Q or GF(p)");
  for (const auto& g : dga.generators) {
    if (g.s > 0) throw invalid_complex(g.name + ": column must be <= 0");
    if (g.q < 1) throw invalid_complex(g.name + ": internal degree must be positive");
    if (g.total() < 1) throw invalid_complex(g.name + ": total degree must be positive");
    if (g.chi != 0 && g.chi != 1) throw invalid_complex(g.name + ": chi weight must be 0 or 1");
    if (!char2 && g.odd() && g.flavor != Flavor::exterior)
      throw invalid_complex(g.name + ": odd total degree requires an exterior generator");
    for (const auto& t : g.differential) {
      for (auto [i, e] : t.factors)
        if (i >= dga.generators.size() || e < 1) throw invalid_complex(g.name + ": bad differential factor");
      auto d = term_degree(dga, t);
      if (d.s != g.s + 1 || d.q != g.q || d.chi != g.chi)
        throw invalid_complex(g.name + ": differential term has the wrong tridegree");
    }
  }
  if (dga.multiplier) {
    for (const auto& g : dga.generators)
      if (g.s != 0 || !g.differential.empty()) throw invalid_complex("multiplier mode needs a column-0 algebra with zero differential");
  }
}

// Monomials of total degree <= cap_total, in lexicographic exponent order.
inline std::vector<Monomial> enumerate_monomials(const PresentedDGA& dga, int cap_total, std::size_t max_basis = 1000000) {
  const std::size_t n = dga.generators.size();
  std::vector<Monomial> out;
  Monomial m(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == n) {
      out.push_back(m);
      if (out.size() > max_basis)
        throw basis_cap_exceeded("basis exceeds " + std::to_string(max_basis) + " monomials for " + dga.id);
      return;
    }
    const auto& g = dga.generators[i];
    const int step = g.total();
    const int max_e = g.flavor == Flavor::exterior ? 1 : budget / step;
    for (int e = 0; e <= max_e && e * step <= budget; ++e) {
      m[i] = e;
      rec(i + 1, budget - e * step);
    }
    m[i] = 0;
  };
  if (cap_total >= 0) rec(0, cap_total);
  return out;
}

using BasisCounts = std::map<std::tuple<int, int, int>, long>;

// Monomial counts per (s, q, chi) up to total degree cap_total.
inline BasisCounts enumerate_basis(const PresentedDGA& dga, int cap_total, std::size_t max_basis = 1000000) {
  BasisCounts counts;
  for (const auto& m : enumerate_monomials(dga, cap_total, max_basis)) {
    auto d = degree_of(dga, m);
    ++counts[{d.s, d.q, d.chi}];
  }
  return counts;
}

// Dimensions of homology per (s, q, chi).
struct HilbertTable {
  int cap = 0; // exact through total degree cap
  std::map<std::tuple<int, int, int>, long> dims;

  long at(int s, int q, int chi) const {
    auto it = dims.find({s, q, chi});
    return it == dims.end() ? 0 : it->second;
  }

  Series total_series(bool project_chi) const {
    Series out(CoefficientRing::rationals(), cap);
    for (const auto& [key, dim] : dims) {
      auto [s, q, chi] = key;
      if (s + q > cap || (project_chi && chi != 0)) continue;
      out.set(s + q, out[s + q] + dim);
    }
    return out;
  }

  TruncatedSeries<Character> character_series() const {
    TruncatedSeries<Character> out(CoefficientRing::character(), cap);
    for (const auto& [key, dim] : dims) {
      auto [s, q, chi] = key;
      if (s + q > cap) continue;
      Character c = out[s + q];
      if (chi == 0) c.one += dim;
      else c.chi += dim;
      out.set(s + q, c);
    }
    return out;
  }
};

namespace detail {

template <Coefficient C>
using Element = std::map<Monomial, C>;

template <Coefficient C>
void accumulate(Element<C>& into, const Monomial& m, const C& c) {
  if (coefficient_traits<C>::is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (coefficient_traits<C>::is_zero(it->second)) into.erase(it);
  }
}

inline Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Graded-commutative product of two normally ordered monomials. Returns
// the integer coefficient (sign and divided-power binomials) and the
// normal-ordered result; coefficient 0 when an exterior square appears.
inline std::pair<Integer, Monomial> multiply_monomials(const PresentedDGA& dga, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.size();
  Monomial out(n, 0);
  Integer coef = 1;
  std::vector<int> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + (dga.generators[i].odd() ? a[i] : 0);
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = dga.generators[i];
    if (g.odd() && b[i] > 0) sign += b[i] * suffix[i + 1];
    out[i] = a[i] + b[i];
    if (g.flavor == Flavor::exterior && out[i] > 1) return {0, out};
    if (g.flavor == Flavor::divided_power && a[i] > 0 && b[i] > 0) coef *= binomial(out[i], a[i]);
  }
  if (sign & 1) coef = -coef;
  return {coef, out};
}

template <Coefficient C>
Element<C> multiply(const PresentedDGA& dga, const Element<C>& x, const Element<C>& y) {
  Element<C> out;
  for (const auto& [ma, ca] : x)
    for (const auto& [mb, cb] : y) {
      auto [k, m] = multiply_monomials(dga, ma, mb);
      if (k == 0) continue;
      accumulate(out, m, ca * cb * coefficient_traits<C>::from_integer(dga.ring, k));
    }
  return out;
}

// Each term is the product of its factors in listed order; a divided-power
// factor (i, e) stands for z_i^[e].
template <Coefficient C>
Element<C> from_terms(const PresentedDGA& dga, const std::vector<DiffTerm>& terms) {
  Element<C> out;
  for (const auto& t : terms) {
    Monomial acc(dga.generators.size(), 0);
    Integer k = t.coef;
    for (auto [i, e] : t.factors) {
      Monomial single(dga.generators.size(), 0);
      single[i] = e;
      auto [kk, mm] = multiply_monomials(dga, acc, single);
      k *= kk;
      acc = std::move(mm);
      if (k == 0) break;
    }
    if (k != 0) accumulate(out, acc, coefficient_traits<C>::from_integer(dga.ring, k));
  }
  return out;
}

template <Coefficient C>
class Differential {
public:
  explicit Differential(const PresentedDGA& dga) : dga_(dga) {
    for (const auto& g : dga.generators) images_.push_back(from_terms<C>(dga, g.differential));
  }

  Element<C> apply(const Monomial& m) const {
    Element<C> out;
    const std::size_t n = m.size();
    int odd_before = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& g = dga_.generators[j];
      if (m[j] > 0 && !images_[j].empty()) {
        Monomial left(n, 0), mid(n, 0), right(n, 0);
        for (std::size_t i = 0; i < j; ++i) left[i] = m[i];
        for (std::size_t i = j + 1; i < n; ++i) right[i] = m[i];
        mid[j] = m[j] - 1;
        Integer k = g.flavor == Flavor::polynomial ? Integer(m[j]) : Integer(1);
        if (odd_before & 1) k = -k;
        Element<C> acc{{left, coefficient_traits<C>::from_integer(dga_.ring, k)}};
        acc = multiply(dga_, acc, images_[j]);
        acc = multiply(dga_, acc, Element<C>{{mid, coefficient_traits<C>::from_integer(dga_.ring, 1)}});
        acc = multiply(dga_, acc, Element<C>{{right, coefficient_traits<C>::from_integer(dga_.ring, 1)}});
        for (const auto& [mm, c] : acc) accumulate(out, mm, c);
      }
      if (g.odd()) odd_before += m[j];
    }
    return out;
  }

  Element<C> apply(const Element<C>& x) const {
    Element<C> out;
    for (const auto& [m, c] : x)
      for (const auto& [mm, cc] : apply(m)) accumulate(out, mm, c * cc);
    return out;
  }

private:
  const PresentedDGA& dga_;
  std::vector<Element<C>> images_;
};

// Incremental row reduction; rank() is the number of pivots.
template <Coefficient C>
class RowEchelon {
public:
  using Row = std::map<std::size_t, C>;

  void insert(Row row) {
    while (!row.empty()) {
      auto lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const C inv = coefficient_traits<C>::inverse(row.begin()->second);
        for (auto& [col, v] : row) v = v * inv;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      const C factor = row.begin()->second;
      for (const auto& [col, v] : it->second) {
        auto [rit, inserted] = row.try_emplace(col, coefficient_traits<C>::from_integer(ring_, 0));
        rit->second -= factor * v;
        if (coefficient_traits<C>::is_zero(rit->second)) row.erase(rit);
      }
    }
  }

  std::size_t rank() const { return pivots_.size(); }
  void set_ring(const CoefficientRing& r) { ring_ = r; }

private:
  CoefficientRing ring_;
  std::map<std::size_t, Row> pivots_;
};

template <Coefficient C>
std::size_t map_rank(const PresentedDGA& dga, const std::vector<Monomial>& source, const std::map<Monomial, std::size_t>& target,
                     const std::function<Element<C>(const Monomial&)>& f) {
  RowEchelon<C> ech;
  ech.set_ring(dga.ring);
  for (const auto& m : source) {
    typename RowEchelon<C>::Row row;
    for (const auto& [mm, c] : f(m)) {
      auto it = target.find(mm);
      if (it == target.end()) throw std::logic_error("image monomial outside the enumerated basis");
      row.emplace(it->second, c);
    }
    if (!row.empty()) ech.insert(std::move(row));
  }
  return ech.rank();
}

template <Coefficient C>
bool check_d_squared(const PresentedDGA& dga, const std::vector<Monomial>& basis) {
  Differential<C> d(dga);
  for (const auto& m : basis)
    if (!d.apply(d.apply(m)).empty()) return false;
  return true;
}

template <Coefficient C>
HilbertTable homology_impl(const PresentedDGA& dga, int cap, std::size_t max_basis) {
  validate(dga);
  HilbertTable table;
  table.cap = cap;
  if (dga.multiplier) {
    const auto mult = from_terms<C>(dga, *dga.multiplier);
    int shift = 0, chi_shift = 0;
    if (!dga.multiplier->empty()) {
      auto d = term_degree(dga, dga.multiplier->front());
      shift = d.q;
      chi_shift = d.chi;
      for (const auto& t : *dga.multiplier) {
        auto dt = term_degree(dga, t);
        if (dt.q != shift || dt.chi != chi_shift) throw invalid_complex("multiplier must be homogeneous");
      }
    }
    auto basis = enumerate_monomials(dga, cap + shift, max_basis);
    std::map<std::pair<int, int>, std::vector<Monomial>> blocks;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto d = degree_of(dga, basis[i]);
      blocks[{d.q, d.chi}].push_back(basis[i]);
      index.emplace(basis[i], i);
    }
    auto times = [&](const Monomial& m) { return multiply(dga, Element<C>{{m, coefficient_traits<C>::from_integer(dga.ring, 1)}}, mult); };
    for (const auto& [key, mons] : blocks) {
      auto [q, chi] = key;
      if (q > cap) continue;
      std::size_t out_rank = 0, in_rank = 0;
      if (shift > 0) out_rank = map_rank<C>(dga, mons, index, times);
      auto src = blocks.find({q - shift, (chi + chi_shift) & 1});
      if (shift > 0 && src != blocks.end()) in_rank = map_rank<C>(dga, src->second, index, times);
      long dim = static_cast<long>(mons.size()) - static_cast<long>(shift > 0 ? out_rank + in_rank : 0);
      if (dim) table.dims[{0, q, chi}] = dim;
    }
    return table;
  }
  auto basis = enumerate_monomials(dga, cap + 1, max_basis);
  if (!check_d_squared<C>(dga, basis)) throw invalid_complex("d^2 != 0 for " + dga.id);
  std::map<std::tuple<int, int, int>, std::vector<Monomial>> blocks;
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto d = degree_of(dga, basis[i]);
    blocks[{d.q, d.chi, d.s}].push_back(basis[i]);
    index.emplace(basis[i], i);
  }
  Differential<C> d(dga);
  auto apply = [&](const Monomial& m) { return d.apply(m); };
  std::map<std::tuple<int, int, int>, std::size_t> rank_out;
  for (const auto& [key, mons] : blocks)
    if (std::get<0>(key) + std::get<2>(key) <= cap) rank_out[key] = map_rank<C>(dga, mons, index, apply);
  for (const auto& [key, mons] : blocks) {
    auto [q, chi, s] = key;
    if (s + q > cap) continue;
    std::size_t in = 0;
    if (auto it = rank_out.find({q, chi, s - 1}); it != rank_out.end()) in = it->second;
    long dim = static_cast<long>(mons.size()) - static_cast<long>(rank_out[key] + in);
    if (dim) table.dims[{s, q, chi}] = dim;
  }
  return table;
}

} // namespace detail

// delta^2 = 0 on every basis monomial of total degree <= cap.
inline bool d_squared_vanishes(const PresentedDGA& dga, int cap) {
  validate(dga);
  auto basis = enumerate_monomials(dga, cap);
  if (dga.ring.kind == CoefficientRing::Kind::prime_field) return detail::check_d_squared<Zp>(dga, basis);
  return detail::check_d_squared<Rational>(dga, basis);
}

// Homology exact through total degree `cap` (the basis is enumerated one
// step further so the incoming and outgoing maps are complete).
inline HilbertTable homology_hilbert(const PresentedDGA& dga, int cap, std::size_t max_basis = 1000000) {
  if (cap > dga.cap) throw std::invalid_argument("requested degree exceeds the complex's cap");
  if (dga.ring.kind == CoefficientRing::Kind::prime_field) return detail::homology_impl<Zp>(dga, cap, max_basis);
  return detail::homology_impl<Rational>(dga, cap, max_basis);
}

inline HilbertTable homology_hilbert(const PresentedDGA& dga) { return homology_hilbert(dga, dga.cap); }

struct HilbertComparison {
  bool match = true;
  int checked_through = 0;
  int first_mismatch = -1;
  Rational expected = 0;
  Rational got = 0;
  Series oracle = Series(CoefficientRing::rationals(), 0);
};

inline HilbertComparison compare_series(const Series& oracle, const Series& closed_form, int D) {
  HilbertComparison r;
  r.checked_through = std::min({D, oracle.truncation(), closed_form.truncation()});
  r.oracle = oracle;
  for (int k = 0; k <= r.checked_through; ++k) {
    if (oracle[k] != closed_form[k]) {
      r.match = false;
      r.first_mismatch = k;
      r.expected = closed_form[k];
      r.got = oracle[k];
      break;
    }
  }
  return r;
}

inline HilbertComparison compare_hilbert(const HilbertTable& table, const Series& closed_form, int D, bool project_chi) {
  return compare_series(table.total_series(project_chi), closed_form, D);
}

inline std::string describe(const HilbertComparison& c) {
  if (c.match) return "match <= " + std::to_string(c.checked_through);
  return "mismatch at degree " + std::to_string(c.first_mismatch) + ": oracle " + c.got.str() + ", closed form " + c.expected.str();
}

// Zeroes one differential term; used for negative controls.
inline PresentedDGA corrupt_term(PresentedDGA dga, std::size_t generator, std::size_t term) {
  auto& diff = dga.generators.at(generator).differential;
  diff.at(term).coef = 0;
  dga.id += "/corrupt(" + dga.generators[generator].name + "#" + std::to_string(term) + ")";
  return dga;
}

// Replaces one generator's whole differential by zero.
inline PresentedDGA corrupt_generator(PresentedDGA dga, std::size_t generator) {
  dga.generators.at(generator).differential.clear();
  dga.id += "/corrupt(" + dga.generators[generator].name + ")";
  return dga;
}

inline PresentedDGA corrupt_multiplier_term(PresentedDGA dga, std::size_t term) {
  dga.multiplier.value().at(term).coef = 0;
  dga.id += "/corrupt(multiplier#" + std::to_string(term) + ")";
  return dga;
}

} // namespace moduli

#endif // MODULI_DGA_HPP
