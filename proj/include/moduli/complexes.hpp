#ifndef MODULI_COMPLEXES_HPP
#define MODULI_COMPLEXES_HPP

// Presentations of the Koszul-Tate type complexes whose homology computes
// the Eilenberg-Moore E_2 pages for the real gauge groups.
//
// Index conventions: i runs over the n boundary circles, i' over 2..n,
// k over 2..r. Names encode indices, e.g. "x_{3,2}" or "cbar_{1,4}".

#include <string>

#include "moduli/dga.hpp"

namespace moduli {

namespace detail {

inline std::string sub(const std::string& base, int i) { return base + "_{" + std::to_string(i) + "}"; }
inline std::string sub(const std::string& base, int i, int k) {
  return base + "_{" + std::to_string(i) + "," + std::to_string(k) + "}";
}

inline Generator gen(std::string name, int s, int q, Flavor f, int chi = 0) {
  Generator g;
  g.name = std::move(name);
  g.s = s;
  g.q = q;
  g.flavor = f;
  g.chi = chi;
  return g;
}

inline DiffTerm term(std::int64_t c, std::initializer_list<std::pair<std::size_t, int>> fs) { return {c, fs}; }

// The inert exterior block A: 2*ghat generators of degree 2k - 1 for each k.
inline void add_exterior_block(PresentedDGA& dga, int r, int ghat) {
  for (int k = 2; k <= r; ++k)
    for (int j = 1; j <= 2 * ghat; ++j) dga.add(gen(sub("a", j, k), 0, 2 * k - 1, Flavor::exterior));
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw invalid_complex(what);
}

} // namespace detail

// Koszul-Tate complex of the restriction map to the boundary circles.
inline PresentedDGA koszul_tate(int r, int n, int ghat, CoefficientRing field, int cap) {
  using namespace detail;
  require(r >= 2 && n >= 1 && ghat >= 0, "koszul_tate needs r >= 2, n >= 1, ghat >= 0");
  PresentedDGA dga;
  dga.id = "koszul_tate";
  dga.params = {{"r", r}, {"n", n}, {"ghat", ghat}};
  dga.ring = field;
  dga.cap = cap;
  for (int k = 2; k <= r; ++k) {
    std::vector<std::size_t> cbar, c;
    for (int i = 1; i <= n; ++i) {
      cbar.push_back(dga.add(gen(sub("cbar", i, k), 0, 2 * k - 1, Flavor::exterior)));
      c.push_back(dga.add(gen(sub("c", i, k), 0, 2 * k, Flavor::polynomial)));
    }
    for (int i = 2; i <= n; ++i) {
      auto x = gen(sub("x", i, k), -1, 2 * k, Flavor::exterior);
      x.differential = {term(1, {{c[i - 1], 1}}), term(-1, {{c[0], 1}})};
      dga.add(std::move(x));
    }
    auto z = gen(sub("z", k), -1, 2 * k - 1, Flavor::divided_power);
    for (auto j : cbar) z.differential.push_back(term(1, {{j, 1}}));
    dga.add(std::move(z));
  }
  add_exterior_block(dga, r, ghat);
  return dga;
}

// Odd rank r = 2r' + 1 over a field of odd or zero characteristic.
inline PresentedDGA case1(int r, int n, int ghat, CoefficientRing field, int cap) {
  using namespace detail;
  require(r >= 3 && r % 2 == 1 && n >= 1 && ghat >= 0, "case1 needs odd r >= 3, n >= 1, ghat >= 0");
  const int rp = (r - 1) / 2;
  PresentedDGA dga;
  dga.id = "case1";
  dga.params = {{"r", r}, {"n", n}, {"ghat", ghat}};
  dga.ring = field;
  dga.cap = cap;
  for (int k = 1; k <= rp; ++k) {
    std::vector<std::size_t> pbar, p;
    for (int i = 1; i <= n; ++i) {
      pbar.push_back(dga.add(gen(sub("pbar", i, k), 0, 4 * k - 1, Flavor::exterior)));
      p.push_back(dga.add(gen(sub("p", i, k), 0, 4 * k, Flavor::polynomial)));
    }
    for (int i = 2; i <= n; ++i) {
      auto x = gen(sub("x", i, 2 * k), -1, 4 * k, Flavor::exterior);
      x.differential = {term(1, {{p[i - 1], 1}}), term(-1, {{p[0], 1}})};
      dga.add(std::move(x));
      dga.add(gen(sub("x", i, 2 * k + 1), -1, 4 * k + 2, Flavor::exterior));
    }
    auto z = gen(sub("z", 2 * k), -1, 4 * k - 1, Flavor::divided_power);
    for (auto j : pbar) z.differential.push_back(term(1, {{j, 1}}));
    dga.add(std::move(z));
    dga.add(gen(sub("z", 2 * k + 1), -1, 4 * k + 1, Flavor::divided_power));
  }
  add_exterior_block(dga, r, ghat);
  return dga;
}

// Even rank, the factor S of the splitting K (x) M = S (x) T: everything
// below the top Pontryagin degree, plus the block A.
inline PresentedDGA case2_S(int r, int n, int ghat, CoefficientRing field, int cap) {
  using namespace detail;
  require(r >= 2 && r % 2 == 0 && n >= 1 && ghat >= 0, "case2_S needs even r >= 2, n >= 1, ghat >= 0");
  const int rp = r / 2;
  PresentedDGA dga;
  dga.id = "case2_S";
  dga.params = {{"r", r}, {"n", n}, {"ghat", ghat}};
  dga.ring = field;
  dga.cap = cap;
  for (int k = 1; k <= rp - 1; ++k) {
    std::vector<std::size_t> pbar, p;
    for (int i = 1; i <= n; ++i) {
      pbar.push_back(dga.add(gen(sub("pbar", i, k), 0, 4 * k - 1, Flavor::exterior)));
      p.push_back(dga.add(gen(sub("p", i, k), 0, 4 * k, Flavor::polynomial)));
    }
    for (int i = 2; i <= n; ++i) {
      auto x = gen(sub("x", i, 2 * k), -1, 4 * k, Flavor::exterior);
      x.differential = {term(1, {{p[i - 1], 1}}), term(-1, {{p[0], 1}})};
      dga.add(std::move(x));
      dga.add(gen(sub("x", i, 2 * k + 1), -1, 4 * k + 2, Flavor::exterior));
    }
    auto z = gen(sub("z", 2 * k), -1, 4 * k - 1, Flavor::divided_power);
    for (auto j : pbar) z.differential.push_back(term(1, {{j, 1}}));
    dga.add(std::move(z));
    dga.add(gen(sub("z", 2 * k + 1), -1, 4 * k + 1, Flavor::divided_power));
  }
  add_exterior_block(dga, r, ghat);
  return dga;
}

// Even rank, the factor T carrying the top Pontryagin/Euler classes. The
// first b circles are odd, circles b+1..a are real and even (chi weight on
// their Euler classes), circles a+1..n are not real.
inline PresentedDGA case2_T(int r, int n, int a, int b, CoefficientRing field, int cap) {
  using namespace detail;
  require(r >= 2 && r % 2 == 0, "case2_T needs even r >= 2");
  require(n >= 1 && 0 <= b && b <= a && a <= n, "case2_T needs 0 <= b <= a <= n, n >= 1");
  PresentedDGA dga;
  dga.id = "case2_T";
  dga.params = {{"r", r}, {"n", n}, {"a", a}, {"b", b}};
  dga.ring = field;
  dga.cap = cap;
  // p_{i,r'} and pbar_{i,r'} as elements, per circle; empty for odd circles.
  std::vector<std::vector<DiffTerm>> p(static_cast<std::size_t>(n) + 1), pbar(static_cast<std::size_t>(n) + 1);
  for (int i = b + 1; i <= a; ++i) {
    auto eb = dga.add(gen(sub("ebar", i), 0, r - 1, Flavor::exterior, 1));
    auto e = dga.add(gen(sub("e", i), 0, r, Flavor::polynomial, 1));
    p[static_cast<std::size_t>(i)] = {term(1, {{e, 2}})};
    pbar[static_cast<std::size_t>(i)] = {term(2, {{eb, 1}, {e, 1}})};
  }
  for (int i = a + 1; i <= n; ++i) {
    auto pb = dga.add(gen(sub("pbar", i, r / 2), 0, 2 * r - 1, Flavor::exterior));
    auto pp = dga.add(gen(sub("p", i, r / 2), 0, 2 * r, Flavor::polynomial));
    p[static_cast<std::size_t>(i)] = {term(1, {{pp, 1}})};
    pbar[static_cast<std::size_t>(i)] = {term(1, {{pb, 1}})};
  }
  for (int i = 2; i <= n; ++i) {
    auto x = gen(sub("x", i, r), -1, 2 * r, Flavor::exterior);
    if (b == 0) {
      x.differential = p[static_cast<std::size_t>(i)];
      for (auto t : p[1]) {
        t.coef = -t.coef;
        x.differential.push_back(t);
      }
    } else if (i > b) {
      x.differential = p[static_cast<std::size_t>(i)];
    }
    dga.add(std::move(x));
  }
  auto z = gen(sub("z", r), -1, 2 * r - 1, Flavor::divided_power);
  for (int i = b + 1; i <= n; ++i)
    for (const auto& t : pbar[static_cast<std::size_t>(i)]) z.differential.push_back(t);
  dga.add(std::move(z));
  return dga;
}

// The algebra S of the annihilator lemma with multiplier
// pbar = sum ebar_i e_i over circles b+1..n; e_i^2 = 0 except e_1 when
// b = 0, which stays polynomial.
inline PresentedDGA lemma314_S(int r, int n, int b, CoefficientRing field, int cap) {
  using namespace detail;
  require(r >= 2 && r % 2 == 0, "lemma314_S needs even r >= 2");
  require(0 <= b && b < n, "lemma314_S needs 0 <= b < n");
  PresentedDGA dga;
  dga.id = "lemma314_S";
  dga.params = {{"r", r}, {"n", n}, {"b", b}};
  dga.ring = field;
  dga.cap = cap;
  std::vector<DiffTerm> mult;
  for (int i = b + 1; i <= n; ++i) {
    auto eb = dga.add(gen(sub("ebar", i), 0, r - 1, Flavor::exterior, 1));
    auto f = (b == 0 && i == 1) ? Flavor::polynomial : Flavor::exterior;
    auto e = dga.add(gen(sub("e", i), 0, r, f, 1));
    mult.push_back(term(1, {{eb, 1}, {e, 1}}));
  }
  dga.multiplier = mult;
  return dga;
}

// Mod-2 complex from the rank-r determinant-one computation: the
// boundary module V, Koszul pairs (x, c) and inert z's and A.
inline PresentedDGA prop38(int r, int n, int a, int ghat, int cap) {
  using namespace detail;
  require(r >= 2 && n >= 1 && 0 <= a && a <= n && ghat >= 0, "prop38 needs r >= 2, 0 <= a <= n, n >= 1, ghat >= 0");
  PresentedDGA dga;
  dga.id = "prop38";
  dga.params = {{"r", r}, {"n", n}, {"a", a}, {"ghat", ghat}};
  dga.ring = CoefficientRing::prime_field(2);
  dga.cap = cap;
  for (int k = 2; k <= r; ++k) {
    for (int i = 1; i <= a; ++i) {
      dga.add(gen(sub("u", i, k), 0, k - 1, Flavor::exterior));
      dga.add(gen(sub("w", i, k), 0, k, Flavor::exterior));
    }
    for (int i = a + 1; i <= n; ++i) dga.add(gen(sub("y", i, k), 0, 2 * k - 1, Flavor::exterior));
    std::vector<std::size_t> c;
    for (int i = 1; i <= n; ++i) c.push_back(dga.add(gen(sub("c", i, k), 0, 2 * k, Flavor::polynomial)));
    for (int i = 2; i <= n; ++i) {
      auto x = gen(sub("x", i, k), -1, 2 * k, Flavor::exterior);
      x.differential = {term(1, {{c[static_cast<std::size_t>(i - 1)], 1}}), term(1, {{c[0], 1}})};
      dga.add(std::move(x));
    }
    dga.add(gen(sub("z", k), -1, 2 * k - 1, Flavor::divided_power));
  }
  add_exterior_block(dga, r, ghat);
  return dga;
}

} // namespace moduli

#endif // MODULI_COMPLEXES_HPP
