#ifndef MODULI_TOPOLOGY_HPP
#define MODULI_TOPOLOGY_HPP

// Topological types of real curves (Weichold invariants g, a, eps) and of
// C-infinity Real vector bundles over them (rank, degree, and the
// Stiefel-Whitney class restricted to each real circle).

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace moduli {

// Raised for parameter tuples that do not describe a topological type.
// what() names the violated constraint.
class invalid_parameters : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct RealCurveType {
  int g = 0;
  int a = 0;
  // 1 if the complement of the real locus is connected, 0 otherwise.
  int eps = 1;

  bool connected_complement() const { return eps == 1; }

  friend bool operator==(const RealCurveType&, const RealCurveType&) = default;
  friend auto operator<=>(const RealCurveType&, const RealCurveType&) = default;
};

inline std::string to_string(const RealCurveType& c) {
  return "(" + std::to_string(c.g) + "," + std::to_string(c.a) + "," + std::to_string(c.eps) + ")";
}

// Returns an empty string when (g, a, eps) is realized by a real curve,
// otherwise the first violated constraint.
inline std::string curve_violation(int g, int a, int eps) {
  if (g < 0) return "g >= 0 violated (g = " + std::to_string(g) + ")";
  if (eps != 0 && eps != 1) return "eps in {0,1} violated (eps = " + std::to_string(eps) + ")";
  if (a < 1 - eps) return "1 - eps <= a violated (a = " + std::to_string(a) + ", eps = " + std::to_string(eps) + ")";
  if (a > g + 1 - eps)
    return "a <= g + 1 - eps violated (a = " + std::to_string(a) + ", g + 1 - eps = " + std::to_string(g + 1 - eps) + ")";
  if (eps == 0 && (g + 1 - a) % 2 != 0)
    return "g + 1 = a (mod 2) for eps = 0 violated (g = " + std::to_string(g) + ", a = " + std::to_string(a) + ")";
  return {};
}

inline RealCurveType validate_curve(int g, int a, int eps) {
  if (auto v = curve_violation(g, a, eps); !v.empty()) throw invalid_parameters(v);
  return {g, a, eps};
}

// All valid (g, a, eps), ordered lexicographically by (eps descending, a):
// connected complements first, matching the listing convention
// (2,0,1),(2,1,1),(2,2,1),(2,1,0),(2,3,0).
inline std::vector<RealCurveType> enumerate_curves(int g) {
  if (g < 0) throw invalid_parameters("g >= 0 violated (g = " + std::to_string(g) + ")");
  std::vector<RealCurveType> out;
  for (int eps : {1, 0})
    for (int a = 0; a <= g + 1; ++a)
      if (curve_violation(g, a, eps).empty()) out.push_back({g, a, eps});
  return out;
}

struct RealBundleTopType {
  RealCurveType curve;
  int r = 1;
  int d = 0;
  // w restricted to each real circle; order is kept for reporting only.
  std::vector<int> circle_classes;
  int b = 0; // odd circles
  int c = 0; // even circles
  int gcd_rd = 1;

  bool coprime() const { return gcd_rd == 1; }
};

// Circle classes with the b odd circles listed first.
inline std::vector<int> standard_classes(int a, int b) {
  std::vector<int> v(static_cast<std::size_t>(a), 0);
  for (int i = 0; i < b && i < a; ++i) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

inline RealBundleTopType validate_bundle(const RealCurveType& curve, int r, int d, const std::vector<int>& classes) {
  if (r < 1) throw invalid_parameters("rank r >= 1 violated (r = " + std::to_string(r) + ")");
  if (static_cast<int>(classes.size()) != curve.a)
    throw invalid_parameters("circle class count must equal a = " + std::to_string(curve.a) + " (got " +
                             std::to_string(classes.size()) + ")");
  int b = 0;
  for (int w : classes) {
    if (w != 0 && w != 1) throw invalid_parameters("circle classes must be bits 0 or 1");
    b += w;
  }
  if (((d - b) % 2 + 2) % 2 != 0)
    throw invalid_parameters("d = w(real locus) (mod 2) violated (d = " + std::to_string(d) + ", odd circles b = " +
                             std::to_string(b) + ")");
  RealBundleTopType t;
  t.curve = curve;
  t.r = r;
  t.d = d;
  t.circle_classes = classes;
  t.b = b;
  t.c = curve.a - b;
  t.gcd_rd = std::gcd(r, d < 0 ? -d : d);
  return t;
}

// Quaternionic components only occur for curves without real points; they
// are not modeled.
inline void reject_quaternionic(const RealCurveType& curve) {
  if (curve.a != 0) return;
  throw invalid_parameters("Quaternionic bundle components (real locus empty) are not modeled");
}

// Degrees below which the fixed determinant moduli space and the
// classifying space of the constant-determinant gauge group agree.
inline int stable_range(int r, int g) {
  if (r < 2) throw invalid_parameters("stable range needs r >= 2");
  if (g < 2) throw invalid_parameters("stable range needs g >= 2");
  return g * (r - 1) - 2;
}

// Surface-with-boundary data (genus of the orientable quotient piece and
// number of boundary circles) with 2 * ghat + n - 1 = g and n >= a; a
// disconnected complement has exactly the a real circles as boundary,
// a connected one needs at least one extra boundary circle.
struct SurfaceSplitting {
  int ghat = 0;
  int n = 0;
};

inline std::vector<SurfaceSplitting> surface_splittings(const RealCurveType& curve) {
  std::vector<SurfaceSplitting> out;
  for (int n = std::max(curve.a, 1); n <= curve.g + 1; ++n) {
    if ((curve.g + 1 - n) % 2 != 0) continue;
    if (curve.eps == 0 && n != curve.a) continue;
    if (curve.eps == 1 && n == curve.a) continue;
    out.push_back({(curve.g + 1 - n) / 2, n});
  }
  return out;
}

} // namespace moduli

#endif // MODULI_TOPOLOGY_HPP
