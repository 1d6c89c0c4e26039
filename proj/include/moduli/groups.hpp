#ifndef MODULI_GROUPS_HPP
#define MODULI_GROUPS_HPP

// Component groups of the real gauge groups and fundamental groups of the
// fixed determinant real moduli spaces. Every group here has the shape
// Z/2 acting on (Z/2)^b x Z^(a-b).

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "moduli/topology.hpp"

namespace moduli {

class unsupported_case : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Z^free_rank x prod Z/torsion[i], torsion kept sorted.
struct FGAbelianGroup {
  int free_rank = 0;
  std::vector<int> torsion;

  static FGAbelianGroup z2_power(int n) { return {0, std::vector<int>(static_cast<std::size_t>(n), 2)}; }

  int torsion_count(int order) const { return static_cast<int>(std::count(torsion.begin(), torsion.end(), order)); }
  bool trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
};

inline FGAbelianGroup make_group(int free_rank, std::vector<int> torsion) {
  for (int o : torsion)
    if (o < 2) throw std::invalid_argument("torsion orders must be >= 2");
  std::sort(torsion.begin(), torsion.end());
  return {free_rank, std::move(torsion)};
}

inline std::string to_string(const FGAbelianGroup& g) {
  if (g.trivial()) return "0";
  std::map<int, int> counts;
  for (int o : g.torsion) ++counts[o];
  std::vector<std::string> parts;
  for (auto [o, n] : counts)
    parts.push_back(n > 1 ? "(Z/" + std::to_string(o) + ")^" + std::to_string(n) : "Z/" + std::to_string(o));
  if (g.free_rank > 0) parts.push_back(g.free_rank > 1 ? "Z^" + std::to_string(g.free_rank) : "Z");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " × " : "") + parts[i];
  return out;
}

// A quotient Z/2 acting on the base (Z/2)^z2 x Z^z. The action is +1 on
// every Z/2 factor and a sign per Z factor.
struct GroupDescriptor {
  enum class Kind { direct, semidirect };
  Kind kind = Kind::direct;
  int z2 = 0;
  int z = 0;
  std::vector<int> action; // length z2 + z, Z/2 factors first

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

inline GroupDescriptor make_descriptor(int z2, int z, int z_sign) {
  GroupDescriptor d;
  d.z2 = z2;
  d.z = z;
  d.action.assign(static_cast<std::size_t>(z2), 1);
  d.action.insert(d.action.end(), static_cast<std::size_t>(z), z_sign);
  bool trivial_action = std::all_of(d.action.begin(), d.action.end(), [](int s) { return s == 1; });
  d.kind = trivial_action ? GroupDescriptor::Kind::direct : GroupDescriptor::Kind::semidirect;
  return d;
}

inline std::string base_string(const GroupDescriptor& d) {
  std::vector<std::string> parts;
  if (d.z2 == 1) parts.push_back("Z/2");
  else if (d.z2 > 1) parts.push_back("(Z/2)^" + std::to_string(d.z2));
  if (d.z == 1) parts.push_back("Z");
  else if (d.z > 1) parts.push_back("Z^" + std::to_string(d.z));
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " × " : "") + parts[i];
  return out;
}

inline std::string to_string(const GroupDescriptor& d) {
  std::string base = base_string(d);
  if (base == "0") return "Z/2";
  std::string wrapped = base.find(" × ") == std::string::npos ? base : "(" + base + ")";
  return std::string("Z/2 ") + (d.kind == GroupDescriptor::Kind::semidirect ? "⋉ " : "× ") + wrapped;
}

inline void check_circles(int r, int a, int b) {
  if (r < 2) throw invalid_parameters("rank r >= 2 violated (r = " + std::to_string(r) + ")");
  if (a < 0) throw invalid_parameters("a >= 0 violated (a = " + std::to_string(a) + ")");
  if (b < 0 || b > a) throw invalid_parameters("0 <= b <= a violated (a = " + std::to_string(a) + ", b = " + std::to_string(b) + ")");
}

// pi_0 of the determinant-one real gauge group.
inline FGAbelianGroup pi0_sgauge(int r, int a, int b) {
  check_circles(r, a, b);
  if (r >= 3) return FGAbelianGroup::z2_power(a);
  return make_group(a - b, std::vector<int>(static_cast<std::size_t>(b), 2));
}

// pi_0 of the constant-determinant real gauge group: the determinant sign
// acts by -1 on the Z factors coming from even circles at rank two.
inline GroupDescriptor pi0_cgauge(int r, int a, int b) {
  auto base = pi0_sgauge(r, a, b);
  return make_descriptor(base.torsion_count(2), base.free_rank, -1);
}

inline GroupDescriptor pi1_fixed_det_moduli(int r, int g, int a, int b) {
  if (g < 2) throw invalid_parameters("g >= 2 violated (g = " + std::to_string(g) + ")");
  check_circles(r, a, b);
  if (r == 2 && g == 2) throw unsupported_case("pi1 of the fixed determinant moduli space is not covered for r = 2, g = 2");
  return pi0_cgauge(r, a, b);
}

inline FGAbelianGroup abelianize(const GroupDescriptor& d) {
  std::vector<int> torsion(1, 2); // the quotient Z/2
  int free_rank = 0;
  for (int i = 0; i < d.z2; ++i) torsion.push_back(2);
  for (int i = 0; i < d.z; ++i) {
    if (d.action[static_cast<std::size_t>(d.z2 + i)] == -1) torsion.push_back(2);
    else ++free_rank;
  }
  return make_group(free_rank, std::move(torsion));
}

// H_1 of the moduli space: the abelianized pi_1 with the Z/2 split off by
// the determinant quotient removed.
inline FGAbelianGroup h1_fixed_det_moduli(int r, int g, int a, int b) {
  auto ab = abelianize(pi1_fixed_det_moduli(r, g, a, b));
  auto it = std::find(ab.torsion.begin(), ab.torsion.end(), 2);
  ab.torsion.erase(it);
  return ab;
}

} // namespace moduli

#endif // MODULI_GROUPS_HPP
