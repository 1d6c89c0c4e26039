#ifndef MODULI_GOLDEN_TABLES_HPP
#define MODULI_GOLDEN_TABLES_HPP

// Published Poincare polynomials used as regression data. Coefficients run
// from degree 0 upward. These are literal transcriptions; nothing here is
// regenerated from a formula.

#include <vector>

namespace moduli::golden {

struct Row {
  int g;
  int index; // a for the mod 2 lists, c for the odd characteristic list
  std::vector<long long> coeffs;
};

// Rank two, mod 2, odd degree. Listed by genus, then by number of real
// circles a = 1, ..., g + 1.
inline const std::vector<Row>& rank2_mod2() {
  static const std::vector<Row> rows = {
      {2, 1, {1, 1, 1, 1}},
      {2, 2, {1, 2, 2, 1}},
      {2, 3, {1, 3, 3, 1}},
      {3, 1, {1, 1, 2, 4, 2, 1, 1}},
      {3, 2, {1, 2, 4, 6, 4, 2, 1}},
      {3, 3, {1, 3, 7, 10, 7, 3, 1}},
      {3, 4, {1, 4, 11, 16, 11, 4, 1}},
      {4, 1, {1, 1, 2, 6, 6, 6, 6, 2, 1, 1}},
      {4, 2, {1, 2, 4, 9, 12, 12, 9, 4, 2, 1}},
      {4, 3, {1, 3, 7, 15, 22, 22, 15, 7, 3, 1}},
      {4, 4, {1, 4, 11, 25, 39, 39, 25, 11, 4, 1}},
      {4, 5, {1, 5, 16, 40, 66, 66, 40, 16, 5, 1}},
  };
  return rows;
}

// Rank three, mod 2, genus 2, a = 1, 2, 3.
inline const std::vector<Row>& rank3_mod2() {
  static const std::vector<Row> rows = {
      {2, 1, {1, 1, 3, 5, 4, 5, 3, 1, 1}},
      {2, 2, {1, 2, 6, 11, 12, 11, 6, 2, 1}},
      {2, 3, {1, 3, 10, 21, 26, 21, 10, 3, 1}},
  };
  return rows;
}

// Rank two, odd characteristic, genus 3, c = 0, 1, 2, 3 even circles.
inline const std::vector<Row>& rank2_odd() {
  static const std::vector<Row> rows = {
      {3, 0, {1, 0, 0, 2, 0, 0, 1}},
      {3, 1, {1, 0, 0, 2, 0, 0, 1}},
      {3, 2, {1, 0, 1, 4, 1, 0, 1}},
      {3, 3, {1, 0, 3, 8, 3, 0, 1}},
  };
  return rows;
}

} // namespace moduli::golden

#endif // MODULI_GOLDEN_TABLES_HPP
