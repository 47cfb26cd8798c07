#ifndef STACKSORT_QR_FIXTURES_HPP
#define STACKSORT_QR_FIXTURES_HPP

#include <string>
#include <vector>

#include "stacksort/checksum.hpp"

namespace stacksort {

// The two eliminated-variable polynomials behind the generating-function
// residual checks, stored as flat term lists. They are fixtures: the
// checks substitute series into them and demand exact vanishing. Their
// transcription is guarded by a checksum and by unit tests that re-derive
// Q from the series identity it eliminates.

// term of Q(u, v, w, z)
struct QTerm {
  int du, dv, dw, dz;
  long coeff;
};

// term of R(v, w, x, y)
struct RTerm {
  int dv, dw, dx, dy;
  long coeff;
};

inline const std::vector<QTerm>& q_fixture() {
  static const std::vector<QTerm> q = {
      {0, 1, 1, 0, -1}, {0, 0, 0, 1, 1},  {0, 1, 1, 1, 2},  {0, 2, 2, 1, 1},
      {1, 0, 1, 0, 1},  {1, 0, 0, 1, -1}, {1, 0, 1, 1, -2}, {1, 1, 2, 1, -2},
      {1, 2, 2, 1, 1},  {2, 0, 2, 1, 1},  {2, 1, 2, 1, -2}, {2, 0, 0, 2, 1},
      {2, 1, 1, 2, 2},  {2, 2, 2, 2, 1},  {3, 0, 2, 1, 1},  {3, 0, 1, 2, -2},
      {3, 1, 2, 2, -2}, {4, 0, 2, 2, 1},
  };
  return q;
}

inline const std::vector<RTerm>& r_fixture() {
  static const std::vector<RTerm> r = {
      // v^0
      {0, 0, 1, 0, -1},
      {0, 1, 1, 0, 4},  {0, 1, 2, 0, 8},   {0, 1, 1, 1, -1},
      {0, 2, 1, 0, -6}, {0, 2, 2, 0, -16}, {0, 2, 3, 0, -16}, {0, 2, 1, 1, 3},  {0, 2, 2, 1, 36},
      {0, 3, 1, 0, 4},  {0, 3, 2, 0, 8},   {0, 3, 1, 1, -3},  {0, 3, 2, 1, -36}, {0, 3, 2, 2, 27},
      {0, 4, 1, 0, -1}, {0, 4, 1, 1, 1},
      // v^1
      {1, 0, 0, 0, 1},
      {1, 1, 0, 0, -4}, {1, 1, 1, 0, -12},
      {1, 2, 0, 0, 6},  {1, 2, 1, 0, 20},  {1, 2, 2, 0, 32},  {1, 2, 1, 1, -33},
      {1, 3, 0, 0, -4}, {1, 3, 1, 0, -4},  {1, 3, 2, 0, 16},  {1, 3, 1, 1, 30}, {1, 3, 2, 1, -36},
      {1, 4, 0, 0, 1},  {1, 4, 1, 0, -4},  {1, 4, 1, 1, 3},
      // v^2
      {2, 1, 0, 0, 4},
      {2, 2, 0, 0, -4}, {2, 2, 1, 0, -22},
      {2, 3, 0, 0, -4}, {2, 3, 1, 0, -20}, {2, 3, 2, 0, 8},   {2, 3, 1, 1, 33},
      {2, 4, 0, 0, 4},  {2, 4, 1, 0, -6},  {2, 4, 1, 1, 3},
      // v^3
      {3, 2, 0, 0, 6},
      {3, 3, 0, 0, 4},  {3, 3, 1, 0, -12},
      {3, 4, 0, 0, 6},  {3, 4, 1, 0, -4},  {3, 4, 1, 1, 1},
      // v^4
      {4, 3, 0, 0, 4},
      {4, 4, 0, 0, 4},  {4, 4, 1, 0, -1},
      // v^5
      {5, 4, 0, 0, 1},
  };
  return r;
}

inline std::string q_fixture_canonical() {
  std::string s;
  for (const auto& t : q_fixture())
    s += std::to_string(t.du) + "," + std::to_string(t.dv) + "," +
         std::to_string(t.dw) + "," + std::to_string(t.dz) + ":" +
         std::to_string(t.coeff) + ";";
  return s;
}

inline std::string r_fixture_canonical() {
  std::string s;
  for (const auto& t : r_fixture())
    s += std::to_string(t.dv) + "," + std::to_string(t.dw) + "," +
         std::to_string(t.dx) + "," + std::to_string(t.dy) + ":" +
         std::to_string(t.coeff) + ";";
  return s;
}

inline std::string q_fixture_checksum() { return fnv1a64_hex(q_fixture_canonical()); }
inline std::string r_fixture_checksum() { return fnv1a64_hex(r_fixture_canonical()); }

}  // namespace stacksort

#endif
