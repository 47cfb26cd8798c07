#ifndef STACKSORT_NUMBERS_HPP
#define STACKSORT_NUMBERS_HPP

#include <stdexcept>
#include <vector>

#include "stacksort/bignat.hpp"
#include "stacksort/polyxy.hpp"
#include "stacksort/series.hpp"

namespace stacksort {

inline BigNat catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * n, n).div_exact(BigNat(static_cast<unsigned long>(n) + 1));
}

// Binary plane trees with r vertices and i-1 right edges (the classical
// Catalan refinement); 0 outside 1 <= i <= r.
inline BigNat narayana(int r, int i) {
  if (r < 0 || i < 0) throw std::invalid_argument("narayana: negative index");
  if (r == 0 || i < 1 || i > r) return BigNat();
  return (binomial(r, i) * binomial(r, i - 1)).div_exact(BigNat(static_cast<unsigned long>(r)));
}

// Binary plane trees with r vertices and j leaves; 0 outside the support.
inline BigNat v_num(int r, int j) {
  if (r < 0 || j < 0) throw std::invalid_argument("v_num: negative index");
  if (r < 1 || j < 1 || 2 * j - 2 > r - 1) return BigNat();
  return BigNat(2ul).pow(static_cast<unsigned long>(r - 2 * j + 1)) *
         binomial(r - 1, 2 * j - 2) * catalan(j - 1);
}

// Binary plane trees with r vertices, i-1 right edges and j leaves.
inline BigNat l_num(int r, int i, int j) {
  if (r < 0 || i < 0 || j < 0) throw std::invalid_argument("l_num: negative index");
  if (r < 1 || j < 1 || j > r || 2 * j > r + 1) return BigNat();
  if (i < j || i > r + 1 - j) return BigNat();
  return (binomial(r - 1, r - j) * binomial(r + 1 - j, j) * binomial(r + 1 - 2 * j, i - j))
      .div_exact(BigNat(static_cast<unsigned long>(r + 1 - j)));
}

// For r = 0 the three polynomials below return the statistic of the empty
// permutation (0 descents, -1 peaks), i.e. x^1 y^0 restricted to the
// variables each polynomial tracks. The r >= 1 values are tree counts.
inline BiPoly n_poly(int r) {
  if (r < 0) throw std::invalid_argument("n_poly: negative index");
  if (r == 0) return BiPoly::monomial(1, 0, BigNat(1ul));
  BiPoly p;
  for (int i = 1; i <= r; ++i) p.add_term(i, 0, narayana(r, i));
  return p;
}

inline BiPoly v_poly(int r) {
  if (r < 0) throw std::invalid_argument("v_poly: negative index");
  if (r == 0) return BiPoly::monomial(0, 0, BigNat(1ul));
  BiPoly p;
  for (int j = 1; 2 * j - 2 <= r - 1; ++j) p.add_term(0, j, v_num(r, j));
  return p;
}

inline BiPoly l_poly(int r) {
  if (r < 0) throw std::invalid_argument("l_poly: negative index");
  if (r == 0) return BiPoly::monomial(1, 0, BigNat(1ul));
  BiPoly p;
  for (int j = 1; 2 * j <= r + 1; ++j)
    for (int i = j; i <= r + 1 - j; ++i) p.add_term(i, j, l_num(r, i, j));
  return p;
}

// Checks the functional equation F = x + wxy + w(F+1)(F-x) for the tree
// generating function F = sum_r L_r(x,y) w^r, coefficientwise up to the
// given truncation orders.
inline bool f_series_check(int order_w, int order_x, int order_y) {
  if (order_w < 1 || order_x < 1 || order_y < 1)
    throw std::invalid_argument("f_series_check: orders must be >= 1");
  using P = PolyXY<mpz_class>;
  Series1<P> f(order_w);
  for (int r = 0; r <= order_w; ++r) f.set_coeff(r, to_signed(l_poly(r)));

  const P x = P::monomial(1, 0, mpz_class(1));
  const P xy = P::monomial(1, 1, mpz_class(1));
  const P one = P::monomial(0, 0, mpz_class(1));

  Series1<P> f_plus_1 = f, f_minus_x = f;
  f_plus_1.set_coeff(0, f.coeff(0) + one);
  f_minus_x.set_coeff(0, f.coeff(0) - x);

  Series1<P> rhs = (f_plus_1 * f_minus_x).shifted(1);  // w * (F+1)(F-x)
  rhs.set_coeff(0, rhs.coeff(0) + x);
  rhs.set_coeff(1, rhs.coeff(1) + xy);

  for (int r = 0; r <= order_w; ++r) {
    P diff = f.coeff(r) - rhs.coeff(r);
    for (const auto& [key, c] : diff.terms())
      if (key.first <= order_x && key.second <= order_y) return false;
  }
  return true;
}

}  // namespace stacksort

#endif
