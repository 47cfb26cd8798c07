#ifndef STACKSORT_W2_HPP
#define STACKSORT_W2_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "stacksort/bignat.hpp"
#include "stacksort/numbers.hpp"
#include "stacksort/polyxy.hpp"
#include "stacksort/qr_fixtures.hpp"
#include "stacksort/series.hpp"

namespace stacksort {

// Fertility bases for the recurrence tables: counting uses Catalan
// numbers, statistic-tracking uses the tree polynomials, and the y = 1
// mode uses their peak-free specialization. base(0) is the statistic of
// the empty permutation.
struct CountBasis {
  using Value = BigNat;
  static Value base(int r) { return catalan(r); }
};
struct PolyBasisXY {
  using Value = BiPoly;
  static Value base(int r) { return l_poly(r); }
};
struct PolyBasisX {
  using Value = BiPoly;
  static Value base(int r) { return n_poly(r); }
};

// Triangle of the values B_{>=ell}(n) for ell + n <= depth: preimage
// weight of the 231-avoiding permutations of S_{n+ell} with tail length
// at least ell. Row n = 0 is the base row base(ell); each later layer is
// filled from the convolution recurrence over hook positions.
template <class Basis>
class TailTable {
public:
  using Value = typename Basis::Value;

  explicit TailTable(int depth) { extend(depth); }

  int depth() const { return static_cast<int>(rows_.size()) - 1; }

  // B_{>=ell}(n)
  const Value& at_least(int ell, int n) const {
    if (n < 0 || n > depth() || ell < 0 || ell > depth() - n)
      throw std::out_of_range("TailTable: (ell, n) outside built depth");
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(ell)];
  }

  // B_ell(n), peeled from neighbouring at-least entries; nonnegative by
  // construction (the class with tail exactly ell is a subset).
  Value exact(int ell, int n) const {
    if (n == 0) return at_least(ell, 0);
    Value v = at_least(ell, n);
    v -= at_least(ell + 1, n - 1);
    return v;
  }

  // Grows the triangle in place; a cold build to the same depth produces
  // identical values.
  void extend(int new_depth) {
    if (new_depth < 0) throw std::invalid_argument("TailTable: negative depth");
    int old_rows = static_cast<int>(rows_.size());
    if (new_depth + 1 <= old_rows && old_rows > 0) return;
    rows_.resize(static_cast<size_t>(new_depth) + 1);
    for (int n = 0; n <= new_depth; ++n) {
      auto& row = rows_[static_cast<size_t>(n)];
      int old_cols = static_cast<int>(row.size());
      row.resize(static_cast<size_t>(new_depth - n) + 1);
      for (int ell = old_cols; ell <= new_depth - n; ++ell)
        row[static_cast<size_t>(ell)] = n == 0 ? Basis::base(ell) : cell(ell, n);
    }
  }

private:
  // B_ell(n) for n >= 1 via the hook decomposition of the maximum entry,
  // then B_{>=ell}(n) = B_ell(n) + B_{>=ell+1}(n-1).
  Value cell(int ell, int n) const {
    int m = n - 1;
    Value total{};
    for (int j = 1; j <= ell; ++j)
      for (int i = 1; i <= m; ++i)
        total += at_least(ell - j + 1, m - i) * at_least(j - 1, i);
    total += at_least(ell + 1, n - 1);
    return total;
  }

  std::vector<std::vector<Value>> rows_;
};

using W2Table = TailTable<CountBasis>;
using W2PolyTable = TailTable<PolyBasisXY>;

inline BigNat w2_count(const W2Table& table, int n) { return table.at_least(0, n); }

// sum over the 2-stack-sortable permutations of S_n of x^(des+1) y^(peak+1)
inline BiPoly w2_statistic_poly(const W2PolyTable& table, int n) {
  return table.at_least(0, n);
}

// closed form 2 binom(3n, n) / ((n+1)(2n+1)), valid for n >= 1
inline BigNat w2_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("w2_closed_form: negative n");
  if (n == 0) return BigNat(1ul);
  BigNat denom = BigNat(static_cast<unsigned long>(n) + 1) *
                 BigNat(2ul * static_cast<unsigned long>(n) + 1);
  return (BigNat(2ul) * binomial(3 * n, n)).div_exact(denom);
}

// W2(n, k, p) as a map keyed by (descents, peaks)
inline std::map<std::pair<int, int>, BigNat> w2_triangle(const W2PolyTable& table, int n) {
  std::map<std::pair<int, int>, BigNat> out;
  for (const auto& [key, c] : w2_statistic_poly(table, n).terms())
    out[{key.first - 1, key.second - 1}] = c;
  return out;
}

// Outcome of one generating-function residual check. Orders beyond the
// stated bounds are not determined by the truncation and are not reported.
struct ResidualReport {
  std::string name;
  int order_w = 0;
  int order_z = -1;  // -1 for univariate checks
  std::vector<std::tuple<int, int, bool>> per_order;  // (w, z, vanished)
  bool all_zero = true;

  void record(int w, int z, bool ok) {
    per_order.emplace_back(w, z, ok);
    if (!ok) all_zero = false;
  }
};

namespace detail {

inline Series2<mpz_class> tail_series(const W2Table& table, int order_w, int order_z) {
  if (order_w + order_z > table.depth())
    throw std::invalid_argument("tail_series: table depth insufficient for requested orders");
  Series2<mpz_class> s(order_w, order_z);
  for (int n = 0; n <= order_w; ++n)
    for (int ell = 0; ell <= order_z; ++ell)
      s.set_coeff(n, ell, table.at_least(ell, n).raw());
  return s;
}

inline Series2<mpz_class> catalan_z_series(int order_w, int order_z) {
  Series2<mpz_class> s(order_w, order_z);
  for (int ell = 0; ell <= order_z; ++ell) s.set_coeff(0, ell, catalan(ell).raw());
  return s;
}

}  // namespace detail

// (I - I0)(I - C) == (I - C)/w - (I - I0)/z, checked coefficientwise.
// The divisions shift validity down one order in each variable.
inline ResidualReport check_eq6(const W2Table& table, int order_w, int order_z) {
  if (order_w < 1 || order_z < 1)
    throw std::invalid_argument("check_eq6: orders must be >= 1");
  auto I = detail::tail_series(table, order_w, order_z);
  auto C = detail::catalan_z_series(order_w, order_z);
  Series2<mpz_class> I0(order_w, order_z);
  for (int n = 0; n <= order_w; ++n) I0.set_coeff(n, 0, I.coeff(n, 0));

  auto lhs = (I - I0) * (I - C);
  auto rhs = (I - C).shifted(-1, 0) - (I - I0).shifted(0, -1);
  auto residual = lhs - rhs;

  ResidualReport report{"eq6", order_w - 1, order_z - 1, {}, true};
  for (int n = 0; n <= order_w - 1; ++n)
    for (int ell = 0; ell <= order_z - 1; ++ell)
      report.record(n, ell, residual.coeff(n, ell) == 0);
  return report;
}

// Q(I(w,z), I(w,0), w, z) == 0 with the eliminated Catalan variable.
inline ResidualReport check_eq37(const W2Table& table, int order_w, int order_z) {
  auto I = detail::tail_series(table, order_w, order_z);
  Series2<mpz_class> I0(order_w, order_z);
  for (int n = 0; n <= order_w; ++n) I0.set_coeff(n, 0, I.coeff(n, 0));

  // powers of u = I and v = I0 as needed by the fixture
  std::vector<Series2<mpz_class>> upow, vpow;
  upow.emplace_back(order_w, order_z);
  upow[0].set_coeff(0, 0, 1);
  vpow.push_back(upow[0]);
  for (int d = 1; d <= 4; ++d) upow.push_back(upow.back() * I);
  for (int d = 1; d <= 2; ++d) vpow.push_back(vpow.back() * I0);

  Series2<mpz_class> residual(order_w, order_z);
  for (const auto& t : q_fixture()) {
    auto term = upow[static_cast<size_t>(t.du)] * vpow[static_cast<size_t>(t.dv)];
    term = term.shifted(t.dw, t.dz);
    for (int n = 0; n <= order_w; ++n)
      for (int ell = 0; ell <= order_z; ++ell)
        residual.set_coeff(n, ell, residual.coeff(n, ell) + t.coeff * term.coeff(n, ell));
  }

  ResidualReport report{"eq37", order_w, order_z, {}, true};
  for (int n = 0; n <= order_w; ++n)
    for (int ell = 0; ell <= order_z; ++ell)
      report.record(n, ell, residual.coeff(n, ell) == 0);
  return report;
}

// R(I_xy(w,0), w, x, y) == 0 through w^order_w; coefficients are exact
// polynomials in x and y.
inline ResidualReport check_theorem7(const W2PolyTable& table, int order_w) {
  if (order_w > table.depth())
    throw std::invalid_argument("check_theorem7: table depth insufficient");
  using P = PolyXY<mpz_class>;
  Series1<P> V(order_w);
  for (int n = 0; n <= order_w; ++n) V.set_coeff(n, to_signed(table.at_least(0, n)));

  std::vector<Series1<P>> vpow;
  vpow.emplace_back(order_w);
  vpow[0].set_coeff(0, P::monomial(0, 0, mpz_class(1)));
  for (int d = 1; d <= 5; ++d) vpow.push_back(vpow.back() * V);

  Series1<P> residual(order_w);
  for (const auto& t : r_fixture()) {
    auto term = vpow[static_cast<size_t>(t.dv)].shifted(t.dw);
    P scale = P::monomial(t.dx, t.dy, mpz_class(t.coeff));
    for (int n = 0; n <= order_w; ++n)
      residual.set_coeff(n, residual.coeff(n) + term.coeff(n) * scale);
  }

  ResidualReport report{"theorem7", order_w, -1, {}, true};
  for (int n = 0; n <= order_w; ++n)
    report.record(n, -1, residual.coeff(n).is_zero());
  return report;
}

}  // namespace stacksort

#endif
