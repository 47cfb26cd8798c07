#ifndef STACKSORT_SERIES_HPP
#define STACKSORT_SERIES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace stacksort {

// Truncated power series in one variable: coefficients for orders 0..N.
// Arithmetic never extends the truncation order.
template <class C>
class Series1 {
public:
  explicit Series1(int order) : c_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("Series1: negative order");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const C& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
  void set_coeff(int k, C v) { c_.at(static_cast<size_t>(k)) = std::move(v); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!(c == C())) return false;
    return true;
  }

  Series1& operator+=(const Series1& o) {
    check_order(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series1& operator-=(const Series1& o) {
    check_order(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Series1 operator+(Series1 a, const Series1& b) { a += b; return a; }
  friend Series1 operator-(Series1 a, const Series1& b) { a -= b; return a; }

  friend Series1 operator*(const Series1& a, const Series1& b) {
    a.check_order(b);
    Series1 out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.coeff(i) == C()) continue;
      for (int j = 0; i + j <= a.order(); ++j) out.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return out;
  }

  // Multiply by x^d (d >= 0), or divide by x^(-d); division requires the
  // low-order coefficients to vanish.
  Series1 shifted(int d) const {
    Series1 out(order());
    if (d >= 0) {
      for (int k = 0; k + d <= order(); ++k) out.c_[static_cast<size_t>(k + d)] = c_[static_cast<size_t>(k)];
    } else {
      for (int k = 0; k < -d; ++k)
        if (!(c_[static_cast<size_t>(k)] == C()))
          throw std::domain_error("Series1: inexact shift down");
      for (int k = -d; k <= order(); ++k) out.c_[static_cast<size_t>(k + d)] = c_[static_cast<size_t>(k)];
      // the top |d| coefficients are no longer determined; callers must
      // not rely on them, so they stay zero
    }
    return out;
  }

  Series1 truncated(int new_order) const {
    Series1 out(new_order);
    for (int k = 0; k <= std::min(order(), new_order); ++k) out.set_coeff(k, coeff(k));
    return out;
  }

private:
  void check_order(const Series1& o) const {
    if (o.order() != order()) throw std::invalid_argument("Series1: order mismatch");
  }

  std::vector<C> c_;
};

// Multiplicative inverse of a series with constant term 1.
inline Series1<mpq_class> series_inverse(const Series1<mpq_class>& a) {
  if (a.coeff(0) != 1) throw std::domain_error("series_inverse: constant term must be 1");
  Series1<mpq_class> inv(a.order());
  inv.set_coeff(0, mpq_class(1));
  for (int k = 1; k <= a.order(); ++k) {
    mpq_class s(0);
    for (int j = 1; j <= k; ++j) s += a.coeff(j) * inv.coeff(k - j);
    inv.set_coeff(k, -s);
  }
  return inv;
}

// Square root with constant term 1, by Newton iteration
// X <- (X + A/X) / 2; the iterate doubles its valid order each round.
inline Series1<mpq_class> series_sqrt(const Series1<mpq_class>& a) {
  if (a.coeff(0) != 1) throw std::domain_error("series_sqrt: constant term must be 1");
  Series1<mpq_class> x(a.order());
  x.set_coeff(0, mpq_class(1));
  int valid = 0;
  while (valid < a.order()) {
    Series1<mpq_class> next = (x + a * series_inverse(x));
    for (int k = 0; k <= next.order(); ++k) next.set_coeff(k, next.coeff(k) / 2);
    x = next;
    valid = 2 * valid + 1;
  }
  return x;
}

// Truncated power series in two variables w and z with orders (N, M).
template <class C>
class Series2 {
public:
  Series2(int order_w, int order_z)
      : nw_(order_w), nz_(order_z),
        c_(static_cast<size_t>(order_w + 1) * static_cast<size_t>(order_z + 1)) {
    if (order_w < 0 || order_z < 0) throw std::invalid_argument("Series2: negative order");
  }

  int order_w() const { return nw_; }
  int order_z() const { return nz_; }

  const C& coeff(int i, int j) const { return c_[idx(i, j)]; }
  void set_coeff(int i, int j, C v) { c_[idx(i, j)] = std::move(v); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!(c == C())) return false;
    return true;
  }

  Series2& operator+=(const Series2& o) {
    check_orders(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series2& operator-=(const Series2& o) {
    check_orders(o);
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Series2 operator+(Series2 a, const Series2& b) { a += b; return a; }
  friend Series2 operator-(Series2 a, const Series2& b) { a -= b; return a; }

  friend Series2 operator*(const Series2& a, const Series2& b) {
    a.check_orders(b);
    Series2 out(a.nw_, a.nz_);
    for (int i = 0; i <= a.nw_; ++i)
      for (int j = 0; j <= a.nz_; ++j) {
        if (a.coeff(i, j) == C()) continue;
        for (int k = 0; i + k <= a.nw_; ++k)
          for (int l = 0; j + l <= a.nz_; ++l)
            out.c_[out.idx(i + k, j + l)] += a.coeff(i, j) * b.coeff(k, l);
      }
    return out;
  }

  // Multiply by w^dw z^dz; negative shifts divide and require the
  // corresponding low-order coefficients to vanish.
  Series2 shifted(int dw, int dz) const {
    Series2 out(nw_, nz_);
    for (int i = 0; i <= nw_; ++i)
      for (int j = 0; j <= nz_; ++j) {
        int ti = i + dw, tj = j + dz;
        if (ti < 0 || tj < 0) {
          if (!(coeff(i, j) == C()))
            throw std::domain_error("Series2: inexact shift down");
          continue;
        }
        if (ti <= nw_ && tj <= nz_) out.c_[out.idx(ti, tj)] = coeff(i, j);
      }
    return out;
  }

private:
  size_t idx(int i, int j) const {
    if (i < 0 || i > nw_ || j < 0 || j > nz_)
      throw std::out_of_range("Series2: coefficient index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(nz_ + 1) + static_cast<size_t>(j);
  }
  void check_orders(const Series2& o) const {
    if (o.nw_ != nw_ || o.nz_ != nz_) throw std::invalid_argument("Series2: order mismatch");
  }

  int nw_, nz_;
  std::vector<C> c_;
};

}  // namespace stacksort

#endif
