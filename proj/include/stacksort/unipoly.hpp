#ifndef STACKSORT_UNIPOLY_HPP
#define STACKSORT_UNIPOLY_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stacksort/bignat.hpp"

namespace stacksort {

// Dense univariate polynomial with exact rational coefficients, kept
// normalized: no trailing zero coefficients, so degree() is honest
// (-1 for the zero polynomial).
class Unipoly {
public:
  Unipoly() = default;

  explicit Unipoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
  }

  static Unipoly from_counts(const std::vector<BigNat>& counts) {
    std::vector<mpq_class> c;
    c.reserve(counts.size());
    for (const auto& v : counts) c.emplace_back(v.raw());
    return Unipoly(std::move(c));
  }

  static Unipoly monomial(int k, mpq_class q) {
    std::vector<mpq_class> c(static_cast<size_t>(k) + 1, mpq_class(0));
    c[static_cast<size_t>(k)] = std::move(q);
    return Unipoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  mpq_class coeff(int k) const {
    if (k < 0 || k > degree()) return mpq_class(0);
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Unipoly& operator+=(const Unipoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Unipoly& operator-=(const Unipoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Unipoly operator+(Unipoly a, const Unipoly& b) { a += b; return a; }
  friend Unipoly operator-(Unipoly a, const Unipoly& b) { a -= b; return a; }

  friend Unipoly operator*(const Unipoly& a, const Unipoly& b) {
    if (a.is_zero() || b.is_zero()) return Unipoly();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Unipoly(std::move(c));
  }

  Unipoly scaled(const mpq_class& s) const {
    std::vector<mpq_class> c(c_);
    for (auto& q : c) q *= s;
    return Unipoly(std::move(c));
  }

  Unipoly derivative() const {
    if (c_.size() <= 1) return Unipoly();
    std::vector<mpq_class> c(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * mpq_class(static_cast<long>(k));
    return Unipoly(std::move(c));
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class v(0);
    for (size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
    return v;
  }

  friend bool operator==(const Unipoly&, const Unipoly&) = default;

  // Euclidean remainder; divisor must be nonzero.
  static Unipoly rem(Unipoly a, const Unipoly& b) {
    if (b.is_zero()) throw std::domain_error("Unipoly: remainder by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
      mpq_class f = a.c_.back() / b.c_.back();
      int shift = a.degree() - b.degree();
      for (size_t k = 0; k < b.c_.size(); ++k)
        a.c_[k + static_cast<size_t>(shift)] -= f * b.c_[k];
      a.c_.pop_back();
      a.trim();
    }
    return a;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

namespace detail {

// Scale by a positive rational so the coefficients become coprime
// integers; safe inside Sturm chains since signs are preserved.
inline Unipoly primitive_part(const Unipoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& q : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  for (const auto& q : p.coeffs()) {
    mpz_class scaled = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return p.scaled(mpq_class(den_lcm, num_gcd));
}

inline int sign_of(const mpq_class& q) { return sgn(q); }

}  // namespace detail

// gcd normalized to a primitive integer polynomial with positive lead.
inline Unipoly poly_gcd(Unipoly a, Unipoly b) {
  a = detail::primitive_part(a);
  b = detail::primitive_part(b);
  while (!b.is_zero()) {
    Unipoly r = detail::primitive_part(Unipoly::rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && detail::sign_of(a.coeffs().back()) < 0)
    a = a.scaled(mpq_class(-1));
  return a;
}

// Number of distinct real roots of a nonzero polynomial, by the sign
// variation difference of its Sturm chain at -inf and +inf.
inline int sturm_distinct_real_roots(const Unipoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  if (p.degree() == 0) return 0;
  std::vector<Unipoly> chain;
  chain.push_back(detail::primitive_part(p));
  chain.push_back(detail::primitive_part(p.derivative()));
  while (!chain.back().is_zero()) {
    Unipoly r = Unipoly::rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(detail::primitive_part(r).scaled(mpq_class(-1)));
  }
  auto variations = [&](bool at_pos_inf) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
      if (q.is_zero()) continue;
      int s = detail::sign_of(q.coeffs().back());
      if (!at_pos_inf && q.degree() % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  };
  return variations(false) - variations(true);
}

// exact quotient; throws when the division is inexact
inline Unipoly quotient_exact(const Unipoly& a, const Unipoly& b) {
  if (b.is_zero()) throw std::domain_error("Unipoly: division by zero");
  Unipoly r(a);
  std::vector<mpq_class> q(a.degree() >= b.degree()
                               ? static_cast<size_t>(a.degree() - b.degree()) + 1
                               : 0,
                           mpq_class(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    mpq_class f = r.coeffs().back() / b.coeffs().back();
    int shift = r.degree() - b.degree();
    q[static_cast<size_t>(shift)] = f;
    r -= Unipoly::monomial(shift, f) * b;
  }
  if (!r.is_zero()) throw std::domain_error("Unipoly: inexact division");
  return Unipoly(std::move(q));
}

// Exact decision: all complex roots real. Multiplicities are handled by
// reducing to the square-free part first.
inline bool is_real_rooted(const Unipoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  if (p.degree() <= 1) return true;
  Unipoly g = poly_gcd(p, p.derivative());
  Unipoly q = detail::primitive_part(g.degree() > 0 ? quotient_exact(p, g) : p);
  return sturm_distinct_real_roots(q) == q.degree();
}

namespace detail {

inline void require_nonneg_coeffs(const Unipoly& p, const char* who) {
  for (const auto& q : p.coeffs())
    if (q < 0) throw std::invalid_argument(std::string(who) + ": negative coefficient");
}

}  // namespace detail

// Symmetric over the coefficient support: a_{lo+k} == a_{hi-k}.
inline bool is_symmetric(const Unipoly& p) {
  detail::require_nonneg_coeffs(p, "is_symmetric");
  if (p.is_zero()) return true;
  int lo = 0;
  while (p.coeff(lo) == 0) ++lo;
  int hi = p.degree();
  for (int k = 0; lo + k <= hi - k; ++k)
    if (p.coeff(lo + k) != p.coeff(hi - k)) return false;
  return true;
}

inline bool is_unimodal(const Unipoly& p) {
  detail::require_nonneg_coeffs(p, "is_unimodal");
  bool falling = false;
  for (int k = 1; k <= p.degree(); ++k) {
    if (p.coeff(k) > p.coeff(k - 1)) {
      if (falling) return false;
    } else if (p.coeff(k) < p.coeff(k - 1)) {
      falling = true;
    }
  }
  return true;
}

inline bool is_log_concave(const Unipoly& p) {
  detail::require_nonneg_coeffs(p, "is_log_concave");
  for (int k = 1; k < p.degree(); ++k)
    if (p.coeff(k - 1) * p.coeff(k + 1) > p.coeff(k) * p.coeff(k)) return false;
  return true;
}

inline Unipoly binomial_power(int span) {
  // (1 + x)^span
  std::vector<mpq_class> c(static_cast<size_t>(span) + 1);
  for (int k = 0; k <= span; ++k) c[static_cast<size_t>(k)] = mpq_class(binomial(span, k).raw());
  return Unipoly(std::move(c));
}

// Coordinates of p in the basis x^m (1+x)^(span-2m), m = 0..span/2.
// Requires p symmetric with center span/2 over indices 0..span.
inline std::vector<mpq_class> gamma_expansion(const Unipoly& p, int span) {
  if (span < 0 || p.degree() > span)
    throw std::invalid_argument("gamma_expansion: degree exceeds span");
  for (int k = 0; k <= span; ++k)
    if (p.coeff(k) != p.coeff(span - k))
      throw std::invalid_argument("gamma_expansion: polynomial not symmetric for span");
  std::vector<mpq_class> gammas(static_cast<size_t>(span / 2) + 1);
  Unipoly rest(p);
  for (int m = 0; m <= span / 2; ++m) {
    mpq_class g = rest.coeff(m);
    gammas[static_cast<size_t>(m)] = g;
    if (g != 0)
      rest -= (Unipoly::monomial(m, g) * binomial_power(span - 2 * m));
  }
  if (!rest.is_zero())
    throw std::logic_error("gamma_expansion: nonzero remainder");
  return gammas;
}

inline Unipoly gamma_reconstruct(const std::vector<mpq_class>& gammas, int span) {
  Unipoly p;
  for (size_t m = 0; m < gammas.size(); ++m)
    p += Unipoly::monomial(static_cast<int>(m), gammas[m]) *
         binomial_power(span - 2 * static_cast<int>(m));
  return p;
}

inline bool is_gamma_nonneg(const std::vector<mpq_class>& gammas) {
  for (const auto& g : gammas)
    if (g < 0) return false;
  return true;
}

}  // namespace stacksort

#endif
