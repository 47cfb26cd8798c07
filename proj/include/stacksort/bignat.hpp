#ifndef STACKSORT_BIGNAT_HPP
#define STACKSORT_BIGNAT_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace stacksort {

// Arbitrary-precision nonnegative integer. All arithmetic is exact;
// subtraction and division check their preconditions instead of wrapping.
class BigNat {
public:
  BigNat() : v_(0) {}
  BigNat(unsigned long x) : v_(x) {}
  explicit BigNat(mpz_class v) : v_(std::move(v)) {
    if (v_ < 0) throw std::invalid_argument("BigNat: negative value");
  }

  static BigNat from_string(const std::string& s) {
    mpz_class v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("BigNat: bad decimal string '" + s + "'");
    return BigNat(std::move(v));
  }

  const mpz_class& raw() const { return v_; }

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return v_ == 0; }
  bool odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool even() const { return !odd(); }

  BigNat& operator+=(const BigNat& o) { v_ += o.v_; return *this; }
  BigNat& operator*=(const BigNat& o) { v_ *= o.v_; return *this; }
  BigNat& operator-=(const BigNat& o) {
    if (v_ < o.v_) throw std::domain_error("BigNat: subtraction underflow");
    v_ -= o.v_;
    return *this;
  }

  friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }
  friend BigNat operator-(BigNat a, const BigNat& b) { a -= b; return a; }
  friend BigNat operator*(BigNat a, const BigNat& b) { a *= b; return a; }

  // Quotient of an exact division; throws if the divisor does not divide.
  BigNat div_exact(const BigNat& d) const {
    if (d.v_ == 0) throw std::domain_error("BigNat: division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    if (r != 0) throw std::domain_error("BigNat: inexact division");
    return BigNat(std::move(q));
  }

  BigNat pow(unsigned long e) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
    return BigNat(std::move(r));
  }

  // floor(v^(1/n)), exact integer root
  BigNat nth_root(unsigned long n) const {
    if (n == 0) throw std::invalid_argument("BigNat: zeroth root");
    mpz_class r;
    mpz_root(r.get_mpz_t(), v_.get_mpz_t(), n);
    return BigNat(std::move(r));
  }

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

private:
  mpz_class v_;
};

inline BigNat factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return BigNat(std::move(r));
}

// binom(n, k) with the usual vanishing convention outside 0 <= k <= n
inline BigNat binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return BigNat();
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return BigNat(std::move(r));
}

}  // namespace stacksort

#endif
