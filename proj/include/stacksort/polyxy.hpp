#ifndef STACKSORT_POLYXY_HPP
#define STACKSORT_POLYXY_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stacksort/bignat.hpp"

namespace stacksort {

namespace coeff_io {

inline std::string to_string(const BigNat& c) { return c.str(); }
inline std::string to_string(const mpz_class& c) { return c.get_str(); }
inline void from_string(const std::string& s, BigNat& out) { out = BigNat::from_string(s); }
inline void from_string(const std::string& s, mpz_class& out) { out = mpz_class(s); }

}  // namespace coeff_io

// Sparse bivariate polynomial in x and y over an exact coefficient ring C.
// Zero coefficients are never stored.
template <class C>
class PolyXY {
public:
  using Coeff = C;
  using Key = std::pair<int, int>;  // (x-degree, y-degree)

  PolyXY() = default;

  static PolyXY monomial(int i, int j, C c) {
    PolyXY p;
    if (i < 0 || j < 0) throw std::invalid_argument("PolyXY: negative exponent");
    if (!(c == C())) p.t_.emplace(Key{i, j}, std::move(c));
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Key, C>& terms() const { return t_; }

  C coeff(int i, int j) const {
    auto it = t_.find(Key{i, j});
    return it == t_.end() ? C() : it->second;
  }

  int max_x_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
  }
  int max_y_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
  }

  void add_term(int i, int j, const C& c) {
    if (c == C()) return;
    Key k{i, j};
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == C()) t_.erase(it);
    }
  }

  PolyXY& operator+=(const PolyXY& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
  }

  PolyXY& operator-=(const PolyXY& o) {
    for (const auto& [k, c] : o.t_) {
      Key key = k;
      auto it = t_.find(key);
      if (it == t_.end()) {
        C z{};
        z -= c;  // throws for BigNat; fine for signed rings
        if (!(z == C())) t_.emplace(key, std::move(z));
      } else {
        it->second -= c;
        if (it->second == C()) t_.erase(it);
      }
    }
    return *this;
  }

  friend PolyXY operator+(PolyXY a, const PolyXY& b) { a += b; return a; }
  friend PolyXY operator-(PolyXY a, const PolyXY& b) { a -= b; return a; }

  friend PolyXY operator*(const PolyXY& a, const PolyXY& b) {
    PolyXY out;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_)
        out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  PolyXY& operator*=(const PolyXY& o) { *this = *this * o; return *this; }

  PolyXY scaled(const C& s) const {
    PolyXY out;
    if (s == C()) return out;
    for (const auto& [k, c] : t_) out.t_.emplace(k, c * s);
    return out;
  }

  // Multiply by x^dx * y^dy; negative shifts must not create negative
  // exponents.
  PolyXY shifted(int dx, int dy) const {
    PolyXY out;
    for (const auto& [k, c] : t_) {
      int i = k.first + dx, j = k.second + dy;
      if (i < 0 || j < 0) throw std::domain_error("PolyXY: shift below degree 0");
      out.t_.emplace(Key{i, j}, c);
    }
    return out;
  }

  // Set y = 1: collapse onto x-degrees.
  PolyXY specialize_y1() const {
    PolyXY out;
    for (const auto& [k, c] : t_) out.add_term(k.first, 0, c);
    return out;
  }

  // Set x = 1: collapse onto y-degrees.
  PolyXY specialize_x1() const {
    PolyXY out;
    for (const auto& [k, c] : t_) out.add_term(0, k.second, c);
    return out;
  }

  // Value at x = y = 1.
  C eval_ones() const {
    C s{};
    for (const auto& [k, c] : t_) s += c;
    return s;
  }

  // Dense coefficient list of x-degrees, summed over y.
  std::vector<C> x_marginal() const {
    std::vector<C> out(static_cast<size_t>(std::max(0, max_x_degree() + 1)));
    for (const auto& [k, c] : t_) out[k.first] += c;
    return out;
  }

  std::vector<C> y_marginal() const {
    std::vector<C> out(static_cast<size_t>(std::max(0, max_y_degree() + 1)));
    for (const auto& [k, c] : t_) out[k.second] += c;
    return out;
  }

  friend bool operator==(const PolyXY&, const PolyXY&) = default;

  // Serialized as a list of [i, j, "coeff"] triples, degree-ordered.
  std::vector<std::tuple<int, int, std::string>> to_triples() const {
    std::vector<std::tuple<int, int, std::string>> out;
    out.reserve(t_.size());
    for (const auto& [k, c] : t_)
      out.emplace_back(k.first, k.second, coeff_io::to_string(c));
    return out;
  }

  static PolyXY from_triples(const std::vector<std::tuple<int, int, std::string>>& triples) {
    PolyXY p;
    for (const auto& [i, j, s] : triples) {
      C c{};
      coeff_io::from_string(s, c);
      p.add_term(i, j, c);
    }
    return p;
  }

private:
  std::map<Key, C> t_;
};

using BiPoly = PolyXY<BigNat>;

inline PolyXY<mpz_class> to_signed(const BiPoly& p) {
  PolyXY<mpz_class> out;
  for (const auto& [k, c] : p.terms()) out.add_term(k.first, k.second, c.raw());
  return out;
}

}  // namespace stacksort

#endif
