#ifndef STACKSORT_PERMUTATION_HPP
#define STACKSORT_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacksort {

// A permutation in one-line notation: an ordering of distinct positive
// integers. It is "normalized" when its entries are exactly {1,...,n}.
// All indices in the public interface are 1-based.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : e_(std::move(entries)) {
    validate();
  }

  Permutation(std::initializer_list<int> entries) : e_(entries) { validate(); }

  // Accepts a comma-free digit string ("4162") or comma-separated
  // integers ("10,2,1,3"). The empty string is the empty permutation.
  static Permutation parse(const std::string& text) {
    std::vector<int> entries;
    if (text.find(',') != std::string::npos) {
      std::istringstream in(text);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size())
          throw std::invalid_argument("Permutation: bad entry '" + tok + "'");
        entries.push_back(v);
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9')
          throw std::invalid_argument(std::string("Permutation: bad digit '") + c + "'");
        entries.push_back(c - '0');
      }
    }
    return Permutation(std::move(entries));
  }

  // Digit string when all entries are single-digit, comma-separated otherwise.
  std::string str() const {
    bool digits = std::all_of(e_.begin(), e_.end(), [](int v) { return v <= 9; });
    std::string out;
    for (size_t k = 0; k < e_.size(); ++k) {
      if (!digits && k > 0) out += ',';
      out += std::to_string(e_[k]);
    }
    return out;
  }

  int size() const { return static_cast<int>(e_.size()); }
  bool empty() const { return e_.empty(); }
  const std::vector<int>& entries() const { return e_; }

  // 1-based entry access
  int at(int pos) const {
    if (pos < 1 || pos > size())
      throw std::out_of_range("Permutation: position out of range");
    return e_[pos - 1];
  }

  bool is_normalized() const {
    std::vector<bool> seen(e_.size() + 1, false);
    for (int v : e_) {
      if (v > size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool is_increasing() const {
    return std::is_sorted(e_.begin(), e_.end());
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.e_ < b.e_;
  }

private:
  void validate() const {
    std::vector<int> sorted(e_);
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] <= 0)
        throw std::invalid_argument("Permutation: entries must be positive");
      if (k > 0 && sorted[k] == sorted[k - 1])
        throw std::invalid_argument("Permutation: entries must be distinct");
    }
  }

  std::vector<int> e_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.entries()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Replace the i-th smallest entry by i.
inline Permutation normalize(const Permutation& p) {
  std::vector<int> order(p.entries());
  std::sort(order.begin(), order.end());
  std::vector<int> out;
  out.reserve(order.size());
  for (int v : p.entries()) {
    int rank = static_cast<int>(std::lower_bound(order.begin(), order.end(), v) -
                                order.begin()) + 1;
    out.push_back(rank);
  }
  return Permutation(std::move(out));
}

namespace detail {

// One pass through the stack; works on raw entry vectors so the hot
// enumeration loops can avoid constructing Permutation objects.
inline void stack_sort_raw(const std::vector<int>& in, std::vector<int>& out,
                           std::vector<int>& stack) {
  out.clear();
  stack.clear();
  for (int v : in) {
    while (!stack.empty() && stack.back() < v) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(v);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
}

inline int descent_count_raw(const std::vector<int>& e) {
  int k = 0;
  for (size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] > e[i + 1]) ++k;
  return k;
}

// peak count; the empty permutation reports -1
inline int peak_count_raw(const std::vector<int>& e) {
  if (e.empty()) return -1;
  int k = 0;
  for (size_t i = 1; i + 1 < e.size(); ++i)
    if (e[i - 1] < e[i] && e[i] > e[i + 1]) ++k;
  return k;
}

inline bool is_sorted_raw(const std::vector<int>& e) {
  return std::is_sorted(e.begin(), e.end());
}

}  // namespace detail

inline Permutation stack_sort(const Permutation& p) {
  std::vector<int> out, stack;
  detail::stack_sort_raw(p.entries(), out, stack);
  return Permutation(std::move(out));
}

inline bool is_t_stack_sortable(const Permutation& p, int t) {
  if (t < 1) throw std::invalid_argument("is_t_stack_sortable: t must be positive");
  std::vector<int> cur(p.entries()), out, stack;
  for (int k = 0; k < t && !detail::is_sorted_raw(cur); ++k) {
    detail::stack_sort_raw(cur, out, stack);
    cur.swap(out);
  }
  return detail::is_sorted_raw(cur);
}

inline std::vector<int> descent_indices(const Permutation& p) {
  std::vector<int> idx;
  const auto& e = p.entries();
  for (size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] > e[i + 1]) idx.push_back(static_cast<int>(i) + 1);
  return idx;
}

inline int des(const Permutation& p) {
  return detail::descent_count_raw(p.entries());
}

inline std::vector<int> peak_indices(const Permutation& p) {
  std::vector<int> idx;
  const auto& e = p.entries();
  for (size_t i = 1; i + 1 < e.size(); ++i)
    if (e[i - 1] < e[i] && e[i] > e[i + 1]) idx.push_back(static_cast<int>(i) + 1);
  return idx;
}

inline int peak(const Permutation& p) {
  return detail::peak_count_raw(p.entries());
}

namespace detail {

inline void require_normalized(const Permutation& p, const char* who) {
  if (!p.is_normalized())
    throw std::invalid_argument(std::string(who) + ": permutation must be normalized");
}

// tail length of a normalized entry vector; tl(identity) = n
inline int tail_length_raw(const std::vector<int>& e) {
  int n = static_cast<int>(e.size());
  int ell = 0;
  while (ell < n && e[n - ell - 1] == n - ell) ++ell;
  return ell;
}

// True iff the gap (a, a+1) is broken by indices i1 < i2 < i3 with
// e[i3] <= a < e[i1] < e[i2].
inline bool gap_blocked_raw(const std::vector<int>& e, int a) {
  int min_above = 0;          // smallest value > a seen so far (0 = none)
  bool pair_seen = false;     // some i1 < i2 with a < e[i1] < e[i2] so far
  for (int v : e) {
    if (v <= a) {
      if (pair_seen) return true;
    } else {
      if (min_above != 0 && v > min_above) pair_seen = true;
      if (min_above == 0 || v < min_above) min_above = v;
    }
  }
  return false;
}

inline int legal_space_count_raw(const std::vector<int>& e) {
  int n = static_cast<int>(e.size());
  int count = 0;
  for (int a = 0; a <= n; ++a)
    if (!gap_blocked_raw(e, a)) ++count;
  return count;
}

}  // namespace detail

inline int tail_length(const Permutation& p) {
  detail::require_normalized(p, "tail_length");
  return detail::tail_length_raw(p.entries());
}

inline std::vector<int> legal_space_values(const Permutation& p) {
  detail::require_normalized(p, "legal_spaces");
  std::vector<int> vals;
  for (int a = 0; a <= p.size(); ++a)
    if (!detail::gap_blocked_raw(p.entries(), a)) vals.push_back(a);
  return vals;
}

inline int leg(const Permutation& p) {
  detail::require_normalized(p, "legal_spaces");
  return detail::legal_space_count_raw(p.entries());
}

namespace detail {

// Backtracking embedding search: can positions from 'from' onward extend the
// partial occurrence so the chosen subsequence normalizes to 'pat'?
inline bool embed_pattern(const std::vector<int>& host, const std::vector<int>& pat,
                          std::vector<int>& chosen, size_t from) {
  size_t k = chosen.size();
  if (k == pat.size()) return true;
  for (size_t i = from; i + (pat.size() - k) <= host.size(); ++i) {
    bool ok = true;
    for (size_t t = 0; t < k && ok; ++t) {
      // relative order of the new value against each chosen one must
      // match the pattern's order
      bool host_less = host[chosen[t]] < host[i];
      bool pat_less = pat[t] < pat[k];
      if (host_less != pat_less) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (embed_pattern(host, pat, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

inline bool contains_pattern(const Permutation& p, const Permutation& pat) {
  detail::require_normalized(pat, "contains_pattern");
  if (pat.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pat.size());
  return detail::embed_pattern(p.entries(), pat.entries(), chosen, 0);
}

inline bool avoids_pattern(const Permutation& p, const Permutation& pat) {
  return !contains_pattern(p, pat);
}

// 2-stack-sortability by West's characterization: avoid 2341, and every
// 3241 occurrence must extend to a 35241 occurrence.
inline bool is_w2_by_patterns(const Permutation& p) {
  detail::require_normalized(p, "is_w2_by_patterns");
  const auto& e = p.entries();
  int n = p.size();
  // avoid 2341: i1<i2<i3<i4 with e[i4] < e[i1] < e[i2] < e[i3]
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = i1 + 1; i2 < n; ++i2) {
      if (e[i2] <= e[i1]) continue;
      for (int i3 = i2 + 1; i3 < n; ++i3) {
        if (e[i3] <= e[i2]) continue;
        for (int i4 = i3 + 1; i4 < n; ++i4)
          if (e[i4] < e[i1]) return false;
      }
    }
  // every 3241 occurrence (e[i4] < e[i2] < e[i1] < e[i3]) needs a witness
  // j in (i1, i2) with e[j] > e[i3]
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = i1 + 1; i2 < n; ++i2) {
      if (e[i2] >= e[i1]) continue;
      for (int i3 = i2 + 1; i3 < n; ++i3) {
        if (e[i3] <= e[i1]) continue;
        for (int i4 = i3 + 1; i4 < n; ++i4) {
          if (e[i4] >= e[i2]) continue;
          bool extends = false;
          for (int j = i1 + 1; j < i2 && !extends; ++j)
            if (e[j] > e[i3]) extends = true;
          if (!extends) return false;
        }
      }
    }
  return true;
}

// A hook connects a southwest point (sw, pi_sw) up and right to a
// northeast point (ne, pi_ne); positions are 1-based.
struct Hook {
  int sw = 0;
  int ne = 0;
  friend bool operator==(const Hook&, const Hook&) = default;
};

inline std::vector<Hook> hooks_from(const Permutation& p, int i) {
  if (i < 1 || i > p.size())
    throw std::out_of_range("hooks_from: index out of range");
  std::vector<Hook> hooks;
  for (int j = i + 1; j <= p.size(); ++j)
    if (p.at(j) > p.at(i)) hooks.push_back(Hook{i, j});
  return hooks;
}

// Descents whose hooks all end in the tail. A descent with no hooks at
// all qualifies vacuously.
inline std::vector<int> tail_bound_descents(const Permutation& p) {
  detail::require_normalized(p, "tail_bound_descents");
  int n = p.size();
  int tail_start = n - detail::tail_length_raw(p.entries()) + 1;
  std::vector<int> out;
  for (int d : descent_indices(p)) {
    bool ok = true;
    for (int j = d + 1; j <= n && ok; ++j)
      if (p.at(j) > p.at(d) && j < tail_start) ok = false;
    if (ok) out.push_back(d);
  }
  return out;
}

inline bool is_tail_bound_descent(const Permutation& p, int d) {
  auto tb = tail_bound_descents(p);
  return std::find(tb.begin(), tb.end(), d) != tb.end();
}

// Splits p along the hook into (unsheltered, sheltered): the prefix up to
// the southwest endpoint plus the suffix after the northeast endpoint, and
// the entries strictly between the endpoints. The northeast entry is dropped.
inline std::pair<Permutation, Permutation> split(const Permutation& p, const Hook& h) {
  int n = p.size();
  if (h.sw < 1 || h.ne > n || h.sw >= h.ne || p.at(h.sw) >= p.at(h.ne))
    throw std::invalid_argument("split: invalid hook");
  std::vector<int> unsheltered, sheltered;
  for (int k = 1; k <= h.sw; ++k) unsheltered.push_back(p.at(k));
  for (int k = h.ne + 1; k <= n; ++k) unsheltered.push_back(p.at(k));
  for (int k = h.sw + 1; k < h.ne; ++k) sheltered.push_back(p.at(k));
  return {Permutation(std::move(unsheltered)), Permutation(std::move(sheltered))};
}

// Plot of b placed above and to the right of the plot of a.
inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  detail::require_normalized(a, "direct_sum");
  detail::require_normalized(b, "direct_sum");
  std::vector<int> out(a.entries());
  out.reserve(a.size() + b.size());
  for (int v : b.entries()) out.push_back(v + a.size());
  return Permutation(std::move(out));
}

inline Permutation identity_permutation(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

}  // namespace stacksort

#endif
