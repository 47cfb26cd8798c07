#ifndef STACKSORT_ORACLE_HPP
#define STACKSORT_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stacksort/bignat.hpp"
#include "stacksort/numbers.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/polyxy.hpp"
#include "stacksort/unipoly.hpp"

namespace stacksort {

struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct OracleConfig {
  int cap = 11;     // largest symmetric group scanned exhaustively
  int threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void check_cap(int n, const OracleConfig& cfg, const char* who) {
  if (n > cfg.cap)
    throw cap_exceeded(std::string(who) + ": n = " + std::to_string(n) +
                       " exceeds enumeration cap " + std::to_string(cfg.cap));
}

// Runs visit(acc, perm) over every permutation of S_n. The scan is split
// into blocks by first entry; each block owns an accumulator and the
// per-block results come back in block order, so any fold over them is
// deterministic regardless of thread count.
template <class Acc, class Visit>
std::vector<Acc> scan_sn_blocks(int n, int threads, Visit visit) {
  if (n == 0) {
    std::vector<Acc> out(1);
    std::vector<int> empty;
    visit(out[0], empty);
    return out;
  }
  std::vector<Acc> out(static_cast<size_t>(n));
  threads = std::min(resolve_threads(threads), n);
  std::atomic<int> next_block{0};
  auto worker = [&]() {
    std::vector<int> perm(static_cast<size_t>(n));
    for (;;) {
      int b = next_block.fetch_add(1);
      if (b >= n) return;
      perm[0] = b + 1;
      int k = 1;
      for (int v = 1; v <= n; ++v)
        if (v != b + 1) perm[static_cast<size_t>(k++)] = v;
      Acc& acc = out[static_cast<size_t>(b)];
      do {
        visit(acc, perm);
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// indices i1 < i2 < i3 with e[i3] < e[i1] < e[i2]
inline bool contains_231_raw(const std::vector<int>& e) {
  int n = static_cast<int>(e.size());
  std::vector<int> suffix_min(static_cast<size_t>(n) + 1, 1 << 30);
  for (int k = n - 1; k >= 0; --k)
    suffix_min[static_cast<size_t>(k)] =
        std::min(suffix_min[static_cast<size_t>(k) + 1], e[static_cast<size_t>(k)]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e[static_cast<size_t>(i)] < e[static_cast<size_t>(j)] &&
          suffix_min[static_cast<size_t>(j) + 1] < e[static_cast<size_t>(i)])
        return true;
  return false;
}

// how many times s must be applied (at most t_max) before the vector is
// sorted; returns t_max + 1 if still unsorted after t_max passes
inline int sort_depth_raw(const std::vector<int>& perm, int t_max,
                          std::vector<int>& cur, std::vector<int>& out,
                          std::vector<int>& stack) {
  cur = perm;
  for (int t = 0; t <= t_max; ++t) {
    if (is_sorted_raw(cur)) return t;
    stack_sort_raw(cur, out, stack);
    cur.swap(out);
  }
  return t_max + 1;
}

}  // namespace detail

struct PreimageSet {
  Permutation target;
  std::vector<Permutation> members;
  size_t fertility() const { return members.size(); }
};

// Exhaustive preimage set of the target under the stack-sorting map,
// from a scan of all orderings of the target's entry set.
inline PreimageSet preimages(const Permutation& target, const OracleConfig& cfg = {}) {
  int n = target.size();
  detail::check_cap(n, cfg, "preimages");
  Permutation norm = normalize(target);
  std::vector<int> alphabet(target.entries());
  std::sort(alphabet.begin(), alphabet.end());

  struct Acc {
    std::vector<std::vector<int>> hits;
    std::vector<int> sorted, out, stack;
  };
  auto blocks = detail::scan_sn_blocks<Acc>(
      n, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
        detail::stack_sort_raw(perm, acc.out, acc.stack);
        if (acc.out == norm.entries()) acc.hits.push_back(perm);
      });

  PreimageSet result{target, {}};
  for (auto& b : blocks)
    for (auto& hit : b.hits) {
      // translate back into the target's alphabet so s(member) == target
      std::vector<int> entries(hit.size());
      for (size_t k = 0; k < hit.size(); ++k)
        entries[k] = alphabet[static_cast<size_t>(hit[k]) - 1];
      result.members.emplace_back(std::move(entries));
    }
  return result;
}

// Sum of x^(des+1) y^(peak+1) over all preimages of the target set.
// Targets may repeat up to normalization; each contributes separately.
inline BiPoly fertility_polynomial(const std::vector<Permutation>& targets,
                                   bool track_peaks, const OracleConfig& cfg = {}) {
  if (targets.empty()) return BiPoly();
  int n = targets.front().size();
  for (const auto& t : targets)
    if (t.size() != n)
      throw std::invalid_argument("fertility_polynomial: mixed target lengths");
  detail::check_cap(n, cfg, "fertility_polynomial");

  std::unordered_map<std::vector<int>, unsigned long, detail::VecHash> mult;
  for (const auto& t : targets) ++mult[normalize(t).entries()];

  struct Acc {
    BiPoly poly;
    std::vector<int> out, stack;
  };
  auto blocks = detail::scan_sn_blocks<Acc>(
      n, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
        detail::stack_sort_raw(perm, acc.out, acc.stack);
        auto it = mult.find(acc.out);
        if (it == mult.end()) return;
        int i = detail::descent_count_raw(perm) + 1;
        int j = track_peaks ? detail::peak_count_raw(perm) + 1 : 0;
        acc.poly.add_term(i, j, BigNat(it->second));
      });

  BiPoly total;
  for (auto& b : blocks) total += b.poly;
  return total;
}

// Fertility polynomials of every sorted permutation of each length up to
// max_len, keyed by normalized target. Lengths stay small (the maps hold
// sum_{m<=max_len} m! preimage statistics), so one atlas serves a whole
// property run.
class FertilityAtlas {
public:
  explicit FertilityAtlas(int max_len, const OracleConfig& cfg = {}) : maps_(static_cast<size_t>(max_len) + 1) {
    detail::check_cap(max_len, cfg, "FertilityAtlas");
    for (int m = 0; m <= max_len; ++m) {
      struct Acc {
        std::unordered_map<std::vector<int>, BiPoly, detail::VecHash> map;
        std::vector<int> out, stack;
      };
      auto blocks = detail::scan_sn_blocks<Acc>(
          m, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
            detail::stack_sort_raw(perm, acc.out, acc.stack);
            acc.map[acc.out].add_term(detail::descent_count_raw(perm) + 1,
                                      detail::peak_count_raw(perm) + 1, BigNat(1ul));
          });
      auto& merged = maps_[static_cast<size_t>(m)];
      for (auto& b : blocks)
        for (auto& [key, poly] : b.map) merged[key] += poly;
    }
  }

  int max_len() const { return static_cast<int>(maps_.size()) - 1; }

  // zero polynomial when the permutation has no preimages
  BiPoly poly_of(const Permutation& p) const {
    if (p.size() > max_len())
      throw cap_exceeded("FertilityAtlas: length beyond atlas");
    const auto& map = maps_[static_cast<size_t>(p.size())];
    auto it = map.find(normalize(p).entries());
    return it == map.end() ? BiPoly() : it->second;
  }

  BigNat fertility_of(const Permutation& p) const { return poly_of(p).eval_ones(); }

private:
  std::vector<std::unordered_map<std::vector<int>, BiPoly, detail::VecHash>> maps_;
};

inline BigNat brute_w_t(int n, int t, const OracleConfig& cfg = {}) {
  detail::check_cap(n, cfg, "brute_w_t");
  if (t < 1) throw std::invalid_argument("brute_w_t: t must be positive");
  struct Acc {
    unsigned long count = 0;
    std::vector<int> cur, out, stack;
  };
  auto blocks = detail::scan_sn_blocks<Acc>(
      n, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
        if (detail::sort_depth_raw(perm, t, acc.cur, acc.out, acc.stack) <= t) ++acc.count;
      });
  BigNat total;
  for (auto& b : blocks) total += BigNat(b.count);
  return total;
}

// W_t(n, k, p) by full enumeration, keyed by (descents, peaks).
inline std::map<std::pair<int, int>, BigNat> brute_w_t_triangle(int n, int t,
                                                                const OracleConfig& cfg = {}) {
  detail::check_cap(n, cfg, "brute_w_t_triangle");
  if (t < 1) throw std::invalid_argument("brute_w_t_triangle: t must be positive");
  struct Acc {
    std::map<std::pair<int, int>, unsigned long> counts;
    std::vector<int> cur, out, stack;
  };
  auto blocks = detail::scan_sn_blocks<Acc>(
      n, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
        if (detail::sort_depth_raw(perm, t, acc.cur, acc.out, acc.stack) > t) return;
        ++acc.counts[{detail::descent_count_raw(perm), detail::peak_count_raw(perm)}];
      });
  std::map<std::pair<int, int>, BigNat> total;
  for (auto& b : blocks)
    for (auto& [key, c] : b.counts) total[key] += BigNat(c);
  return total;
}

struct DClass {
  int ell = 0;
  std::optional<int> g;
  int n = 0;
  bool at_least = false;
  std::vector<Permutation> members;
};

// Filters Av(231) (g absent) or the 2-stack-sortable permutations
// (g present) of S_{n+ell} by tail length and legal-space count.
inline DClass d_class(int ell, std::optional<int> g, int n, bool at_least,
                      const OracleConfig& cfg = {}) {
  if (ell < 0 || n < 0) throw std::invalid_argument("d_class: negative parameter");
  int m = n + ell;
  detail::check_cap(m, cfg, "d_class");
  struct Acc {
    std::vector<std::vector<int>> hits;
    std::vector<int> cur, out, stack;
  };
  auto blocks = detail::scan_sn_blocks<Acc>(
      m, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
        int t = detail::tail_length_raw(perm);
        if (at_least ? (t < ell) : (t != ell)) return;
        if (g.has_value()) {
          if (detail::sort_depth_raw(perm, 2, acc.cur, acc.out, acc.stack) > 2) return;
          if (detail::legal_space_count_raw(perm) != ell + *g) return;
        } else {
          if (detail::contains_231_raw(perm)) return;
        }
        acc.hits.push_back(perm);
      });
  DClass out{ell, g, n, at_least, {}};
  for (auto& b : blocks)
    for (auto& hit : b.hits) out.members.emplace_back(std::move(hit));
  return out;
}

// sigma in W2(m) bucketed by tl(s(sigma)); anti-diagonal ground truth for
// the tail-length recurrence tables.
struct W2TailProfile {
  std::vector<BigNat> count_by_tail;   // index = tail length of s(sigma)
  std::vector<BiPoly> poly_by_tail;
};

inline W2TailProfile brute_w2_tail_profile(int m, bool track_peaks,
                                           const OracleConfig& cfg = {}) {
  detail::check_cap(m, cfg, "brute_w2_tail_profile");
  struct Acc {
    std::vector<unsigned long> counts;
    std::vector<BiPoly> polys;
    std::vector<int> image, cur, out, stack;
  };
  auto blocks = detail::scan_sn_blocks<Acc>(
      m, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
        if (acc.counts.empty()) {
          acc.counts.assign(static_cast<size_t>(m) + 1, 0);
          acc.polys.assign(static_cast<size_t>(m) + 1, BiPoly());
        }
        detail::stack_sort_raw(perm, acc.image, acc.stack);
        // perm is 2-stack-sortable iff its image sorts in one more pass
        if (detail::sort_depth_raw(acc.image, 1, acc.cur, acc.out, acc.stack) > 1) return;
        int t = detail::tail_length_raw(acc.image);
        ++acc.counts[static_cast<size_t>(t)];
        acc.polys[static_cast<size_t>(t)].add_term(
            detail::descent_count_raw(perm) + 1,
            track_peaks ? detail::peak_count_raw(perm) + 1 : 0, BigNat(1ul));
      });
  W2TailProfile out;
  out.count_by_tail.assign(static_cast<size_t>(m) + 1, BigNat());
  out.poly_by_tail.assign(static_cast<size_t>(m) + 1, BiPoly());
  for (auto& b : blocks)
    for (size_t t = 0; t < b.counts.size(); ++t) {
      out.count_by_tail[t] += BigNat(b.counts[t]);
      out.poly_by_tail[t] += b.polys[t];
    }
  return out;
}

// sigma in W3(m) bucketed by (tl, leg) of s(sigma).
struct W3LegProfile {
  // [tail][leg] -> count / statistic polynomial
  std::vector<std::vector<BigNat>> counts;
  std::vector<std::vector<BiPoly>> polys;
};

inline W3LegProfile brute_w3_leg_profile(int m, bool track_peaks,
                                         const OracleConfig& cfg = {}) {
  detail::check_cap(m, cfg, "brute_w3_leg_profile");
  struct Acc {
    std::vector<std::vector<unsigned long>> counts;
    std::vector<std::vector<BiPoly>> polys;
    std::vector<int> image, cur, out, stack;
  };
  auto blocks = detail::scan_sn_blocks<Acc>(
      m, cfg.threads, [&](Acc& acc, const std::vector<int>& perm) {
        if (acc.counts.empty()) {
          acc.counts.assign(static_cast<size_t>(m) + 1,
                            std::vector<unsigned long>(static_cast<size_t>(m) + 2, 0));
          acc.polys.assign(static_cast<size_t>(m) + 1,
                           std::vector<BiPoly>(static_cast<size_t>(m) + 2));
        }
        detail::stack_sort_raw(perm, acc.image, acc.stack);
        // perm is 3-stack-sortable iff its image is 2-stack-sortable
        if (detail::sort_depth_raw(acc.image, 2, acc.cur, acc.out, acc.stack) > 2) return;
        int t = detail::tail_length_raw(acc.image);
        int L = detail::legal_space_count_raw(acc.image);
        ++acc.counts[static_cast<size_t>(t)][static_cast<size_t>(L)];
        acc.polys[static_cast<size_t>(t)][static_cast<size_t>(L)].add_term(
            detail::descent_count_raw(perm) + 1,
            track_peaks ? detail::peak_count_raw(perm) + 1 : 0, BigNat(1ul));
      });
  W3LegProfile out;
  out.counts.assign(static_cast<size_t>(m) + 1,
                    std::vector<BigNat>(static_cast<size_t>(m) + 2));
  out.polys.assign(static_cast<size_t>(m) + 1,
                   std::vector<BiPoly>(static_cast<size_t>(m) + 2));
  for (auto& b : blocks)
    for (size_t t = 0; t < b.counts.size(); ++t)
      for (size_t L = 0; L < b.counts[t].size(); ++L) {
        out.counts[t][L] += BigNat(b.counts[t][L]);
        out.polys[t][L] += b.polys[t][L];
      }
  return out;
}

// Checks the hook decomposition of the fertility (refined: of the full
// descent/peak statistic) at a tail-bound descent d, both sides by brute
// force through the atlas.
inline bool verify_decomposition(const Permutation& p, int d, bool refined,
                                 const FertilityAtlas& atlas) {
  if (!is_tail_bound_descent(p, d))
    throw std::invalid_argument("verify_decomposition: descent is not tail-bound");
  BiPoly lhs = atlas.poly_of(p);
  BiPoly rhs;
  for (const Hook& h : hooks_from(p, d)) {
    auto [unsheltered, sheltered] = split(p, h);
    rhs += atlas.poly_of(unsheltered) * atlas.poly_of(sheltered);
  }
  if (refined) return lhs == rhs;
  return lhs.eval_ones() == rhs.eval_ones();
}

inline bool verify_decomposition(const Permutation& p, int d, bool refined,
                                 const OracleConfig& cfg = {}) {
  FertilityAtlas atlas(p.size(), cfg);
  return verify_decomposition(p, d, refined, atlas);
}

// Checks that sum x^des over the preimages of the target set equals its
// peak-count expansion sum_m (peaks_m / 2^(n-1-2m)) x^m (1+x)^(n-1-2m),
// exactly over rationals.
inline bool verify_gamma_identity(const std::vector<Permutation>& targets,
                                  const OracleConfig& cfg = {}) {
  if (targets.empty()) return true;
  int n = targets.front().size();
  if (n < 1) throw std::invalid_argument("verify_gamma_identity: empty targets");
  BiPoly fert = fertility_polynomial(targets, true, cfg);

  Unipoly lhs;  // sum over preimages of x^des
  for (const auto& [key, c] : fert.terms())
    lhs += Unipoly::monomial(key.first - 1, mpq_class(c.raw()));

  Unipoly rhs;
  std::vector<BigNat> peaks(static_cast<size_t>(n) + 2);
  for (const auto& [key, c] : fert.terms()) peaks[static_cast<size_t>(key.second)] += c;
  for (int m = 0; m + 1 < static_cast<int>(peaks.size()); ++m) {
    const BigNat& cnt = peaks[static_cast<size_t>(m) + 1];  // y-exponent is peak+1
    if (cnt.is_zero()) continue;
    if (n - 1 - 2 * m < 0) return false;  // peaks can reach at most (n-1)/2
    mpq_class scale(cnt.raw(), BigNat(2ul).pow(static_cast<unsigned long>(n - 1 - 2 * m)).raw());
    scale.canonicalize();
    rhs += Unipoly::monomial(m, scale) * binomial_power(n - 1 - 2 * m);
  }
  return lhs == rhs;
}

}  // namespace stacksort

#endif
