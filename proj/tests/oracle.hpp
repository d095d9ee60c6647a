// Brute-force reference implementations, written straight from the
// definitions and sharing no code with the library.
#ifndef PERMCLASS_TESTS_ORACLE_HPP
#define PERMCLASS_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

inline Seq compose(const Seq &p, const Seq &q) {
  Seq r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    r[i] = p[q[i] - 1];
  return r;
}

inline Seq inverse(const Seq &p) {
  Seq r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] == static_cast<int>(i) + 1)
        r[i] = static_cast<int>(j) + 1;
  return r;
}

inline Seq identity(std::size_t n) {
  Seq r(n);
  std::iota(r.begin(), r.end(), 1);
  return r;
}

inline Seq decreasing(std::size_t n) {
  Seq r = identity(n);
  std::reverse(r.begin(), r.end());
  return r;
}

inline std::vector<Seq> perms(std::size_t n) {
  std::vector<Seq> out;
  Seq p = identity(n);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Rank-reduce any sequence of distinct ints.
inline Seq standardize(const Seq &s) {
  Seq r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    r[i] = 1 + static_cast<int>(std::count_if(
                   s.begin(), s.end(), [&](int v) { return v < s[i]; }));
  return r;
}

/// All index subsets of size k of [0, n), in lexicographic order.
inline void subsets(std::size_t n, std::size_t k,
                    const std::function<bool(const std::vector<int> &)> &fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n)
    return;
  while (true) {
    if (!fn(idx))
      return;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == static_cast<int>(n - k) + i)
      --i;
    if (i < 0)
      return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

/// Lexicographically smallest occurrence (0-based positions) or empty.
inline std::vector<int> occurrence(const Seq &host, const Seq &pattern,
                                   bool *found) {
  std::vector<int> hit;
  *found = false;
  if (pattern.empty()) {
    *found = true;
    return hit;
  }
  subsets(host.size(), pattern.size(), [&](const std::vector<int> &idx) {
    Seq sub;
    for (int i : idx)
      sub.push_back(host[i]);
    if (standardize(sub) == pattern) {
      hit = idx;
      *found = true;
      return false;
    }
    return true;
  });
  return hit;
}

inline bool contains(const Seq &host, const Seq &pattern) {
  bool found = false;
  occurrence(host, pattern, &found);
  return found;
}

/// Longest monotone subsequence by checking every subset.
inline std::size_t longest(const Seq &s, bool increasing) {
  std::size_t best = 0;
  const std::size_t n = s.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int prev = increasing ? 0 : static_cast<int>(n) + 1000;
    bool ok = true;
    std::size_t len = 0;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (mask >> i & 1) {
        ok = increasing ? s[i] > prev : s[i] < prev;
        prev = s[i];
        ++len;
      }
    if (ok)
      best = std::max(best, len);
  }
  return best;
}

/// Does some k-coloring make every color class satisfy `part_ok`?
inline bool colorable(const Seq &s, std::size_t k,
                      const std::function<bool(std::size_t, const Seq &)> &part_ok) {
  const std::size_t n = s.size();
  std::vector<std::size_t> color(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t c = 0; c < k && ok; ++c) {
      Seq part;
      for (std::size_t i = 0; i < n; ++i)
        if (color[i] == c)
          part.push_back(s[i]);
      ok = part_ok(c, part);
    }
    if (ok)
      return true;
    std::size_t i = 0;
    while (i < n && color[i] == k - 1)
      color[i++] = 0;
    if (i == n)
      return false;
    ++color[i];
  }
}

inline bool is_increasing(const Seq &s) {
  return std::is_sorted(s.begin(), s.end());
}
inline bool is_decreasing(const Seq &s) {
  return std::is_sorted(s.rbegin(), s.rend());
}

/// Minimum number of increasing subsequences covering s.
inline std::size_t min_increasing_cover(const Seq &s) {
  if (s.empty())
    return 0;
  for (std::size_t k = 1;; ++k)
    if (colorable(s, k, [](std::size_t, const Seq &p) { return is_increasing(p); }))
      return k;
}

/// All compositions of n (ordered positive parts).
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0)
    return {{}};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts{1};
    for (int i = 0; i < n - 1; ++i)
      if (mask >> i & 1)
        parts.push_back(1);
      else
        ++parts.back();
    out.push_back(parts);
  }
  return out;
}

/// The layered permutation with the given layer lengths.
inline Seq layered(const std::vector<int> &lengths) {
  Seq out;
  int base = 0;
  for (int len : lengths) {
    for (int v = base + len; v > base; --v)
      out.push_back(v);
    base += len;
  }
  return out;
}

/// Layered permutations of order n with at most max_layers layers, each of
/// length at most max_len, as a set.
inline std::set<Seq> layered_set(int n, int max_layers, int max_len) {
  std::set<Seq> out;
  for (const auto &c : compositions(n))
    if (static_cast<int>(c.size()) <= max_layers &&
        std::all_of(c.begin(), c.end(), [&](int x) { return x <= max_len; }))
      out.insert(layered(c));
  return out;
}

/// Members of V(C1..Ck): positions cut into k segments, segment i passing
/// part_ok(i, segment).
inline bool vertical_member(const Seq &s, std::size_t k,
                            const std::function<bool(std::size_t, const Seq &)> &part_ok) {
  const std::size_t n = s.size();
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t part,
                                                         std::size_t start) {
    if (part + 1 == k)
      return part_ok(part, Seq(s.begin() + start, s.end()));
    for (std::size_t end = start; end <= n; ++end)
      if (part_ok(part, Seq(s.begin() + start, s.begin() + end)) &&
          go(part + 1, end))
        return true;
    return false;
  };
  return go(0, 0);
}

/// Members of H(C1..Ck): values cut into k consecutive ranges.
inline bool horizontal_member(const Seq &s, std::size_t k,
                              const std::function<bool(std::size_t, const Seq &)> &part_ok) {
  const int n = static_cast<int>(s.size());
  std::function<bool(std::size_t, int)> go = [&](std::size_t part, int low) {
    auto values_in = [&](int lo, int hi) {
      Seq r;
      for (int v : s)
        if (v > lo && v <= hi)
          r.push_back(v);
      return r;
    };
    if (part + 1 == k)
      return part_ok(part, values_in(low, n));
    for (int hi = low; hi <= n; ++hi)
      if (part_ok(part, values_in(low, hi)) && go(part + 1, hi))
        return true;
    return false;
  };
  return go(0, 0);
}

/// Product set {a o b}.
inline std::set<Seq> product(const std::set<Seq> &a, const std::set<Seq> &b) {
  std::set<Seq> out;
  for (const auto &x : a)
    for (const auto &y : b)
      out.insert(compose(x, y));
  return out;
}

/// Minimum number of blocks (contiguous positions, consecutive values,
/// monotone) by dynamic programming over every segmentation.
inline std::size_t min_blocks(const Seq &s) {
  const std::size_t n = s.size();
  auto is_block = [&](std::size_t i, std::size_t j) { // [i, j)
    if (j - i == 1)
      return true;
    bool inc = true, dec = true;
    for (std::size_t t = i + 1; t < j; ++t) {
      inc &= s[t] == s[t - 1] + 1;
      dec &= s[t] == s[t - 1] - 1;
    }
    return inc || dec;
  };
  std::vector<std::size_t> best(n + 1, n + 1);
  best[0] = 0;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (is_block(i, j))
        best[j] = std::min(best[j], best[i] + 1);
  return best[n];
}

inline Seq random_perm(std::size_t n, std::mt19937 &rng) {
  Seq p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace oracle

#endif
