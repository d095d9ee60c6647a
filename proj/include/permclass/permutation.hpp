#ifndef PERMCLASS_PERMUTATION_HPP
#define PERMCLASS_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

/**
 * A permutation of [n] in one-line notation.
 *
 * Values are one-based: `at(i)` is pi(i) for 1 <= i <= n. The empty
 * permutation (n = 0) is a regular value; it is the identity of both sums.
 * Ordering is lexicographic on the one-line sequence.
 */
class Permutation {
public:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  Permutation() = default;

  /// Throws PreconditionError unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Skips validation; for internal producers that build valid sequences.
  Permutation(std::vector<int> values, unchecked_t) noexcept
      : values_(std::move(values)) {}

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  /// Accepts compact digits ("3127645"), spaced integers ("10 2 1 ..."),
  /// an optional surrounding "[...]", and "e" for the empty permutation.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// pi(i), one-based.
  int at(std::size_t i) const { return values_.at(i - 1); }
  int operator[](std::size_t zero_based) const noexcept {
    return values_[zero_based];
  }

  std::span<const int> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool is_identity() const noexcept;

  /// Compact digits when 1 <= n <= 9, spaced integers otherwise, "e" if empty.
  std::string str() const;
  /// Always spaced integers ("e" if empty).
  std::string spaced() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

/// Positions (one-based, strictly increasing) of a pattern occurrence.
struct Occurrence {
  std::vector<int> indices;
  friend bool operator==(const Occurrence &, const Occurrence &) = default;
};

/// result(i) = p(q(i)). Throws LengthMismatch when |p| != |q|.
Permutation compose(const Permutation &p, const Permutation &q);
/// Writes p o q into `out` (resized); the hot-loop variant of compose.
void compose_into(const Permutation &p, const Permutation &q,
                  std::vector<int> &out);
Permutation inverse(const Permutation &p);
Permutation reverse(const Permutation &p);
Permutation complement(const Permutation &p);
Permutation direct_sum(const Permutation &p, const Permutation &q);
Permutation skew_sum(const Permutation &p, const Permutation &q);

/// The permutation order-isomorphic to a sequence of distinct integers.
Permutation standardize(std::span<const int> sequence);

/// The pattern formed by `host` at the given one-based positions.
Permutation pattern_at(const Permutation &host, std::span<const int> positions);

/// Lexicographically smallest occurrence of `pattern` in `host`, if any.
/// `host` may be any sequence of distinct integers.
std::optional<Occurrence> find_occurrence(std::span<const int> host,
                                          const Permutation &pattern);
std::optional<Occurrence> contains(const Permutation &host,
                                   const Permutation &pattern);
bool avoids(std::span<const int> host, const Permutation &pattern);

/// Longest increasing / decreasing subsequence lengths of any sequence of
/// distinct integers.
std::size_t lis(std::span<const int> sequence);
std::size_t lds(std::span<const int> sequence);
inline std::size_t lis(const Permutation &p) { return lis(p.values()); }
inline std::size_t lds(const Permutation &p) { return lds(p.values()); }

/**
 * Canonical partition of p into increasing chains.
 *
 * Elements are read left to right; each is appended to the leftmost chain
 * whose last value is smaller, otherwise it opens a new chain. The result
 * has exactly lds(p) chains; each chain lists one-based positions.
 */
std::vector<std::vector<int>> increasing_chains(const Permutation &p);

/// Visits every permutation of order n in lexicographic order.
void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation &)> &fn);
std::vector<Permutation> all_permutations(std::size_t n);

} // namespace permclass

#endif
