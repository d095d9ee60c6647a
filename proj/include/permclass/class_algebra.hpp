#ifndef PERMCLASS_CLASS_ALGEBRA_HPP
#define PERMCLASS_CLASS_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "permclass/class_expr.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

/// Order caps; exceeding one raises ResourceLimitExceeded.
struct Limits {
  std::size_t search_max_n = 9;     // composition / merge membership
  std::size_t generator_max_n = 11; // enumeration through a dedicated generator
  std::size_t filter_max_n = 9;     // enumeration by filtering S_n
  std::size_t deletion_max_n = 10;  // deletion-distance searches
  std::size_t deletion_max_del = 4;

  /// Defaults, with every order cap replaced by PERMCLASS_MAX_N when set.
  static Limits from_env();
  /// Every order cap set to `n`.
  static Limits uniform(std::size_t n);
};

enum class ComposeStrategy {
  Rightmost,    // enumerate the rightmost factor's slice
  SmallerSlice, // for two atom factors, enumerate whichever slice is smaller
};

struct EngineOptions {
  Limits limits{};
  bool use_cache = true;
  ComposeStrategy compose = ComposeStrategy::Rightmost;
};

/// Members of one class at one order, sorted lexicographically.
using Slice = std::vector<Permutation>;
using SlicePtr = std::shared_ptr<const Slice>;

struct ClassSlice {
  ClassExpr expr;
  std::size_t order = 0;
  SlicePtr members;
};

bool slice_contains(const Slice &slice, const Permutation &p);

/**
 * Decides membership in, and enumerates, the classes denoted by ClassExpr.
 *
 * Slices are memoized by (canonical rendering, order). The cache is shared
 * by copies of an engine and is safe for concurrent use: readers proceed in
 * parallel and a missing slice is computed exactly once.
 */
class ClassEngine {
public:
  explicit ClassEngine(EngineOptions options = {});

  const EngineOptions &options() const noexcept { return options_; }
  const Limits &limits() const noexcept { return options_.limits; }

  /// An engine with the same options and no cache, for independent
  /// re-verification.
  ClassEngine uncached() const;

  bool member(const ClassExpr &expr, const Permutation &p) const;
  /// Membership of the pattern formed by any sequence of distinct integers.
  bool member_seq(const ClassExpr &expr, std::span<const int> seq) const;
  /// Membership of one-line values already known to be a permutation of
  /// 1..n (not checked).
  bool member_values(const ClassExpr &expr, std::span<const int> values) const;

  SlicePtr slice(const ClassExpr &expr, std::size_t n) const;
  ClassSlice enumerate(const ClassExpr &expr, std::size_t n) const;
  /// |slice(expr, n)| for n = 1..n_max.
  std::vector<std::size_t> count(const ClassExpr &expr, std::size_t n_max) const;
  /// Minimal non-members of length <= max_len, sorted.
  std::vector<Permutation> basis_up_to(const ClassExpr &expr,
                                       std::size_t max_len) const;

  /// True when expr's slices come from a dedicated generator.
  static bool has_generator(const ClassExpr &expr);

private:
  struct Cache;

  bool member_impl(const ClassExpr &expr, std::span<const int> seq,
                   bool standardized) const;
  bool member_compose(const ClassExpr &expr, const Permutation &p) const;
  Slice compute_slice(const ClassExpr &expr, std::size_t n) const;
  Slice filter_all(const ClassExpr &expr, std::size_t n) const;
  Slice compose_slice(const ClassExpr &expr, std::size_t n) const;

  EngineOptions options_;
  std::shared_ptr<Cache> cache_;
};

/// Dedicated generators (unsorted, duplicate-free).
namespace generators {
Slice layered(std::size_t n, std::size_t max_layers, std::size_t max_layer_len);
Slice vertical_runs(std::size_t n, std::size_t k);
Slice horizontal_runs(std::size_t n, std::size_t k);
} // namespace generators

} // namespace permclass

#endif
