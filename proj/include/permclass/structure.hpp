#ifndef PERMCLASS_STRUCTURE_HPP
#define PERMCLASS_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "permclass/class_algebra.hpp"
#include "permclass/class_expr.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

/// Layer lengths, left to right. The realized permutation is the direct sum
/// of decreasing permutations of these lengths.
struct LayerShape {
  std::vector<int> lengths;
  friend bool operator==(const LayerShape &, const LayerShape &) = default;
};

enum class BlockDirection { Increasing, Decreasing };

/// A run of consecutive positions carrying consecutive, monotone values.
struct Block {
  int start = 1; // one-based position
  int length = 1;
  BlockDirection direction = BlockDirection::Increasing;
  friend bool operator==(const Block &, const Block &) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::size_t count() const noexcept { return blocks.size(); }
};

/// Part index (1..k) per position of the colored permutation.
struct Coloring {
  std::vector<int> assignment;
  /// One-based positions of each part, parts 1..k.
  std::vector<std::vector<int>> parts(std::size_t k) const;
};

/// Result of the Jelinek-Valtr style two-coloring: positions and values of
/// the `a` and `c` subsequences.
struct JvSplit {
  std::vector<int> a_positions, c_positions;
  std::vector<int> a_values, c_values;
};

std::optional<LayerShape> layers(const Permutation &p);
std::optional<LayerShape> colayers(const Permutation &p);
Permutation from_layers(const LayerShape &shape);
Permutation from_colayers(const LayerShape &shape);

/// Minimum block decomposition; ties broken leftmost-longest. Length-1
/// blocks are reported as increasing.
BlockDecomposition min_blocks(const Permutation &p);

/// 2143...(2C+2)(2C+1): C+1 copies of 21 summed.
Permutation gamma_pattern(int c);

/// Flips every layer of length <= threshold into an increasing run.
/// Throws PreconditionError when p is not layered.
Permutation normalize_short_layers(const Permutation &p, int threshold);

/// #{i : |a(i) - b(i)| > c} <= l. Throws LengthMismatch.
bool is_close(const Permutation &a, const Permutation &b, int c, int l);

/// First coloring (lexicographic in the assignment vector) whose i-th part
/// is order-isomorphic to a member of constraints[i]. Throws
/// ResourceLimitExceeded beyond the engine's search cap.
std::optional<Coloring> merge_split(const ClassEngine &engine,
                                    std::span<const int> seq,
                                    std::span<const ClassExpr> constraints);
inline std::optional<Coloring>
merge_split(const ClassEngine &engine, const Permutation &p,
            std::span<const ClassExpr> constraints) {
  return merge_split(engine, p.values(), constraints);
}

/// k-1 nondecreasing cut positions (segment i is positions c_{i-1}+1..c_i)
/// such that segment i is in constraints[i]; lexicographically first.
std::optional<std::vector<int>>
vertical_split(const ClassEngine &engine, std::span<const int> seq,
               std::span<const ClassExpr> constraints);
inline std::optional<std::vector<int>>
vertical_split(const ClassEngine &engine, const Permutation &p,
               std::span<const ClassExpr> constraints) {
  return vertical_split(engine, p.values(), constraints);
}

/// k-1 nondecreasing value thresholds (part i holds values t_{i-1}+1..t_i)
/// such that part i, read left to right, is in constraints[i].
std::optional<std::vector<int>>
horizontal_split(const ClassEngine &engine, const Permutation &p,
                 std::span<const ClassExpr> constraints);

/**
 * Two-coloring of p into a (avoiding alpha+beta) and c (avoiding beta+gamma)
 * such that every a-element either precedes or is smaller than every
 * c-element. Exhaustive search; at each position c is tried before a.
 *
 * Throws PreconditionError if p contains alpha+beta+gamma and
 * ContractViolation if no split exists.
 */
JvSplit jv_split(const Permutation &p, const Permutation &alpha,
                 const Permutation &beta, const Permutation &gamma);

/// eta(2i-1) < eta(2i) > eta(2i+1) for all valid i.
bool is_alternating(const Permutation &p);

/// An alternating member of Hk(2) of length <= 2|p|+1 containing p.
/// Throws PreconditionError when p is not in Hk(2).
Permutation alternating_superpattern(const ClassEngine &engine,
                                     const Permutation &p);

/// Smallest d <= max_del such that deleting some d entries of p leaves a
/// member of expr. Throws ResourceLimitExceeded past the deletion caps.
std::optional<std::size_t> deletion_distance_to(const ClassEngine &engine,
                                                const Permutation &p,
                                                const ClassExpr &expr,
                                                std::size_t max_del);

} // namespace permclass

#endif
