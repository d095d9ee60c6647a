#include "permclass/structure.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "detail.hpp"
#include "permclass/errors.hpp"

namespace permclass {

namespace detail {

bool scan_layers(std::span<const int> perm, std::size_t max_layers,
                 std::size_t max_len, std::vector<int> *out) {
  const std::size_t n = perm.size();
  std::size_t i = 0, layer_count = 0;
  int covered = 0;
  while (i < n) {
    const int top = perm[i];
    const int len = top - covered;
    if (len <= 0 || static_cast<std::size_t>(len) > max_len ||
        i + static_cast<std::size_t>(len) > n || ++layer_count > max_layers)
      return false;
    for (int j = 1; j < len; ++j)
      if (perm[i + j] != top - j)
        return false;
    if (out)
      out->push_back(len);
    covered = top;
    i += static_cast<std::size_t>(len);
  }
  return true;
}

} // namespace detail

std::optional<LayerShape> layers(const Permutation &p) {
  LayerShape shape;
  if (!detail::scan_layers(p.values(), p.size(), p.size(), &shape.lengths))
    return std::nullopt;
  return shape;
}

std::optional<LayerShape> colayers(const Permutation &p) {
  return layers(complement(p));
}

Permutation from_layers(const LayerShape &shape) {
  std::vector<int> values;
  int covered = 0;
  for (int len : shape.lengths) {
    if (len <= 0)
      throw PreconditionError("layer lengths must be positive");
    for (int j = 0; j < len; ++j)
      values.push_back(covered + len - j);
    covered += len;
  }
  return {std::move(values), Permutation::unchecked};
}

Permutation from_colayers(const LayerShape &shape) {
  return complement(from_layers(shape));
}

BlockDecomposition min_blocks(const Permutation &p) {
  BlockDecomposition out;
  const std::size_t n = p.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t up = 1, down = 1;
    while (i + up < n && p[i + up] == p[i + up - 1] + 1)
      ++up;
    while (i + down < n && p[i + down] == p[i + down - 1] - 1)
      ++down;
    Block b;
    b.start = static_cast<int>(i + 1);
    b.length = static_cast<int>(std::max(up, down));
    b.direction = down > up ? BlockDirection::Decreasing
                            : BlockDirection::Increasing;
    out.blocks.push_back(b);
    i += static_cast<std::size_t>(b.length);
  }
  return out;
}

Permutation gamma_pattern(int c) {
  if (c < 0)
    throw PreconditionError("gamma_pattern needs C >= 0");
  return from_layers(LayerShape{std::vector<int>(static_cast<std::size_t>(c) + 1, 2)});
}

Permutation normalize_short_layers(const Permutation &p, int threshold) {
  const auto shape = layers(p);
  if (!shape)
    throw PreconditionError(p.str() + " is not layered");
  std::vector<int> values;
  values.reserve(p.size());
  int covered = 0;
  for (int len : shape->lengths) {
    for (int j = 0; j < len; ++j)
      values.push_back(len <= threshold ? covered + 1 + j : covered + len - j);
    covered += len;
  }
  return {std::move(values), Permutation::unchecked};
}

bool is_close(const Permutation &a, const Permutation &b, int c, int l) {
  if (a.size() != b.size())
    throw LengthMismatch(a.size(), b.size());
  int exceptions = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > c && ++exceptions > l)
      return false;
  return true;
}

std::vector<std::vector<int>> Coloring::parts(std::size_t k) const {
  std::vector<std::vector<int>> out(k);
  for (std::size_t i = 0; i < assignment.size(); ++i)
    out.at(static_cast<std::size_t>(assignment[i] - 1))
        .push_back(static_cast<int>(i + 1));
  return out;
}

// ---------------------------------------------------------------------------
// Split searches. Every constraint denotes a permutation class, so a part
// that fails stays failed when it grows; the searches prune on that.

namespace {

struct MergeSearch {
  const ClassEngine &engine;
  std::span<const int> seq;
  std::span<const ClassExpr> constraints;
  std::vector<std::vector<int>> parts;
  std::vector<int> assignment;

  bool run(std::size_t pos) {
    if (pos == seq.size())
      return true;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      parts[i].push_back(seq[pos]);
      if (engine.member_seq(constraints[i], parts[i])) {
        assignment[pos] = static_cast<int>(i + 1);
        if (run(pos + 1))
          return true;
      }
      parts[i].pop_back();
    }
    return false;
  }
};

// Shared driver for vertical and horizontal splits: part i covers the
// half-open range [cuts[i-1], cuts[i]) of an ordered axis of length n.
template <typename PartOf>
std::optional<std::vector<int>>
axis_split(const ClassEngine &engine, std::size_t n,
           std::span<const ClassExpr> constraints, PartOf part_of) {
  const std::size_t k = constraints.size();
  if (k == 0)
    return n == 0 ? std::optional<std::vector<int>>(std::vector<int>{})
                  : std::nullopt;
  std::vector<char> dead(k * (n + 1), 0);
  std::vector<int> cuts;
  std::vector<int> part;

  std::function<bool(std::size_t, std::size_t)> search =
      [&](std::size_t i, std::size_t start) -> bool {
    if (dead[i * (n + 1) + start])
      return false;
    if (i + 1 == k) {
      part_of(start, n, part);
      if (engine.member_seq(constraints[i], part))
        return true;
    } else {
      for (std::size_t end = start; end <= n; ++end) {
        part_of(start, end, part);
        if (!engine.member_seq(constraints[i], part))
          break;
        cuts.push_back(static_cast<int>(end));
        if (search(i + 1, end))
          return true;
        cuts.pop_back();
      }
    }
    dead[i * (n + 1) + start] = 1;
    return false;
  };
  if (!search(0, 0))
    return std::nullopt;
  return cuts;
}

} // namespace

std::optional<Coloring> merge_split(const ClassEngine &engine,
                                    std::span<const int> seq,
                                    std::span<const ClassExpr> constraints) {
  if (seq.size() > engine.limits().search_max_n)
    throw ResourceLimitExceeded("merge search at order " +
                                std::to_string(seq.size()) + " exceeds cap " +
                                std::to_string(engine.limits().search_max_n));
  MergeSearch search{engine, seq, constraints,
                     std::vector<std::vector<int>>(constraints.size()),
                     std::vector<int>(seq.size(), 0)};
  if (!search.run(0))
    return std::nullopt;
  return Coloring{std::move(search.assignment)};
}

std::optional<std::vector<int>>
vertical_split(const ClassEngine &engine, std::span<const int> seq,
               std::span<const ClassExpr> constraints) {
  return axis_split(engine, seq.size(), constraints,
                    [&](std::size_t from, std::size_t to, std::vector<int> &out) {
                      out.assign(seq.begin() + from, seq.begin() + to);
                    });
}

std::optional<std::vector<int>>
horizontal_split(const ClassEngine &engine, const Permutation &p,
                 std::span<const ClassExpr> constraints) {
  return axis_split(engine, p.size(), constraints,
                    [&](std::size_t from, std::size_t to, std::vector<int> &out) {
                      out.clear();
                      for (int v : p)
                        if (v > static_cast<int>(from) && v <= static_cast<int>(to))
                          out.push_back(v);
                    });
}

// ---------------------------------------------------------------------------

JvSplit jv_split(const Permutation &p, const Permutation &alpha,
                 const Permutation &beta, const Permutation &gamma) {
  const Permutation ab = direct_sum(alpha, beta);
  const Permutation bg = direct_sum(beta, gamma);
  const Permutation abg = direct_sum(ab, gamma);
  if (contains(p, abg))
    throw PreconditionError(p.str() + " contains " + abg.str());

  JvSplit split;
  // An a-element placed after some c-element must lie below all of them;
  // an a-element before a c-element is unconstrained.
  std::function<bool(std::size_t, int)> search = [&](std::size_t pos,
                                                      int c_min) -> bool {
    if (pos == p.size())
      return true;
    const int v = p[pos];
    const int position = static_cast<int>(pos + 1);

    split.c_values.push_back(v);
    if (avoids(split.c_values, bg)) {
      split.c_positions.push_back(position);
      if (search(pos + 1, std::min(c_min, v)))
        return true;
      split.c_positions.pop_back();
    }
    split.c_values.pop_back();

    if (v < c_min) {
      split.a_values.push_back(v);
      if (avoids(split.a_values, ab)) {
        split.a_positions.push_back(position);
        if (search(pos + 1, c_min))
          return true;
        split.a_positions.pop_back();
      }
      split.a_values.pop_back();
    }
    return false;
  };
  if (!search(0, INT_MAX))
    throw ContractViolation("no (a, c) split found for " + p.str());
  return split;
}

bool is_alternating(const Permutation &p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    // one-based position i + 1: odd positions rise, even positions fall
    const bool rise = (i % 2) == 0;
    if (rise ? p[i] > p[i + 1] : p[i] < p[i + 1])
      return false;
  }
  return true;
}

Permutation alternating_superpattern(const ClassEngine &engine,
                                     const Permutation &p) {
  const ClassExpr h2 = ClassExpr::horiz_k(2);
  if (!engine.member(h2, p))
    throw PreconditionError(p.str() + " is not in Hk(2)");
  const std::size_t n = p.size();
  std::optional<Permutation> best;

  // Lower part (values <= cut) goes to valleys, upper part to peaks of the
  // alternating word low-high-low-...; embed the label word greedily.
  for (std::size_t cut = 0; cut <= n; ++cut) {
    bool low_inc = true, high_inc = true;
    int last_low = 0, last_high = 0;
    for (int v : p) {
      if (v <= static_cast<int>(cut)) {
        low_inc = low_inc && v > last_low;
        last_low = v;
      } else {
        high_inc = high_inc && v > last_high;
        last_high = v;
      }
    }
    if (!low_inc || !high_inc)
      continue;
    std::size_t slot = 0, length = 0;
    for (int v : p) {
      const std::size_t parity = v <= static_cast<int>(cut) ? 0 : 1;
      if (slot % 2 != parity)
        ++slot;
      length = ++slot;
    }
    const std::size_t lows = (length + 1) / 2;
    std::vector<int> values(length);
    int next_low = 1, next_high = static_cast<int>(lows) + 1;
    for (std::size_t s = 0; s < length; ++s)
      values[s] = s % 2 == 0 ? next_low++ : next_high++;
    Permutation candidate(std::move(values), Permutation::unchecked);
    if (!best || candidate.size() < best->size())
      best = std::move(candidate);
  }
  if (best && is_alternating(*best) && engine.member(h2, *best) &&
      contains(*best, p))
    return *best;

  for (std::size_t len = n; len <= 2 * n + 1; ++len) {
    std::optional<Permutation> found;
    for_each_permutation(len, [&](const Permutation &q) {
      if (!found && is_alternating(q) && engine.member(h2, q) && contains(q, p))
        found = q;
    });
    if (found)
      return *found;
  }
  throw ContractViolation("no alternating superpattern found for " + p.str());
}

std::optional<std::size_t> deletion_distance_to(const ClassEngine &engine,
                                                const Permutation &p,
                                                const ClassExpr &expr,
                                                std::size_t max_del) {
  const std::size_t n = p.size();
  const Limits &lim = engine.limits();
  std::vector<int> keep;
  for (std::size_t d = 0; d <= std::min(max_del, n); ++d) {
    if (d > 0 && (n > lim.deletion_max_n || d > lim.deletion_max_del))
      throw ResourceLimitExceeded(
          "deletion search of " + std::to_string(d) + " entries at order " +
          std::to_string(n) + " exceeds caps (order " +
          std::to_string(lim.deletion_max_n) + ", deletions " +
          std::to_string(lim.deletion_max_del) + ")");
    // Deleted position sets of size d, lexicographically.
    std::vector<std::size_t> del(d);
    std::iota(del.begin(), del.end(), 0);
    while (true) {
      keep.clear();
      for (std::size_t i = 0, j = 0; i < n; ++i) {
        if (j < d && del[j] == i)
          ++j;
        else
          keep.push_back(p[i]);
      }
      if (engine.member_seq(expr, keep))
        return d;
      std::size_t i = d;
      while (i > 0 && del[i - 1] == n - d + (i - 1))
        --i;
      if (i == 0)
        break;
      ++del[i - 1];
      for (std::size_t j = i; j < d; ++j)
        del[j] = del[j - 1] + 1;
    }
  }
  return std::nullopt;
}

} // namespace permclass
