#ifndef PERMCLASS_SRC_DETAIL_HPP
#define PERMCLASS_SRC_DETAIL_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace permclass::detail {

/// Scans a permutation (values 1..n) as a direct sum of decreasing layers.
/// Fails as soon as the shape is not layered, has more than `max_layers`
/// layers or a layer longer than `max_len`. Lengths go to `out` when given.
bool scan_layers(std::span<const int> perm, std::size_t max_layers,
                 std::size_t max_len, std::vector<int> *out = nullptr);

} // namespace permclass::detail

#endif
