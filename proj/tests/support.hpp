#ifndef PERMCLASS_TESTS_SUPPORT_HPP
#define PERMCLASS_TESTS_SUPPORT_HPP

#include <set>
#include <vector>

#include "oracle.hpp"
#include "permclass/class_algebra.hpp"
#include "permclass/permutation.hpp"

namespace support {

inline oracle::Seq seq(const permclass::Permutation &p) {
  return {p.begin(), p.end()};
}
inline permclass::Permutation perm(const oracle::Seq &s) {
  return permclass::Permutation(s);
}
inline permclass::Permutation P(const char *text) {
  return permclass::Permutation::parse(text);
}

inline std::set<oracle::Seq> as_set(const permclass::Slice &slice) {
  std::set<oracle::Seq> out;
  for (const auto &p : slice)
    out.insert(seq(p));
  return out;
}

/// Oracle members of S_n satisfying pred.
template <typename Pred>
std::set<oracle::Seq> filter(std::size_t n, Pred pred) {
  std::set<oracle::Seq> out;
  for (const auto &p : oracle::perms(n))
    if (pred(p))
      out.insert(p);
  return out;
}

} // namespace support

#endif
