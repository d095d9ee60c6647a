#include "permclass/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include "permclass/errors.hpp"

namespace permclass {

namespace {

bool is_permutation_of_n(const std::vector<int> &values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v])
      return false;
    seen[v] = true;
  }
  return true;
}

// Patience sorting: tails[i] is the smallest possible tail of a monotone
// run of length i + 1.
template <typename Less>
std::size_t longest_run(std::span<const int> seq, Less less) {
  constexpr std::size_t kInline = 64;
  std::array<int, kInline> inline_tails;
  std::vector<int> heap_tails;
  int *tails = inline_tails.data();
  if (seq.size() > kInline) {
    heap_tails.resize(seq.size());
    tails = heap_tails.data();
  }
  std::size_t len = 0;
  for (int x : seq) {
    int *pos = std::lower_bound(tails, tails + len, x, less);
    *pos = x;
    if (pos == tails + len)
      ++len;
  }
  return len;
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_permutation_of_n(values_))
    throw PreconditionError("values are not a permutation of 1.." +
                            std::to_string(values_.size()));
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return {std::move(v), unchecked};
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<int>(n - i);
  return {std::move(v), unchecked};
}

Permutation Permutation::parse(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::size_t offset = begin;
  std::string_view body = text.substr(begin, end - begin);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']')
      throw ParseError("unterminated '['", offset + body.size());
    body = body.substr(1, body.size() - 2);
    ++offset;
  }
  if (body == "e")
    return {};

  bool spaced = body.find_first_of(" \t\n,") != std::string_view::npos ||
                text.substr(begin, end - begin).starts_with("[");
  std::vector<int> values;
  if (!spaced) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c < '1' || c > '9')
        throw ParseError(std::string("bad permutation digit '") + c + "'",
                         offset + i);
      values.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < body.size()) {
      char c = body[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++i;
        continue;
      }
      int v = 0;
      auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
      if (ec != std::errc{} || ptr == body.data() + i)
        throw ParseError(std::string("bad permutation entry '") + c + "'",
                         offset + i);
      values.push_back(v);
      i = static_cast<std::size_t>(ptr - body.data());
    }
  }
  if (values.empty())
    throw ParseError("empty permutation literal (use \"e\")", offset);
  if (!is_permutation_of_n(values))
    throw ParseError("not a permutation of 1.." + std::to_string(values.size()),
                     offset);
  return {std::move(values), unchecked};
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != static_cast<int>(i + 1))
      return false;
  return true;
}

std::string Permutation::str() const {
  if (values_.empty())
    return "e";
  if (values_.size() > 9)
    return spaced();
  std::string out;
  for (int v : values_)
    out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string Permutation::spaced() const {
  if (values_.empty())
    return "e";
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i)
      out.push_back(' ');
    out += std::to_string(values_[i]);
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ull ^ p.size();
  for (int v : p)
    h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

void compose_into(const Permutation &p, const Permutation &q,
                  std::vector<int> &out) {
  if (p.size() != q.size())
    throw LengthMismatch(p.size(), q.size());
  out.resize(p.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    out[i] = p[q[i] - 1];
}

Permutation compose(const Permutation &p, const Permutation &q) {
  std::vector<int> out;
  compose_into(p, q, out);
  return {std::move(out), Permutation::unchecked};
}

Permutation inverse(const Permutation &p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[p[i] - 1] = static_cast<int>(i + 1);
  return {std::move(out), Permutation::unchecked};
}

Permutation reverse(const Permutation &p) {
  std::vector<int> out(p.begin(), p.end());
  std::reverse(out.begin(), out.end());
  return {std::move(out), Permutation::unchecked};
}

Permutation complement(const Permutation &p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = n + 1 - p[i];
  return {std::move(out), Permutation::unchecked};
}

Permutation direct_sum(const Permutation &p, const Permutation &q) {
  std::vector<int> out(p.begin(), p.end());
  const int shift = static_cast<int>(p.size());
  for (int v : q)
    out.push_back(v + shift);
  return {std::move(out), Permutation::unchecked};
}

Permutation skew_sum(const Permutation &p, const Permutation &q) {
  std::vector<int> out;
  out.reserve(p.size() + q.size());
  const int shift = static_cast<int>(q.size());
  for (int v : p)
    out.push_back(v + shift);
  out.insert(out.end(), q.begin(), q.end());
  return {std::move(out), Permutation::unchecked};
}

Permutation standardize(std::span<const int> sequence) {
  std::vector<int> order(sequence.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sequence[a] < sequence[b]; });
  std::vector<int> out(sequence.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    out[order[rank]] = static_cast<int>(rank + 1);
  return {std::move(out), Permutation::unchecked};
}

Permutation pattern_at(const Permutation &host, std::span<const int> positions) {
  std::vector<int> seq;
  seq.reserve(positions.size());
  for (int pos : positions)
    seq.push_back(host.at(static_cast<std::size_t>(pos)));
  return standardize(seq);
}

namespace {

struct PatternMatcher {
  std::span<const int> host;
  const Permutation &pattern;
  // For pattern index j: index of the earlier pattern entry with the nearest
  // smaller (below) and nearest larger (above) value, or -1.
  std::vector<int> below, above;
  std::vector<int> chosen;

  PatternMatcher(std::span<const int> h, const Permutation &pat)
      : host(h), pattern(pat), below(pat.size(), -1), above(pat.size(), -1),
        chosen(pat.size()) {
    for (std::size_t j = 0; j < pat.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (pat[i] < pat[j] && (below[j] < 0 || pat[i] > pat[below[j]]))
          below[j] = static_cast<int>(i);
        if (pat[i] > pat[j] && (above[j] < 0 || pat[i] < pat[above[j]]))
          above[j] = static_cast<int>(i);
      }
    }
  }

  bool search(std::size_t j, std::size_t start) {
    const std::size_t m = pattern.size();
    if (j == m)
      return true;
    const int lo = below[j] < 0 ? INT32_MIN : host[chosen[below[j]]];
    const int hi = above[j] < 0 ? INT32_MAX : host[chosen[above[j]]];
    for (std::size_t pos = start; pos + (m - j) <= host.size(); ++pos) {
      const int v = host[pos];
      if (v <= lo || v >= hi)
        continue;
      chosen[j] = static_cast<int>(pos);
      if (search(j + 1, pos + 1))
        return true;
    }
    return false;
  }
};

} // namespace

std::optional<Occurrence> find_occurrence(std::span<const int> host,
                                          const Permutation &pattern) {
  if (pattern.size() > host.size())
    return std::nullopt;
  PatternMatcher matcher(host, pattern);
  if (!matcher.search(0, 0))
    return std::nullopt;
  Occurrence occ;
  for (int idx : matcher.chosen)
    occ.indices.push_back(idx + 1);
  return occ;
}

std::optional<Occurrence> contains(const Permutation &host,
                                   const Permutation &pattern) {
  return find_occurrence(host.values(), pattern);
}

bool avoids(std::span<const int> host, const Permutation &pattern) {
  if (pattern.size() > host.size())
    return true;
  PatternMatcher matcher(host, pattern);
  return !matcher.search(0, 0);
}

std::size_t lis(std::span<const int> sequence) {
  return longest_run(sequence, std::less<int>{});
}

std::size_t lds(std::span<const int> sequence) {
  return longest_run(sequence, std::greater<int>{});
}

std::vector<std::vector<int>> increasing_chains(const Permutation &p) {
  std::vector<std::vector<int>> chains;
  std::vector<int> last;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int v = p[i];
    auto it = std::find_if(last.begin(), last.end(),
                           [v](int tail) { return tail < v; });
    if (it == last.end()) {
      chains.push_back({static_cast<int>(i + 1)});
      last.push_back(v);
    } else {
      const auto c = static_cast<std::size_t>(it - last.begin());
      chains[c].push_back(static_cast<int>(i + 1));
      *it = v;
    }
  }
  return chains;
}

void for_each_permutation(std::size_t n,
                          const std::function<void(const Permutation &)> &fn) {
  Permutation p = Permutation::identity(n);
  std::vector<int> v(p.begin(), p.end());
  do {
    fn(Permutation(v, Permutation::unchecked));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation &p) { out.push_back(p); });
  return out;
}

} // namespace permclass
