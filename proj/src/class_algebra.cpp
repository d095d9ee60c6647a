#include "permclass/class_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "detail.hpp"
#include "permclass/errors.hpp"
#include "permclass/structure.hpp"

namespace permclass {

namespace {

// Above this many products a composition slice is built by filtering S_n.
constexpr std::size_t kProductBudget = 30'000'000;

std::string cap_message(const char *what, std::size_t n, std::size_t cap) {
  return std::string(what) + " at order " + std::to_string(n) +
         " exceeds cap " + std::to_string(cap);
}

Permutation as_permutation(std::span<const int> seq, bool standardized) {
  if (standardized)
    return {std::vector<int>(seq.begin(), seq.end()), Permutation::unchecked};
  return standardize(seq);
}

ClassExpr left_factors(const ClassExpr &expr) {
  const auto &ch = expr.children();
  if (ch.size() == 2)
    return ch.front();
  return ClassExpr::compose({ch.begin(), ch.end() - 1});
}

void sort_unique(Slice &s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

} // namespace

Limits Limits::from_env() {
  Limits limits;
  if (const char *env = std::getenv("PERMCLASS_MAX_N")) {
    char *end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      limits = uniform(v);
  }
  return limits;
}

Limits Limits::uniform(std::size_t n) {
  Limits limits;
  limits.search_max_n = limits.generator_max_n = limits.filter_max_n =
      limits.deletion_max_n = n;
  return limits;
}

bool slice_contains(const Slice &slice, const Permutation &p) {
  return std::binary_search(slice.begin(), slice.end(), p);
}

struct ClassEngine::Cache {
  struct Entry {
    std::once_flag once;
    SlicePtr value;
  };
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<Entry>> entries;

  std::shared_ptr<Entry> entry(const std::string &key) {
    {
      std::shared_lock lock(mutex);
      if (auto it = entries.find(key); it != entries.end())
        return it->second;
    }
    std::unique_lock lock(mutex);
    auto [it, inserted] = entries.try_emplace(key);
    if (inserted)
      it->second = std::make_shared<Entry>();
    return it->second;
  }
};

ClassEngine::ClassEngine(EngineOptions options)
    : options_(options), cache_(std::make_shared<Cache>()) {}

ClassEngine ClassEngine::uncached() const {
  EngineOptions o = options_;
  o.use_cache = false;
  return ClassEngine(o);
}

bool ClassEngine::member(const ClassExpr &expr, const Permutation &p) const {
  return member_impl(expr, p.values(), true);
}

bool ClassEngine::member_seq(const ClassExpr &expr,
                             std::span<const int> seq) const {
  return member_impl(expr, seq, false);
}

bool ClassEngine::member_values(const ClassExpr &expr,
                                std::span<const int> values) const {
  return member_impl(expr, values, true);
}

bool ClassEngine::member_impl(const ClassExpr &expr, std::span<const int> seq,
                              bool standardized) const {
  using K = ClassExpr::Kind;
  const auto &ch = expr.children();
  switch (expr.kind()) {
  case K::Inc:
    return std::adjacent_find(seq.begin(), seq.end(), std::greater<int>{}) ==
           seq.end();
  case K::Dec:
    return std::adjacent_find(seq.begin(), seq.end(), std::less<int>{}) ==
           seq.end();
  case K::IncK:
    return lds(seq) <= static_cast<std::size_t>(expr.param());
  case K::DecK:
    return lis(seq) <= static_cast<std::size_t>(expr.param());
  case K::All:
    return true;
  case K::Avoid:
    return std::all_of(expr.basis().begin(), expr.basis().end(),
                       [&](const Permutation &b) { return avoids(seq, b); });
  case K::Layered:
  case K::LayeredK:
  case K::F2: {
    const std::size_t max_layers =
        expr.kind() == K::LayeredK ? static_cast<std::size_t>(expr.param())
                                   : seq.size();
    const std::size_t max_len = expr.kind() == K::F2 ? 2 : seq.size();
    if (standardized)
      return detail::scan_layers(seq, max_layers, max_len);
    const Permutation p = standardize(seq);
    return detail::scan_layers(p.values(), max_layers, max_len);
  }
  case K::VertK: {
    const std::vector<ClassExpr> parts(expr.param(), ClassExpr::inc());
    return vertical_split(*this, seq, parts).has_value();
  }
  case K::HorizK: {
    const std::vector<ClassExpr> parts(expr.param(), ClassExpr::inc());
    return horizontal_split(*this, as_permutation(seq, standardized), parts)
        .has_value();
  }
  case K::Vertical:
    return vertical_split(*this, seq, ch).has_value();
  case K::Horizontal:
    return horizontal_split(*this, as_permutation(seq, standardized), ch)
        .has_value();
  case K::Merge:
    return merge_split(*this, seq, ch).has_value();
  case K::Compose:
    return member_compose(expr, as_permutation(seq, standardized));
  case K::Intersect:
    return std::all_of(ch.begin(), ch.end(), [&](const ClassExpr &c) {
      return member_impl(c, seq, standardized);
    });
  case K::Union:
    return std::any_of(ch.begin(), ch.end(), [&](const ClassExpr &c) {
      return member_impl(c, seq, standardized);
    });
  case K::Reverse: {
    std::vector<int> r(seq.rbegin(), seq.rend());
    return member_impl(ch[0], r, standardized);
  }
  case K::Complement: {
    const int top = standardized ? static_cast<int>(seq.size()) + 1 : 0;
    std::vector<int> c(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
      c[i] = top - seq[i];
    return member_impl(ch[0], c, standardized);
  }
  case K::Inverse:
    return member(ch[0], inverse(as_permutation(seq, standardized)));
  }
  return false;
}

bool ClassEngine::member_compose(const ClassExpr &expr,
                                 const Permutation &p) const {
  const std::size_t n = p.size();
  if (n > limits().search_max_n)
    throw ResourceLimitExceeded(
        cap_message("composition membership", n, limits().search_max_n));
  const ClassExpr left = left_factors(expr);
  const ClassExpr &right = expr.children().back();
  std::vector<int> buf;

  if (options_.compose == ComposeStrategy::SmallerSlice &&
      expr.children().size() == 2 && left.is_atom() && right.is_atom() &&
      slice(left, n)->size() < slice(right, n)->size()) {
    // p = a o b  <=>  a^{-1} o p in right
    for (const SlicePtr held = slice(ClassExpr::inv(left), n);
         const auto &a_inv : *held) {
      compose_into(a_inv, p, buf);
      if (member_impl(right, buf, true))
        return true;
    }
    return false;
  }
  // p = a o b  <=>  p o b^{-1} in left
  for (const SlicePtr held = slice(ClassExpr::inv(right), n);
       const auto &b_inv : *held) {
    compose_into(p, b_inv, buf);
    if (member_impl(left, buf, true))
      return true;
  }
  return false;
}

SlicePtr ClassEngine::slice(const ClassExpr &expr, std::size_t n) const {
  if (!options_.use_cache)
    return std::make_shared<const Slice>(compute_slice(expr, n));
  const std::string key = expr.canonical() + "#" + std::to_string(n);
  auto entry = cache_->entry(key);
  std::call_once(entry->once, [&] {
    entry->value = std::make_shared<const Slice>(compute_slice(expr, n));
  });
  return entry->value;
}

ClassSlice ClassEngine::enumerate(const ClassExpr &expr, std::size_t n) const {
  return {expr, n, slice(expr, n)};
}

std::vector<std::size_t> ClassEngine::count(const ClassExpr &expr,
                                            std::size_t n_max) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    out.push_back(slice(expr, n)->size());
  return out;
}

std::vector<Permutation> ClassEngine::basis_up_to(const ClassExpr &expr,
                                                  std::size_t max_len) const {
  std::vector<Permutation> basis;
  std::vector<int> rest;
  for (std::size_t n = 1; n <= max_len; ++n) {
    if (n > limits().filter_max_n)
      throw ResourceLimitExceeded(
          cap_message("basis search", n, limits().filter_max_n));
    for_each_permutation(n, [&](const Permutation &p) {
      if (member(expr, p))
        return;
      for (std::size_t i = 0; i < n; ++i) {
        rest.clear();
        for (std::size_t j = 0; j < n; ++j)
          if (j != i)
            rest.push_back(p[j]);
        if (!member_seq(expr, rest))
          return;
      }
      basis.push_back(p);
    });
  }
  return basis;
}

bool ClassEngine::has_generator(const ClassExpr &expr) {
  using K = ClassExpr::Kind;
  switch (expr.kind()) {
  case K::Inc:
  case K::Dec:
  case K::Layered:
  case K::LayeredK:
  case K::F2:
  case K::VertK:
  case K::HorizK:
    return true;
  default:
    return false;
  }
}

Slice ClassEngine::compute_slice(const ClassExpr &expr, std::size_t n) const {
  using K = ClassExpr::Kind;
  const auto &ch = expr.children();
  if (has_generator(expr) && expr.kind() != K::Inc && expr.kind() != K::Dec &&
      n > limits().generator_max_n)
    throw ResourceLimitExceeded(
        cap_message("generator enumeration", n, limits().generator_max_n));

  Slice out;
  switch (expr.kind()) {
  case K::Inc:
    return {Permutation::identity(n)};
  case K::Dec:
    return {Permutation::decreasing(n)};
  case K::Layered:
    out = generators::layered(n, n, n);
    break;
  case K::LayeredK:
    out = generators::layered(n, expr.param(), n);
    break;
  case K::F2:
    out = generators::layered(n, n, 2);
    break;
  case K::VertK:
    out = generators::vertical_runs(n, expr.param());
    break;
  case K::HorizK:
    out = generators::horizontal_runs(n, expr.param());
    break;
  case K::IncK:
  case K::DecK:
  case K::Avoid:
  case K::All:
  case K::Merge:
  case K::Vertical:
  case K::Horizontal:
    return filter_all(expr, n);
  case K::Compose:
    return compose_slice(expr, n);
  case K::Intersect: {
    for (const SlicePtr held = slice(ch[0], n); const auto &p : *held) {
      bool keep = true;
      for (std::size_t i = 1; i < ch.size() && keep; ++i)
        keep = member(ch[i], p);
      if (keep)
        out.push_back(p);
    }
    return out;
  }
  case K::Union:
    for (const auto &c : ch) {
      const auto s = slice(c, n);
      out.insert(out.end(), s->begin(), s->end());
    }
    break;
  case K::Reverse:
    for (const SlicePtr held = slice(ch[0], n); const auto &p : *held)
      out.push_back(reverse(p));
    break;
  case K::Complement:
    for (const SlicePtr held = slice(ch[0], n); const auto &p : *held)
      out.push_back(complement(p));
    break;
  case K::Inverse:
    for (const SlicePtr held = slice(ch[0], n); const auto &p : *held)
      out.push_back(inverse(p));
    break;
  }
  sort_unique(out);
  return out;
}

Slice ClassEngine::filter_all(const ClassExpr &expr, std::size_t n) const {
  if (n > limits().filter_max_n)
    throw ResourceLimitExceeded(
        cap_message("enumeration by filtering", n, limits().filter_max_n));
  Slice out;
  for_each_permutation(n, [&](const Permutation &p) {
    if (member(expr, p))
      out.push_back(p);
  });
  return out;
}

Slice ClassEngine::compose_slice(const ClassExpr &expr, std::size_t n) const {
  if (n > limits().search_max_n)
    throw ResourceLimitExceeded(
        cap_message("composition enumeration", n, limits().search_max_n));
  const auto &ch = expr.children();
  Slice current = *slice(ch[0], n);
  for (std::size_t i = 1; i < ch.size(); ++i) {
    const auto right = slice(ch[i], n);
    if (current.size() * right->size() > kProductBudget)
      return filter_all(expr, n);
    std::unordered_set<Permutation, PermutationHash> products;
    std::vector<int> buf;
    for (const auto &a : current)
      for (const auto &b : *right) {
        compose_into(a, b, buf);
        products.emplace(buf, Permutation::unchecked);
      }
    current.assign(products.begin(), products.end());
    sort_unique(current);
  }
  return current;
}

// ---------------------------------------------------------------------------

namespace generators {

namespace {

// Every composition of n into at most max_parts parts, each <= max_len.
void compositions(std::size_t n, std::size_t max_parts, std::size_t max_len,
                  std::vector<int> &prefix,
                  const std::function<void(const std::vector<int> &)> &fn) {
  if (n == 0) {
    fn(prefix);
    return;
  }
  if (prefix.size() == max_parts)
    return;
  for (std::size_t part = 1; part <= std::min(n, max_len); ++part) {
    prefix.push_back(static_cast<int>(part));
    compositions(n - part, max_parts, max_len, prefix, fn);
    prefix.pop_back();
  }
}

void for_each_composition(std::size_t n, std::size_t max_parts,
                          std::size_t max_len,
                          const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> prefix;
  compositions(n, max_parts, max_len, prefix, fn);
}

// Words with parts[i] copies of label i, in lexicographic order.
void for_each_labelling(const std::vector<int> &parts,
                        const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> word;
  for (std::size_t i = 0; i < parts.size(); ++i)
    word.insert(word.end(), parts[i], static_cast<int>(i));
  do {
    fn(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

} // namespace

Slice layered(std::size_t n, std::size_t max_layers, std::size_t max_layer_len) {
  Slice out;
  for_each_composition(n, max_layers, max_layer_len,
                       [&](const std::vector<int> &shape) {
                         out.push_back(from_layers(LayerShape{shape}));
                       });
  return out;
}

Slice vertical_runs(std::size_t n, std::size_t k) {
  std::unordered_set<Permutation, PermutationHash> seen;
  for_each_composition(n, k, n, [&](const std::vector<int> &segments) {
    // label[v] = segment receiving value v + 1
    for_each_labelling(segments, [&](const std::vector<int> &label) {
      std::vector<int> values;
      values.reserve(n);
      for (std::size_t s = 0; s < segments.size(); ++s)
        for (std::size_t v = 0; v < n; ++v)
          if (label[v] == static_cast<int>(s))
            values.push_back(static_cast<int>(v + 1));
      seen.emplace(std::move(values), Permutation::unchecked);
    });
  });
  return {seen.begin(), seen.end()};
}

Slice horizontal_runs(std::size_t n, std::size_t k) {
  std::unordered_set<Permutation, PermutationHash> seen;
  for_each_composition(n, k, n, [&](const std::vector<int> &blocks) {
    // label[t] = value block used at position t + 1
    for_each_labelling(blocks, [&](const std::vector<int> &label) {
      std::vector<int> next(blocks.size());
      int base = 0;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        next[b] = base + 1;
        base += blocks[b];
      }
      std::vector<int> values(n);
      for (std::size_t t = 0; t < n; ++t)
        values[t] = next[label[t]]++;
      seen.emplace(std::move(values), Permutation::unchecked);
    });
  });
  return {seen.begin(), seen.end()};
}

} // namespace generators

} // namespace permclass
