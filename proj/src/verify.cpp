#include "permclass/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "parallel.hpp"
#include "permclass/errors.hpp"

namespace permclass {

const char *status_name(Status s) {
  switch (s) {
  case Status::Holds:
    return "holds";
  case Status::Fails:
    return "fails";
  case Status::Skipped:
    return "skipped";
  }
  return "?";
}

Status Report::status() const {
  bool skipped = false;
  for (const auto &v : results) {
    if (v.status == Status::Fails)
      return Status::Fails;
    skipped |= v.status == Status::Skipped;
  }
  return skipped ? Status::Skipped : Status::Holds;
}

std::size_t Report::verified_up_to() const {
  std::size_t n = 0;
  for (const auto &v : results) {
    if (v.status != Status::Holds || v.order != n + 1)
      break;
    n = v.order;
  }
  return n;
}

const Verdict *Report::first_failure() const {
  for (const auto &v : results)
    if (v.status == Status::Fails)
      return &v;
  return nullptr;
}

std::size_t resolve_jobs(std::size_t jobs) {
  if (jobs > 0)
    return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)> &fn) {
  jobs = std::min(resolve_jobs(jobs), count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        while (!stop.load(std::memory_order_relaxed)) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count)
            return;
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
              error = std::current_exception();
            stop = true;
          }
        }
      });
  }
  if (error)
    std::rethrow_exception(error);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs body(verdict) for each order, turning resource limits into skips.
template <typename Body>
void for_each_order(Report &report, OrderRange orders, Body body) {
  for (std::size_t n = orders.from; n <= orders.to; ++n) {
    const auto start = Clock::now();
    Verdict v;
    v.order = n;
    try {
      body(v);
    } catch (const ResourceLimitExceeded &e) {
      v.status = Status::Skipped;
      v.witness.clear();
      v.note = e.what();
    }
    v.seconds = seconds_since(start);
    report.results.push_back(std::move(v));
  }
}

Slice symmetric_difference(const Slice &a, const Slice &b) {
  Slice out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

/// Equality verdict for two sorted slices, re-checking the witness by
/// membership without the cache.
void compare_slices(const ClassEngine &engine, const ClassExpr &a,
                    const ClassExpr &b, const Slice &sa, const Slice &sb,
                    Verdict &v) {
  const Slice diff = symmetric_difference(sa, sb);
  if (diff.empty())
    return;
  const Permutation &w = diff.front();
  const bool in_a = slice_contains(sa, w);
  const ClassEngine fresh = engine.uncached();
  if (fresh.member(a, w) != in_a || fresh.member(b, w) == in_a)
    throw ContractViolation("witness " + w.str() + " does not re-verify");
  v.status = Status::Fails;
  v.witness = {w};
  v.note = in_a ? "only in first" : "only in second";
}

} // namespace

Report check_inclusion(const ClassEngine &engine, const ClassExpr &lhs,
                       const ClassExpr &rhs, OrderRange orders,
                       VerifyOptions options) {
  Report report{"inclusion", {lhs, rhs}, {}};
  for_each_order(report, orders, [&](Verdict &v) {
    const SlicePtr s = engine.slice(lhs, v.order);
    const auto hit = detail::first_index_where(
        s->size(), options.jobs,
        [&](std::size_t i) { return !engine.member(rhs, (*s)[i]); });
    if (!hit)
      return;
    const Permutation &w = (*s)[*hit];
    const ClassEngine fresh = engine.uncached();
    if (!fresh.member(lhs, w) || fresh.member(rhs, w))
      throw ContractViolation("witness " + w.str() + " does not re-verify");
    v.status = Status::Fails;
    v.witness = {w};
  });
  return report;
}

Report check_equality(const ClassEngine &engine, const ClassExpr &a,
                      const ClassExpr &b, OrderRange orders, VerifyOptions) {
  Report report{"equality", {a, b}, {}};
  for_each_order(report, orders, [&](Verdict &v) {
    compare_slices(engine, a, b, *engine.slice(a, v.order),
                   *engine.slice(b, v.order), v);
  });
  return report;
}

Report check_group_closure(const ClassEngine &engine, const ClassExpr &expr,
                           OrderRange orders, VerifyOptions options) {
  Report report{"closure", {expr}, {}};
  for_each_order(report, orders, [&](Verdict &v) {
    const SlicePtr s_held = engine.slice(expr, v.order);
    const Slice &s = *s_held;
    const std::size_t m = s.size();
    const auto pair = detail::first_index_where(
        m * m, options.jobs, [&](std::size_t idx) {
          return !slice_contains(s, compose(s[idx / m], s[idx % m]));
        });
    if (pair) {
      const Permutation &p = s[*pair / m], &q = s[*pair % m];
      const Permutation pq = compose(p, q);
      if (engine.uncached().member(expr, pq))
        throw ContractViolation("closure witness does not re-verify");
      v.status = Status::Fails;
      v.witness = {p, q};
      v.note = "product " + pq.str() + " not in class";
      return;
    }
    const Permutation id = Permutation::identity(v.order);
    if (!slice_contains(s, id)) {
      v.status = Status::Fails;
      v.witness = {id};
      v.note = "identity not in class";
      return;
    }
    for (const auto &p : s)
      if (!slice_contains(s, inverse(p))) {
        v.status = Status::Fails;
        v.witness = {p};
        v.note = "inverse " + inverse(p).str() + " not in class";
        return;
      }
  });
  return report;
}

const char *variant_name(BehaviourVariant v) {
  switch (v) {
  case BehaviourVariant::H:
    return "H";
  case BehaviourVariant::V:
    return "V";
  case BehaviourVariant::I:
    return "I";
  }
  return "?";
}

namespace {

/// Calls fn(word) for every word over [0, k) of length n, in lexicographic
/// order; only nondecreasing words when `sorted_only`.
template <typename Fn>
void for_each_word(std::size_t n, std::size_t k, bool sorted_only, Fn fn) {
  std::vector<int> w(n, 0);
  const int top = static_cast<int>(k) - 1;
  while (true) {
    fn(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == top)
      --i;
    if (i == 0)
      return;
    ++w[i - 1];
    for (std::size_t j = i; j < n; ++j)
      w[j] = sorted_only ? w[i - 1] : 0;
  }
}

} // namespace

Slice behaviour_closure(const ClassEngine &engine, const ClassExpr &a_expr,
                        std::size_t k, BehaviourVariant variant,
                        std::size_t n) {
  if (k == 0)
    throw PreconditionError("behaviour closure needs k >= 1");
  const bool contiguous_source = variant == BehaviourVariant::H;
  const bool concatenate = variant == BehaviourVariant::V;
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<std::vector<int>> parts(k);
  std::vector<int> out(n);

  for (const SlicePtr held = engine.slice(a_expr, n);
       const auto &alpha : *held) {
    if (n == 0) {
      seen.insert(alpha);
      continue;
    }
    for_each_word(n, k, contiguous_source, [&](const std::vector<int> &src) {
      for (auto &part : parts)
        part.clear();
      for (std::size_t i = 0; i < n; ++i)
        parts[src[i]].push_back(alpha[i]);
      std::vector<int> target(src);
      std::sort(target.begin(), target.end());
      do {
        std::vector<std::size_t> next(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
          const int label = target[i];
          out[i] = parts[label][next[label]++];
        }
        seen.insert(Permutation(out, Permutation::unchecked));
      } while (!concatenate &&
               std::next_permutation(target.begin(), target.end()));
    });
  }
  Slice result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end());
  return result;
}

Report check_behaviour(const ClassEngine &engine, const ClassExpr &a_expr,
                       std::size_t k, BehaviourVariant variant,
                       OrderRange orders, VerifyOptions) {
  const int kk = static_cast<int>(k);
  ClassExpr atom = variant == BehaviourVariant::H   ? ClassExpr::horiz_k(kk)
                   : variant == BehaviourVariant::V ? ClassExpr::vert_k(kk)
                                                    : ClassExpr::inc_k(kk);
  const ClassExpr composed = ClassExpr::compose({a_expr, atom});
  Report report{"behaviour", {a_expr, composed}, {}};
  for_each_order(report, orders, [&](Verdict &v) {
    const Slice direct = behaviour_closure(engine, a_expr, k, variant, v.order);
    const SlicePtr via_held = engine.slice(composed, v.order);
    const Slice &via = *via_held;
    const Slice diff = symmetric_difference(direct, via);
    if (diff.empty())
      return;
    v.status = Status::Fails;
    v.witness = {diff.front()};
    v.note = slice_contains(direct, diff.front()) ? "only in direct construction"
                                                  : "only in composition";
  });
  return report;
}

MSearchReport search_m(const ClassEngine &engine, int k, int l,
                       std::size_t n_max, VerifyOptions options) {
  if (k < 1 || l < 1)
    throw PreconditionError("search_m needs k, l >= 1");
  MSearchReport report{k, l, n_max, {}, true};
  const ClassExpr rhs =
      ClassExpr::compose({ClassExpr::inc_k(k), ClassExpr::inc_k(l)});
  std::vector<std::size_t> fail_order;
  for (int m = k + l - 1; m <= k * l; ++m) {
    MSearchEntry entry;
    entry.m = m;
    std::size_t failed_at = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const Report r =
          check_inclusion(engine, ClassExpr::inc_k(m), rhs, {n, n}, options);
      const Verdict &v = r.results.front();
      if (v.status == Status::Holds) {
        entry.verified_up_to = n;
        continue;
      }
      if (v.status == Status::Fails) {
        entry.counterexample = v.witness.front();
        failed_at = n;
      } else {
        entry.skipped.push_back("n=" + std::to_string(n) + ": " + v.note);
      }
      break;
    }
    fail_order.push_back(failed_at);
    report.entries.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i + 1 < fail_order.size(); ++i) {
    if (fail_order[i] == 0)
      continue;
    const auto &next = report.entries[i + 1];
    const bool next_fails_by_then =
        fail_order[i + 1] != 0 && fail_order[i + 1] <= fail_order[i];
    const bool next_unchecked = next.verified_up_to < fail_order[i] &&
                                fail_order[i + 1] == 0;
    if (!next_fails_by_then && !next_unchecked)
      report.monotone = false;
  }
  return report;
}

Status SuiteResult::status() const {
  bool skipped = false;
  for (const auto &r : records) {
    if (r.status == Status::Fails)
      return Status::Fails;
    skipped |= r.status == Status::Skipped;
  }
  return skipped ? Status::Skipped : Status::Holds;
}

std::vector<std::string> SuiteResult::counterexamples() const {
  std::vector<std::string> out;
  for (const auto &r : records)
    if (r.status == Status::Fails)
      out.insert(out.end(), r.witness.begin(), r.witness.end());
  return out;
}

} // namespace permclass
