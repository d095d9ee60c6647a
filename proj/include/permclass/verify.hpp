#ifndef PERMCLASS_VERIFY_HPP
#define PERMCLASS_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permclass/class_algebra.hpp"
#include "permclass/class_expr.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

enum class Status { Holds, Fails, Skipped };
const char *status_name(Status s);

/// Outcome at one order. A failing verdict carries its witness: one
/// permutation for inclusion/equality, a pair for composition closure.
struct Verdict {
  std::size_t order = 0;
  Status status = Status::Holds;
  std::vector<Permutation> witness;
  std::string note;
  double seconds = 0.0;
};

/// Per-order verdicts of a relation between class expressions. Its status
/// is Fails if any order fails, else Skipped if any order was skipped.
struct Report {
  std::string relation; // "inclusion", "equality", "closure", "behaviour"
  std::vector<ClassExpr> operands;
  std::vector<Verdict> results;

  Status status() const;
  /// Largest n such that every order up to n holds.
  std::size_t verified_up_to() const;
  const Verdict *first_failure() const;
};
using InclusionReport = Report;

struct OrderRange {
  std::size_t from = 1;
  std::size_t to = 1;
};

struct VerifyOptions {
  /// Worker threads; 0 means hardware concurrency.
  std::size_t jobs = 0;
};

std::size_t resolve_jobs(std::size_t jobs);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Exceptions are
/// rethrown on the caller after all workers stop.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)> &fn);

/// lhs n S_n within rhs n S_n for each order; the lexicographically first
/// witness is reported and re-verified without the slice cache.
Report check_inclusion(const ClassEngine &engine, const ClassExpr &lhs,
                       const ClassExpr &rhs, OrderRange orders,
                       VerifyOptions options = {});

/// Slice equality; the witness is the first element of the symmetric
/// difference.
Report check_equality(const ClassEngine &engine, const ClassExpr &a,
                      const ClassExpr &b, OrderRange orders,
                      VerifyOptions options = {});

/// Closure of each slice under composition (witness: first pair whose
/// product leaves the slice), then identity, then inverses.
Report check_group_closure(const ClassEngine &engine, const ClassExpr &expr,
                           OrderRange orders, VerifyOptions options = {});

enum class BehaviourVariant { H, V, I };
const char *variant_name(BehaviourVariant v);

/// All permutations obtained from members of a_expr by splitting them into
/// at most k parts and recombining per the variant:
///   H: contiguous parts, any interleaving;
///   V: arbitrary parts, concatenated;
///   I: arbitrary parts, any interleaving.
/// Sorted and duplicate-free.
Slice behaviour_closure(const ClassEngine &engine, const ClassExpr &a_expr,
                        std::size_t k, BehaviourVariant variant, std::size_t n);

/// behaviour_closure(a, k, variant, n) against comp(a, Hk(k) | Vk(k) | Ik(k)).
Report check_behaviour(const ClassEngine &engine, const ClassExpr &a_expr,
                       std::size_t k, BehaviourVariant variant,
                       OrderRange orders, VerifyOptions options = {});

struct MSearchEntry {
  int m = 0;
  /// Largest order at which the inclusion was checked and held.
  std::size_t verified_up_to = 0;
  std::optional<Permutation> counterexample; // smallest order, lexicographic
  std::vector<std::string> skipped;
};

struct MSearchReport {
  int k = 0, l = 0;
  std::size_t n_max = 0;
  std::vector<MSearchEntry> entries; // m = k+l-1 .. k*l
  /// Whenever m fails at order n, m+1 was also seen to fail at an order <= n.
  bool monotone = true;
};

/// Ik(m) within comp(Ik(k), Ik(l)) for m = k+l-1 .. kl and n <= n_max.
/// Finite evidence only; later orders of an m are skipped once it fails.
MSearchReport search_m(const ClassEngine &engine, int k, int l,
                       std::size_t n_max, VerifyOptions options = {});

// Suite

struct SuiteRecord {
  Status status = Status::Holds;
  std::string what;
  std::vector<std::string> witness;
};

struct SuiteResult {
  std::string name;
  std::string parameters;
  std::vector<SuiteRecord> records;
  double seconds = 0.0;

  /// Derived from the records alone.
  Status status() const;
  std::vector<std::string> counterexamples() const;
};

struct SuiteOptions {
  /// Lowers every check's default order cap when set.
  std::optional<std::size_t> max_n;
  std::size_t jobs = 0;
  /// Limits of the shared engine; per-check generator caps may be raised
  /// above this where a check's stated range needs it.
  Limits limits = Limits{};
};

/// Fixed registry of check names, in execution order.
const std::vector<std::string> &registry_names();

/// Runs the named checks in the given order ("all" expands to the whole
/// registry). Throws UnknownCheck before running anything if a name is not
/// registered.
std::vector<SuiteResult> run_suite(const std::vector<std::string> &names,
                                   const SuiteOptions &options = {});

} // namespace permclass

#endif
