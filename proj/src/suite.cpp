#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "permclass/decompose.hpp"
#include "permclass/errors.hpp"
#include "permclass/structure.hpp"
#include "permclass/verify.hpp"

namespace permclass {

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
  const ClassEngine &engine;
  std::size_t jobs;
  std::optional<std::size_t> max_n;
  Limits limits;

  /// The check's default order cap, lowered by the suite's max_n.
  std::size_t cap(std::size_t fallback) const {
    return max_n ? std::min(*max_n, fallback) : fallback;
  }
  VerifyOptions verify() const { return {jobs}; }
};

using CheckFn = std::function<void(const Context &, SuiteResult &)>;

Permutation P(const char *s) { return Permutation::parse(s); }
ClassExpr X(const char *s) { return ClassExpr::parse(s); }

std::string range_text(std::size_t from, std::size_t to) {
  return "n=" + std::to_string(from) + ".." + std::to_string(to);
}

void add(SuiteResult &r, Status s, std::string what,
         std::vector<std::string> witness = {}) {
  r.records.push_back({s, std::move(what), std::move(witness)});
}

/// One record per order of a relation report.
void add_report(SuiteResult &r, const Report &report, const std::string &label) {
  for (const auto &v : report.results) {
    std::string what = label + " n=" + std::to_string(v.order);
    if (!v.note.empty())
      what += " (" + v.note + ")";
    std::vector<std::string> w;
    for (const auto &p : v.witness)
      w.push_back(p.spaced());
    add(r, v.status, std::move(what), std::move(w));
  }
}

/// First member of `items` (by index) failing `ok`; one record.
template <typename Items, typename Ok>
void add_forall(SuiteResult &r, const Context &ctx, const Items &items,
                const std::string &label, Ok ok) {
  const auto bad = detail::first_index_where(
      items.size(), ctx.jobs, [&](std::size_t i) { return !ok(items[i]); });
  if (bad)
    add(r, Status::Fails, label, {items[*bad].spaced()});
  else
    add(r, Status::Holds, label + " (" + std::to_string(items.size()) +
                              " checked)");
}

template <typename Fn> bool succeeds(Fn fn) {
  try {
    return fn();
  } catch (const PreconditionError &) {
    return false;
  } catch (const ContractViolation &) {
    return false;
  }
}

// Checks -----------------------------------------------------------------

void fact_basic_equiv(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(8);
  r.parameters = "k in {2,3}, " + range_text(1, top);
  for (int k : {2, 3}) {
    const ClassExpr av = ClassExpr::avoid(
        {Permutation::decreasing(static_cast<std::size_t>(k) + 1)});
    const std::vector<ClassExpr> parts(static_cast<std::size_t>(k),
                                       ClassExpr::inc());
    for (std::size_t n = 1; n <= top; ++n) {
      const auto perms = all_permutations(n);
      add_forall(r, ctx, perms,
                 "k=" + std::to_string(k) + " n=" + std::to_string(n),
                 [&](const Permutation &p) {
                   const bool a = ctx.engine.member(av, p);
                   const bool b = lds(p) <= static_cast<std::size_t>(k);
                   const bool c = merge_split(ctx.engine, p, parts).has_value();
                   return a == b && b == c;
                 });
    }
  }
}

void thm_ik_vkhk(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(7);
  r.parameters = "k in {2,3}, " + range_text(1, top);
  for (int k : {2, 3}) {
    for (std::size_t n = 1; n <= top; ++n)
      add_forall(r, ctx, *ctx.engine.slice(ClassExpr::inc_k(k), n),
                 "decompose_vk_hk k=" + std::to_string(k) +
                     " n=" + std::to_string(n),
                 [&](const Permutation &p) {
                   return succeeds([&] {
                     return is_valid(ctx.engine,
                                     decompose_vk_hk(ctx.engine, p, k));
                   });
                 });
    add_report(r,
               check_inclusion(ctx.engine, ClassExpr::inc_k(k),
                               ClassExpr::compose({ClassExpr::vert_k(k),
                                                   ClassExpr::horiz_k(k)}),
                               {1, top}, ctx.verify()),
               "Ik(" + std::to_string(k) + ") in comp(Vk,Hk)");
  }
}

void thm_k_l_1(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(7);
  r.parameters = "(k,l) in {(2,2),(2,3),(3,2)}, " + range_text(1, top);
  for (auto [k, l] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}})
    for (std::size_t n = 1; n <= top; ++n)
      add_forall(r, ctx, *ctx.engine.slice(ClassExpr::inc_k(k + l - 1), n),
                 "decompose_ik_il k=" + std::to_string(k) +
                     " l=" + std::to_string(l) + " n=" + std::to_string(n),
                 [&](const Permutation &p) {
                   return succeeds([&] {
                     return is_valid(ctx.engine,
                                     decompose_ik_il(ctx.engine, p, k, l));
                   });
                 });
}

void inclusion_check(const Context &ctx, SuiteResult &r, const char *lhs,
                     const char *rhs, std::size_t default_cap) {
  const std::size_t top = ctx.cap(default_cap);
  r.parameters = std::string(lhs) + " in " + rhs + ", " + range_text(1, top);
  add_report(r,
             check_inclusion(ctx.engine, X(lhs), X(rhs), {1, top}, ctx.verify()),
             std::string(lhs) + " in " + rhs);
}

/// Expressions for the symmetry equalities.
const std::vector<const char *> &symmetry_corpus() {
  static const std::vector<const char *> corpus = {
      "Lk(2)", "Av(231)", "Ik(2)", "Vk(2)", "merge(I,D)", "F2"};
  return corpus;
}

void lemma_basicsym(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(6);
  r.parameters = "6 expressions, " + range_text(1, top);
  for (const char *text : symmetry_corpus()) {
    const ClassExpr a = X(text);
    const ClassExpr d = ClassExpr::dec();
    add_report(r,
               check_equality(ctx.engine, ClassExpr::rev(a),
                              ClassExpr::compose({a, d}), {1, top}),
               std::string("rev(") + text + ") = comp(" + text + ",D)");
    add_report(r,
               check_equality(ctx.engine, ClassExpr::cpl(a),
                              ClassExpr::compose({d, a}), {1, top}),
               std::string("cpl(") + text + ") = comp(D," + text + ")");
  }
}

void lemma_vh_invert(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(6);
  r.parameters = "6 pairs, " + range_text(1, top);
  const std::vector<std::pair<const char *, const char *>> pairs = {
      {"I", "I"},         {"I", "D"},           {"D", "I"},
      {"Av(231)", "I"}, {"Lk(2)", "D"}, {"Av(132)", "Av(213)"}};
  for (auto [c1, c2] : pairs) {
    const ClassExpr a = X(c1), b = X(c2);
    const ClassExpr h = ClassExpr::horizontal({a, b});
    const ClassExpr v = ClassExpr::inv(
        ClassExpr::vertical({ClassExpr::inv(a), ClassExpr::inv(b)}));
    add_report(r, check_equality(ctx.engine, h, v, {1, top}),
               h.render() + " = " + v.render());
  }
}

void behaviour(const Context &ctx, SuiteResult &r, BehaviourVariant variant,
               std::vector<std::pair<const char *, std::size_t>> cases) {
  const std::size_t top = ctx.cap(5);
  r.parameters = std::string("variant ") + variant_name(variant) + ", " +
                 range_text(1, top);
  for (auto [text, k] : cases)
    add_report(r,
               check_behaviour(ctx.engine, X(text), k, variant, {1, top},
                               ctx.verify()),
               std::string(text) + " k=" + std::to_string(k));
}

void lemma_important(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(6);
  r.parameters = "merge(C...) in comp(V(C...),Hk(k)), " + range_text(1, top);
  const std::vector<std::vector<const char *>> cases = {
      {"I", "D"}, {"Av(231)", "I"}, {"D", "D"}, {"I", "I", "I"}};
  for (const auto &parts : cases) {
    std::vector<ClassExpr> cs;
    for (const char *t : parts)
      cs.push_back(X(t));
    const ClassExpr lhs = ClassExpr::merge(cs);
    const ClassExpr rhs = ClassExpr::compose(
        {ClassExpr::vertical(cs),
         ClassExpr::horiz_k(static_cast<int>(parts.size()))});
    add_report(r, check_inclusion(ctx.engine, lhs, rhs, {1, top}, ctx.verify()),
               lhs.render() + " in " + rhs.render());
  }
}

void search_m_2_2(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(9);
  r.parameters = "k=2 l=2, n<=" + std::to_string(top);
  const MSearchReport rep = search_m(ctx.engine, 2, 2, top, ctx.verify());
  for (const auto &e : rep.entries) {
    const std::string m = "m=" + std::to_string(e.m);
    for (const auto &s : e.skipped)
      add(r, Status::Skipped, m + " " + s);
    if (e.m == 3) {
      const std::size_t need = std::min<std::size_t>(8, top);
      add(r, e.verified_up_to >= need ? Status::Holds : Status::Fails,
          m + ": holds for n<=" + std::to_string(e.verified_up_to),
          e.counterexample ? std::vector{e.counterexample->spaced()}
                           : std::vector<std::string>{});
    } else if (e.counterexample) {
      // A counterexample for m = kl is the expected outcome, not a failure.
      add(r, Status::Holds,
          m + ": counterexample at n=" + std::to_string(e.counterexample->size()) +
              ": " + e.counterexample->spaced());
    } else {
      add(r, Status::Holds,
          m + ": none found up to " + std::to_string(e.verified_up_to));
    }
  }
  add(r, rep.monotone ? Status::Holds : Status::Fails,
      std::string("monotone in m: ") + (rep.monotone ? "yes" : "no"));
}

void thm_l4(const Context &ctx, SuiteResult &r, int k) {
  const std::size_t top = ctx.cap(10);
  r.parameters = "k=" + std::to_string(k) + ", " + range_text(1, top);
  for (std::size_t n = 1; n <= top; ++n)
    add_forall(r, ctx, *ctx.engine.slice(ClassExpr::layered_k(k), n),
               "decompose_layered n=" + std::to_string(n),
               [&](const Permutation &p) {
                 return succeeds([&] {
                   return is_valid(ctx.engine,
                                   decompose_layered(ctx.engine, p, k));
                 });
               });
}

void lemma_l2_group(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(8);
  r.parameters = "or(Lk(2),rev(Lk(2))) " + range_text(1, top) + "; Lk(2) n=3";
  add_report(r,
             check_group_closure(ctx.engine, X("or(Lk(2),rev(Lk(2)))"),
                                 {1, top}, ctx.verify()),
             "or(Lk(2),rev(Lk(2))) closed");
  if (top < 3) {
    add(r, Status::Skipped, "Lk(2) n=3 below cap");
    return;
  }
  const Report lone =
      check_group_closure(ctx.engine, X("Lk(2)"), {3, 3}, ctx.verify());
  const Verdict &v = lone.results.front();
  std::vector<std::string> w;
  for (const auto &p : v.witness)
    w.push_back(p.spaced());
  const bool expected = v.status == Status::Fails && v.witness.size() == 2;
  add(r, expected ? Status::Holds : Status::Fails,
      "Lk(2) n=3 not closed (" + v.note + ")", std::move(w));
}

void count_l2(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(12), filter_top = ctx.cap(8);
  r.parameters = "generator n=2.." + std::to_string(top) + ", filter n<=" +
                 std::to_string(filter_top);
  Limits limits = ctx.limits;
  limits.generator_max_n = std::max(limits.generator_max_n, top);
  const ClassEngine gen(EngineOptions{limits, false, ComposeStrategy::Rightmost});
  const ClassExpr l2 = ClassExpr::layered_k(2);
  for (std::size_t n = 2; n <= top; ++n) {
    const std::size_t c = gen.slice(l2, n)->size();
    add(r, c == n ? Status::Holds : Status::Fails,
        "generator n=" + std::to_string(n) + " count=" + std::to_string(c));
  }
  for (std::size_t n = 2; n <= filter_top; ++n) {
    std::size_t c = 0;
    for_each_permutation(n, [&](const Permutation &p) {
      c += ctx.engine.member(l2, p);
    });
    add(r, c == n ? Status::Holds : Status::Fails,
        "filter n=" + std::to_string(n) + " count=" + std::to_string(c));
  }
}

/// Members of expr among all of S_n, streamed without materializing S_n.
std::size_t brute_count(const Context &ctx, const ClassExpr &expr,
                        std::size_t n) {
  if (n < 3) {
    std::size_t c = 0;
    for_each_permutation(n, [&](const Permutation &p) {
      c += ctx.engine.member(expr, p);
    });
    return c;
  }
  // one task per choice of the first two values
  std::atomic<std::size_t> total{0};
  const int nn = static_cast<int>(n);
  parallel_for(n * (n - 1), ctx.jobs, [&](std::size_t task) {
    const int a = static_cast<int>(task / (n - 1)) + 1;
    int b = static_cast<int>(task % (n - 1)) + 1;
    if (b >= a)
      ++b;
    std::vector<int> seq{a, b};
    for (int v = 1; v <= nn; ++v)
      if (v != a && v != b)
        seq.push_back(v);
    std::size_t local = 0;
    do {
      local += ctx.engine.member_values(expr, seq);
    } while (std::next_permutation(seq.begin() + 2, seq.end()));
    total += local;
  });
  return total.load();
}

void count_f2(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(20), brute_top = ctx.cap(12);
  r.parameters = "n=1.." + std::to_string(top) + ", brute force n<=" +
                 std::to_string(brute_top);
  Limits limits = ctx.limits;
  limits.generator_max_n = std::max(limits.generator_max_n, top);
  const ClassEngine gen(EngineOptions{limits, false, ComposeStrategy::Rightmost});
  const std::vector<std::size_t> counts = gen.count(ClassExpr::f2(), top);
  std::size_t prev2 = 0, prev1 = 0;
  for (std::size_t n = 1; n <= top; ++n) {
    const std::size_t expect = n == 1 ? 1 : n == 2 ? 2 : prev1 + prev2;
    prev2 = prev1;
    prev1 = expect;
    const std::size_t c = counts[n - 1];
    add(r, c == expect ? Status::Holds : Status::Fails,
        "n=" + std::to_string(n) + " count=" + std::to_string(c) +
            " recurrence=" + std::to_string(expect));
  }
  for (std::size_t n = 1; n <= brute_top; ++n) {
    const std::size_t c = brute_count(ctx, ClassExpr::f2(), n);
    add(r, c == counts[n - 1] ? Status::Holds : Status::Fails,
        "brute n=" + std::to_string(n) + " count=" + std::to_string(c));
  }
}

void thm52(const Context &ctx, SuiteResult &r, const char *alpha, int beta_len,
           const char *gamma, std::size_t default_cap) {
  const std::size_t top = ctx.cap(default_cap);
  const Permutation a = P(alpha), g = P(gamma);
  const Permutation pattern = direct_sum(
      direct_sum(a, Permutation::decreasing(static_cast<std::size_t>(beta_len))),
      g);
  r.parameters = std::string("alpha=") + alpha + " beta_len=" +
                 std::to_string(beta_len) + " gamma=" + gamma + ", Av(" +
                 pattern.str() + ") " + range_text(1, top);
  const ClassExpr cls = ClassExpr::avoid({pattern});
  for (std::size_t n = 1; n <= top; ++n) {
    std::atomic<std::size_t> violations{0};
    add_forall(r, ctx, *ctx.engine.slice(cls, n),
               "decompose_sum_avoider n=" + std::to_string(n),
               [&](const Permutation &p) {
                 try {
                   return is_valid(ctx.engine, decompose_sum_avoider(
                                                   ctx.engine, p, a, beta_len, g));
                 } catch (const ContractViolation &) {
                   ++violations;
                   return false;
                 } catch (const PreconditionError &) {
                   return false;
                 }
               });
    if (violations)
      add(r, Status::Fails, "jv_split contract violation at n=" +
                                std::to_string(n));
  }
}

void basis_h(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(6);
  r.parameters = "basis_up_to(Hk(2), " + std::to_string(top) + ")";
  const auto basis = ctx.engine.basis_up_to(ClassExpr::horiz_k(2), top);
  std::vector<std::string> w;
  for (const auto &p : basis)
    w.push_back(p.spaced());
  std::string listing;
  for (const auto &p : basis)
    listing += (listing.empty() ? "" : " ") + p.str();
  add(r, basis.size() == 3 ? Status::Holds : Status::Fails,
      "size " + std::to_string(basis.size()) + ": " + listing, w);
  for (const char *must : {"321", "2413"}) {
    const bool in = std::find(basis.begin(), basis.end(), P(must)) != basis.end();
    add(r, in ? Status::Holds : Status::Fails, std::string("contains ") + must);
  }
}

void lemma_blocks(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(6);
  r.parameters = "all pairs, " + range_text(1, top);
  for (std::size_t n = 1; n <= top; ++n) {
    const auto perms = all_permutations(n);
    std::vector<std::size_t> blocks(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
      blocks[i] = min_blocks(perms[i]).count();
    const std::size_t m = perms.size();
    const auto bad = detail::first_index_where(m * m, ctx.jobs, [&](std::size_t idx) {
      const std::size_t i = idx / m, j = idx % m;
      return min_blocks(compose(perms[i], perms[j])).count() >
             blocks[i] * blocks[j];
    });
    if (bad)
      add(r, Status::Fails, "n=" + std::to_string(n),
          {perms[*bad / m].spaced(), perms[*bad % m].spaced()});
    else
      add(r, Status::Holds,
          "n=" + std::to_string(n) + " (" + std::to_string(m * m) + " pairs)");
  }
}

void close_n_sigma(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(8);
  r.parameters = "t in {2,3}, layered " + range_text(1, top);
  for (int t : {2, 3})
    for (std::size_t n = 1; n <= top; ++n)
      add_forall(r, ctx, *ctx.engine.slice(ClassExpr::layered(), n),
                 "t=" + std::to_string(t) + " n=" + std::to_string(n),
                 [&](const Permutation &p) {
                   return is_close(p, normalize_short_layers(p, t), t, 0);
                 });
}

void gamma_far(const Context &ctx, SuiteResult &r) {
  r.parameters = "C=1 c=1 l=1, S_8";
  if (ctx.cap(8) < 8) {
    add(r, Status::Skipped, "order 8 above cap");
    return;
  }
  const Permutation gamma = gamma_pattern(1);
  const Permutation target =
      direct_sum(Permutation::decreasing(4), Permutation::decreasing(4));
  const auto perms = all_permutations(8);
  add_forall(r, ctx, perms,
             target.str() + " far from Av(" + gamma.str() + ")",
             [&](const Permutation &q) {
               return !(is_close(target, q, 1, 1) && avoids(q.values(), gamma));
             });
}

void vh_blockbound(const Context &ctx, SuiteResult &r) {
  const std::size_t top = ctx.cap(8);
  r.parameters = "eta in {14253, 132}, " + range_text(1, top);
  const ClassExpr h2 = ClassExpr::horiz_k(2);
  for (const char *text : {"14253", "132"}) {
    const Permutation eta = P(text);
    const bool ok = is_alternating(eta) && ctx.engine.member(h2, eta);
    add(r, ok ? Status::Holds : Status::Fails,
        std::string(text) + " is an alternating member of Hk(2)");
    const std::size_t bound = eta.size() + 1;
    for (std::size_t n = 1; n <= top; ++n)
      add_forall(r, ctx, *ctx.engine.slice(h2, n),
                 "eta=" + std::string(text) + " n=" + std::to_string(n),
                 [&](const Permutation &p) {
                   return contains(p, eta) || min_blocks(p).count() <= bound;
                 });
  }
}

const std::vector<std::pair<std::string, CheckFn>> &registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"fact-basic-equiv", fact_basic_equiv},
      {"lemma-kl",
       [](const Context &c, SuiteResult &r) {
         inclusion_check(c, r, "comp(Ik(2),Ik(2))", "Ik(4)", 6);
       }},
      {"lemma-extrakl",
       [](const Context &c, SuiteResult &r) {
         inclusion_check(c, r, "comp(merge(I,D),merge(I,D))",
                         "merge(Ik(2),Dk(2))", 6);
       }},
      {"lemma-basicsym", lemma_basicsym},
      {"lemma-VH-invert", lemma_vh_invert},
      {"lemma-behaviour-H",
       [](const Context &c, SuiteResult &r) {
         behaviour(c, r, BehaviourVariant::H,
                   {{"Lk(1)", 2}, {"Av(231)", 2}, {"D", 3}, {"Av(132)", 1}});
       }},
      {"lemma-behaviour-V",
       [](const Context &c, SuiteResult &r) {
         behaviour(c, r, BehaviourVariant::V,
                   {{"Av(21)", 2}, {"Av(132)", 2}, {"Lk(2)", 3}, {"D", 1}});
       }},
      {"lemma-behaviour-I",
       [](const Context &c, SuiteResult &r) {
         behaviour(c, r, BehaviourVariant::I,
                   {{"Av(21)", 2}, {"Av(231)", 2}, {"D", 2}, {"Lk(2)", 1}});
       }},
      {"lemma-important", lemma_important},
      {"thm-Ik-VkHk", thm_ik_vkhk},
      {"thm-k+l-1", thm_k_l_1},
      {"search-m-2-2", search_m_2_2},
      {"thm-L4", [](const Context &c, SuiteResult &r) { thm_l4(c, r, 4); }},
      {"thm-L4-k5", [](const Context &c, SuiteResult &r) { thm_l4(c, r, 5); }},
      {"lemma-L2-group", lemma_l2_group},
      {"count-L2", count_l2},
      {"count-F2", count_f2},
      {"thm52-111",
       [](const Context &c, SuiteResult &r) { thm52(c, r, "1", 1, "1", 7); }},
      {"thm52-21-1-21",
       [](const Context &c, SuiteResult &r) { thm52(c, r, "21", 1, "21", 6); }},
      {"basis-H-size3", basis_h},
      {"lemma-blocks", lemma_blocks},
      {"close-N-sigma", close_n_sigma},
      {"thm-L-gamma-far", gamma_far},
      {"prop-VH-blockbound", vh_blockbound},
  };
  return checks;
}

} // namespace

const std::vector<std::string> &registry_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, fn] : registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suite(const std::vector<std::string> &names,
                                   const SuiteOptions &options) {
  std::vector<const std::pair<std::string, CheckFn> *> selected;
  for (const auto &name : names) {
    if (name == "all") {
      for (const auto &entry : registry())
        selected.push_back(&entry);
      continue;
    }
    const auto it = std::find_if(registry().begin(), registry().end(),
                                 [&](const auto &e) { return e.first == name; });
    if (it == registry().end())
      throw UnknownCheck(name);
    selected.push_back(&*it);
  }

  const ClassEngine engine(
      EngineOptions{options.limits, true, ComposeStrategy::Rightmost});
  const Context ctx{engine, resolve_jobs(options.jobs), options.max_n,
                    options.limits};
  std::vector<SuiteResult> results;
  for (const auto *entry : selected) {
    SuiteResult r;
    r.name = entry->first;
    const auto start = Clock::now();
    try {
      entry->second(ctx, r);
    } catch (const ResourceLimitExceeded &e) {
      add(r, Status::Skipped, e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace permclass
