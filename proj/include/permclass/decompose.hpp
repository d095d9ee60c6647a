#ifndef PERMCLASS_DECOMPOSE_HPP
#define PERMCLASS_DECOMPOSE_HPP

#include <vector>

#include "permclass/class_algebra.hpp"
#include "permclass/class_expr.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

struct Factor {
  Permutation perm;
  ClassExpr cls;
};

/// target = factors[0] o factors[1] o ... , each factor a member of its class.
struct Factorization {
  Permutation target;
  std::vector<Factor> factors;

  /// Left-to-right composition of the factors.
  Permutation product() const;
};

/// Throws ContractViolation unless the factors recompose to the target and
/// each factor belongs to its class.
void validate(const ClassEngine &engine, const Factorization &f);
bool is_valid(const ClassEngine &engine, const Factorization &f);

/**
 * p = nu o eta with nu in Vk(k), eta in Hk(k).
 *
 * nu concatenates the canonical increasing chains of p; eta = nu^{-1} o p.
 * Requires lds(p) <= k.
 */
Factorization decompose_vk_hk(const ClassEngine &engine, const Permutation &p,
                              int k);

/**
 * p = sigma o tau with sigma in Ik(k), tau in Ik(l). Requires
 * lds(p) <= k + l - 1.
 *
 * Of the canonical chains s_1..s_{k+l-1}, the first k form `a`; the rest are
 * sorted into c. sigma interleaves a (in order) with c so that s_k and c form
 * one increasing run: each c-value goes right before the first s_k element
 * above it, or to the end. tau = sigma^{-1} o p.
 */
Factorization decompose_ik_il(const ClassEngine &engine, const Permutation &p,
                              int k, int l);

/**
 * p = x o y o z with x, z in Lk(k-1) and y in Lk(k-2), for layered p with
 * at most k layers and k >= 4. With fewer than k layers this is
 * p o delta o delta; otherwise the first four layers (a, b, c, d) are
 * regrouped as (a+b | c | d), (a+b | c+d), (a | b | c+d) above the
 * unchanged remainder.
 */
Factorization decompose_layered(const ClassEngine &engine, const Permutation &p,
                                int k);

/// For p avoiding alpha + delta_{beta_len} + gamma: nu = a.c from jv_split
/// and eta = nu^{-1} o p in Hk(2). nu's class is
/// and(V(Av(alpha+beta), Av(beta+gamma)), Av(alpha+beta+gamma)), without the
/// intersection when beta_len = 1.
Factorization decompose_sum_avoider(const ClassEngine &engine,
                                    const Permutation &p,
                                    const Permutation &alpha, int beta_len,
                                    const Permutation &gamma);

/// Rewrites p = f1 o ... o fk as p^r = f1^r o delta o f2^r o ... o fk^r.
Factorization rewrite_reverse(const Factorization &f);
/// Rewrites p = f1 o ... o fk as p^c = f1^c o delta o f2^c o ... o fk^c.
Factorization rewrite_complement(const Factorization &f);

} // namespace permclass

#endif
