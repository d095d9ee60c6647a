#include "permclass/decompose.hpp"

#include <algorithm>

#include "permclass/errors.hpp"
#include "permclass/structure.hpp"

namespace permclass {

Permutation Factorization::product() const {
  if (factors.empty())
    return Permutation::identity(target.size());
  Permutation out = factors.front().perm;
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = compose(out, factors[i].perm);
  return out;
}

void validate(const ClassEngine &engine, const Factorization &f) {
  const Permutation prod = f.product();
  if (prod != f.target)
    throw ContractViolation("factors of " + f.target.str() + " recompose to " +
                            prod.str());
  for (const auto &factor : f.factors)
    if (!engine.member(factor.cls, factor.perm))
      throw ContractViolation("factor " + factor.perm.str() + " is not in " +
                              factor.cls.render());
}

bool is_valid(const ClassEngine &engine, const Factorization &f) {
  try {
    validate(engine, f);
    return true;
  } catch (const ContractViolation &) {
    return false;
  }
}

Factorization decompose_vk_hk(const ClassEngine &engine, const Permutation &p,
                              int k) {
  if (k < 1 || lds(p) > static_cast<std::size_t>(k))
    throw PreconditionError("decompose_vk_hk needs lds(" + p.str() +
                            ") <= k = " + std::to_string(k));
  std::vector<int> nu_values;
  for (const auto &chain : increasing_chains(p))
    for (int pos : chain)
      nu_values.push_back(p.at(static_cast<std::size_t>(pos)));
  Permutation nu(std::move(nu_values), Permutation::unchecked);
  Permutation eta = compose(inverse(nu), p);
  Factorization f{p,
                  {{std::move(nu), ClassExpr::vert_k(k)},
                   {std::move(eta), ClassExpr::horiz_k(k)}}};
  validate(engine, f);
  return f;
}

Factorization decompose_ik_il(const ClassEngine &engine, const Permutation &p,
                              int k, int l) {
  if (k < 1 || l < 1 || lds(p) > static_cast<std::size_t>(k + l - 1))
    throw PreconditionError("decompose_ik_il needs lds(" + p.str() +
                            ") <= k + l - 1 = " + std::to_string(k + l - 1));
  const auto chains = increasing_chains(p);
  const std::size_t n = p.size();
  // chain index per position (0-based positions)
  std::vector<int> chain_of(n, 0);
  for (std::size_t c = 0; c < chains.size(); ++c)
    for (int pos : chains[c])
      chain_of[static_cast<std::size_t>(pos - 1)] = static_cast<int>(c);

  std::vector<int> c_values;
  for (std::size_t i = 0; i < n; ++i)
    if (chain_of[i] >= k)
      c_values.push_back(p[i]);
  std::sort(c_values.begin(), c_values.end());

  std::vector<int> sigma;
  sigma.reserve(n);
  std::size_t next_c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (chain_of[i] >= k)
      continue;
    if (chain_of[i] == k - 1)
      while (next_c < c_values.size() && c_values[next_c] < p[i])
        sigma.push_back(c_values[next_c++]);
    sigma.push_back(p[i]);
  }
  while (next_c < c_values.size())
    sigma.push_back(c_values[next_c++]);

  Permutation s(std::move(sigma), Permutation::unchecked);
  Permutation tau = compose(inverse(s), p);
  Factorization f{p,
                  {{std::move(s), ClassExpr::inc_k(k)},
                   {std::move(tau), ClassExpr::inc_k(l)}}};
  validate(engine, f);
  return f;
}

Factorization decompose_layered(const ClassEngine &engine, const Permutation &p,
                                int k) {
  if (k < 4)
    throw PreconditionError("decompose_layered needs k >= 4");
  const auto shape = layers(p);
  if (!shape || shape->lengths.size() > static_cast<std::size_t>(k))
    throw PreconditionError(p.str() + " is not layered with at most " +
                            std::to_string(k) + " layers");
  const ClassExpr outer = ClassExpr::layered_k(k - 1);
  const ClassExpr middle = ClassExpr::layered_k(k - 2);
  Factorization f{p, {}};
  const auto &len = shape->lengths;
  if (len.size() < static_cast<std::size_t>(k)) {
    const Permutation delta = Permutation::decreasing(p.size());
    f.factors = {{p, outer}, {delta, middle}, {delta, outer}};
  } else {
    const int a = len[0], b = len[1], c = len[2], d = len[3];
    const std::vector<int> rest(len.begin() + 4, len.end());
    auto build = [&](std::vector<int> head) {
      head.insert(head.end(), rest.begin(), rest.end());
      return from_layers(LayerShape{std::move(head)});
    };
    f.factors = {{build({a + b, c, d}), outer},
                 {build({a + b, c + d}), middle},
                 {build({a, b, c + d}), outer}};
  }
  validate(engine, f);
  return f;
}

Factorization decompose_sum_avoider(const ClassEngine &engine,
                                    const Permutation &p,
                                    const Permutation &alpha, int beta_len,
                                    const Permutation &gamma) {
  if (alpha.empty() || gamma.empty() || beta_len < 1)
    throw PreconditionError("alpha, gamma must be nonempty and beta_len >= 1");
  const Permutation beta = Permutation::decreasing(static_cast<std::size_t>(beta_len));
  const Permutation ab = direct_sum(alpha, beta);
  const Permutation bg = direct_sum(beta, gamma);
  const Permutation abg = direct_sum(ab, gamma);
  if (contains(p, abg))
    throw PreconditionError(p.str() + " contains " + abg.str());

  const JvSplit split = jv_split(p, alpha, beta, gamma);
  std::vector<int> nu_values = split.a_values;
  nu_values.insert(nu_values.end(), split.c_values.begin(), split.c_values.end());
  Permutation nu(std::move(nu_values), Permutation::unchecked);
  Permutation eta = compose(inverse(nu), p);

  ClassExpr nu_class = ClassExpr::vertical(
      {ClassExpr::avoid({ab}), ClassExpr::avoid({bg})});
  if (beta_len > 1)
    nu_class = ClassExpr::intersect({std::move(nu_class), ClassExpr::avoid({abg})});
  Factorization f{p,
                  {{std::move(nu), std::move(nu_class)},
                   {std::move(eta), ClassExpr::horiz_k(2)}}};
  validate(engine, f);
  return f;
}

namespace {

template <typename Symmetry>
Factorization rewrite_with(const Factorization &f, Symmetry sym,
                           ClassExpr (*wrap)(ClassExpr)) {
  Factorization out{sym(f.target), {}};
  const Permutation delta = Permutation::decreasing(f.target.size());
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0)
      out.factors.push_back({delta, ClassExpr::dec()});
    out.factors.push_back({sym(f.factors[i].perm), wrap(f.factors[i].cls)});
  }
  return out;
}

} // namespace

Factorization rewrite_reverse(const Factorization &f) {
  return rewrite_with(f, [](const Permutation &p) { return reverse(p); },
                      &ClassExpr::rev);
}

Factorization rewrite_complement(const Factorization &f) {
  return rewrite_with(f, [](const Permutation &p) { return complement(p); },
                      &ClassExpr::cpl);
}

} // namespace permclass
