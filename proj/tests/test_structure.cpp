#include <doctest.h>

#include "expr_oracle.hpp"
#include "permclass/errors.hpp"
#include "permclass/structure.hpp"
#include "support.hpp"

using namespace permclass;
using support::P;
using support::seq;

namespace {

ClassExpr X(const char *text) { return ClassExpr::parse(text); }

const ClassEngine &engine() {
  static const ClassEngine e;
  return e;
}

const std::vector<ClassExpr> II{ClassExpr::inc(), ClassExpr::inc()};

} // namespace

TEST_CASE("layers and colayers examples") {
  CHECK(layers(P("4321"))->lengths == std::vector<int>{4});
  CHECK(layers(P("1432"))->lengths == std::vector<int>{1, 3});
  CHECK_FALSE(layers(P("2413")));
  CHECK(layers(Permutation{})->lengths.empty());
  CHECK(colayers(P("3412"))->lengths == std::vector<int>{2, 2});
  CHECK(from_layers(LayerShape{{1, 2, 1, 1}}) == P("13245"));
  CHECK(from_colayers(LayerShape{{2, 2}}) == P("3412"));
}

TEST_CASE("layers agree with the composition oracle, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    std::map<oracle::Seq, std::vector<int>> shape_of;
    for (const auto &c : oracle::compositions(n))
      shape_of[oracle::layered(c)] = c;
    for_each_permutation(static_cast<std::size_t>(n), [&](const Permutation &p) {
      const auto got = layers(p);
      const auto it = shape_of.find(seq(p));
      REQUIRE(got.has_value() == (it != shape_of.end()));
      if (got)
        REQUIRE(got->lengths == it->second);
      const auto co = colayers(p);
      REQUIRE(co.has_value() == layers(complement(p)).has_value());
      if (co)
        REQUIRE(from_colayers(*co) == p);
      // L_k membership <=> at most k layers
      for (int k = 1; k <= 3; ++k)
        REQUIRE(engine().member(ClassExpr::layered_k(k), p) ==
                (got && got->lengths.size() <= static_cast<std::size_t>(k)));
    });
  }
}

TEST_CASE("min_blocks examples") {
  CHECK(min_blocks(Permutation::identity(6)).count() == 1);
  const auto b = min_blocks(P("2143"));
  REQUIRE(b.count() == 2);
  CHECK(b.blocks[0] == Block{1, 2, BlockDirection::Decreasing});
  CHECK(b.blocks[1] == Block{3, 2, BlockDirection::Decreasing});
  CHECK(min_blocks(P("2413")).count() == 4);
  CHECK(min_blocks(P("2413")).blocks[0].direction == BlockDirection::Increasing);
  CHECK(min_blocks(Permutation{}).count() == 0);
}

TEST_CASE("min_blocks agrees with the segmentation oracle, n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto &s : oracle::perms(n)) {
      const Permutation p(s);
      const auto b = min_blocks(p);
      REQUIRE(b.count() == oracle::min_blocks(s));
      int next = 1;
      for (const auto &blk : b.blocks) {
        REQUIRE(blk.start == next);
        next += blk.length;
        for (int i = 1; i < blk.length; ++i) {
          const int step = blk.direction == BlockDirection::Increasing ? 1 : -1;
          REQUIRE(p.at(blk.start + i) == p.at(blk.start + i - 1) + step);
        }
      }
      REQUIRE(next == static_cast<int>(n) + 1);
    }
}

TEST_CASE("block product bound, n <= 5 exhaustive") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (const auto &p : all)
      for (const auto &q : all)
        REQUIRE(min_blocks(compose(p, q)).count() <=
                min_blocks(p).count() * min_blocks(q).count());
  }
}

TEST_CASE("gamma pattern") {
  CHECK(gamma_pattern(0) == P("21"));
  CHECK(gamma_pattern(1) == P("2143"));
  CHECK(gamma_pattern(2) == P("214365"));
  for (int c = 0; c <= 4; ++c)
    CHECK(min_blocks(gamma_pattern(c)).count() == static_cast<std::size_t>(c) + 1);
  CHECK_THROWS_AS(gamma_pattern(-1), PreconditionError);
}

TEST_CASE("normalize_short_layers and closeness") {
  CHECK(normalize_short_layers(P("3214"), 2) == P("3214"));
  CHECK(normalize_short_layers(P("3214"), 3) == P("1234"));
  CHECK(normalize_short_layers(Permutation::decreasing(5), 4) ==
        Permutation::decreasing(5));
  CHECK_THROWS_AS(normalize_short_layers(P("2413"), 2), PreconditionError);

  CHECK(is_close(P("2413"), P("2413"), 0, 0));
  CHECK(is_close(P("3214"), P("1234"), 3, 0));
  CHECK_FALSE(is_close(P("21"), P("12"), 0, 1));
  CHECK(is_close(P("21"), P("12"), 0, 2));
  CHECK_THROWS_AS(is_close(P("21"), P("123"), 0, 0), LengthMismatch);

  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto &p : *engine().slice(ClassExpr::layered(), n))
      for (int t : {1, 2, 3, 4}) {
        const Permutation q = normalize_short_layers(p, t);
        REQUIRE(is_close(p, q, t, 0));
        // oracle: flip every layer of length <= t
        std::vector<int> lens = layers(p)->lengths;
        oracle::Seq expect;
        int base = 0;
        for (int len : lens) {
          for (int i = 1; i <= len; ++i)
            expect.push_back(len <= t ? base + i : base + len + 1 - i);
          base += len;
        }
        REQUIRE(seq(q) == expect);
      }
}

TEST_CASE("merge_split examples") {
  auto c = merge_split(engine(), P("2143"), II);
  REQUIRE(c);
  CHECK(c->assignment == std::vector<int>{1, 2, 1, 2});
  CHECK(c->parts(2) == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK_FALSE(merge_split(engine(), P("321"), II));
  const std::vector<ClassExpr> id{ClassExpr::inc(), ClassExpr::dec()};
  c = merge_split(engine(), P("321"), id);
  REQUIRE(c);
  CHECK(c->parts(2) == std::vector<std::vector<int>>{{1}, {2, 3}});
}

TEST_CASE("merge_split with k increasing parts <=> lds <= k, n <= 7") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::vector<ClassExpr> parts(k, ClassExpr::inc());
    for (std::size_t n = 1; n <= 7; ++n)
      for_each_permutation(n, [&](const Permutation &p) {
        const auto c = merge_split(engine(), p, parts);
        REQUIRE(c.has_value() == (lds(p) <= k));
        if (c)
          for (const auto &part : c->parts(k))
            REQUIRE(lds(pattern_at(p, part)) <= 1);
      });
  }
}

TEST_CASE("vertical and horizontal split examples") {
  CHECK(vertical_split(engine(), P("2413"), II) == std::vector<int>{2});
  CHECK(horizontal_split(engine(), P("1324"), II) == std::vector<int>{2});
  CHECK_FALSE(vertical_split(engine(), P("321"), II));
  CHECK_FALSE(horizontal_split(engine(), P("321"), II));
}

TEST_CASE("splits agree with the cut oracles, n <= 6") {
  oracle::ExprOracle ref;
  const std::vector<std::vector<ClassExpr>> constraint_sets = {
      II,
      {ClassExpr::inc(), ClassExpr::dec()},
      {X("Av(231)"), ClassExpr::dec(), ClassExpr::inc()},
      {X("Lk(2)")}};
  for (const auto &cs : constraint_sets)
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto &s : oracle::perms(n)) {
        auto ok = [&](std::size_t i, const oracle::Seq &part) {
          return ref.member(cs[i], part);
        };
        const Permutation p(s);
        const auto v = vertical_split(engine(), p, cs);
        REQUIRE(v.has_value() == oracle::vertical_member(s, cs.size(), ok));
        if (v) {
          REQUIRE(v->size() + 1 == cs.size());
          REQUIRE(std::is_sorted(v->begin(), v->end()));
        }
        const auto h = horizontal_split(engine(), p, cs);
        REQUIRE(h.has_value() == oracle::horizontal_member(s, cs.size(), ok));
      }
}

TEST_CASE("jv_split examples") {
  const Permutation one = P("1");
  auto s = jv_split(Permutation{}, one, one, one);
  CHECK(s.a_values.empty());
  CHECK(s.c_values.empty());
  s = jv_split(P("321"), one, one, one);
  CHECK(s.a_values.empty());
  CHECK(s.c_values == std::vector<int>{3, 2, 1});
  s = jv_split(P("213"), one, one, one);
  CHECK(s.a_values == std::vector<int>{2, 1});
  CHECK(s.c_values == std::vector<int>{3});
  CHECK_THROWS_AS(jv_split(P("123"), one, one, one), PreconditionError);
}

TEST_CASE("jv_split succeeds on every avoider, n <= 7") {
  const std::vector<std::array<const char *, 3>> params = {
      {"1", "1", "1"}, {"21", "1", "21"}, {"1", "21", "1"}};
  for (const auto &[a, b, g] : params) {
    const Permutation alpha = P(a), beta = P(b), gamma = P(g);
    const Permutation ab = direct_sum(alpha, beta), bg = direct_sum(beta, gamma);
    const ClassExpr cls = ClassExpr::avoid({direct_sum(ab, gamma)});
    for (std::size_t n = 0; n <= 7; ++n)
      for (const auto &p : *engine().slice(cls, n)) {
        JvSplit s;
        REQUIRE_NOTHROW(s = jv_split(p, alpha, beta, gamma));
        REQUIRE(s.a_positions.size() + s.c_positions.size() == n);
        REQUIRE(avoids(s.a_values, ab));
        REQUIRE(avoids(s.c_values, bg));
        for (std::size_t i = 0; i < s.a_positions.size(); ++i) {
          REQUIRE(p.at(s.a_positions[i]) == s.a_values[i]);
          for (std::size_t j = 0; j < s.c_positions.size(); ++j)
            REQUIRE((s.a_positions[i] < s.c_positions[j] ||
                     s.a_values[i] < s.c_values[j]));
        }
      }
  }
}

TEST_CASE("alternating superpatterns") {
  CHECK(is_alternating(P("1")));
  CHECK(is_alternating(P("14253")));
  CHECK(is_alternating(P("132")));
  CHECK_FALSE(is_alternating(P("123")));
  CHECK_FALSE(is_alternating(P("21")));
  CHECK(alternating_superpattern(engine(), P("1")) == P("1"));
  const Permutation twelve = alternating_superpattern(engine(), P("12"));
  CHECK(twelve.size() <= 5);
  CHECK(contains(twelve, P("12")));
  const Permutation s231 = alternating_superpattern(engine(), P("231"));
  CHECK(s231.size() <= 7);
  CHECK(contains(s231, P("231")));
  CHECK_THROWS_AS(alternating_superpattern(engine(), P("321")), PreconditionError);

  const ClassExpr h2 = ClassExpr::horiz_k(2);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto &p : *engine().slice(h2, n)) {
      const Permutation a = alternating_superpattern(engine(), p);
      REQUIRE(is_alternating(a));
      REQUIRE(engine().member(h2, a));
      REQUIRE(contains(a, p));
      REQUIRE(a.size() <= 2 * n + 1);
    }
}

TEST_CASE("H_2 members avoiding an alternating eta are (m+1)-blocks, n <= 8") {
  const ClassExpr h2 = ClassExpr::horiz_k(2);
  for (const char *text : {"132", "14253"}) {
    const Permutation eta = P(text);
    REQUIRE(is_alternating(eta));
    REQUIRE(engine().member(h2, eta));
    for (std::size_t n = 1; n <= 8; ++n)
      for (const auto &p : *engine().slice(h2, n))
        if (!contains(p, eta))
          REQUIRE(min_blocks(p).count() <= eta.size() + 1);
  }
}

TEST_CASE("deletion distance") {
  CHECK(deletion_distance_to(engine(), P("2143"), X("Ik(2)"), 0) == 0u);
  CHECK(deletion_distance_to(engine(), P("321654987"),
                             X("or(Lk(2),rev(Lk(2)))"), 9) == 3u);
  CHECK(deletion_distance_to(engine(), P("2143"), X("Av(21)"), 4) == 2u);
  CHECK_FALSE(deletion_distance_to(engine(), P("321"), X("Av(21)"), 1));
  CHECK_THROWS_AS(deletion_distance_to(engine(), Permutation::decreasing(11),
                                       X("Av(21)"), 4),
                  ResourceLimitExceeded);
  // oracle: smallest d with some deletion set of size d leaving an increasing
  // sequence is n - lis; n <= 5 keeps d within the deletion cap of 4
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_permutation(n, [&](const Permutation &p) {
      REQUIRE(deletion_distance_to(engine(), p, X("I"), n) == n - lis(p));
    });
}
