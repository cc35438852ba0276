#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orderdim/core.hpp"
#include "orderdim/generators.hpp"
#include "support.hpp"

using namespace orderdim;
using support::ids;
using support::names;

namespace {

Poset f3() {
  std::vector<std::string> labels = {"a0", "a1", "a2", "b0", "b1", "b2"};
  std::vector<NamePair> pairs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) pairs.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
  return build_poset(labels, pairs);
}

}  // namespace

TEST(BuildPoset, Antichain) {
  const Poset P = build_poset({"a", "b"}, {});
  EXPECT_EQ(P.size(), 2u);
  EXPECT_TRUE(P.incomparable(0, 1));
}

TEST(BuildPoset, StandardExampleRelation) {
  const Poset P = f3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto a = P.index_of("a" + std::to_string(i));
      const auto b = P.index_of("b" + std::to_string(j));
      EXPECT_EQ(P.less(a, b), i != j);
      EXPECT_FALSE(P.less(b, a));
    }
  EXPECT_EQ(P, gen_fn(3).poset);
}

TEST(BuildPoset, Errors) {
  const std::vector<NamePair> cyc = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
  try {
    build_poset({"a", "b", "c"}, cyc);
    FAIL();
  } catch (const CycleError& e) {
    EXPECT_EQ(e.cycle().size(), 3u);
  }
  EXPECT_CODE(build_poset({"a", "a"}, {}), DuplicateLabel);
  const std::vector<NamePair> unknown = {{"a", "z"}};
  EXPECT_CODE(build_poset({"a"}, unknown), UnknownLabel);
}

TEST(BuildPoset, ClosureAndIdempotence) {
  const std::vector<NamePair> pairs = {{"a", "b"}, {"b", "c"}};
  const Poset P = build_poset({"a", "b", "c"}, pairs);
  EXPECT_TRUE(P.less(0, 2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Poset Q = random_poset(9, 0.3, seed);
    std::vector<NamePair> named;
    for (auto [x, y] : Q.strict_pairs()) named.emplace_back(Q.label(x), Q.label(y));
    EXPECT_EQ(build_poset(Q.labels(), named), Q);
    EXPECT_EQ(extend_acyclic(Q.labels(), named), Q);
    std::vector<NamePair> covers;
    for (auto [x, y] : Q.cover_pairs()) covers.emplace_back(Q.label(x), Q.label(y));
    EXPECT_EQ(build_poset(Q.labels(), covers), Q);
  }
}

TEST(BuildPoset, EmptyAndSingleton) {
  const Poset E = build_poset({}, {});
  EXPECT_TRUE(E.empty());
  EXPECT_EQ(linearize(E).size(), 0u);
  const Poset S = build_poset({"x"}, {});
  EXPECT_EQ(linearize(S).order(), std::vector<std::size_t>{0});
}

TEST(IncomparablePairs, Examples) {
  EXPECT_TRUE(incomparable_pairs(support::chain(3)).empty());
  EXPECT_EQ(incomparable_pairs(support::antichain(2)), (std::vector<IndexPair>{{0, 1}}));
  const Poset F2 = gen_fn(2).poset;  // a0 a1 b0 b1
  EXPECT_EQ(incomparable_pairs(F2), (std::vector<IndexPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST(Chains, IsChain) {
  const Poset P = f3();
  EXPECT_TRUE(is_chain(P, {}));
  EXPECT_TRUE(is_chain(P, ids(P, {"a0", "b1"})));
  EXPECT_FALSE(is_chain(P, ids(P, {"a0", "a1"})));
  const std::vector<std::size_t> bad = {17};
  EXPECT_CODE(is_chain(P, bad), IndexOutOfRange);
}

TEST(Chains, Incomparable) {
  const Poset F4 = gen_fn(4).poset;
  EXPECT_TRUE(chains_incomparable(F4, {}, ids(F4, {"a0", "b1"})));
  EXPECT_TRUE(chains_incomparable(F4, ids(F4, {"a3", "b2"}), ids(F4, {"a2", "b3"})));
  const Poset F5 = gen_fn(5).poset;
  EXPECT_FALSE(chains_incomparable(F5, ids(F5, {"a0", "b1"}), ids(F5, {"a2", "b3"})));
  EXPECT_CODE(chains_incomparable(F5, ids(F5, {"a0", "a1"}), {}), NotAChain);
}

TEST(Linearize, TieBreak) {
  EXPECT_EQ(linearize(support::antichain(2)).order(), (std::vector<std::size_t>{0, 1}));
  const std::vector<NamePair> ba = {{"b", "a"}};
  const Poset P = build_poset({"a", "b"}, ba);
  EXPECT_EQ(names(P, linearize(P).order()), (std::vector<std::string>{"b", "a"}));
  const Poset F2 = gen_fn(2).poset;
  EXPECT_EQ(names(F2, linearize(F2).order()), (std::vector<std::string>{"a0", "a1", "b0", "b1"}));
}

TEST(Linearize, RandomPosetsExtend) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Poset P = random_poset(12, 0.25, seed);
    EXPECT_TRUE(oracle::extends(P, linearize(P).order()));
  }
}

TEST(ExtendAcyclic, Examples) {
  const std::vector<NamePair> ab = {{"a", "b"}, {"b", "c"}};
  EXPECT_TRUE(extend_acyclic({"a", "b", "c"}, ab).less(0, 2));
  const std::vector<NamePair> two = {{"a", "b"}, {"b", "a"}};
  try {
    extend_acyclic({"a", "b"}, two);
    FAIL();
  } catch (const CycleError& e) {
    EXPECT_EQ(e.cycle().size(), 2u);
  }
  // F3 with a0 forced to the bottom and b0 to the top.
  const Poset F = f3();
  std::vector<NamePair> rel;
  for (auto [x, y] : F.strict_pairs()) rel.emplace_back(F.label(x), F.label(y));
  for (auto y : F.labels())
    if (y != "a0") rel.emplace_back("a0", y);
  for (auto x : F.labels())
    if (x != "b0") rel.emplace_back(x, "b0");
  const Poset G = extend_acyclic(F.labels(), rel);
  EXPECT_TRUE(G.less(G.index_of("a0"), G.index_of("b0")));
}

TEST(DownUpSets, Examples) {
  const Poset C = support::chain(3);
  EXPECT_EQ(down_set(C, 2), (ElementSet{0, 1}));
  const Poset F = f3();
  EXPECT_EQ(down_set(F, F.index_of("b0")), ids(F, {"a1", "a2"}));
  const Poset A = build_poset({"x", "y", "z"}, std::vector<NamePair>{{"x", "y"}});
  EXPECT_TRUE(up_set(A, 2).empty());
  EXPECT_CODE(down_set(A, 3), IndexOutOfRange);
}

TEST(OnlineLinearize, StageRule) {
  const std::vector<StreamItem> two = {{}, {}};
  EXPECT_EQ(online_linearize(two).order(), (std::vector<std::size_t>{1, 0}));
  const std::vector<StreamItem> forced = {{}, {0}};
  EXPECT_EQ(online_linearize(forced).order(), (std::vector<std::size_t>{0, 1}));
  const std::vector<StreamItem> three = {{}, {}, {1}};
  EXPECT_EQ(online_linearize(three).order(), (std::vector<std::size_t>{1, 2, 0}));
  const std::vector<StreamItem> bad = {{}, {0}, {1}};  // 2 above 1 but not above 0
  EXPECT_CODE(online_linearize(bad), InconsistentStream);
  const std::vector<StreamItem> ahead = {{}, {1}};
  EXPECT_CODE(online_linearize(ahead), InconsistentStream);
}

TEST(OnlineLinearize, RandomPresentation) {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Poset P = random_poset(1 + seed % 10, 0.35, seed);
    // Present P along a random linear extension so predecessors always arrive first.
    const auto exts = seed % 10 < 7 ? oracle::linear_extensions(P) : std::vector<oracle::Order>{linearize(P).order()};
    const auto& present = exts[rng() % exts.size()];
    OnlineLinearizer lin;
    std::vector<std::size_t> pos(P.size());
    for (std::size_t i = 0; i < present.size(); ++i) pos[present[i]] = i;
    for (std::size_t i = 0; i < present.size(); ++i) {
      std::vector<std::size_t> preds;
      for (std::size_t y = 0; y < P.size(); ++y)
        if (P.less(y, present[i])) preds.push_back(pos[y]);
      lin.push(preds);
      // every prefix is a linear extension of the prefix poset
      EXPECT_TRUE(oracle::extends(lin.prefix_poset(), lin.order()));
    }
    std::vector<std::size_t> back;
    for (auto s : lin.order()) back.push_back(present[s]);
    EXPECT_TRUE(oracle::extends(P, back));
  }
}

TEST(Subposets, RemoveAndRestrict) {
  const Poset F = f3();
  const auto drop = ids(F, {"a0", "b0"});
  const Subposet S = remove_elements(F, drop);
  EXPECT_EQ(S.poset.labels(), (std::vector<std::string>{"a1", "a2", "b1", "b2"}));
  EXPECT_TRUE(S.poset.less(0, 3));  // a1 < b2
  EXPECT_FALSE(S.poset.less(0, 2));
  const auto ext = linearize(F);
  const auto r = restrict_extension(ext, S);
  EXPECT_EQ(r.order(), oracle::restrict_to(ext.order(), S.parent_index));
  EXPECT_TRUE(r.extends(S.poset));
}

TEST(LinearExtension, Validation) {
  EXPECT_CODE(LinearExtension(std::vector<std::size_t>{0, 0}), SizeMismatch);
  const Poset C = support::chain(2);
  const LinearExtension rev(std::vector<std::size_t>{1, 0});
  EXPECT_FALSE(rev.extends(C));
  ASSERT_TRUE(rev.first_violation(C));
  EXPECT_EQ(*rev.first_violation(C), (IndexPair{0, 1}));
}
