#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orderdim/generators.hpp"
#include "orderdim/separators.hpp"
#include "support.hpp"

using namespace orderdim;

namespace {

SeparatorInstance chain4(ElementSet I, ElementSet F) {
  return make_instance(LinearExtension(std::vector<std::size_t>{0, 1, 2, 3}), std::move(I), std::move(F));
}

// Instance over a shuffled order: I drawn below a random cut, F above it.
SeparatorInstance drawn(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t cut = n ? rng() % (n + 1) : 0;
  ElementSet I, F;
  for (std::size_t r = 0; r < n; ++r) {
    if (rng() % 2) continue;
    (r < cut ? I : F).push_back(order[r]);
  }
  return make_instance(LinearExtension(order), I, F);
}

bool subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST(Ls, Examples) {
  EXPECT_TRUE(ls(chain4({}, {})).empty());
  const auto inst = chain4({0}, {3});
  EXPECT_EQ(ls(inst, SeparatorMode::minimal), (ElementSet{0}));
  EXPECT_EQ(ls(inst, SeparatorMode::maximal), (ElementSet{0, 1, 2}));
  EXPECT_TRUE(ls(chain4({}, {0, 1, 2, 3})).empty());
}

TEST(Ls, NotSeparated) {
  EXPECT_CODE(chain4({2}, {1}), NotSeparated);
  EXPECT_CODE(chain4({1}, {1}), NotSeparated);
  EXPECT_CODE(chain4({7}, {}), IndexOutOfRange);
  SeparatorInstance raw{LinearExtension(std::vector<std::size_t>{0, 1}), {1}, {0}};
  EXPECT_CODE(ls(raw), NotSeparated);
}

TEST(LsStar, Examples) {
  EXPECT_TRUE(ls_star({}).empty());
  const std::vector<SeparatorInstance> two = {chain4({0}, {3}), chain4({0}, {3})};
  const auto out = ls_star(two);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], out[1]);
  std::vector<SeparatorInstance> bad = two;
  bad.push_back(SeparatorInstance{LinearExtension(std::vector<std::size_t>{0, 1}), {1}, {0}});
  try {
    ls_star(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSeparated);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(SeparatorElements, Examples) {
  const std::vector<SeparatorInstance> insts = {chain4({0}, {3}), chain4({0, 1}, {2, 3})};
  EXPECT_EQ(separator_elements(insts), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(separator_elements({}).empty());
  const std::vector<SeparatorInstance> empty = {
      make_instance(LinearExtension(std::vector<std::size_t>{}), {}, {})};
  EXPECT_TRUE(separator_elements(empty).empty());
}

TEST(Embedding, Points) {
  EXPECT_EQ(ls_to_point(chain4({}, {})), Rational(1, 2));
  const auto pq = make_instance(LinearExtension(std::vector<std::size_t>{0, 1}), {0}, {1});
  const auto A = solution_interval(pq);
  EXPECT_EQ(A.lo, Rational(2, 5));
  EXPECT_EQ(A.hi, Rational(3, 5));
  EXPECT_EQ(ls_to_point(pq), Rational(1, 2));
  const auto first = make_instance(LinearExtension(std::vector<std::size_t>{0, 1}), {}, {0});
  EXPECT_EQ(solution_interval(first).hi, Rational(1, 5));
  EXPECT_EQ(ls_to_point(first), Rational(1, 10));
  // the grid follows the order, not the element index
  const auto rev = make_instance(LinearExtension(std::vector<std::size_t>{1, 0}), {}, {});
  EXPECT_EQ(embed(rev, 1, 0), Rational(1, 5));
  EXPECT_EQ(embed(rev, 0, 1), Rational(4, 5));
}

TEST(Embedding, PointToSeparator) {
  const auto pq = make_instance(LinearExtension(std::vector<std::size_t>{0, 1}), {0}, {1});
  EXPECT_EQ(point_to_separator(pq, ls_to_point(pq)), (ElementSet{0}));
  const auto free = chain4({}, {});
  EXPECT_TRUE(point_to_separator(free, Rational(0)).empty());
  const auto inst = chain4({0}, {3});
  const auto B = point_to_separator(inst, ls_to_point(inst));
  EXPECT_TRUE(oracle::is_separator(inst, B));
  EXPECT_CODE(point_to_separator(pq, Rational(1, 10)), PointOutsideInterval);
  EXPECT_CODE(point_to_separator(pq, Rational(9, 10)), PointOutsideInterval);
}

TEST(Xc1, Examples) {
  EXPECT_EQ(xc1_via_ls(RationalInterval(0, 1), 4), Rational(1, 2));
  EXPECT_EQ(xc1_via_ls(RationalInterval(Rational(1, 3), Rational(1, 3)), 8), Rational(1, 3));
  const RationalInterval mid(Rational(1, 4), Rational(3, 4));
  EXPECT_TRUE(mid.contains(xc1_via_ls(mid, 8)));
  EXPECT_CODE(RationalInterval(Rational(1, 2), Rational(1, 3)), InvalidInterval);
  EXPECT_CODE(RationalInterval(Rational(-1, 2), Rational(1, 3)), InvalidInterval);
  EXPECT_CODE(RationalInterval(Rational(0), Rational(3, 2)), InvalidInterval);
}

TEST(Xc1, RandomIntervals) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const unsigned long den = 1 + rng() % 50;
    unsigned long a = rng() % (den + 1), b = rng() % (den + 1);
    if (a > b) std::swap(a, b);
    const RationalInterval A(Rational(a, den), Rational(b, den));
    for (std::size_t depth : {1, 3, 8}) EXPECT_TRUE(A.contains(xc1_via_ls(A, depth)));
  }
}

TEST(SeparatorProperties, RandomInstances) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 500; ++t) {
    const auto inst = t % 2 ? drawn(rng() % 13, rng) : random_instance(rng() % 13, rng());
    const auto lo = ls(inst, SeparatorMode::minimal);
    const auto hi = ls(inst, SeparatorMode::maximal);
    EXPECT_TRUE(oracle::is_separator(inst, lo));
    EXPECT_TRUE(oracle::is_separator(inst, hi));
    EXPECT_TRUE(is_separator(inst, lo));
    EXPECT_TRUE(subset(lo, hi));
    for (const auto& S : oracle::all_separators(inst)) {
      EXPECT_TRUE(subset(lo, S));
      EXPECT_TRUE(subset(S, hi));
      EXPECT_TRUE(is_separator(inst, S));
    }
    const std::vector<SeparatorInstance> one = {inst};
    EXPECT_EQ(separator_elements(one).size() == 1, oracle::has_separator_element(inst));
    const auto x = ls_to_point(inst);
    EXPECT_TRUE(solution_interval(inst).contains(x));
    EXPECT_TRUE(oracle::is_separator(inst, point_to_separator(inst, x)));
  }
}

TEST(SeparatorProperties, IsSeparatorRejects) {
  const auto inst = chain4({0}, {3});
  EXPECT_FALSE(is_separator(inst, ElementSet{1}));     // misses I
  EXPECT_FALSE(is_separator(inst, ElementSet{0, 2}));  // not downward closed
  EXPECT_FALSE(is_separator(inst, ElementSet{0, 1, 2, 3}));
}
