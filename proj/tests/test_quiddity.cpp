#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "friezes/errors.hpp"
#include "friezes/quiddity.hpp"
#include "oracles.hpp"

using namespace friezes;

TEST(Quiddity, IndexesTailsAndCore) {
  const auto q = corpus::worked();
  const std::vector<std::int64_t> expect{3, 3, 4, 2, 1, 6, 2, 2};
  for (std::int64_t i = -5; i <= 2; ++i) EXPECT_EQ(q.at(i), expect[static_cast<std::size_t>(i + 5)]);
  EXPECT_EQ(q.at(-1000), 3);
  EXPECT_EQ(q.at(1000), 2);
  EXPECT_EQ(q.core_end(), 1);
}

TEST(Quiddity, PeriodicPhase) {
  const auto q = QuiddityDescriptor::periodic({1, 5}, 3);
  EXPECT_EQ(q.at(3), 1);
  EXPECT_EQ(q.at(4), 5);
  EXPECT_EQ(q.at(-1), 1);
  EXPECT_EQ(q.at(0), 5);
}

TEST(Quiddity, RejectsBadPresentations) {
  EXPECT_THROW(QuiddityDescriptor({}, {2}, {2}, 0), PreconditionError);
  EXPECT_THROW(QuiddityDescriptor({2}, {0}, {2}, 0), InvalidQuiddity);
  EXPECT_THROW(QuiddityDescriptor({-1}, {}, {2}, 0), InvalidQuiddity);
}

TEST(Quiddity, ShiftMovesValues) {
  const auto q = corpus::worked();
  const auto s = shift(q, 4);
  for (std::int64_t i = -20; i <= 20; ++i) EXPECT_EQ(value_at(s, i), value_at(q, i - 4));
  EXPECT_FALSE(agree_on(q, s, -5, 5));
  EXPECT_TRUE(agree_on(q, shift(s, -4), -50, 50));
  EXPECT_TRUE(agree_on(QuiddityDescriptor::constant(2), QuiddityDescriptor({2, 2}, {}, {2}, 7), -9, 9));
}

TEST(Validate, KnownFriezesAreValid) {
  for (const auto& q : {corpus::constant2(), corpus::bump(), corpus::worked(),
                        corpus::enough_ones(), QuiddityDescriptor::constant(3)}) {
    const auto r = validate(q);
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.depth, 64);
    EXPECT_FALSE(r.witness);
  }
}

TEST(Validate, ReportsWitness) {
  const auto ones = QuiddityDescriptor::constant(1);
  const auto r = validate(ones);
  ASSERT_FALSE(r.valid());
  ASSERT_TRUE(r.witness);
  EXPECT_LE(r.witness->value, 0);
  EXPECT_EQ(r.witness->value, oracle::entry_by_matrices(ones, r.witness->i, r.witness->j));

  const QuiddityDescriptor adjacent({2}, {1, 1}, {2}, 0);
  const auto r2 = validate(adjacent);
  ASSERT_FALSE(r2.valid());
  EXPECT_EQ(r2.witness->j - r2.witness->i, 3);
  EXPECT_EQ(r2.witness->value, 0);
}

// validate() against a brute-force scan with the matrix-product oracle.
TEST(Validate, AgreesWithOracleScan) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> value(1, 5);
  std::uniform_int_distribution<int> len(0, 5);
  const int depth = 24;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> core(static_cast<std::size_t>(len(rng)));
    for (auto& v : core) v = value(rng);
    const QuiddityDescriptor q({value(rng)}, core, {value(rng)}, -2);
    bool positive = true;
    for (std::int64_t i = -2 - depth; i <= 5 + depth && positive; ++i) {
      for (std::int64_t j = i + 1; j <= i + depth; ++j) {
        if (oracle::entry_by_matrices(q, i, j) <= 0) {
          positive = false;
          break;
        }
      }
    }
    EXPECT_EQ(validate(q, depth).valid(), positive) << trial;
  }
}
