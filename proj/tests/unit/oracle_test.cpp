#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "indel/codes.hpp"
#include "indel/combinatorics.hpp"
#include "indel/errors.hpp"
#include "indel/lower_bounds.hpp"
#include "indel/oracle.hpp"

namespace indel {
namespace {

using oracle::levenshtein_distance;

Word w(const char* digits, int q = 2) { return Word::parse(digits, q); }

std::set<std::string> strings(const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const Word& x : words) out.insert(x.to_string());
  return out;
}

TEST(Distance, Examples) {
  EXPECT_EQ(levenshtein_distance(w("0110"), w("0110")), 0);
  EXPECT_EQ(levenshtein_distance(w("00"), w("11")), 4);
  EXPECT_EQ(levenshtein_distance(w("0110"), w("1001")), 4);
  EXPECT_EQ(levenshtein_distance(w("012", 3), w("21", 3)), 3);
  EXPECT_THROW(levenshtein_distance(w("01"), w("01", 3)), ParameterError);
}

TEST(Distance, EvenSymmetricAndTriangular) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 100000; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 3);
    const std::size_t n = 1 + rng() % 12;
    const Word x = Word::from_index(rng() % static_cast<std::uint64_t>(std::pow(q, n)), q, n);
    const Word y = Word::from_index(rng() % static_cast<std::uint64_t>(std::pow(q, n)), q, n);
    const long dxy = levenshtein_distance(x, y);
    ASSERT_EQ(dxy % 2, 0) << x.to_string() << " " << y.to_string();
    if (trial % 10 == 0) {
      const Word z = Word::from_index(rng() % static_cast<std::uint64_t>(std::pow(q, n)), q, n);
      EXPECT_EQ(dxy, levenshtein_distance(y, x));
      EXPECT_LE(dxy, levenshtein_distance(x, z) + levenshtein_distance(z, y));
    }
  }
}

TEST(DeletionBall, Examples) {
  EXPECT_EQ(strings(oracle::deletion_ball(w("0110"), 0)), std::set<std::string>{"0110"});
  EXPECT_EQ(strings(oracle::deletion_ball(w("000"), 1)), std::set<std::string>{"00"});
  EXPECT_EQ(strings(oracle::deletion_ball(w("0101"), 1)), (std::set<std::string>{"101", "001", "011", "010"}));
  EXPECT_THROW(oracle::deletion_ball(w("01"), 3), ParameterError);
}

TEST(DeletionBall, SizeDependsOnTheWord) {
  EXPECT_NE(oracle::deletion_ball(w("000"), 1).size(), oracle::deletion_ball(w("010"), 1).size());
}

TEST(InsertionBall, Examples) {
  EXPECT_EQ(oracle::insertion_ball(w("010"), 0).size(), 1u);
  EXPECT_EQ(oracle::insertion_ball(w("010"), 1).size(), 5u);
  for (std::uint64_t i = 0; i < 64; ++i) EXPECT_EQ(oracle::insertion_ball(Word::from_index(i, 2, 6), 2).size(), 37u);
}

TEST(InsertionBall, SizeMatchesFormulaExhaustively) {
  for (int q : {2, 3}) {
    for (long n = 0; n <= 8; ++n) {
      for (long t = 0; t <= 3; ++t) {
        const auto r = oracle::verify_insertion_ball_sizes(q, n, t);
        EXPECT_TRUE(r.pass) << q << " " << n << " " << t << ": " << to_decimal(r.lhs) << " vs " << to_decimal(r.rhs);
      }
    }
  }
}

TEST(IndelBall, Composition) {
  EXPECT_EQ(strings(oracle::indel_ball(w("00"), 1, 1)), (std::set<std::string>{"00", "01", "10"}));
  EXPECT_EQ(strings(oracle::indel_ball(w("0110"), 0, 0)), std::set<std::string>{"0110"});
  for (std::uint64_t i = 0; i < 32; ++i) {
    const Word x = Word::from_index(i, 2, 5);
    EXPECT_EQ(oracle::indel_ball(x, 2, 0), oracle::deletion_ball(x, 2));
    EXPECT_EQ(oracle::indel_ball(x, 0, 2), oracle::insertion_ball(x, 2));
  }
}

TEST(IndelBall, MembersAreExactlyTheWordsWithinDistance) {
  for (std::uint64_t i = 0; i < 128; ++i) {
    const Word x = Word::from_index(i, 2, 7);
    const auto ball = strings(oracle::indel_ball(x, 2, 2));
    for (std::uint64_t j = 0; j < 128; ++j) {
      const Word y = Word::from_index(j, 2, 7);
      EXPECT_EQ(ball.count(y.to_string()) == 1, levenshtein_distance(x, y) <= 4);
    }
  }
}

TEST(Pairs, Examples) {
  const auto a = oracle::max_disjoint_pairs(w("01101"));
  EXPECT_EQ(a.count, 2);
  EXPECT_EQ(a.starts, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(oracle::max_disjoint_pairs(w("0000")).count, 0);
  EXPECT_EQ(oracle::max_disjoint_pairs(w("0101")).count, 2);
}

TEST(Pairs, GreedyScanIsLeftmostMaximum) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const Word x = Word::from_index(i, 2, n);
      const auto greedy = oracle::max_disjoint_pairs(x);
      const auto exhaustive = oracle::max_disjoint_pairs_exhaustive(x);
      ASSERT_EQ(greedy.count, exhaustive.count) << x.to_string();
      ASSERT_EQ(greedy.starts, exhaustive.starts) << x.to_string();
    }
  }
  for (std::uint64_t i = 0; i < 2187; ++i) {
    const Word x = Word::from_index(i, 3, 7);
    ASSERT_EQ(oracle::max_disjoint_pairs(x).starts, oracle::max_disjoint_pairs_exhaustive(x).starts);
  }
}

TEST(Pairs, DeletionFamilyHasTwoToThePWords) {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 300) {
    const int q = 2 + static_cast<int>(rng() % 3);
    const std::size_t n = 4 + rng() % 9;
    const Word x = Word::from_index(rng() % static_cast<std::uint64_t>(std::pow(q, n)), q, n);
    const long t = 1 + static_cast<long>(rng() % (n - 1));
    const long cap = std::min({oracle::max_disjoint_pairs(x).count, t, static_cast<long>(n) - t});
    if (cap < 1) continue;
    const long p = 1 + static_cast<long>(rng() % cap);
    const auto family = oracle::pair_deletion_family(x, t, p);
    const auto ball = strings(oracle::deletion_ball(x, t));
    const auto distinct = strings(family.words);
    ASSERT_EQ(family.words.size(), std::size_t{1} << p);
    ASSERT_EQ(distinct.size(), family.words.size()) << x.to_string() << " t=" << t << " p=" << p;
    for (const Word& y : family.words) {
      EXPECT_EQ(ball.count(y.to_string()), 1u);
      EXPECT_TRUE(oracle::is_subsequence(y, family.parent));
      for (const Word& z : family.words) EXPECT_LE(levenshtein_distance(y, z), 2 * p);
    }
    ++checked;
  }
}

TEST(Pairs, DeletionFamilyPreconditions) {
  EXPECT_THROW(oracle::pair_deletion_family(w("0000"), 1, 1), ParameterError);
  EXPECT_THROW(oracle::pair_deletion_family(w("0101"), 1, 2), ParameterError);
}

TEST(Histogram, Examples) {
  const auto h = oracle::pair_histogram(3, 2);
  EXPECT_EQ(h.counts, (std::vector<ExactInt>{2, 6}));
  const auto h5 = oracle::pair_histogram(5, 2);
  for (long p = 0; p <= 2; ++p) EXPECT_EQ(h5.counts[p], count_words_by_pair_number(5, 2, p));
}

TEST(Histogram, MatchesClosedFormula) {
  const std::pair<int, long> grids[] = {{2, 14}, {3, 9}, {4, 7}};
  for (auto [q, max_n] : grids) {
    for (long n = 1; n <= max_n; ++n) {
      const auto h = oracle::pair_histogram(n, q);
      ExactInt total = 0;
      for (long p = 0; p <= n / 2; ++p) {
        EXPECT_EQ(h.counts[p], count_words_by_pair_number(n, q, p)) << q << " " << n << " " << p;
        total += h.counts[p];
      }
      EXPECT_EQ(total, ipow(q, n));
    }
  }
}

TEST(Histogram, GuardIsEnforced) { EXPECT_THROW(oracle::pair_histogram(30, 2), GuardExceeded); }

TEST(DoubleCounting, Examples) {
  const auto r = oracle::verify_double_counting(2, 6, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, 2368);
  EXPECT_TRUE(oracle::verify_double_counting(3, 4, 1).pass);
  EXPECT_EQ(oracle::verify_double_counting(3, 5, 0).lhs, 243);
}

TEST(DoubleCounting, HoldsOnGrid) {
  for (long n = 0; n <= 10; ++n) {
    for (long t = 0; t <= 3; ++t) EXPECT_TRUE(oracle::verify_double_counting(2, n, t).pass) << n << " " << t;
  }
}

TEST(ListSize, TwoWordCode) {
  const Code code(CodeParams{2, 2, 4}, {w("00"), w("11")});
  const auto r1 = oracle::verify_list_size_bound(code, 1);
  EXPECT_TRUE(r1.pass);
  EXPECT_EQ(r1.max_list_size, 1);
  EXPECT_EQ(r1.bound, make_rational(3, 2));
  const auto r0 = oracle::verify_list_size_bound(code, 0);
  EXPECT_EQ(r0.bound, 1);
  EXPECT_LE(r0.max_list_size, 1);
}

TEST(ListSize, RejectsInadmissibleT) {
  const Code code(CodeParams{2, 4, 6}, {w("0000"), w("1111")});
  // nd / (2n - d) = 12 for (2, 4, 6).
  EXPECT_NO_THROW(oracle::verify_list_size_bound(code, 11));
  EXPECT_THROW(oracle::verify_list_size_bound(code, 12), ParameterError);
}

TEST(AverageBall, Values) {
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(oracle::avg_indel_ball_size(2, n, 0), 1);
  EXPECT_EQ(oracle::avg_indel_ball_size(2, 6, 1), make_rational(575, 32));
  EXPECT_EQ(oracle::avg_indel_ball_size(2, 7, 2), make_rational(5237, 64));
  EXPECT_EQ(oracle::avg_indel_ball_size(3, 4, 1), make_rational(607, 27));
}

TEST(AverageBall, BelowPairRefinedEstimate) {
  for (int q : {2, 3}) {
    for (long n = 2; n <= (q == 2 ? 10 : 6); ++n) {
      for (long t = 1; t < n && t <= 3; ++t) {
        const CodeParams p{q, static_cast<int>(n), static_cast<int>(2 * t + 2)};
        const ExactInt i = insertion_ball_size(q, n - t, t);
        const ExactRational estimate =
            make_rational(ipow(q, n - t) * i * i - improved_lower_correction(p), ipow(q, n));
        EXPECT_LE(oracle::avg_indel_ball_size(q, n, t), estimate) << p.to_string();
      }
    }
  }
}

TEST(UniqueDecoding, Examples) {
  const Code pair(CodeParams{2, 2, 4}, {w("00"), w("11")});
  EXPECT_TRUE(oracle::verify_unique_decoding(pair, 1, 0).pass);
  EXPECT_THROW(oracle::verify_unique_decoding(pair, 1, 1), ParameterError);
  const auto c6 = exact_max_code({2, 6, 4});
  EXPECT_TRUE(oracle::verify_unique_decoding(c6.code, 0, 1).pass);
  const auto c8 = exact_max_code({2, 8, 6});
  EXPECT_TRUE(oracle::verify_unique_decoding(c8.code, 1, 1).pass);
}

TEST(UniqueDecoding, RejectsTooManyEdits) {
  const Code close(CodeParams{2, 4, 4}, {w("0000"), w("0011")});
  EXPECT_THROW(oracle::verify_unique_decoding(close, 1, 1), ParameterError);
  const Code far(CodeParams{2, 4, 6}, {w("0000"), w("1111")});
  EXPECT_TRUE(oracle::verify_unique_decoding(far, 1, 1).pass);
}

}  // namespace
}  // namespace indel
