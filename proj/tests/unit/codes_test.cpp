#include <gtest/gtest.h>

#include "indel/clique.hpp"
#include "indel/codes.hpp"
#include "indel/combinatorics.hpp"
#include "indel/errors.hpp"
#include "indel/lower_bounds.hpp"
#include "indel/oracle.hpp"
#include "indel/upper_bounds.hpp"

namespace indel {
namespace {

Word w(const char* digits, int q = 2) { return Word::parse(digits, q); }

// Naive clique search over the compatibility graph; only for tiny spaces.
std::size_t naive_max_code(const CodeParams& p) {
  const std::size_t size = ipow(p.q, p.n).get_ui();
  Graph g(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (oracle::levenshtein_distance(Word::from_index(i, p.q, p.n), Word::from_index(j, p.q, p.n)) >= p.d) {
        g.add_edge(i, j);
      }
    }
  }
  return maximum_clique_naive(g).size();
}

void expect_valid(const ExactCodeResult& r, const CodeParams& p) {
  EXPECT_EQ(r.size, r.code.size());
  EXPECT_EQ(r.code.params(), p);
  if (r.code.size() > 1) {
    EXPECT_GE(*r.code.min_distance(), p.d);
  }
}

TEST(Code, Validation) {
  EXPECT_NO_THROW(Code(CodeParams{2, 2, 4}, {w("11"), w("00")}));
  EXPECT_THROW(Code(CodeParams{2, 2, 4}, {w("00"), w("01")}), ParameterError);
  EXPECT_THROW(Code(CodeParams{2, 2, 4}, {w("00"), w("00")}), ParameterError);
  EXPECT_THROW(Code(CodeParams{2, 3, 4}, {w("00")}), ParameterError);
  EXPECT_THROW(Code(CodeParams{3, 2, 4}, {w("00")}), ParameterError);
  EXPECT_THROW(Code(CodeParams{2, 2, 3}, {w("00")}), ParameterError);
}

TEST(Code, SortsAndMeasures) {
  const Code c(CodeParams{2, 4, 4}, {w("1111"), w("0000"), w("0011")});
  EXPECT_EQ(c.words().front(), w("0000"));
  EXPECT_EQ(c.min_distance(), 4);
  EXPECT_FALSE(Code(CodeParams{2, 4, 4}, {w("0101")}).min_distance().has_value());
}

TEST(Exact, SmallValues) {
  const long expected[] = {2, 2, 4, 6, 10, 16, 30};
  for (int n = 2; n <= 8; ++n) {
    const CodeParams p{2, n, 4};
    const ExactCodeResult r = exact_max_code(p);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.size, expected[n - 2]) << n;
    expect_valid(r, p);
  }
}

TEST(Exact, NineBitsDistanceFour) {
  const ExactCodeResult r = exact_max_code({2, 9, 4});
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.size, 52);
  expect_valid(r, {2, 9, 4});
}

TEST(Exact, TwoWordWitness) {
  const ExactCodeResult r = exact_max_code({2, 2, 4});
  EXPECT_EQ(r.size, 2);
  EXPECT_EQ(r.code.words(), (std::vector<Word>{w("00"), w("11")}));
  EXPECT_EQ(exact_max_code({2, 3, 4}).size, 2);
}

TEST(Exact, DistanceTwoIsWholeSpace) {
  for (int q = 2; q <= 3; ++q) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(exact_max_code({q, n, 2}).size, ipow(q, n));
  }
}

TEST(Exact, AgreesWithCliqueSearches) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 2 * n; d += 2) {
      const CodeParams p{2, n, d};
      const ExactInt a = exact_max_code(p).size;
      EXPECT_EQ(a, exact_max_code_by_clique(p).size) << p.to_string();
      EXPECT_EQ(a, naive_max_code(p)) << p.to_string();
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (int d = 4; d <= std::min(2 * n, 8); d += 2) {
      const CodeParams p{2, n, d};
      EXPECT_EQ(exact_max_code(p).size, exact_max_code_by_clique(p).size) << p.to_string();
    }
  }
  for (int n = 2; n <= 4; ++n) {
    for (int d = 4; d <= 2 * n; d += 2) {
      const CodeParams p{3, n, d};
      EXPECT_EQ(exact_max_code(p).size, exact_max_code_by_clique(p).size) << p.to_string();
    }
  }
  EXPECT_EQ(exact_max_code({3, 2, 4}).size, naive_max_code({3, 2, 4}));
}

TEST(Exact, TernaryAndLargerDistance) {
  const ExactCodeResult r = exact_max_code({3, 5, 4});
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.size, 24);
  expect_valid(r, {3, 5, 4});
  EXPECT_EQ(exact_max_code({2, 8, 6}).size, exact_max_code_by_clique({2, 8, 6}).size);
}

TEST(Exact, RelaxationBoundsTheSize) {
  for (int n = 4; n <= 8; ++n) {
    const ExactCodeResult r = exact_max_code({2, n, 4});
    EXPECT_GE(r.relaxation_bound + 1e-6, r.size.get_d()) << n;
  }
}

TEST(Exact, LimitsStopTheSearch) {
  const ExactCodeResult r = exact_max_code({2, 10, 4}, ExactSearchLimits{0.0, 5});
  EXPECT_FALSE(r.complete);
  EXPECT_GE(r.size, improved_lower({2, 10, 4}).value);
  EXPECT_LE(r.size, best_upper({2, 10, 4}).value);
  expect_valid(r, {2, 10, 4});
}

TEST(Exact, GuardIsEnforced) {
  EXPECT_THROW(exact_max_code({2, 15, 4}), GuardExceeded);
  EXPECT_THROW(exact_max_code({2, 10, 4}, {}, 9), GuardExceeded);
  EXPECT_THROW(exact_max_code_by_clique({2, 15, 4}), GuardExceeded);
}

TEST(Greedy, LexExamples) {
  for (int q = 2; q <= 3; ++q) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(greedy_code({q, n, 2}, GreedyStrategy::kLex).size(), ipow(q, n));
  }
  EXPECT_EQ(greedy_code({2, 2, 4}, GreedyStrategy::kLex).words(), (std::vector<Word>{w("00"), w("11")}));
}

TEST(Greedy, CodesAreMaximal) {
  for (GreedyStrategy s : {GreedyStrategy::kLex, GreedyStrategy::kMinDegree}) {
    const CodeParams p{2, 7, 4};
    const Code c = greedy_code(p, s);
    for (std::uint64_t i = 0; i < 128; ++i) {
      const Word x = Word::from_index(i, 2, 7);
      long closest = 100;
      for (const Word& y : c.words()) closest = std::min(closest, oracle::levenshtein_distance(x, y));
      EXPECT_LT(closest, p.d) << x.to_string();
    }
  }
}

TEST(Greedy, BetweenLowerBoundAndExact) {
  for (int n = 4; n <= 8; ++n) {
    const CodeParams p{2, n, 4};
    const ExactInt g = greedy_code(p, GreedyStrategy::kMinDegree).size();
    EXPECT_LE(g, exact_max_code(p).size);
    EXPECT_GE(g, improved_lower_closed_form(p).value) << n;
  }
}

TEST(Greedy, Deterministic) {
  EXPECT_EQ(greedy_code({3, 5, 4}, GreedyStrategy::kMinDegree).words(),
            greedy_code({3, 5, 4}, GreedyStrategy::kMinDegree).words());
}

TEST(Sandwich, SmallParameters) {
  for (int n = 2; n <= 9; ++n) {
    const CodeParams p{2, n, 4};
    const ExactInt a = exact_max_code(p).size;
    EXPECT_LE(improved_lower(p).value, a) << n;
    EXPECT_LE(a, best_upper(p).value) << n;
  }
  for (int n = 3; n <= 8; ++n) {
    const CodeParams p{2, n, 6};
    const ExactInt a = exact_max_code(p).size;
    EXPECT_LE(improved_lower(p).value, a) << n;
    EXPECT_LE(a, best_upper(p).value) << n;
  }
}

}  // namespace
}  // namespace indel
