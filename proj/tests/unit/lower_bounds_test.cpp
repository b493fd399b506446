#include <algorithm>

#include <gtest/gtest.h>

#include "indel/combinatorics.hpp"
#include "indel/errors.hpp"
#include "indel/lower_bounds.hpp"

namespace indel {
namespace {

TEST(LevenshteinLower, TableValues) {
  EXPECT_EQ(levenshtein_lower({2, 20, 6}).value, 94);
  EXPECT_EQ(levenshtein_lower({2, 20, 8}).value, 4);
  EXPECT_EQ(levenshtein_lower({2, 40, 6}).value, 6524894);
  EXPECT_EQ(levenshtein_lower({2, 40, 8}).value, 76814);
  EXPECT_EQ(levenshtein_lower({2, 40, 10}).value, 1687);
  EXPECT_EQ(levenshtein_lower({4, 20, 6}).value, 5608964);
  EXPECT_EQ(levenshtein_lower({4, 20, 8}).value, 66412);
  EXPECT_EQ(to_decimal(levenshtein_lower({4, 40, 6}).value), "379316355894427152");
}

TEST(LevenshteinLower, DistanceTwoIsTight) {
  for (int q = 2; q <= 4; ++q) {
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(levenshtein_lower({q, n, 2}).value, ipow(q, n));
  }
}

TEST(LevenshteinLower, NeverBelowOne) {
  const BoundResult r = levenshtein_lower({2, 5, 6});
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.aux.at("raw_floor"), "0");
}

TEST(ClosedForm, TableValues) {
  EXPECT_EQ(improved_lower_closed_form({2, 20, 6}).value, 94);
  EXPECT_EQ(improved_lower_closed_form({2, 40, 6}).value, 6526482);
  EXPECT_EQ(improved_lower_closed_form({2, 40, 8}).value, 76818);
  EXPECT_EQ(improved_lower_closed_form({4, 20, 6}).value, 5610710);
  EXPECT_EQ(improved_lower_closed_form({4, 20, 8}).value, 66419);
  EXPECT_EQ(to_decimal(improved_lower_closed_form({4, 40, 8}).value), "1031323792762824");
  EXPECT_EQ(to_decimal(improved_lower_closed_form({4, 40, 10}).value), "5251878194182");
  EXPECT_EQ(to_decimal(improved_lower_closed_form({4, 40, 6}).value), "379330757315377297");
}

TEST(ClosedForm, RefusesDistanceTwo) {
  EXPECT_THROW(improved_lower_closed_form({2, 10, 2}), InapplicableMethod);
  EXPECT_THROW(improved_lower({2, 10, 2}), InapplicableMethod);
}

TEST(ImprovedLower, AtLeastTheClosedForm) {
  EXPECT_GE(improved_lower({2, 40, 6}).value, 6526482);
  EXPECT_GE(improved_lower({4, 40, 10}).value, ExactInt("5251878194182"));
}

TEST(ImprovedLower, ChainOnGrid) {
  for (int q = 2; q <= 4; ++q) {
    for (int n = 2; n <= 40; ++n) {
      for (int d = 4; d <= std::min(12, 2 * n); d += 2) {
        const CodeParams p{q, n, d};
        const ExactInt lev = levenshtein_lower(p).value;
        const ExactInt cor3 = improved_lower_closed_form(p).value;
        const ExactInt thm4 = improved_lower(p).value;
        EXPECT_GE(thm4, cor3) << p.to_string();
        EXPECT_GE(cor3, lev) << p.to_string();
        EXPECT_LE(thm4, best_upper(p).value) << p.to_string();
      }
    }
  }
}

TEST(ImprovedLower, CorrectionIsNonNegative) {
  for (int n = 4; n <= 30; ++n) {
    for (int d = 4; d <= std::min(10, 2 * n); d += 2) EXPECT_GE(improved_lower_correction({2, n, d}), 0);
  }
}

TEST(PTilde, ZeroPairsGiveNothing) {
  const PTildeChoice c = best_p_tilde(20, 2, 3, 0);
  EXPECT_EQ(c.p_tilde, 0);
  EXPECT_EQ(c.objective, 0);
}

TEST(PTilde, ExhaustiveArgmax) {
  const PTildeChoice c = best_p_tilde(40, 2, 2, 5);
  ExactInt best = -1;
  long arg = -1;
  for (long p = 0; p <= 2; ++p) {
    const ExactInt v = (ipow(2, p) - 1) * insertion_ball_size(2, 40 - 2 + p, 2 - p);
    if (v > best) {
      best = v;
      arg = p;
    }
  }
  EXPECT_EQ(c.p_tilde, arg);
  EXPECT_EQ(c.objective, best);
}

TEST(PTilde, AtLeastTheSinglePairChoice) {
  for (long n = 2; n <= 30; ++n) {
    for (long t = 1; t < n; ++t) {
      for (long p = 1; p <= n / 2; ++p) {
        const PTildeChoice c = best_p_tilde(n, 3, t, p);
        EXPECT_GE(c.objective, insertion_ball_size(3, n - t + 1, t - 1));
        EXPECT_LE(c.p_tilde, std::min({p, t, n - t}));
      }
    }
  }
}

TEST(GvRate, Values) {
  EXPECT_NEAR(rate_lower_gv_type(2, 0.0).rate, 1.0, 1e-12);
  EXPECT_NEAR(rate_lower_gv_type(2, 0.1).rate, 0.162008, 1e-5);
  EXPECT_EQ(rate_lower_gv_type(2, 0.25).rate, 0.0);
  EXPECT_THROW(rate_lower_gv_type(2, 1.0), DomainError);
}

TEST(GvRate, BelowListSizeCurve) {
  for (int q : {2, 4}) {
    for (int k = 0; k * 0.005 < 1.0 - 1.0 / q; ++k) {
      const double delta = k * 0.005;
      EXPECT_LE(rate_lower_gv_type(q, delta).rate, rate_upper_elias_type(q, delta).rate + 1e-9);
    }
  }
}

}  // namespace
}  // namespace indel
