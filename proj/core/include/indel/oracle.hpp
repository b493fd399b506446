#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "indel/exact.hpp"
#include "indel/word.hpp"

namespace indel {

class Code;

// Brute-force ground truth used to check the closed-form bounds.
namespace oracle {

std::size_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b);

// Insertion/deletion distance |x| + |y| - 2 LCS(x, y). Throws ParameterError
// when the alphabets differ.
long levenshtein_distance(const Word& x, const Word& y);

bool is_subsequence(const Word& sub, const Word& super);

// Balls are returned as sorted, duplicate-free word lists.
std::vector<Word> deletion_ball(const Word& x, long t);
std::vector<Word> insertion_ball(const Word& x, long t);
// Words reachable by `deletions` deletions followed by `insertions` insertions.
std::vector<Word> indel_ball(const Word& x, long deletions, long insertions);

// Leftmost maximum set of index-disjoint distinct adjacent pairs. Each entry
// is the 0-based start i of a pair (i, i + 1).
struct PairSet {
  long count = 0;
  std::vector<std::size_t> starts;
};

PairSet max_disjoint_pairs(const Word& x);

// Exhaustive search over all subsets of distinct adjacent pairs; the
// lexicographically smallest maximum set. Exponential, for tests.
PairSet max_disjoint_pairs_exhaustive(const Word& x);

// The 2^p words of D_t(x) obtained by first deleting t - p symbols outside
// the first p pairs of the leftmost set (the first t - p such positions), then
// one symbol of each of those p pairs. All are subsequences of `parent`.
struct PairDeletionFamily {
  Word parent;
  std::vector<Word> words;
};

// Requires p <= p(x) and p <= min(t, |x| - t).
PairDeletionFamily pair_deletion_family(const Word& x, long t, long p);

struct PairHistogram {
  long n = 0;
  int q = 2;
  std::vector<ExactInt> counts;  // counts[p] = #{x : p(x) = p}, p = 0..n/2
};

PairHistogram pair_histogram(long n, int q, int max_space_bits = kHistogramGuardBits);

struct IdentityReport {
  bool pass = false;
  ExactInt lhs;
  ExactInt rhs;
};

// Sum over y in [q]^{n+t} of |D_t(y)| against q^n I_q(n, t).
IdentityReport verify_double_counting(int q, long n, long t, int max_space_bits = kEnumerationGuardBits);

// Every x in [q]^n has |I_t(x)| = I_q(n, t); lhs/rhs hold the first mismatch
// (or the common value).
IdentityReport verify_insertion_ball_sizes(int q, long n, long t, int max_space_bits = kEnumerationGuardBits);

struct ListSizeReport {
  bool pass = false;
  long max_list_size = 0;
  ExactRational bound;
  std::optional<Word> witness;  // a y attaining max_list_size
};

// Largest number of codewords that are subsequences of a single
// y in [q]^{n+t}, against (n+t)d / ((n+t)d - 2nt).
ListSizeReport verify_list_size_bound(const Code& code, long t, int max_space_bits = kEnumerationGuardBits);

// Exact average of |L_{t,t}(x)| over x in [q]^n.
ExactRational avg_indel_ball_size(int q, long n, long t, int max_space_bits = kEnumerationGuardBits);

struct UniqueDecodingReport {
  bool pass = false;
  std::optional<std::pair<Word, Word>> collision;
  std::optional<Word> shared;  // a word reachable from both codewords
};

// Pairwise disjointness of indel_ball(c, deletions, insertions) over the code;
// requires deletions + insertions <= d/2 - 1.
UniqueDecodingReport verify_unique_decoding(const Code& code, long deletions, long insertions,
                                            int max_space_bits = kEnumerationGuardBits);

}  // namespace oracle
}  // namespace indel
