#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indel/exact.hpp"
#include "indel/params.hpp"
#include "indel/word.hpp"

namespace indel {

// A set of length-n words with pairwise Levenshtein distance at least d.
class Code {
 public:
  // Sorts the words. Throws ParameterError on a word of the wrong length or
  // alphabet, a repeated word, or a pair closer than params.d.
  Code(CodeParams params, std::vector<Word> words);

  const CodeParams& params() const { return params_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  // Minimum pairwise distance by pairwise LCS; empty for fewer than two words.
  std::optional<long> min_distance() const;

 private:
  CodeParams params_;
  std::vector<Word> words_;
};

// Zero means unlimited.
struct ExactSearchLimits {
  double time_limit_seconds = 0.0;
  std::uint64_t node_limit = 0;
};

struct ExactCodeResult {
  ExactInt size;
  Code code;
  // False when a limit stopped the search; size is then only a lower bound.
  bool complete = true;
  std::uint64_t nodes = 0;
  // Value of the clique-packing relaxation used as the root bound; zero when
  // the search does not use one.
  double relaxation_bound = 0.0;
};

// Maximum code size A_q(n, d) with a witness. Branch-and-bound over the
// cliques "all supersequences of one length-(n - d/2 + 1) word", bounded by a
// dual solution of the clique-packing relaxation that is re-tightened at every
// node. The search starts from the larger of a greedy code and, for d = 4,
// the largest (Varshamov-)Tenengolts class. Throws GuardExceeded when q^n > 2^max_space_bits.
ExactCodeResult exact_max_code(const CodeParams& params, const ExactSearchLimits& limits = {},
                               int max_space_bits = kExactGuardBits);

// Same quantity through a generic maximum-clique search of the compatibility
// graph (edges join words at distance >= d). Independent cross-check.
ExactCodeResult exact_max_code_by_clique(const CodeParams& params, int max_space_bits = kExactGuardBits);

enum class GreedyStrategy { kLex, kMinDegree };

// Maximal code. kLex scans [q]^n in lexicographic order; kMinDegree repeatedly
// takes a minimum-degree word of the remaining conflict graph (smallest word on
// ties) and removes its closed neighborhood.
Code greedy_code(const CodeParams& params, GreedyStrategy strategy, int max_space_bits = kGreedyGuardBits);

}  // namespace indel
