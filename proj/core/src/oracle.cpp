#include "indel/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "detail/sequences.hpp"
#include "indel/codes.hpp"
#include "indel/combinatorics.hpp"
#include "indel/errors.hpp"
#include "indel/upper_bounds.hpp"

namespace indel::oracle {

namespace {

using namespace indel::detail;

void check_radius(const Word& x, long t, const char* where) {
  if (t < 0) throw ParameterError(std::string(where) + ": radius must be non-negative");
  if (static_cast<std::size_t>(t) > x.size()) {
    throw ParameterError(std::string(where) + ": cannot delete " + std::to_string(t) + " symbols from a word of length " +
                         std::to_string(x.size()));
  }
}

}  // namespace

std::size_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

long levenshtein_distance(const Word& x, const Word& y) {
  if (x.alphabet_size() != y.alphabet_size()) {
    throw ParameterError("levenshtein_distance: alphabet mismatch (" + std::to_string(x.alphabet_size()) + " vs " +
                         std::to_string(y.alphabet_size()) + ")");
  }
  const auto common = lcs_length(x.symbols(), y.symbols());
  return static_cast<long>(x.size() + y.size() - 2 * common);
}

bool is_subsequence(const Word& sub, const Word& super) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < super.size() && j < sub.size(); ++i) {
    if (super[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

std::vector<Word> deletion_ball(const Word& x, long t) {
  check_radius(x, t, "deletion_ball");
  return to_words(deletions_of(to_seq(x), t), x.alphabet_size());
}

std::vector<Word> insertion_ball(const Word& x, long t) {
  if (t < 0) throw ParameterError("insertion_ball: radius must be non-negative");
  return to_words(insertions_of({to_seq(x)}, x.alphabet_size(), t), x.alphabet_size());
}

std::vector<Word> indel_ball(const Word& x, long deletions, long insertions) {
  check_radius(x, deletions, "indel_ball");
  if (insertions < 0) throw ParameterError("indel_ball: insertions must be non-negative");
  return to_words(indel_of(to_seq(x), x.alphabet_size(), deletions, insertions), x.alphabet_size());
}

PairSet max_disjoint_pairs(const Word& x) {
  PairSet result;
  for (std::size_t i = 0; i + 1 < x.size();) {
    if (x[i] != x[i + 1]) {
      result.starts.push_back(i);
      i += 2;
    } else {
      ++i;
    }
  }
  result.count = static_cast<long>(result.starts.size());
  return result;
}

PairSet max_disjoint_pairs_exhaustive(const Word& x) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] != x[i + 1]) candidates.push_back(i);
  }
  if (candidates.size() > 24) throw GuardExceeded("max_disjoint_pairs_exhaustive: too many pairs");
  PairSet best;
  const std::uint32_t total = std::uint32_t{1} << candidates.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::size_t> chosen;
    bool disjoint = true;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (!((mask >> k) & 1U)) continue;
      if (!chosen.empty() && chosen.back() + 1 == candidates[k]) {
        disjoint = false;
        break;
      }
      chosen.push_back(candidates[k]);
    }
    if (!disjoint) continue;
    const long count = static_cast<long>(chosen.size());
    if (count > best.count || (count == best.count && chosen < best.starts)) {
      best.count = count;
      best.starts = std::move(chosen);
    }
  }
  return best;
}

PairDeletionFamily pair_deletion_family(const Word& x, long t, long p) {
  const long n = static_cast<long>(x.size());
  const PairSet pairs = max_disjoint_pairs(x);
  if (p < 0 || p > pairs.count) throw ParameterError("pair_deletion_family: need 0 <= p <= p(x)");
  if (p > t || p > n - t) throw ParameterError("pair_deletion_family: need p <= min(t, n - t)");
  if (p > 20) throw GuardExceeded("pair_deletion_family: 2^p words requested with p > 20");

  std::vector<bool> in_pair(x.size(), false);
  std::vector<bool> pair_start(x.size(), false);
  for (long j = 0; j < p; ++j) {
    pair_start[pairs.starts[j]] = true;
    in_pair[pairs.starts[j]] = true;
    in_pair[pairs.starts[j] + 1] = true;
  }
  std::vector<Symbol> parent;
  std::vector<std::size_t> pair_positions;  // where each pair's first symbol lands in parent
  long to_delete = t - p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!in_pair[i] && to_delete > 0) {
      --to_delete;
      continue;
    }
    if (pair_start[i]) pair_positions.push_back(parent.size());
    parent.push_back(x[i]);
  }

  PairDeletionFamily family;
  family.parent = Word(x.alphabet_size(), parent);
  const std::uint32_t patterns = std::uint32_t{1} << p;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    std::vector<bool> drop(parent.size(), false);
    for (long j = 0; j < p; ++j) drop[pair_positions[j] + ((mask >> j) & 1U)] = true;
    std::vector<Symbol> child;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      if (!drop[i]) child.push_back(parent[i]);
    }
    family.words.emplace_back(x.alphabet_size(), std::move(child));
  }
  return family;
}

PairHistogram pair_histogram(long n, int q, int max_space_bits) {
  if (n < 1) throw ParameterError("pair_histogram: n must be at least 1");
  space_size(q, static_cast<std::size_t>(n), max_space_bits, "pair_histogram");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n / 2 + 1), 0);
  for_each_word(q, static_cast<std::size_t>(n), [&](const Seq& s) { ++counts[seq_pair_count(s)]; });
  PairHistogram histogram{n, q, {}};
  for (std::uint64_t c : counts) histogram.counts.emplace_back(static_cast<unsigned long>(c));
  return histogram;
}

IdentityReport verify_double_counting(int q, long n, long t, int max_space_bits) {
  if (n < 0 || t < 0) throw ParameterError("verify_double_counting: n and t must be non-negative");
  space_size(q, static_cast<std::size_t>(n + t), max_space_bits, "verify_double_counting");
  std::uint64_t total = 0;
  for_each_word(q, static_cast<std::size_t>(n + t), [&](const Seq& y) { total += deletions_of(y, t).size(); });
  IdentityReport report;
  report.lhs = static_cast<unsigned long>(total);
  report.rhs = ipow(static_cast<unsigned long>(q), n) * insertion_ball_size(q, n, t);
  report.pass = report.lhs == report.rhs;
  return report;
}

IdentityReport verify_insertion_ball_sizes(int q, long n, long t, int max_space_bits) {
  if (n < 0 || t < 0) throw ParameterError("verify_insertion_ball_sizes: n and t must be non-negative");
  space_size(q, static_cast<std::size_t>(n), max_space_bits, "verify_insertion_ball_sizes");
  IdentityReport report;
  report.rhs = insertion_ball_size(q, n, t);
  report.pass = true;
  bool first = true;
  for_each_word(q, static_cast<std::size_t>(n), [&](const Seq& x) {
    if (!report.pass) return;
    const ExactInt size = static_cast<unsigned long>(insertions_of({x}, q, t).size());
    if (first || size != report.rhs) report.lhs = size;
    first = false;
    if (size != report.rhs) report.pass = false;
  });
  return report;
}

ListSizeReport verify_list_size_bound(const Code& code, long t, int max_space_bits) {
  const CodeParams& params = code.params();
  if (!list_size_admissible(params, t)) {
    throw ParameterError("verify_list_size_bound: t = " + std::to_string(t) + " violates t < nd/(2n - d) for " +
                         params.to_string());
  }
  space_size(params.q, static_cast<std::size_t>(params.n + t), max_space_bits, "verify_list_size_bound");
  std::vector<Seq> words;
  for (const Word& w : code.words()) words.push_back(to_seq(w));

  ListSizeReport report;
  report.bound = list_size_bound(params, t);
  std::optional<Seq> witness;
  for_each_word(params.q, static_cast<std::size_t>(params.n + t), [&](const Seq& y) {
    long count = 0;
    for (const Seq& c : words) count += seq_is_subsequence(c, y) ? 1 : 0;
    if (count > report.max_list_size || !witness) {
      report.max_list_size = count;
      witness = y;
    }
  });
  if (witness) report.witness = to_word(*witness, params.q);
  report.pass = ExactInt(report.max_list_size) <= floor(report.bound);
  return report;
}

ExactRational avg_indel_ball_size(int q, long n, long t, int max_space_bits) {
  if (t < 0 || t > n) throw ParameterError("avg_indel_ball_size: need 0 <= t <= n");
  const std::uint64_t words = space_size(q, static_cast<std::size_t>(n), max_space_bits, "avg_indel_ball_size");
  std::uint64_t total = 0;
  for_each_word(q, static_cast<std::size_t>(n), [&](const Seq& x) { total += indel_of(x, q, t, t).size(); });
  return make_rational(ExactInt(static_cast<unsigned long>(total)), ExactInt(static_cast<unsigned long>(words)));
}

UniqueDecodingReport verify_unique_decoding(const Code& code, long deletions, long insertions, int max_space_bits) {
  const CodeParams& params = code.params();
  if (deletions < 0 || insertions < 0 || deletions + insertions > params.radius()) {
    throw ParameterError("verify_unique_decoding: need deletions + insertions <= d/2 - 1 for " + params.to_string());
  }
  space_size(params.q, static_cast<std::size_t>(params.n + insertions), max_space_bits, "verify_unique_decoding");
  UniqueDecodingReport report;
  report.pass = true;
  std::unordered_map<Seq, std::size_t> owner;
  const auto& words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (Seq& z : indel_of(to_seq(words[i]), params.q, deletions, insertions)) {
      auto [it, inserted] = owner.emplace(z, i);
      if (!inserted && it->second != i) {
        report.pass = false;
        report.collision = std::make_pair(words[it->second], words[i]);
        report.shared = to_word(z, params.q);
        return report;
      }
    }
  }
  return report;
}

}  // namespace indel::oracle
