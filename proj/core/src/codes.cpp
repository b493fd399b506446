#include "indel/codes.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

#include "detail/sequences.hpp"
#include "detail/set_packing.hpp"
#include "indel/clique.hpp"
#include "indel/errors.hpp"
#include "indel/oracle.hpp"

namespace indel {

namespace {

using detail::Seq;

std::uint64_t guarded_space(const CodeParams& params, int max_space_bits, const char* what, const char* hint) {
  params.validate();
  try {
    return space_size(params.q, static_cast<std::size_t>(params.n), max_space_bits, what);
  } catch (const GuardExceeded& e) {
    throw GuardExceeded(std::string(e.what()) + hint);
  }
}

// Ranks of all words of [q]^n within distance d - 2 of x, x included.
std::vector<std::uint32_t> conflict_ranks(const Seq& x, int q, long t) {
  std::vector<std::uint32_t> out;
  for (const Seq& y : detail::indel_of(x, q, t, t)) out.push_back(static_cast<std::uint32_t>(detail::seq_rank(y, q)));
  return out;
}

std::vector<Word> words_of(const std::vector<std::uint32_t>& ranks, const CodeParams& params) {
  std::vector<Word> words;
  words.reserve(ranks.size());
  for (std::uint32_t r : ranks) words.push_back(Word::from_index(r, params.q, static_cast<std::size_t>(params.n)));
  return words;
}

std::vector<Word> all_words(const CodeParams& params, std::uint64_t count) {
  std::vector<Word> words;
  words.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    words.push_back(Word::from_index(r, params.q, static_cast<std::size_t>(params.n)));
  }
  return words;
}

std::vector<std::uint32_t> greedy_lex(const CodeParams& params, std::uint64_t count, long t) {
  std::vector<char> blocked(count, 0);
  std::vector<std::uint32_t> chosen;
  for (std::uint64_t r = 0; r < count; ++r) {
    if (blocked[r]) continue;
    chosen.push_back(static_cast<std::uint32_t>(r));
    const Seq x = detail::seq_from_rank(r, params.q, static_cast<std::size_t>(params.n));
    for (std::uint32_t y : conflict_ranks(x, params.q, t)) blocked[y] = 1;
  }
  return chosen;
}

std::vector<std::uint32_t> greedy_min_degree(const CodeParams& params, std::uint64_t count, long t) {
  const auto length = static_cast<std::size_t>(params.n);
  auto neighbors = [&](std::uint64_t r) { return conflict_ranks(detail::seq_from_rank(r, params.q, length), params.q, t); };

  std::vector<std::uint32_t> degree(count);
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (degree, rank); smallest first
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::uint64_t r = 0; r < count; ++r) {
    degree[r] = static_cast<std::uint32_t>(neighbors(r).size() - 1);
    queue.emplace(degree[r], static_cast<std::uint32_t>(r));
  }
  std::vector<char> alive(count, 1);
  std::vector<std::uint32_t> chosen;
  while (!queue.empty()) {
    const auto [deg, x] = queue.top();
    queue.pop();
    if (!alive[x] || deg != degree[x]) continue;
    chosen.push_back(x);
    std::vector<std::uint32_t> removed;
    for (std::uint32_t u : neighbors(x)) {
      if (alive[u]) {
        alive[u] = 0;
        removed.push_back(u);
      }
    }
    for (std::uint32_t u : removed) {
      for (std::uint32_t w : neighbors(u)) {
        if (!alive[w]) continue;
        --degree[w];
        queue.emplace(degree[w], w);
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Best single-deletion code among the Varshamov-Tenengolts classes (q = 2)
// or Tenengolts classes (q > 2); every class has minimum distance >= 4.
std::vector<std::uint32_t> best_deletion_class(const CodeParams& params, std::uint64_t count) {
  const int q = params.q;
  const auto n = static_cast<std::size_t>(params.n);
  const std::uint64_t moduli = q == 2 ? n + 1 : n * static_cast<std::uint64_t>(q);
  std::vector<std::vector<std::uint32_t>> classes(moduli);
  for (std::uint64_t r = 0; r < count; ++r) {
    const Seq x = detail::seq_from_rank(r, q, n);
    std::uint64_t key = 0;
    if (q == 2) {
      for (std::size_t i = 0; i < n; ++i) key += (i + 1) * static_cast<std::uint64_t>(x[i]);
      key %= n + 1;
    } else {
      std::uint64_t moment = 0;
      std::uint64_t sum = static_cast<std::uint64_t>(x[0]);
      for (std::size_t i = 1; i < n; ++i) {
        if (x[i] >= x[i - 1]) moment += i;
        sum += static_cast<std::uint64_t>(x[i]);
      }
      key = (moment % n) * static_cast<std::uint64_t>(q) + sum % static_cast<std::uint64_t>(q);
    }
    classes[key].push_back(static_cast<std::uint32_t>(r));
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < classes.size(); ++k) {
    if (classes[k].size() > classes[best].size()) best = k;
  }
  return classes[best];
}

std::vector<std::uint32_t> initial_code(const CodeParams& params, std::uint64_t count, long t) {
  std::vector<std::uint32_t> code = greedy_min_degree(params, count, t);
  if (params.d == 4) {
    std::vector<std::uint32_t> algebraic = best_deletion_class(params, count);
    if (algebraic.size() > code.size()) code = std::move(algebraic);
  }
  return code;
}

}  // namespace

Code::Code(CodeParams params, std::vector<Word> words) : params_(params), words_(std::move(words)) {
  params_.validate();
  std::sort(words_.begin(), words_.end());
  for (const Word& w : words_) {
    if (w.alphabet_size() != params_.q || static_cast<long>(w.size()) != params_.n) {
      throw ParameterError("Code: word " + w.to_string() + " does not belong to " + params_.to_string());
    }
  }
  // Distance at most d - 2 means a common subsequence of length n - d/2 + 1.
  const long t = params_.radius();
  std::unordered_map<Seq, std::size_t> owner;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i > 0 && words_[i] == words_[i - 1]) throw ParameterError("Code: repeated word " + words_[i].to_string());
    for (Seq& z : detail::deletions_of(detail::to_seq(words_[i]), t)) {
      auto [it, inserted] = owner.emplace(std::move(z), i);
      if (!inserted && it->second != i) {
        throw ParameterError("Code: words " + words_[it->second].to_string() + " and " + words_[i].to_string() +
                             " are at distance below " + std::to_string(params_.d));
      }
    }
  }
}

std::optional<long> Code::min_distance() const {
  std::optional<long> best;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = i + 1; j < words_.size(); ++j) {
      const long dist = oracle::levenshtein_distance(words_[i], words_[j]);
      if (!best || dist < *best) best = dist;
    }
  }
  return best;
}

ExactCodeResult exact_max_code(const CodeParams& params, const ExactSearchLimits& limits, int max_space_bits) {
  const std::uint64_t count =
      guarded_space(params, max_space_bits, "exact_max_code", "; use greedy_code for a (non-maximum) code instead");
  const long t = params.radius();
  if (t == 0) {
    const auto size = static_cast<unsigned long>(count);
    return ExactCodeResult{ExactInt(size), Code(params, all_words(params, count)), true, 0, static_cast<double>(count)};
  }

  // One clique per y in [q]^(n-t): the words having y as a subsequence.
  detail::PackingInstance instance;
  instance.vertices = count;
  instance.cliques.resize(space_size(params.q, static_cast<std::size_t>(params.n - t), 62, "exact_max_code"));
  std::uint32_t rank = 0;
  detail::for_each_word(params.q, static_cast<std::size_t>(params.n), [&](const Seq& x) {
    for (const Seq& y : detail::deletions_of(x, t)) instance.cliques[detail::seq_rank(y, params.q)].push_back(rank);
    ++rank;
  });

  double relaxation = 0.0;
  const std::vector<double> cover = detail::clique_cover_weights(instance, &relaxation);
  const detail::PackingResult packing =
      detail::max_packing(instance, cover, initial_code(params, count, t), limits);

  ExactCodeResult result{ExactInt(static_cast<unsigned long>(packing.best.size())),
                         Code(params, words_of(packing.best, params)), packing.complete, packing.nodes, relaxation};
  return result;
}

ExactCodeResult exact_max_code_by_clique(const CodeParams& params, int max_space_bits) {
  const std::uint64_t count = guarded_space(params, max_space_bits, "exact_max_code_by_clique",
                                            "; use greedy_code for a (non-maximum) code instead");
  const long t = params.radius();
  Graph compatible(count);
  std::vector<char> conflict(count);
  std::uint64_t x = 0;
  detail::for_each_word(params.q, static_cast<std::size_t>(params.n), [&](const Seq& s) {
    std::fill(conflict.begin(), conflict.end(), 0);
    for (std::uint32_t y : conflict_ranks(s, params.q, t)) conflict[y] = 1;
    for (std::uint64_t y = x + 1; y < count; ++y) {
      if (!conflict[y]) compatible.add_edge(x, y);
    }
    ++x;
  });

  std::vector<std::size_t> incumbent;
  for (std::uint32_t r : initial_code(params, count, t)) incumbent.push_back(r);
  CliqueSearchStats stats;
  const std::vector<std::size_t> clique = maximum_clique(compatible, incumbent, &stats);
  std::vector<std::uint32_t> ranks(clique.begin(), clique.end());
  return ExactCodeResult{ExactInt(static_cast<unsigned long>(ranks.size())), Code(params, words_of(ranks, params)),
                         true, stats.nodes, 0.0};
}

Code greedy_code(const CodeParams& params, GreedyStrategy strategy, int max_space_bits) {
  const std::uint64_t count = guarded_space(params, max_space_bits, "greedy_code", "");
  const long t = params.radius();
  if (t == 0) return Code(params, all_words(params, count));
  const std::vector<std::uint32_t> ranks =
      strategy == GreedyStrategy::kLex ? greedy_lex(params, count, t) : greedy_min_degree(params, count, t);
  return Code(params, words_of(ranks, params));
}

}  // namespace indel
