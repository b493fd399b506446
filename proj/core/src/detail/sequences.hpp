#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "indel/word.hpp"

namespace indel::detail {

// One byte per symbol; short sequences stay in the small-string buffer.
using Seq = std::string;

inline Seq to_seq(const Word& w) {
  Seq s(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>(w[i]);
  return s;
}

inline Word to_word(const Seq& s, int q) {
  std::vector<Symbol> symbols(s.begin(), s.end());
  return Word(q, std::move(symbols));
}

inline std::vector<Word> to_words(const std::vector<Seq>& seqs, int q) {
  std::vector<Word> out;
  out.reserve(seqs.size());
  for (const Seq& s : seqs) out.push_back(to_word(s, q));
  return out;
}

inline void sort_unique(std::vector<Seq>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Deleting any symbol of a run gives the same word, so only run starts are used.
inline void append_single_deletions(const Seq& s, std::vector<Seq>& out) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] == s[i - 1]) continue;
    Seq child = s;
    child.erase(i, 1);
    out.push_back(std::move(child));
  }
}

// Inserting a before s[i] with a == s[i] duplicates a later insertion; the
// remaining (|s| + 1)(q - 1) + 1 insertions are pairwise distinct.
inline void append_single_insertions(const Seq& s, int q, std::vector<Seq>& out) {
  for (std::size_t i = 0; i <= s.size(); ++i) {
    for (int a = 0; a < q; ++a) {
      const char c = static_cast<char>(a);
      if (i < s.size() && s[i] == c) continue;
      Seq child = s;
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(i), c);
      out.push_back(std::move(child));
    }
  }
}

inline std::vector<Seq> deletions_of(const Seq& x, long t) {
  std::vector<Seq> layer{x};
  std::vector<Seq> next;
  for (long step = 0; step < t; ++step) {
    next.clear();
    for (const Seq& s : layer) append_single_deletions(s, next);
    sort_unique(next);
    layer.swap(next);
  }
  return layer;
}

inline std::vector<Seq> insertions_of(const std::vector<Seq>& start, int q, long t) {
  std::vector<Seq> layer = start;
  std::vector<Seq> next;
  for (long step = 0; step < t; ++step) {
    next.clear();
    for (const Seq& s : layer) append_single_insertions(s, q, next);
    sort_unique(next);
    layer.swap(next);
  }
  return layer;
}

inline std::vector<Seq> indel_of(const Seq& x, int q, long deletions, long insertions) {
  return insertions_of(deletions_of(x, deletions), q, insertions);
}

inline bool seq_is_subsequence(const Seq& sub, const Seq& super) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < super.size() && j < sub.size(); ++i) {
    if (super[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

inline long seq_pair_count(const Seq& s) {
  long count = 0;
  for (std::size_t i = 0; i + 1 < s.size();) {
    if (s[i] != s[i + 1]) {
      ++count;
      i += 2;
    } else {
      ++i;
    }
  }
  return count;
}

// Calls f(seq) for every word of [q]^length in lexicographic order.
template <typename F>
void for_each_word(int q, std::size_t length, F&& f) {
  Seq s(length, '\0');
  while (true) {
    f(static_cast<const Seq&>(s));
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (s[i] + 1 < q) {
        ++s[i];
        break;
      }
      s[i] = 0;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

// Lexicographic rank of s within [q]^{|s|}.
inline std::uint64_t seq_rank(const Seq& s, int q) {
  std::uint64_t r = 0;
  for (char c : s) r = r * static_cast<std::uint64_t>(q) + static_cast<unsigned char>(c);
  return r;
}

inline Seq seq_from_rank(std::uint64_t rank, int q, std::size_t length) {
  Seq s(length, '\0');
  for (std::size_t i = length; i-- > 0;) {
    s[i] = static_cast<char>(rank % static_cast<std::uint64_t>(q));
    rank /= static_cast<std::uint64_t>(q);
  }
  return s;
}

}  // namespace indel::detail
