#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indel {

using Symbol = std::uint8_t;

inline constexpr int kMaxAlphabet = 36;

// Default enumeration guards, as log2 of the largest space walked.
inline constexpr int kExactGuardBits = 14;
inline constexpr int kGreedyGuardBits = 20;
inline constexpr int kHistogramGuardBits = 26;
inline constexpr int kEnumerationGuardBits = 26;

// A word over the alphabet {0, ..., q-1}.
class Word {
 public:
  Word() = default;
  // Throws ParameterError if q is outside [2, 36] or a symbol is >= q.
  Word(int q, std::vector<Symbol> symbols);

  // Digits 0-9 then a-z; "0110" with q = 2.
  static Word parse(std::string_view digits, int q);
  // The index-th word of [q]^length in lexicographic order.
  static Word from_index(std::uint64_t index, int q, std::size_t length);

  int alphabet_size() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  // Lexicographic rank within [q]^size().
  std::uint64_t index() const;
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  int q_ = 2;
  std::vector<Symbol> symbols_;
};

// q^length, throwing GuardExceeded when it exceeds 2^max_bits.
std::uint64_t space_size(int q, std::size_t length, int max_bits, std::string_view what);

}  // namespace indel
