#include "indel/word.hpp"

#include <algorithm>
#include <string>

#include "indel/errors.hpp"

namespace indel {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

void check_alphabet(int q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw ParameterError("alphabet size must lie in [2, " + std::to_string(kMaxAlphabet) + "], got " +
                         std::to_string(q));
  }
}

}  // namespace

Word::Word(int q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  check_alphabet(q);
  for (Symbol s : symbols_) {
    if (s >= q) throw ParameterError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
  }
}

Word Word::parse(std::string_view digits, int q) {
  check_alphabet(q);
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    const auto pos = kDigits.find(c);
    if (pos == std::string_view::npos) throw ParameterError(std::string("invalid symbol '") + c + "'");
    symbols.push_back(static_cast<Symbol>(pos));
  }
  return Word(q, std::move(symbols));
}

Word Word::from_index(std::uint64_t index, int q, std::size_t length) {
  check_alphabet(q);
  std::vector<Symbol> symbols(length);
  for (std::size_t i = length; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  if (index != 0) throw ParameterError("word index out of range for the given length");
  return Word(q, std::move(symbols));
}

std::uint64_t Word::index() const {
  std::uint64_t value = 0;
  for (Symbol s : symbols_) value = value * q_ + s;
  return value;
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(kDigits[s]);
  return out;
}

std::uint64_t space_size(int q, std::size_t length, int max_bits, std::string_view what) {
  check_alphabet(q);
  const double limit = static_cast<double>(std::uint64_t{1} << std::min(max_bits, 62));
  double size = 1.0;
  std::uint64_t exact = 1;
  for (std::size_t i = 0; i < length; ++i) {
    size *= q;
    if (size > limit) {
      throw GuardExceeded(std::string(what) + ": " + std::to_string(q) + "^" + std::to_string(length) +
                          " exceeds the enumeration guard of 2^" + std::to_string(max_bits));
    }
    exact *= static_cast<std::uint64_t>(q);
  }
  return exact;
}

}  // namespace indel
