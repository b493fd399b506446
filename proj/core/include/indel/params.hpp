#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "indel/exact.hpp"

namespace indel {

// Alphabet size q, word length n and minimum Levenshtein distance d.
struct CodeParams {
  int q = 2;
  int n = 1;
  int d = 2;

  // Throws ParameterError unless q >= 2, n >= 1, d even and 2 <= d <= 2n.
  void validate() const;

  // Radius d/2 - 1 used by every ball-based bound.
  int radius() const { return d / 2 - 1; }

  std::string to_string() const;
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

enum class Method {
  kSpherePacking,
  kEliasType,
  kLevenshteinLower,
  kImprovedLowerClosedForm,
  kImprovedLower,
  kExact,
  kGreedy,
};

enum class Direction { kUpper, kLower, kExact };

// Short command-line tag: thm1, thm2, lev, cor3, thm4, exact, greedy.
std::string_view method_tag(Method method);
std::optional<Method> method_from_tag(std::string_view tag);
Direction method_direction(Method method);
std::string_view direction_name(Direction direction);

struct BoundResult {
  Method method{};
  Direction direction{};
  ExactInt value;
  // Optimized or derived parameters, e.g. {"t", "5"}.
  std::map<std::string, std::string> aux;
  CodeParams params;
};

}  // namespace indel
