#include "indel/params.hpp"

#include <array>
#include <utility>

#include "indel/errors.hpp"

namespace indel {

void CodeParams::validate() const {
  if (q < 2) throw ParameterError("alphabet size q must be at least 2, got " + std::to_string(q));
  if (n < 1) throw ParameterError("length n must be at least 1, got " + std::to_string(n));
  if (d % 2 != 0) {
    throw ParameterError("minimum Levenshtein distance d must be even, got " + std::to_string(d));
  }
  if (d < 2) throw ParameterError("minimum Levenshtein distance d must be at least 2, got " + std::to_string(d));
  if (d > 2 * n) {
    throw ParameterError("d = " + std::to_string(d) + " exceeds 2n = " + std::to_string(2 * n));
  }
}

std::string CodeParams::to_string() const {
  return "(q=" + std::to_string(q) + ", n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
}

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kTags{{
    {Method::kSpherePacking, "thm1"},
    {Method::kEliasType, "thm2"},
    {Method::kLevenshteinLower, "lev"},
    {Method::kImprovedLowerClosedForm, "cor3"},
    {Method::kImprovedLower, "thm4"},
    {Method::kExact, "exact"},
    {Method::kGreedy, "greedy"},
}};

}  // namespace

std::string_view method_tag(Method method) {
  for (const auto& [m, tag] : kTags) {
    if (m == method) return tag;
  }
  return "unknown";
}

std::optional<Method> method_from_tag(std::string_view tag) {
  for (const auto& [m, t] : kTags) {
    if (t == tag) return m;
  }
  return std::nullopt;
}

Direction method_direction(Method method) {
  switch (method) {
    case Method::kSpherePacking:
    case Method::kEliasType:
      return Direction::kUpper;
    case Method::kExact:
      return Direction::kExact;
    default:
      return Direction::kLower;
  }
}

std::string_view direction_name(Direction direction) {
  switch (direction) {
    case Direction::kUpper:
      return "upper";
    case Direction::kLower:
      return "lower";
    case Direction::kExact:
      return "exact";
  }
  return "unknown";
}

}  // namespace indel
