#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indel/codes.hpp"
#include "indel/params.hpp"
#include "indel/upper_bounds.hpp"
#include "indel/word.hpp"
#include "report.hpp"

namespace indel::cli {

struct Guards {
  int exact = kExactGuardBits;
  int greedy = kGreedyGuardBits;
  int histogram = kHistogramGuardBits;
  int enumeration = kEnumerationGuardBits;

  static Guards uniform(int bits) { return Guards{bits, bits, bits, bits}; }
};

// Evaluates one method. exact and greedy run the searches; their value is a
// code size (aux "complete" tells whether an exact search finished).
BoundResult evaluate(Method method, const CodeParams& params, const Guards& guards,
                     const ExactSearchLimits& limits = {});

std::vector<Method> parse_methods(std::string_view list);
std::vector<RateMethod> parse_rate_methods(std::string_view list);
// "2:20:4,4:40:60"
std::vector<CodeParams> parse_rows(std::string_view list);

struct BoundOutcome {
  Report report;
  std::vector<std::string> inapplicable;  // "tag: reason"
};

BoundOutcome bound_report(const CodeParams& params, const std::vector<Method>& methods, const Guards& guards,
                          const ExactSearchLimits& limits);

struct TableSpec {
  std::string name;
  std::vector<CodeParams> rows;
  // Method tags, plus "lev02" and "kk13" for columns without a formula here.
  std::vector<std::string> columns;
};

std::optional<TableSpec> builtin_table(std::string_view name);
Report table_report(const TableSpec& spec, const Guards& guards);

struct CurveSpec {
  int q = 2;
  double delta_min = 0.0;
  double delta_max = 0.5;
  double step = 0.005;
  std::vector<RateMethod> methods;
};

// Throws ParameterError unless 0 <= delta_min < delta_max <= 1 and step > 0.
Report rate_curve_report(const CurveSpec& spec);

struct VerifyOptions {
  std::string suite = "all";
  int q = 2;
  std::optional<int> max_n;
  int d = 4;
  double time_limit_seconds = 120.0;
  Guards guards;
};

struct VerifyOutcome {
  Report report;
  bool pass = true;
  std::string first_failure;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"balls",     "double_counting", "histogram",
                                               "list_size", "sandwich",        "unique_decoding"};
  return suites;
}

VerifyOutcome run_verify(const VerifyOptions& options);

Report exact_report(const CodeParams& params, const ExactSearchLimits& limits, const Guards& guards);
Report greedy_report(const CodeParams& params, GreedyStrategy strategy, const Guards& guards);

}  // namespace indel::cli
