#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "indel/combinatorics.hpp"
#include "indel/errors.hpp"
#include "indel/lower_bounds.hpp"
#include "indel/oracle.hpp"

namespace indel::cli {

namespace {

constexpr std::string_view kNotAvailable = "n/a";

std::vector<std::string> split(std::string_view list, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : list) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  parts.push_back(current);
  parts.erase(std::remove(parts.begin(), parts.end(), std::string()), parts.end());
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParameterError("invalid " + what + " '" + text + "'");
  return value;
}

std::string join_aux(const std::map<std::string, std::string>& aux) {
  std::string text;
  for (const auto& [key, value] : aux) {
    if (!text.empty()) text += ';';
    text += key + "=" + value;
  }
  return text;
}

std::string join_words(const Code& code) {
  std::string text;
  for (const Word& w : code.words()) {
    if (!text.empty()) text += ' ';
    text += w.to_string();
  }
  return text;
}

std::vector<std::string> params_cells(const CodeParams& p) {
  return {std::to_string(p.q), std::to_string(p.n), std::to_string(p.d)};
}

BoundResult search_result(Method method, const CodeParams& params, ExactInt size, Direction direction) {
  BoundResult r;
  r.method = method;
  r.direction = direction;
  r.value = std::move(size);
  r.params = params;
  return r;
}

const std::vector<CodeParams> kTable1Rows{
    {2, 20, 4},  {2, 20, 10}, {2, 20, 20}, {2, 20, 30}, {2, 40, 4},  {2, 40, 10}, {2, 40, 20}, {2, 40, 30},
    {2, 40, 40}, {4, 20, 4},  {4, 20, 10}, {4, 20, 20}, {4, 20, 30}, {4, 40, 4},  {4, 40, 10}, {4, 40, 20},
    {4, 40, 40}, {4, 40, 60},
};

const std::vector<CodeParams> kTable2Rows{
    {2, 20, 6}, {2, 20, 8}, {2, 40, 6}, {2, 40, 8}, {2, 40, 10},
    {4, 20, 6}, {4, 20, 8}, {4, 40, 6}, {4, 40, 8}, {4, 40, 10},
};

// Accumulates one row per check and remembers the first failure.
class Checklist {
 public:
  Checklist() { report_.columns = {"suite", "case", "status", "detail"}; }

  void add(const std::string& suite, const std::string& name, bool pass, const std::string& detail) {
    report_.add_row({suite, name, pass ? "pass" : "FAIL", detail});
    if (!pass && pass_) {
      pass_ = false;
      first_failure_ = suite + " " + name + ": " + detail;
    }
  }

  VerifyOutcome finish(const VerifyOptions& options) {
    VerifyOutcome outcome;
    outcome.report = std::move(report_);
    outcome.report.add_meta("command", "verify");
    outcome.report.add_meta("suite", options.suite);
    outcome.pass = pass_;
    outcome.first_failure = first_failure_;
    return outcome;
  }

 private:
  Report report_;
  bool pass_ = true;
  std::string first_failure_;
};

std::string params_name(int q, long n, long t) {
  return "q=" + std::to_string(q) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
}

void suite_balls(Checklist& list, const VerifyOptions& options) {
  const int max_n = options.max_n.value_or(8);
  for (int q : {2, 3}) {
    for (long n = 0; n <= max_n; ++n) {
      for (long t = 0; t <= 3; ++t) {
        const auto r = oracle::verify_insertion_ball_sizes(q, n, t, options.guards.enumeration);
        list.add("balls", params_name(q, n, t), r.pass,
                 "enumerated " + to_decimal(r.lhs) + ", formula " + to_decimal(r.rhs));
      }
    }
  }
  const auto a = oracle::deletion_ball(Word::parse("000", 2), 1).size();
  const auto b = oracle::deletion_ball(Word::parse("010", 2), 1).size();
  list.add("balls", "deletion ball depends on the word", a != b,
           "|D_1(000)|=" + std::to_string(a) + " |D_1(010)|=" + std::to_string(b));
}

void suite_double_counting(Checklist& list, const VerifyOptions& options) {
  const int max_n = options.max_n.value_or(10);
  for (long n = 0; n <= max_n; ++n) {
    for (long t = 0; t <= 3; ++t) {
      const auto r = oracle::verify_double_counting(options.q, n, t, options.guards.enumeration);
      list.add("double_counting", params_name(options.q, n, t), r.pass,
               "sum |D_t(y)| = " + to_decimal(r.lhs) + ", q^n I_q(n,t) = " + to_decimal(r.rhs));
    }
  }
}

void suite_histogram(Checklist& list, const VerifyOptions& options) {
  const int max_n = options.max_n.value_or(14);
  for (auto [q, cap] : {std::pair{2, 14}, std::pair{3, 9}, std::pair{4, 7}}) {
    for (long n = 1; n <= std::min(max_n, cap); ++n) {
      const auto h = oracle::pair_histogram(n, q, options.guards.histogram);
      bool pass = true;
      std::string detail = "counts";
      for (long p = 0; p < static_cast<long>(h.counts.size()); ++p) {
        const ExactInt formula = count_words_by_pair_number(n, q, p);
        detail += " " + to_decimal(h.counts[p]);
        if (formula != h.counts[p]) {
          pass = false;
          detail += "(formula " + to_decimal(formula) + ")";
        }
      }
      list.add("histogram", "q=" + std::to_string(q) + " n=" + std::to_string(n), pass, detail);
    }
  }
}

void suite_list_size(Checklist& list, const VerifyOptions& options) {
  const int max_n = options.max_n.value_or(8);
  for (int d : {4, 6}) {
    for (int n = d / 2 + 1; n <= max_n; ++n) {
      const CodeParams params{2, n, d};
      const auto exact = exact_max_code(params, {}, options.guards.exact);
      const std::vector<std::pair<std::string, Code>> codes{
          {"exact", exact.code}, {"greedy", greedy_code(params, GreedyStrategy::kMinDegree, options.guards.greedy)}};
      for (const auto& [kind, code] : codes) {
        for (long t = 0; list_size_admissible(params, t); ++t) {
          const auto r = oracle::verify_list_size_bound(code, t, options.guards.enumeration);
          list.add("list_size", kind + " " + params.to_string() + " t=" + std::to_string(t), r.pass,
                   "max list " + std::to_string(r.max_list_size) + " at " + r.witness->to_string() + ", bound " +
                       to_decimal(r.bound));
        }
      }
    }
  }
  const Code pair(CodeParams{2, 2, 4}, {Word::parse("00", 2), Word::parse("11", 2)});
  const auto r = oracle::verify_list_size_bound(pair, 1, options.guards.enumeration);
  list.add("list_size", "{00,11} t=1", r.pass && r.max_list_size == 1,
           "max list " + std::to_string(r.max_list_size) + ", bound " + to_decimal(r.bound));
}

void suite_sandwich(Checklist& list, const VerifyOptions& options) {
  const int max_n = options.max_n.value_or(8);
  for (int n = std::max(2, options.d / 2); n <= max_n; ++n) {
    const CodeParams params{options.q, n, options.d};
    const auto exact = exact_max_code(params, {options.time_limit_seconds, 0}, options.guards.exact);
    std::string detail;
    bool pass = exact.complete;
    for (Method m : {Method::kLevenshteinLower, Method::kImprovedLowerClosedForm, Method::kImprovedLower,
                     Method::kSpherePacking, Method::kEliasType}) {
      try {
        const BoundResult b = evaluate(m, params, options.guards);
        const bool ok = b.direction == Direction::kLower ? b.value <= exact.size : exact.size <= b.value;
        pass = pass && ok;
        detail += std::string(method_tag(m)) + "=" + to_decimal(b.value) + (ok ? " " : "(violated) ");
      } catch (const InapplicableMethod&) {
        detail += std::string(method_tag(m)) + "=n/a ";
      }
    }
    detail += exact.complete ? "exact=" + to_decimal(exact.size)
                             : "exact search stopped at " + to_decimal(exact.size) + " <= A <= " +
                                   std::to_string(static_cast<long>(std::floor(exact.relaxation_bound + 1e-6)));
    list.add("sandwich", params.to_string(), pass, detail);
  }
}

void suite_unique_decoding(Checklist& list, const VerifyOptions& options) {
  const Code pair(CodeParams{2, 2, 4}, {Word::parse("00", 2), Word::parse("11", 2)});
  const auto trivial = oracle::verify_unique_decoding(pair, 1, 0, options.guards.enumeration);
  list.add("unique_decoding", "{00,11} a=1 b=0", trivial.pass, trivial.pass ? "disjoint" : "collision");
  for (const CodeParams params : {CodeParams{2, 6, 4}, CodeParams{2, 8, 6}}) {
    const auto exact = exact_max_code(params, {}, options.guards.exact);
    for (long a = 0; a <= params.radius(); ++a) {
      for (long b = 0; a + b <= params.radius(); ++b) {
        const auto r = oracle::verify_unique_decoding(exact.code, a, b, options.guards.enumeration);
        std::string detail = "size " + std::to_string(exact.code.size()) + ", ";
        detail += r.pass ? "disjoint"
                         : r.collision->first.to_string() + " and " + r.collision->second.to_string() + " share " +
                               r.shared->to_string();
        list.add("unique_decoding", "exact " + params.to_string() + " a=" + std::to_string(a) + " b=" + std::to_string(b),
                 r.pass, detail);
      }
    }
  }
}

}  // namespace

BoundResult evaluate(Method method, const CodeParams& params, const Guards& guards, const ExactSearchLimits& limits) {
  switch (method) {
    case Method::kSpherePacking:
      return sphere_packing_upper(params);
    case Method::kEliasType:
      return elias_type_upper(params);
    case Method::kLevenshteinLower:
      return levenshtein_lower(params);
    case Method::kImprovedLowerClosedForm:
      return improved_lower_closed_form(params);
    case Method::kImprovedLower:
      return improved_lower(params);
    case Method::kExact: {
      const auto r = exact_max_code(params, limits, guards.exact);
      BoundResult b = search_result(method, params, r.size, r.complete ? Direction::kExact : Direction::kLower);
      b.aux["complete"] = r.complete ? "true" : "false";
      b.aux["nodes"] = std::to_string(r.nodes);
      return b;
    }
    case Method::kGreedy: {
      const Code code = greedy_code(params, GreedyStrategy::kMinDegree, guards.greedy);
      BoundResult b =
          search_result(method, params, ExactInt(static_cast<unsigned long>(code.size())), Direction::kLower);
      b.aux["strategy"] = "min_degree";
      return b;
    }
  }
  throw std::logic_error("evaluate: unknown method");
}

std::vector<Method> parse_methods(std::string_view list) {
  std::vector<Method> methods;
  for (const std::string& tag : split(list, ',')) {
    const auto m = method_from_tag(tag);
    if (!m) throw ParameterError("unknown method '" + tag + "' (expected thm1, thm2, lev, cor3, thm4, exact, greedy)");
    methods.push_back(*m);
  }
  if (methods.empty()) throw ParameterError("empty method list");
  return methods;
}

std::vector<RateMethod> parse_rate_methods(std::string_view list) {
  const RateMethod all[] = {RateMethod::kSpherePacking, RateMethod::kEliasType, RateMethod::kHammingElias,
                            RateMethod::kMrrw, RateMethod::kGvTypeLower};
  std::vector<RateMethod> methods;
  for (const std::string& tag : split(list, ',')) {
    const auto* it = std::find_if(std::begin(all), std::end(all), [&](RateMethod m) { return rate_method_tag(m) == tag; });
    if (it == std::end(all)) throw ParameterError("unknown rate method '" + tag + "' (expected cor1, cor2, elias, mrrw, gv)");
    methods.push_back(*it);
  }
  if (methods.empty()) throw ParameterError("empty method list");
  return methods;
}

std::vector<CodeParams> parse_rows(std::string_view list) {
  std::vector<CodeParams> rows;
  for (const std::string& row : split(list, ',')) {
    const auto fields = split(row, ':');
    if (fields.size() != 3) throw ParameterError("row '" + row + "' is not of the form q:n:d");
    CodeParams p{parse_int(fields[0], "q"), parse_int(fields[1], "n"), parse_int(fields[2], "d")};
    p.validate();
    rows.push_back(p);
  }
  if (rows.empty()) throw ParameterError("empty row list");
  return rows;
}

BoundOutcome bound_report(const CodeParams& params, const std::vector<Method>& methods, const Guards& guards,
                          const ExactSearchLimits& limits) {
  params.validate();
  BoundOutcome outcome;
  Report& report = outcome.report;
  report.add_meta("command", "bound");
  report.add_meta("params", params.to_string());
  report.columns = {"q", "n", "d", "method", "direction", "value", "aux"};
  for (Method m : methods) {
    std::vector<std::string> row = params_cells(params);
    row.emplace_back(method_tag(m));
    try {
      const BoundResult r = evaluate(m, params, guards, limits);
      row.emplace_back(direction_name(r.direction));
      row.push_back(to_decimal(r.value));
      row.push_back(join_aux(r.aux));
    } catch (const InapplicableMethod& e) {
      row.emplace_back(direction_name(method_direction(m)));
      row.emplace_back(kNotAvailable);
      row.push_back(std::string("inapplicable: ") + e.what());
      outcome.inapplicable.push_back(std::string(method_tag(m)) + ": " + e.what());
    }
    report.add_row(std::move(row));
  }
  return outcome;
}

std::optional<TableSpec> builtin_table(std::string_view name) {
  if (name == "paper-table-1") return TableSpec{std::string(name), kTable1Rows, {"lev02", "kk13", "thm1", "thm2"}};
  if (name == "paper-table-2") return TableSpec{std::string(name), kTable2Rows, {"lev", "cor3", "thm4"}};
  return std::nullopt;
}

Report table_report(const TableSpec& spec, const Guards& guards) {
  Report report;
  report.add_meta("command", "table");
  report.add_meta("table", spec.name);
  report.columns = {"q", "n", "d"};
  std::vector<std::optional<Method>> methods;
  for (const std::string& column : spec.columns) {
    const auto m = method_from_tag(column);
    if (!m && column != "lev02" && column != "kk13") throw ParameterError("unknown table column '" + column + "'");
    methods.push_back(m);
    report.columns.push_back(column);
  }
  for (const CodeParams& params : spec.rows) {
    params.validate();
    std::vector<std::string> row = params_cells(params);
    for (const auto& m : methods) {
      if (!m) {
        row.emplace_back(kNotAvailable);
        continue;
      }
      try {
        row.push_back(to_decimal(evaluate(*m, params, guards).value));
      } catch (const InapplicableMethod&) {
        row.emplace_back(kNotAvailable);
      }
    }
    report.add_row(std::move(row));
  }
  return report;
}

Report rate_curve_report(const CurveSpec& spec) {
  if (!(spec.delta_min >= 0.0 && spec.delta_min < spec.delta_max && spec.delta_max <= 1.0)) {
    throw ParameterError("rate-curve: need 0 <= delta-min < delta-max <= 1");
  }
  if (!(spec.step > 0.0)) throw ParameterError("rate-curve: step must be positive");
  if (spec.q < 2) throw ParameterError("rate-curve: q must be at least 2");

  Report report;
  report.add_meta("command", "rate-curve");
  report.add_meta("q", std::to_string(spec.q));
  report.columns = {"method", "delta", "rate"};
  const auto points = static_cast<long>(std::floor((spec.delta_max - spec.delta_min) / spec.step + 1e-9)) + 1;
  for (RateMethod m : spec.methods) {
    for (long k = 0; k < points; ++k) {
      const double delta = spec.delta_min + static_cast<double>(k) * spec.step;
      std::string rate;
      try {
        RatePoint p;
        switch (m) {
          case RateMethod::kSpherePacking:
            p = rate_upper_sphere_packing(spec.q, delta);
            break;
          case RateMethod::kEliasType:
            p = rate_upper_elias_type(spec.q, delta);
            break;
          case RateMethod::kHammingElias:
            p = rate_upper_hamming_elias(spec.q, delta);
            break;
          case RateMethod::kMrrw:
            p = rate_upper_mrrw(spec.q, delta);
            break;
          case RateMethod::kGvTypeLower:
            p = rate_lower_gv_type(spec.q, delta);
            break;
        }
        rate = fixed6(p.rate);
      } catch (const DomainError&) {
        rate = kNotAvailable;
      }
      report.add_row({std::string(rate_method_tag(m)), fixed6(delta), rate});
    }
  }
  report.add_row({"bgh17", fixed6(bgh_zero_rate_threshold(spec.q)), fixed6(0.0)});
  return report;
}

VerifyOutcome run_verify(const VerifyOptions& options) {
  const auto& suites = verify_suites();
  if (options.suite != "all" && std::find(suites.begin(), suites.end(), options.suite) == suites.end()) {
    throw ParameterError("unknown suite '" + options.suite + "'");
  }
  Checklist list;
  auto want = [&](const char* name) { return options.suite == "all" || options.suite == name; };
  if (want("balls")) suite_balls(list, options);
  if (want("double_counting")) suite_double_counting(list, options);
  if (want("histogram")) suite_histogram(list, options);
  if (want("list_size")) suite_list_size(list, options);
  if (want("sandwich")) suite_sandwich(list, options);
  if (want("unique_decoding")) suite_unique_decoding(list, options);
  return list.finish(options);
}

Report exact_report(const CodeParams& params, const ExactSearchLimits& limits, const Guards& guards) {
  const auto r = exact_max_code(params, limits, guards.exact);
  Report report;
  report.add_meta("command", "exact");
  report.columns = {"q", "n", "d", "size", "complete", "nodes", "relaxation_bound", "code"};
  std::vector<std::string> row = params_cells(params);
  row.push_back(to_decimal(r.size));
  row.emplace_back(r.complete ? "true" : "false");
  row.push_back(std::to_string(r.nodes));
  row.push_back(fixed6(r.relaxation_bound));
  row.push_back(join_words(r.code));
  report.add_row(std::move(row));
  return report;
}

Report greedy_report(const CodeParams& params, GreedyStrategy strategy, const Guards& guards) {
  const Code code = greedy_code(params, strategy, guards.greedy);
  Report report;
  report.add_meta("command", "greedy");
  report.columns = {"q", "n", "d", "strategy", "size", "code"};
  std::vector<std::string> row = params_cells(params);
  row.emplace_back(strategy == GreedyStrategy::kLex ? "lex" : "min_degree");
  row.push_back(std::to_string(code.size()));
  row.push_back(join_words(code));
  report.add_row(std::move(row));
  return report;
}

}  // namespace indel::cli
