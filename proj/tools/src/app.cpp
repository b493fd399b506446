#include "app.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "indel/errors.hpp"

namespace indel::cli {

namespace {

struct ParamsOptions {
  int q = 2;
  int n = 0;
  int d = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "alphabet size")->capture_default_str();
    cmd->add_option("--n", n, "word length")->required();
    cmd->add_option("--d", d, "minimum Levenshtein distance (even)")->required();
  }
  CodeParams params() const { return CodeParams{q, n, d}; }
};

struct LimitOptions {
  double time_limit = 0.0;
  std::uint64_t node_limit = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--time-limit", time_limit, "exact search time limit in seconds, 0 for none")->capture_default_str();
    cmd->add_option("--node-limit", node_limit, "exact search node limit, 0 for none")->capture_default_str();
  }
  ExactSearchLimits limits() const { return ExactSearchLimits{time_limit, node_limit}; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds on the size of insertion/deletion-correcting codes", "indelbounds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "csv";
  std::optional<int> guard_bits;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"csv", "json", "pretty"}))
      ->capture_default_str();
  app.add_option("--guard-max-space", guard_bits, "override every enumeration guard (log2 of the largest space)")
      ->check(CLI::Range(1, 40));

  int exit_code = kExitOk;
  std::function<void()> action;
  auto guards = [&] { return guard_bits ? Guards::uniform(*guard_bits) : Guards{}; };
  auto format = [&] { return *format_from_name(format_name); };

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate bounds for one (q, n, d)");
  ParamsOptions bound_params;
  LimitOptions bound_limits;
  std::string bound_methods = "thm1,thm2,lev,cor3,thm4";
  bound_params.attach(bound);
  bound_limits.attach(bound);
  auto* methods_opt = bound->add_option("--methods", bound_methods, "comma-separated method tags")->capture_default_str();
  bound->callback([&] {
    action = [&] {
      const auto outcome =
          bound_report(bound_params.params(), parse_methods(bound_methods), guards(), bound_limits.limits());
      write_report(out, outcome.report, format());
      if (methods_opt->count() > 0 && !outcome.inapplicable.empty()) {
        for (const auto& why : outcome.inapplicable) err << "indelbounds: " << why << '\n';
        exit_code = kExitInapplicable;
      }
    };
  });

  // table
  auto* table = app.add_subcommand("table", "reproduce a built-in table or evaluate a custom one");
  std::string table_name;
  std::string table_rows;
  std::string table_columns = "thm1,thm2,lev,cor3,thm4";
  table->add_option("name", table_name, "paper-table-1, paper-table-2 or custom")->required();
  table->add_option("--rows", table_rows, "custom rows, e.g. 2:20:4,4:40:60");
  table->add_option("--columns", table_columns, "custom columns (method tags)")->capture_default_str();
  table->callback([&] {
    action = [&] {
      TableSpec spec;
      if (table_name == "custom") {
        if (table_rows.empty()) throw ParameterError("table custom: --rows is required");
        spec.name = "custom";
        spec.rows = parse_rows(table_rows);
        for (Method m : parse_methods(table_columns)) spec.columns.emplace_back(method_tag(m));
      } else {
        auto builtin = builtin_table(table_name);
        if (!builtin) throw ParameterError("unknown table '" + table_name + "' (paper-table-1, paper-table-2, custom)");
        spec = std::move(*builtin);
      }
      write_report(out, table_report(spec, guards()), format());
    };
  });

  // rate-curve
  auto* curve = app.add_subcommand("rate-curve", "emit asymptotic rate curves as method,delta,rate");
  CurveSpec curve_spec;
  std::optional<double> delta_max;
  std::string curve_methods = "cor1,cor2,elias,mrrw,gv";
  curve->add_option("--q", curve_spec.q, "alphabet size")->capture_default_str();
  curve->add_option("--delta-min", curve_spec.delta_min, "first delta")->capture_default_str();
  curve->add_option("--delta-max", delta_max, "last delta (default 1 - 1/q)");
  curve->add_option("--step", curve_spec.step, "grid step")->capture_default_str();
  curve->add_option("--methods", curve_methods, "comma-separated rate methods")->capture_default_str();
  curve->callback([&] {
    action = [&] {
      curve_spec.delta_max = delta_max.value_or(1.0 - 1.0 / curve_spec.q);
      curve_spec.methods = parse_rate_methods(curve_methods);
      write_report(out, rate_curve_report(curve_spec), format());
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check the formulas against brute-force enumeration");
  VerifyOptions verify_options;
  std::vector<std::string> suite_names = verify_suites();
  suite_names.emplace_back("all");
  verify->add_option("--suite", verify_options.suite, "suite to run")
      ->check(CLI::IsMember(suite_names))
      ->capture_default_str();
  verify->add_option("--q", verify_options.q, "alphabet size for double_counting and sandwich")->capture_default_str();
  verify->add_option("--max-n", verify_options.max_n, "largest word length (suite-specific default)");
  verify->add_option("--d", verify_options.d, "distance for sandwich")->capture_default_str();
  verify->add_option("--time-limit", verify_options.time_limit_seconds, "exact search limit per sandwich case, seconds")
      ->capture_default_str();
  verify->callback([&] {
    action = [&] {
      verify_options.guards = guards();
      const VerifyOutcome outcome = run_verify(verify_options);
      write_report(out, outcome.report, format());
      const auto failed = std::count_if(outcome.report.rows.begin(), outcome.report.rows.end(),
                                        [](const auto& row) { return row[2] != "pass"; });
      err << "verify " << verify_options.suite << ": " << outcome.report.rows.size() - failed << " passed, " << failed
          << " failed\n";
      if (!outcome.pass) {
        err << "first failure: " << outcome.first_failure << '\n';
        exit_code = kExitFailure;
      }
    };
  });

  // exact
  auto* exact = app.add_subcommand("exact", "maximum code size by exhaustive search");
  ParamsOptions exact_params;
  LimitOptions exact_limits;
  exact_params.attach(exact);
  exact_limits.attach(exact);
  exact->callback([&] {
    action = [&] { write_report(out, exact_report(exact_params.params(), exact_limits.limits(), guards()), format()); };
  });

  // greedy
  auto* greedy = app.add_subcommand("greedy", "maximal code by a greedy rule");
  ParamsOptions greedy_params;
  std::string strategy = "min_degree";
  greedy_params.attach(greedy);
  greedy->add_option("--strategy", strategy, "lex or min_degree")
      ->check(CLI::IsMember({"lex", "min_degree"}))
      ->capture_default_str();
  greedy->callback([&] {
    action = [&] {
      const auto s = strategy == "lex" ? GreedyStrategy::kLex : GreedyStrategy::kMinDegree;
      write_report(out, greedy_report(greedy_params.params(), s, guards()), format());
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help and --version print and succeed; anything else is a usage error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    action();
  } catch (const GuardExceeded& e) {
    err << "indelbounds: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InapplicableMethod& e) {
    err << "indelbounds: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const std::invalid_argument& e) {
    err << "indelbounds: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "indelbounds: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace indel::cli
