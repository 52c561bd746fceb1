#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hongbound/algorithms.hpp"
#include "hongbound/bench.hpp"
#include "hongbound/check.hpp"
#include "hongbound/text.hpp"

// Subcommands: bound (one polynomial, one result line), check (differential
// fuzz against the naive oracle), trace (hull array plus sweep events),
// bench (scaling CSV). Exit codes: 0 success, 1 check disagreement,
// 2 usage or parse failure. stdout carries machine-readable results only;
// diagnostics go to stderr.

namespace {

std::optional<std::vector<hongbound::Algorithm>> to_algorithms(
    const std::vector<std::string>& names, std::string& bad_name) {
  std::vector<hongbound::Algorithm> algorithms;
  for (const std::string& name : names) {
    const std::optional<hongbound::Algorithm> alg = hongbound::parse_algorithm(name);
    if (!alg) {
      bad_name = name;
      return std::nullopt;
    }
    if (std::find(algorithms.begin(), algorithms.end(), *alg) == algorithms.end()) {
      algorithms.push_back(*alg);
    }
  }
  return algorithms;
}

std::string format_dense(const std::vector<double>& coeffs) {
  std::string line = "dense:";
  for (double c : coeffs) {
    line += ' ';
    line += hongbound::format_double(c);
  }
  return line;
}

int cmd_bound(const std::string& alg_name, const std::string& input) {
  const std::optional<hongbound::Algorithm> alg = hongbound::parse_algorithm(alg_name);
  if (!alg) {
    std::cerr << "error: unknown algorithm '" << alg_name << "'\n";
    return 2;
  }
  try {
    const hongbound::Polynomial p = hongbound::parse_polynomial(input);
    std::cout << hongbound::format_report(hongbound::run_algorithm(*alg, p)) << '\n';
  } catch (const hongbound::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hongbound::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int cmd_trace(const std::string& input) {
  try {
    const hongbound::Polynomial p = hongbound::parse_polynomial(input);
    const hongbound::TraceResult trace = hongbound::trace_linear(p);
    std::cout << hongbound::format_v(trace.v) << '\n';
    for (const hongbound::TraceEvent& event : trace.events) {
      std::cout << hongbound::format_trace_event(event) << '\n';
    }
    std::cout << hongbound::format_report(trace.report) << '\n';
  } catch (const hongbound::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hongbound::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int cmd_check(const hongbound::CheckConfig& config) {
  const hongbound::CheckResult result = hongbound::run_check(config);
  if (result.ok()) {
    std::cerr << "checked " << result.checked << " polynomials, all within "
              << hongbound::kCheckRelativeTolerance << " relative\n";
    return 0;
  }
  const hongbound::CheckFailure& failure = *result.failure;
  std::cout << "disagreement algorithm=" << hongbound::to_string(failure.algorithm)
            << " index=" << failure.index
            << " oracle=" << hongbound::format_double(failure.oracle_bound)
            << " got=" << hongbound::format_double(failure.bound) << '\n';
  std::cout << format_dense(failure.coeffs) << '\n';
  return 1;
}

int cmd_bench(const hongbound::BenchConfig& config) {
  try {
    hongbound::validate_config(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const std::vector<hongbound::BenchRow> rows = hongbound::run_bench(config);
  hongbound::write_csv(std::cout, config, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hong's bound for positive polynomial roots"};
  app.require_subcommand(1);

  std::string bound_alg = "linear";
  std::string bound_input;
  CLI::App* bound = app.add_subcommand("bound", "compute the bound for one polynomial");
  bound->add_option("--alg", bound_alg, "naive|buggy|quadratic|linear")->capture_default_str();
  bound->add_option("input", bound_input, "'dense: c0 c1 ...' or 'sparse: e:c ...'")->required();

  std::uint64_t check_count = 10000;
  int check_max_degree = 256;
  std::uint64_t check_seed = 42;
  std::vector<std::string> check_algs{"linear", "quadratic"};
  CLI::App* check = app.add_subcommand("check", "differential fuzz against the naive oracle");
  check->add_option("--count", check_count, "polynomials to test")->capture_default_str();
  check->add_option("--max-degree", check_max_degree, "random degree upper bound")
      ->capture_default_str();
  check->add_option("--seed", check_seed, "corpus seed")->capture_default_str();
  check->add_option("--alg", check_algs, "algorithms to test against the oracle")
      ->delimiter(',')
      ->capture_default_str();

  std::string trace_input;
  CLI::App* trace = app.add_subcommand("trace", "print the hull array and sweep events");
  trace->add_option("input", trace_input, "'dense: c0 c1 ...' or 'sparse: e:c ...'")->required();

  std::vector<int> bench_degrees;
  int bench_reps = 5;
  std::uint64_t bench_seed = 0;
  std::vector<std::string> bench_algs{"linear", "naive"};
  double bench_neg = 0.45;
  double bench_zero = 0.10;
  CLI::App* bench = app.add_subcommand("bench", "emit scaling measurements as CSV");
  bench->add_option("--degrees", bench_degrees, "ascending degrees to time")
      ->delimiter(',')
      ->required();
  bench->add_option("--reps", bench_reps, "polynomials per degree")->capture_default_str();
  bench->add_option("--seed", bench_seed, "generator seed")->capture_default_str();
  bench->add_option("--alg", bench_algs, "algorithms to time")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--neg", bench_neg, "negative-coefficient fraction")->capture_default_str();
  bench->add_option("--zero", bench_zero, "zero-coefficient fraction")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*bound) return cmd_bound(bound_alg, bound_input);
  if (*trace) return cmd_trace(trace_input);

  if (*check) {
    std::string bad_name;
    const std::optional<std::vector<hongbound::Algorithm>> algorithms =
        to_algorithms(check_algs, bad_name);
    if (!algorithms) {
      std::cerr << "error: unknown algorithm '" << bad_name << "'\n";
      return 2;
    }
    hongbound::CheckConfig config;
    config.count = check_count;
    config.max_degree = check_max_degree;
    config.seed = check_seed;
    config.algorithms = *algorithms;
    try {
      return cmd_check(config);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }

  std::string bad_name;
  const std::optional<std::vector<hongbound::Algorithm>> algorithms =
      to_algorithms(bench_algs, bad_name);
  if (!algorithms) {
    std::cerr << "error: unknown algorithm '" << bad_name << "'\n";
    return 2;
  }
  hongbound::BenchConfig config;
  config.degrees = bench_degrees;
  config.reps = bench_reps;
  config.seed = bench_seed;
  config.algorithms = *algorithms;
  config.negative_fraction = bench_neg;
  config.zero_fraction = bench_zero;
  return cmd_bench(config);
}
