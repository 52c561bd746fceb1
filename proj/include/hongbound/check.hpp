#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hongbound/algorithms.hpp"
#include "hongbound/bench.hpp"

/*
 * Differential check: every algorithm under test must reproduce the naive
 * max-min oracle on a corpus of fixed adversarial inputs followed by seeded
 * random polynomials. A disagreement is the test signal, reported with the
 * full coefficient list so the case can be replayed through the CLI.
 */

namespace hongbound {

inline constexpr double kCheckRelativeTolerance = 1e-9;

/// Fixed openers, checked before any random instance: the degree-8 shape
/// whose bound is 2^(1/3) but which the flawed sweep gets wrong, its
/// variant with constant term -8 (tangency shifts to the far end), the
/// same shape with the constant term zeroed (stranded-tangency trigger in
/// isolation), and the two minimal one-pair shapes.
inline const std::vector<std::vector<double>>& check_corpus_prefix() {
  static const std::vector<std::vector<double>> prefix = {
      {-1.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0},
      {-8.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0},
      {0.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0},
      {1.0, 1.0},
      {-1.0, 1.0},
  };
  return prefix;
}

struct CheckConfig {
  std::uint64_t count = 10000;
  int max_degree = 256;
  std::uint64_t seed = 42;
  std::vector<Algorithm> algorithms{Algorithm::linear, Algorithm::quadratic};
  double negative_fraction = 0.45;
  double zero_fraction = 0.10;
};

struct CheckFailure {
  Algorithm algorithm = Algorithm::linear;
  std::uint64_t index = 0;
  std::vector<double> coeffs;
  double oracle_bound = 0.0;
  double bound = 0.0;
};

struct CheckResult {
  std::uint64_t checked = 0;
  std::optional<CheckFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Runs the differential corpus and stops at the first disagreement.
/// Agreement means: equal within kCheckRelativeTolerance relative to the
/// oracle, or exactly 0 when the oracle reports 0 (no negative terms).
inline CheckResult run_check(const CheckConfig& config) {
  if (config.count < 1) throw std::invalid_argument("check: count must be >= 1");
  if (config.max_degree < 1) throw std::invalid_argument("check: max degree must be >= 1");
  if (config.algorithms.empty()) throw std::invalid_argument("check: no algorithms given");

  CheckResult result;
  const std::vector<std::vector<double>>& prefix = check_corpus_prefix();
  Lcg rng(config.seed);
  for (std::uint64_t k = 0; k < config.count; ++k) {
    const Polynomial p =
        k < prefix.size()
            ? Polynomial(prefix[static_cast<std::size_t>(k)])
            : random_polynomial(
                  1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(config.max_degree)),
                  rng.next(), config.negative_fraction, config.zero_fraction);
    const double oracle = hong_naive(p).bound;
    for (Algorithm alg : config.algorithms) {
      const double bound = run_algorithm(alg, p).bound;
      const bool agree = oracle == 0.0
                             ? bound == 0.0
                             : std::abs(bound - oracle) <= kCheckRelativeTolerance * oracle;
      if (!agree) {
        result.failure = CheckFailure{alg, k, p.coeffs(), oracle, bound};
        return result;
      }
    }
    ++result.checked;
  }
  return result;
}

}  // namespace hongbound
