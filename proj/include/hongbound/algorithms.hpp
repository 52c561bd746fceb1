#pragma once

#include <optional>
#include <string_view>

#include "hongbound/linear.hpp"
#include "hongbound/variants.hpp"

namespace hongbound {

/// The four bound computations exposed to the CLI and the bench harness.
/// `naive` is the value-domain max-min oracle; the log-domain twin stays
/// internal to the tests.
enum class Algorithm { naive, buggy, quadratic, linear };

inline const char* to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::naive: return "naive";
    case Algorithm::buggy: return "buggy";
    case Algorithm::quadratic: return "quadratic";
    case Algorithm::linear: return "linear";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "buggy") return Algorithm::buggy;
  if (name == "quadratic") return Algorithm::quadratic;
  if (name == "linear") return Algorithm::linear;
  return std::nullopt;
}

inline BoundReport run_algorithm(Algorithm alg, const Polynomial& p) {
  switch (alg) {
    case Algorithm::naive: return hong_naive(p);
    case Algorithm::buggy: return hong_buggy(p);
    case Algorithm::quadratic: return hong_quadratic_corrected(p);
    case Algorithm::linear: return hong_linear(p);
  }
  return BoundReport{};
}

}  // namespace hongbound
