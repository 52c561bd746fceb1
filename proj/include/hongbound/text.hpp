#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hongbound/linear.hpp"
#include "hongbound/polynomial.hpp"

/*
 * Text <-> value conversions for the CLI. Input grammar:
 *
 *   dense: c0 c1 ... cn          coefficients by ascending exponent
 *   sparse: e1:c1 e2:c2 ...      exponent:coefficient pairs, any order
 *
 * Coefficients are decimal reals, exponents non-negative integers, sparse
 * duplicates rejected. Numeric output uses the shortest decimal that parses
 * back to the same binary64 value.
 */

namespace hongbound {

/// Malformed polynomial text; the message names the offending token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r')) {
      ++i;
    }
    if (i >= text.size()) break;
    std::size_t begin = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
           text[i] != '\r') {
      ++i;
    }
    tokens.push_back(text.substr(begin, i - begin));
  }
  return tokens;
}

inline double parse_coefficient(std::string_view token, std::string_view context) {
  double value = 0.0;
  const char* last = token.data() + token.size();
  const std::from_chars_result out = std::from_chars(token.data(), last, value);
  if (out.ec != std::errc{} || out.ptr != last) {
    throw ParseError("bad coefficient '" + std::string(context) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the CLI polynomial grammar. Throws ParseError on malformed text
/// and ValidationError when the parsed coefficients violate the Polynomial
/// invariants.
inline Polynomial parse_polynomial(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) {
    throw ParseError("input must start with 'dense:' or 'sparse:'");
  }
  text.remove_prefix(start);

  constexpr std::string_view kDense = "dense:";
  constexpr std::string_view kSparse = "sparse:";
  if (text.substr(0, kDense.size()) == kDense) {
    std::vector<double> coeffs;
    for (std::string_view token : detail::tokenize(text.substr(kDense.size()))) {
      coeffs.push_back(detail::parse_coefficient(token, token));
    }
    return Polynomial(std::move(coeffs));
  }
  if (text.substr(0, kSparse.size()) == kSparse) {
    std::vector<std::pair<int, double>> terms;
    int max_exponent = -1;
    for (std::string_view token : detail::tokenize(text.substr(kSparse.size()))) {
      const std::size_t colon = token.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected exponent:coefficient, got '" + std::string(token) + "'");
      }
      const std::string_view exp_text = token.substr(0, colon);
      int exponent = -1;
      const char* exp_last = exp_text.data() + exp_text.size();
      const std::from_chars_result out = std::from_chars(exp_text.data(), exp_last, exponent);
      if (out.ec != std::errc{} || out.ptr != exp_last || exponent < 0) {
        throw ParseError("bad exponent in '" + std::string(token) + "'");
      }
      for (const std::pair<int, double>& term : terms) {
        if (term.first == exponent) {
          throw ParseError("duplicate exponent in '" + std::string(token) + "'");
        }
      }
      terms.emplace_back(exponent,
                         detail::parse_coefficient(token.substr(colon + 1), token));
      if (exponent > max_exponent) max_exponent = exponent;
    }
    if (terms.empty()) throw ParseError("sparse input needs at least one exponent:coefficient");
    std::vector<double> coeffs(static_cast<std::size_t>(max_exponent) + 1, 0.0);
    for (const std::pair<int, double>& term : terms) {
      coeffs[static_cast<std::size_t>(term.first)] = term.second;
    }
    return Polynomial(std::move(coeffs));
  }
  throw ParseError("input must start with 'dense:' or 'sparse:'");
}

/// Shortest decimal that round-trips to the same binary64 value.
inline std::string format_double(double value) {
  char buffer[64];
  const std::to_chars_result out = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, out.ptr);
}

/// The CLI result line: H=<bound> sigma=<sigma|none> witness=<j,i|none>
/// comparisons=<k>.
inline std::string format_report(const BoundReport& report) {
  std::string line = "H=";
  line += format_double(report.bound);
  line += " sigma=";
  line += report.sigma ? format_double(*report.sigma) : "none";
  line += " witness=";
  if (report.witness) {
    line += std::to_string(report.witness->negative_exponent);
    line += ',';
    line += std::to_string(report.witness->positive_exponent);
  } else {
    line += "none";
  }
  line += " comparisons=";
  line += std::to_string(report.comparisons);
  return line;
}

inline std::string format_v(const std::vector<int>& v) {
  std::string line = "V=[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) line += ',';
    line += std::to_string(v[i]);
  }
  line += ']';
  return line;
}

inline std::string format_trace_event(const TraceEvent& event) {
  std::string line = "i=";
  line += std::to_string(event.index);
  line += " sign=";
  line += event.sign;
  line += " action=";
  line += to_string(event.action);
  line += " sigma=";
  line += format_double(event.sigma);
  line += " t=";
  line += std::to_string(event.t_exponent);
  return line;
}

}  // namespace hongbound
