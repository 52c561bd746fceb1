#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hongbound/algorithms.hpp"

/*
 * Seeded polynomial generation and the timing harness behind the bench
 * subcommand. Absolute seconds depend on the machine; the reproducible
 * quantities are the log-log slope of mean time against degree (about 1 for
 * the two-pass sweep, about 2 for the naive oracle) and the comparison
 * counters, which are deterministic for a fixed seed.
 */

namespace hongbound {

/// 64-bit linear congruential generator (the MMIX constants). One step per
/// random decision; identical sequences on every platform and build mode.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform in [0, 1), 53 significant bits.
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Deterministic random polynomial. Coefficient i < degree draws a class
/// first: zero with probability zero_fraction, negative with probability
/// negative_fraction, positive otherwise; nonzero coefficients then draw a
/// magnitude 2^u with u uniform in [-20, 20]. The leading coefficient skips
/// the class draw and is always positive.
inline Polynomial random_polynomial(int degree, std::uint64_t seed, double negative_fraction,
                                    double zero_fraction) {
  if (degree < 1) throw std::invalid_argument("random_polynomial: degree must be >= 1");
  Lcg rng(seed);
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int i = 0; i < degree; ++i) {
    const double cls = rng.u01();
    if (cls < zero_fraction) continue;
    const double magnitude = std::exp2(-20.0 + 40.0 * rng.u01());
    coeffs[static_cast<std::size_t>(i)] =
        cls < zero_fraction + negative_fraction ? -magnitude : magnitude;
  }
  coeffs[static_cast<std::size_t>(degree)] = std::exp2(-20.0 + 40.0 * rng.u01());
  return Polynomial(std::move(coeffs));
}

struct BenchConfig {
  std::vector<int> degrees;
  int reps = 5;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms;
  double negative_fraction = 0.45;
  double zero_fraction = 0.10;
};

/// Rejects configs the harness cannot run meaningfully.
inline void validate_config(const BenchConfig& config) {
  if (config.degrees.empty()) throw std::invalid_argument("bench: no degrees given");
  int previous = 0;
  for (int d : config.degrees) {
    if (d <= previous) {
      throw std::invalid_argument("bench: degrees must be positive and ascending");
    }
    previous = d;
  }
  if (config.reps < 1) throw std::invalid_argument("bench: reps must be >= 1");
  if (config.algorithms.empty()) throw std::invalid_argument("bench: no algorithms given");
  if (!(config.negative_fraction > 0.0 && config.negative_fraction < 1.0)) {
    throw std::invalid_argument("bench: negative fraction must lie in (0, 1)");
  }
  if (!(config.zero_fraction >= 0.0 && config.zero_fraction < 1.0)) {
    throw std::invalid_argument("bench: zero fraction must lie in [0, 1)");
  }
  if (!(config.negative_fraction + config.zero_fraction < 1.0)) {
    throw std::invalid_argument("bench: sign fractions must sum below 1");
  }
}

struct BenchRow {
  int degree = 0;
  Algorithm algorithm = Algorithm::linear;
  int reps = 0;
  double mean_seconds = 0.0;
  std::uint64_t total_comparisons = 0;
};

namespace detail {

/// Keeps the optimizer from discarding a benchmarked result.
template <typename T>
inline void do_not_optimize(const T& value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : : "r,m"(value) : "memory");
#else
  volatile T sink = value;
  (void)sink;
#endif
}

inline std::string format_general(double value, int precision) {
  char buffer[64];
  const std::to_chars_result out = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                                 std::chars_format::general, precision);
  return std::string(buffer, out.ptr);
}

}  // namespace detail

/// Times every (degree, algorithm) pair of the config. Polynomials are
/// pregenerated (rep r of row k uses seed + k*reps + r) and run once
/// untimed, which warms the caches and collects the comparison counters;
/// the measured batch then repeats until it clears a 10 ms floor so
/// mean_seconds is never zeroed by clock granularity.
inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
  validate_config(config);
  std::vector<BenchRow> rows;
  rows.reserve(config.degrees.size() * config.algorithms.size());
  std::uint64_t row_index = 0;
  for (int degree : config.degrees) {
    for (Algorithm alg : config.algorithms) {
      std::vector<Polynomial> polys;
      polys.reserve(static_cast<std::size_t>(config.reps));
      for (int r = 0; r < config.reps; ++r) {
        const std::uint64_t poly_seed = config.seed +
                                        row_index * static_cast<std::uint64_t>(config.reps) +
                                        static_cast<std::uint64_t>(r);
        polys.push_back(
            random_polynomial(degree, poly_seed, config.negative_fraction, config.zero_fraction));
      }

      BenchRow row;
      row.degree = degree;
      row.algorithm = alg;
      row.reps = config.reps;
      for (const Polynomial& poly : polys) {
        row.total_comparisons += run_algorithm(alg, poly).comparisons;
      }

      std::uint64_t inner = 1;
      double elapsed = 0.0;
      for (;;) {
        const auto start = std::chrono::steady_clock::now();
        for (std::uint64_t k = 0; k < inner; ++k) {
          for (const Polynomial& poly : polys) {
            const BoundReport report = run_algorithm(alg, poly);
            detail::do_not_optimize(report.bound);
          }
        }
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= 0.01) break;
        inner *= 2;
      }
      row.mean_seconds = elapsed / (static_cast<double>(inner) * static_cast<double>(config.reps));
      rows.push_back(row);
      ++row_index;
    }
  }
  return rows;
}

inline constexpr std::string_view kCsvHeader = "degree,algorithm,reps,mean_seconds,total_comparisons";

/// CSV layout: one provenance comment, the header, one row per line.
/// Floating values carry 9 significant digits.
inline void write_csv(std::ostream& out, const BenchConfig& config,
                      const std::vector<BenchRow>& rows) {
  out << "# generator=lcg64 seed=" << config.seed
      << " neg=" << detail::format_general(config.negative_fraction, 9)
      << " zero=" << detail::format_general(config.zero_fraction, 9) << '\n';
  out << kCsvHeader << '\n';
  for (const BenchRow& row : rows) {
    out << row.degree << ',' << to_string(row.algorithm) << ',' << row.reps << ','
        << detail::format_general(row.mean_seconds, 9) << ',' << row.total_comparisons << '\n';
  }
}

struct BenchCsv {
  std::uint64_t seed = 0;
  double negative_fraction = 0.0;
  double zero_fraction = 0.0;
  std::vector<BenchRow> rows;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(separator, begin);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(begin));
      return parts;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
}

template <typename T>
inline T parse_number(std::string_view text, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const std::from_chars_result out = std::from_chars(first, last, value);
  if (out.ec != std::errc{} || out.ptr != last) {
    throw std::runtime_error(std::string("csv: bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

/// Expects "key=value" and returns the value part.
inline std::string_view keyed(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw std::runtime_error("csv: expected " + std::string(key) + "=... in comment, got '" +
                             std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace detail

/// Inverse of write_csv; throws std::runtime_error on any layout deviation.
inline BenchCsv parse_csv(std::istream& in) {
  BenchCsv csv;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  {
    const std::vector<std::string_view> tokens = detail::split(line, ' ');
    if (tokens.size() != 5 || tokens[0] != "#" || tokens[1] != "generator=lcg64") {
      throw std::runtime_error("csv: malformed comment line '" + line + "'");
    }
    csv.seed = detail::parse_number<std::uint64_t>(detail::keyed(tokens[2], "seed"), "seed");
    csv.negative_fraction =
        detail::parse_number<double>(detail::keyed(tokens[3], "neg"), "neg fraction");
    csv.zero_fraction =
        detail::parse_number<double>(detail::keyed(tokens[4], "zero"), "zero fraction");
  }
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("csv: missing header line");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string_view> fields = detail::split(line, ',');
    if (fields.size() != 5) throw std::runtime_error("csv: bad row '" + line + "'");
    BenchRow row;
    row.degree = detail::parse_number<int>(fields[0], "degree");
    const std::optional<Algorithm> alg = parse_algorithm(fields[1]);
    if (!alg) throw std::runtime_error("csv: unknown algorithm '" + std::string(fields[1]) + "'");
    row.algorithm = *alg;
    row.reps = detail::parse_number<int>(fields[2], "reps");
    row.mean_seconds = detail::parse_number<double>(fields[3], "mean_seconds");
    row.total_comparisons = detail::parse_number<std::uint64_t>(fields[4], "total_comparisons");
    csv.rows.push_back(row);
  }
  return csv;
}

}  // namespace hongbound
