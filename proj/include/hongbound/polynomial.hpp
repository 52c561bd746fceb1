#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/*
 * Core polynomial types and the direct O(n^2) evaluations of Hong's upper
 * bound for positive real roots:
 *
 *   H(A) = 2 * max_{j: a_j<0} min_{i>j: a_i>0} (-a_j / a_i)^(1/(i-j))
 *
 * for A = a_0 + a_1 x + ... + a_n x^n with a_n > 0. Every bound above a
 * polynomial's largest positive root; H also bounds absolute positiveness.
 *
 * Each nonzero term a_i x^i maps to the plane point (i, -lg|a_i|). In that
 * picture (-a_j/a_i)^(1/(i-j)) equals 2^slope between the two points, so the
 * max-min becomes a max of lower-tangent slopes and H = 2^(1+sigma). The two
 * implementations below evaluate both formulations; keeping both guards
 * against pow/log discrepancies and gives the faster algorithms an oracle.
 */

namespace hongbound {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

/// A nonzero term a_i x^i as a plane point: abscissa = exponent i,
/// ordinate = -lg|a_i| (log2 units).
struct TermPoint {
  int exponent = 0;
  double height = 0.0;
  Sign sign = Sign::positive;
};

enum class ValidationIssue {
  empty_input,
  non_positive_leading_coefficient,
  non_finite_coefficient,
};

/// Thrown when a coefficient sequence violates the Polynomial invariants.
/// `index()` is the offending coefficient index (-1 for empty input).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationIssue issue, std::ptrdiff_t index, const std::string& what)
      : std::invalid_argument(what), issue_(issue), index_(index) {}

  ValidationIssue issue() const noexcept { return issue_; }
  std::ptrdiff_t index() const noexcept { return index_; }

 private:
  ValidationIssue issue_;
  std::ptrdiff_t index_;
};

/// Dense real polynomial a_0 + a_1 x + ... + a_n x^n, index = exponent.
/// Invariants, enforced at construction: at least one coefficient, all
/// coefficients finite, leading coefficient a_n strictly positive.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw ValidationError(ValidationIssue::empty_input, -1,
                            "polynomial needs at least one coefficient");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!std::isfinite(coeffs_[i])) {
        throw ValidationError(ValidationIssue::non_finite_coefficient,
                              static_cast<std::ptrdiff_t>(i),
                              "coefficient at index " + std::to_string(i) + " is not finite");
      }
    }
    if (!(coeffs_.back() > 0.0)) {
      throw ValidationError(ValidationIssue::non_positive_leading_coefficient,
                            static_cast<std::ptrdiff_t>(coeffs_.size() - 1),
                            "leading coefficient (index " + std::to_string(coeffs_.size() - 1) +
                                ") must be positive");
    }
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double operator[](int exponent) const noexcept { return coeffs_[static_cast<std::size_t>(exponent)]; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// Checked construction from a raw coefficient sequence.
inline Polynomial validate(std::vector<double> coeffs) { return Polynomial(std::move(coeffs)); }

/// The pair of exponents (j negative, i positive, i > j) attaining the bound.
struct Witness {
  int negative_exponent = 0;
  int positive_exponent = 0;
};

/// Result of a bound computation. `sigma` is the maximal tangent slope in
/// log2 units (absent when the polynomial has no negative coefficient, in
/// which case bound = 0 by convention: no negative coefficients means no
/// positive roots). When sigma is present, bound = 2^(1+sigma).
/// `comparisons` counts the candidate-pair or slope comparisons consumed.
struct BoundReport {
  double bound = 0.0;
  std::optional<double> sigma;
  std::optional<Witness> witness;
  std::uint64_t comparisons = 0;
};

namespace detail {

/// Slope between two term points. Written once so every algorithm computes
/// bit-identical slopes from identical operands.
inline double pair_slope(double height_a, double height_b, int exp_a, int exp_b) {
  return (height_b - height_a) / static_cast<double>(exp_b - exp_a);
}

inline double bound_from_sigma(double sigma) { return std::exp2(1.0 + sigma); }

}  // namespace detail

/// Maps each nonzero coefficient to its TermPoint, in increasing exponent
/// order. Zero coefficients have no point.
inline std::vector<TermPoint> to_points(const Polynomial& p) {
  std::vector<TermPoint> points;
  points.reserve(p.coeffs().size());
  for (int i = 0; i <= p.degree(); ++i) {
    const double c = p[i];
    if (c == 0.0) continue;
    // + 0.0 normalizes -0.0 heights (|c| == 1) to +0.0.
    points.push_back(TermPoint{i, -std::log2(std::abs(c)) + 0.0,
                               c > 0.0 ? Sign::positive : Sign::negative});
  }
  return points;
}

/// Direct evaluation of the max-min in the value domain with pow/root.
/// Ties broken toward the smallest j, then the smallest i.
inline BoundReport hong_naive(const Polynomial& p) {
  const std::vector<TermPoint> points = to_points(p);
  BoundReport report;
  bool have_max = false;
  double best = 0.0;
  Witness where{};
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a].sign != Sign::negative) continue;
    const int j = points[a].exponent;
    bool have_min = false;
    double inner = 0.0;
    int inner_i = -1;
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[b].sign != Sign::positive) continue;
      const int i = points[b].exponent;
      ++report.comparisons;
      const double candidate = std::pow(-p[j] / p[i], 1.0 / static_cast<double>(i - j));
      if (!have_min || candidate < inner) {
        have_min = true;
        inner = candidate;
        inner_i = i;
      }
    }
    // a_n > 0 guarantees at least one positive point right of every negative.
    if (!have_max || inner > best) {
      have_max = true;
      best = inner;
      where = Witness{j, inner_i};
    }
  }
  if (!have_max) return report;
  report.bound = 2.0 * best;
  report.sigma = std::log2(best);
  report.witness = where;
  return report;
}

/// The same max-min evaluated entirely in the log domain: sigma is the
/// largest over negative points of the smallest slope to a later positive
/// point, and the bound is 2^(1+sigma).
inline BoundReport hong_naive_log(const Polynomial& p) {
  const std::vector<TermPoint> points = to_points(p);
  BoundReport report;
  bool have_max = false;
  double best_sigma = 0.0;
  Witness where{};
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (points[a].sign != Sign::negative) continue;
    bool have_min = false;
    double inner = 0.0;
    int inner_i = -1;
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[b].sign != Sign::positive) continue;
      ++report.comparisons;
      const double candidate = detail::pair_slope(points[a].height, points[b].height,
                                                  points[a].exponent, points[b].exponent);
      if (!have_min || candidate < inner) {
        have_min = true;
        inner = candidate;
        inner_i = points[b].exponent;
      }
    }
    if (!have_max || inner > best_sigma) {
      have_max = true;
      best_sigma = inner;
      where = Witness{points[a].exponent, inner_i};
    }
  }
  if (!have_max) return report;
  report.bound = detail::bound_from_sigma(best_sigma);
  report.sigma = best_sigma;
  report.witness = where;
  return report;
}

}  // namespace hongbound
