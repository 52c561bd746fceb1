#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "hongbound/polynomial.hpp"

/*
 * Two reference sweeps kept for differential testing, both right-to-left
 * over an explicit hull deque instead of the persistent array.
 *
 * hong_buggy reconstructs a flawed linear-scan algorithm: the tangency t
 * starts at p_n and every tangent search begins at the first hull entry not
 * left of t, so t only ever moves rightward. When a positive point extends
 * the hull to the left of t, tangencies left of t become unreachable and
 * the computed slope can land on either side of the true maximum. The
 * deliberately wrong answers are pinned by regression tests; do not fix.
 *
 * hong_quadratic_corrected repairs that by rescanning the current hull from
 * its front for every negative point. Worst-case quadratic, but correct by
 * construction, which makes it a useful second oracle. It still carries the
 * (sigma, ell, t) state of the linear algorithm, including the reset of t
 * to a positive point strictly below ell, so its state sequence can be
 * compared against the linear sweep when debugging.
 */

namespace hongbound {

namespace detail {

struct DequeScanResult {
  int tangent_exponent = -1;
  double slope = 0.0;
};

/// Tangency of the lower tangent from q over hull[start..]: same advance
/// rule as tangent_scan, one comparison counted per advance-or-stop test.
inline DequeScanResult scan_hull(const TermPoint& q, const std::deque<int>& hull,
                                 std::size_t start, const std::vector<double>& heights,
                                 std::uint64_t& comparisons) {
  int current = hull[start];
  double current_slope =
      pair_slope(q.height, heights[static_cast<std::size_t>(current)], q.exponent, current);
  for (std::size_t k = start + 1; k < hull.size(); ++k) {
    const int next = hull[k];
    const double next_slope =
        pair_slope(q.height, heights[static_cast<std::size_t>(next)], q.exponent, next);
    ++comparisons;
    if (next_slope < current_slope) {
      current = next;
      current_slope = next_slope;
    } else {
      break;
    }
  }
  return DequeScanResult{current, current_slope};
}

/// Extends the hull leftward with p_i, popping front points that end up
/// strictly above the new chain. Exactly-collinear points stay.
inline void push_hull_front(int i, std::deque<int>& hull, const std::vector<double>& heights,
                            std::uint64_t& comparisons) {
  while (hull.size() >= 2) {
    const int front = hull[0];
    const int second = hull[1];
    const double to_front = pair_slope(heights[static_cast<std::size_t>(i)],
                                       heights[static_cast<std::size_t>(front)], i, front);
    const double onward = pair_slope(heights[static_cast<std::size_t>(front)],
                                     heights[static_cast<std::size_t>(second)], front, second);
    ++comparisons;
    if (to_front > onward) {
      hull.pop_front();
    } else {
      break;
    }
  }
  hull.push_front(i);
}

/// Heights and sign classes indexed by exponent, shared layout with
/// HullStore but without the chain array.
struct ExponentTable {
  std::vector<double> heights;
  std::vector<std::int8_t> cls;
};

inline ExponentTable exponent_table(const Polynomial& p) {
  const int n = p.degree();
  ExponentTable table;
  table.heights.assign(static_cast<std::size_t>(n) + 1,
                       std::numeric_limits<double>::quiet_NaN());
  table.cls.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const TermPoint& pt : to_points(p)) {
    table.heights[static_cast<std::size_t>(pt.exponent)] = pt.height;
    table.cls[static_cast<std::size_t>(pt.exponent)] =
        pt.sign == Sign::positive ? std::int8_t{1} : std::int8_t{-1};
  }
  return table;
}

}  // namespace detail

/// The flawed single sweep. Kept as a regression witness; its documented
/// wrong value on [-1,0,0,4,-2,4,0,0,8] is 2^(5/8), where the correct bound
/// is 2^(1/3). On inputs with one negative and one positive coefficient the
/// tangency can never be stranded, so it agrees with the oracle there.
inline BoundReport hong_buggy(const Polynomial& p) {
  const int n = p.degree();
  const detail::ExponentTable table = detail::exponent_table(p);
  std::deque<int> hull{n};
  bool have_sigma = false;
  double sigma = 0.0;
  int t_exponent = n;
  Witness witness{};
  std::uint64_t comparisons = 0;

  for (int i = n - 1; i >= 0; --i) {
    const std::int8_t cls = table.cls[static_cast<std::size_t>(i)];
    if (cls == 0) continue;
    if (cls > 0) {
      detail::push_hull_front(i, hull, table.heights, comparisons);
      continue;
    }
    // t itself may have been popped by a later front extension; resume at
    // the first surviving entry not left of it. n is never popped, so the
    // search cannot run off the end.
    const auto it = std::lower_bound(hull.begin(), hull.end(), t_exponent);
    const TermPoint q{i, table.heights[static_cast<std::size_t>(i)], Sign::negative};
    const detail::DequeScanResult scan = detail::scan_hull(
        q, hull, static_cast<std::size_t>(it - hull.begin()), table.heights, comparisons);
    if (!have_sigma || scan.slope > sigma) {
      have_sigma = true;
      sigma = scan.slope;
      t_exponent = scan.tangent_exponent;
      witness = Witness{i, scan.tangent_exponent};
    }
  }

  BoundReport report;
  report.comparisons = comparisons;
  if (have_sigma) {
    report.bound = detail::bound_from_sigma(sigma);
    report.sigma = sigma;
    report.witness = witness;
  }
  return report;
}

/// Correct quadratic variant: every negative point rescans the full current
/// hull from the front, so no tangency can be missed regardless of what the
/// (sigma, ell, t) state says. That state is still maintained, with t reset
/// to any positive point strictly below ell, to mirror the linear sweep.
/// Here ell always passes through t itself, so t doubles as the line anchor.
inline BoundReport hong_quadratic_corrected(const Polynomial& p) {
  const int n = p.degree();
  const detail::ExponentTable table = detail::exponent_table(p);
  std::deque<int> hull{n};
  bool have_sigma = false;
  double sigma = 0.0;
  int t_exponent = n;
  double t_height = table.heights[static_cast<std::size_t>(n)];
  Witness witness{};
  std::uint64_t comparisons = 0;

  for (int i = n - 1; i >= 0; --i) {
    const std::int8_t cls = table.cls[static_cast<std::size_t>(i)];
    if (cls == 0) continue;
    const double height = table.heights[static_cast<std::size_t>(i)];
    if (cls > 0) {
      detail::push_hull_front(i, hull, table.heights, comparisons);
      if (have_sigma &&
          height < t_height + sigma * static_cast<double>(i - t_exponent)) {
        t_exponent = i;
        t_height = height;
      }
      continue;
    }
    const TermPoint q{i, height, Sign::negative};
    const detail::DequeScanResult scan =
        detail::scan_hull(q, hull, 0, table.heights, comparisons);
    if (!have_sigma || scan.slope > sigma) {
      have_sigma = true;
      sigma = scan.slope;
      t_exponent = scan.tangent_exponent;
      t_height = table.heights[static_cast<std::size_t>(scan.tangent_exponent)];
      witness = Witness{i, scan.tangent_exponent};
    }
  }

  BoundReport report;
  report.comparisons = comparisons;
  if (have_sigma) {
    report.bound = detail::bound_from_sigma(sigma);
    report.sigma = sigma;
    report.witness = witness;
  }
  return report;
}

}  // namespace hongbound
