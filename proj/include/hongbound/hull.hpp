#pragma once

#include <cassert>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hongbound/polynomial.hpp"

/*
 * Persistent storage of every suffix lower hull in one integer array.
 *
 * Let P_i+ be the positive points with exponent >= i (when a_i > 0) or > i
 * (otherwise). Suffix hulls share tails: if p_i is positive, lhull(P_i+) is
 * (p_i, second point, ...) and everything after p_i is itself the lower hull
 * of a later suffix. One array V therefore encodes them all:
 *
 *   - a_i > 0:       V[i] = exponent of the second point of lhull(P_i+),
 *                    or -1 when p_i is the hull's only point;
 *   - a_i <= 0, i<n: V[i] = exponent of the first positive point right of i
 *                    (the front of lhull(P_i+));
 *   - V[n] = -1.
 *
 * The hull of any suffix is read off by chasing V. Construction is a single
 * right-to-left sweep whose total slope-comparison count is at most 2n + 2:
 * every tangent scan that walks past a point removes it from the front chain
 * for good.
 *
 * Collinear convention: a scan stops at the first point where the slope stops
 * decreasing, so the left-most point of a collinear run is the tangency and
 * exactly-collinear interior points stay on stored chains. Slope comparisons
 * are exact binary64 comparisons; an epsilon would break the amortization.
 */

namespace hongbound {

/// Result of walking one chain for the tangency from a query point.
struct TangentScanResult {
  int tangent_exponent = -1;
  double slope = 0.0;          // slope from the query point to the tangency
  std::uint64_t steps = 0;     // slope comparisons consumed
};

/// All suffix lower hulls of a polynomial's positive points, plus the point
/// data the chains index. Immutable once built; safe to share across threads.
struct HullStore {
  std::vector<int> v;               // length n+1, entries are exponents or -1
  std::vector<double> heights;      // by exponent; meaningful at nonzero coefficients
  std::vector<std::int8_t> cls;     // +1 positive, -1 negative, 0 zero coefficient
  std::uint64_t comparisons = 0;    // slope comparisons spent building

  int degree() const noexcept { return static_cast<int>(v.size()) - 1; }

  TermPoint point(int exponent) const {
    return TermPoint{exponent, heights[static_cast<std::size_t>(exponent)],
                     cls[static_cast<std::size_t>(exponent)] > 0 ? Sign::positive
                                                                 : Sign::negative};
  }
};

/// Slope of the line through two term points, in log2 units per exponent step.
inline double slope(const TermPoint& a, const TermPoint& b) {
  if (a.exponent == b.exponent) {
    throw std::invalid_argument("slope: points share exponent " + std::to_string(a.exponent));
  }
  return detail::pair_slope(a.height, b.height, a.exponent, b.exponent);
}

/// Walks the chain (start, V[start], ...) and returns the point of tangency
/// of the lower tangent from q: advance while the slope from q keeps
/// strictly decreasing, stop at the first non-decrease or at the sentinel.
/// Stopping on >= selects the left-most tangency under collinearity.
/// Precondition: q lies strictly left of start and the chain from start is a
/// suffix of the lower hull being queried.
inline TangentScanResult tangent_scan(const TermPoint& q, const HullStore& store,
                                      int start_exponent) {
  TangentScanResult result;
  int current = start_exponent;
  double current_slope = slope(q, store.point(current));
  for (int next = store.v[static_cast<std::size_t>(current)]; next != -1;
       next = store.v[static_cast<std::size_t>(current)]) {
    const double next_slope = slope(q, store.point(next));
    ++result.steps;
    if (next_slope < current_slope) {
      current = next;
      current_slope = next_slope;
    } else {
      break;
    }
  }
  result.tangent_exponent = current;
  result.slope = current_slope;
  return result;
}

/// First pass: builds V right-to-left. Negative and zero coefficients link
/// to the nearest positive point on their right; each positive point scans
/// the hull in front of it for its tangency, which becomes its chain link.
inline HullStore build_hulls(const std::vector<TermPoint>& points, int n) {
  assert(!points.empty() && points.back().exponent == n &&
         points.back().sign == Sign::positive);
  HullStore store;
  store.v.assign(static_cast<std::size_t>(n) + 1, -1);
  store.heights.assign(static_cast<std::size_t>(n) + 1,
                       std::numeric_limits<double>::quiet_NaN());
  store.cls.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const TermPoint& pt : points) {
    store.heights[static_cast<std::size_t>(pt.exponent)] = pt.height;
    store.cls[static_cast<std::size_t>(pt.exponent)] =
        pt.sign == Sign::positive ? std::int8_t{1} : std::int8_t{-1};
  }

  int last_positive = n;
  for (int i = n - 1; i >= 0; --i) {
    if (store.cls[static_cast<std::size_t>(i)] > 0) {
      const TangentScanResult scan = tangent_scan(store.point(i), store, last_positive);
      store.comparisons += scan.steps;
      store.v[static_cast<std::size_t>(i)] = scan.tangent_exponent;
      last_positive = i;
    } else {
      store.v[static_cast<std::size_t>(i)] = last_positive;
    }
  }
  return store;
}

inline HullStore build_hulls(const Polynomial& p) {
  return build_hulls(to_points(p), p.degree());
}

/// The lower hull to the right of index i, as a sequence of exponents:
/// starts at i itself when a_i > 0, at V[i] otherwise.
inline std::vector<int> hull_chain(const HullStore& store, int i) {
  std::vector<int> chain;
  int e = store.cls[static_cast<std::size_t>(i)] > 0 ? i : store.v[static_cast<std::size_t>(i)];
  while (e != -1) {
    chain.push_back(e);
    e = store.v[static_cast<std::size_t>(e)];
  }
  return chain;
}

}  // namespace hongbound
