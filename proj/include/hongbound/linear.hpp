#pragma once

#include <utility>
#include <vector>

#include "hongbound/hull.hpp"
#include "hongbound/polynomial.hpp"

/*
 * Second pass: a left-to-right sweep over the persistent hulls that computes
 * Hong's bound in linear time overall.
 *
 * Starting at the lowest negative exponent j, the sweep maintains
 *   sigma - the maximal lower-tangent slope found so far,
 *   t     - the point of tangency, always a positive point on the current
 *           suffix hull, never moving left,
 *   ell   - a line of slope sigma through an anchor point (t after every
 *           update, re-anchored on parallel translation).
 *
 * Negative points on or above ell are ignored: ell passes through the
 * positive point t to their right, so their tangent slope cannot exceed
 * sigma. Negative points below ell scan the chain starting at t itself
 * (starting one link later can miss the case where t stays the tangency
 * because the hull edge after t is steeper than the new tangent). When the
 * sweep reaches t's own exponent, the hull to the right no longer contains
 * it, so t drops to the front of the next suffix hull and ell translates
 * through the new t; at i = n there is nothing to the right and the reset is
 * skipped. The tangent pointer is monotone, so the sweep consumes at most
 * 2n + 6 slope comparisons on top of the 2n + 2 spent building the hulls.
 */

namespace hongbound {

/// Sweep state: (sigma, t, ell). The line ell has slope `sigma` and passes
/// through (anchor_exponent, anchor_height). `comparisons` counts the slope
/// comparisons consumed by pass-2 tangent scans.
struct TangentState {
  double sigma = 0.0;
  int t_exponent = -1;
  int anchor_exponent = -1;
  double anchor_height = 0.0;
  std::uint64_t comparisons = 0;
};

/// True iff p lies strictly below the line of the state; a point exactly on
/// the line counts as not below (and is ignored by the sweep).
inline bool point_below_line(const TermPoint& p, const TangentState& state) {
  const double line_height =
      state.anchor_height +
      state.sigma * static_cast<double>(p.exponent - state.anchor_exponent);
  return p.height < line_height;
}

enum class TraceAction {
  init,
  carry,
  reset_t,
  ignore_above,
  adopt_tangent,
  reject_tangent,
};

inline const char* to_string(TraceAction action) {
  switch (action) {
    case TraceAction::init: return "init";
    case TraceAction::carry: return "carry";
    case TraceAction::reset_t: return "reset-t";
    case TraceAction::ignore_above: return "ignore-above";
    case TraceAction::adopt_tangent: return "adopt-tangent";
    case TraceAction::reject_tangent: return "reject-tangent";
  }
  return "?";
}

/// One sweep step: state after the action at index i.
struct TraceEvent {
  int index = 0;
  char sign = '0';  // '+', '-', or '0'
  double sigma = 0.0;
  int t_exponent = -1;
  TraceAction action = TraceAction::carry;
};

namespace detail {

struct NullTraceSink {
  void operator()(const TraceEvent&) const noexcept {}
};

/// The pass-2 sweep, shared by hong_linear and trace_linear so both follow
/// the exact same arithmetic. Emits one event per sweep index into `sink`.
template <typename Sink>
BoundReport sweep_hulls(const HullStore& store, Sink&& sink) {
  const int n = store.degree();
  BoundReport report;
  report.comparisons = store.comparisons;

  int first_negative = -1;
  for (int i = 0; i <= n; ++i) {
    if (store.cls[static_cast<std::size_t>(i)] < 0) {
      first_negative = i;
      break;
    }
  }
  if (first_negative < 0) return report;  // all coefficients >= 0: bound 0

  const int j = first_negative;
  TangentState state;
  const TangentScanResult init =
      tangent_scan(store.point(j), store, store.v[static_cast<std::size_t>(j)]);
  state.comparisons += init.steps;
  state.sigma = init.slope;
  state.t_exponent = init.tangent_exponent;
  state.anchor_exponent = init.tangent_exponent;
  state.anchor_height = store.heights[static_cast<std::size_t>(init.tangent_exponent)];
  Witness witness{j, init.tangent_exponent};
  sink(TraceEvent{j, '-', state.sigma, state.t_exponent, TraceAction::init});

  for (int i = j + 1; i <= n; ++i) {
    const std::int8_t cls = store.cls[static_cast<std::size_t>(i)];
    if (cls == 0) {
      sink(TraceEvent{i, '0', state.sigma, state.t_exponent, TraceAction::carry});
      continue;
    }
    if (cls > 0) {
      if (i == state.t_exponent && i < n) {
        // p_i leaves the hull after this step: drop t to the front of the
        // next suffix hull and translate ell through it.
        const int next = store.cls[static_cast<std::size_t>(i + 1)] > 0
                             ? i + 1
                             : store.v[static_cast<std::size_t>(i + 1)];
        state.t_exponent = next;
        state.anchor_exponent = next;
        state.anchor_height = store.heights[static_cast<std::size_t>(next)];
        sink(TraceEvent{i, '+', state.sigma, state.t_exponent, TraceAction::reset_t});
      } else {
        sink(TraceEvent{i, '+', state.sigma, state.t_exponent, TraceAction::carry});
      }
      continue;
    }
    const TermPoint p = store.point(i);
    if (!point_below_line(p, state)) {
      sink(TraceEvent{i, '-', state.sigma, state.t_exponent, TraceAction::ignore_above});
      continue;
    }
    const TangentScanResult scan = tangent_scan(p, store, state.t_exponent);
    state.comparisons += scan.steps;
    if (scan.slope > state.sigma) {
      state.sigma = scan.slope;
      state.t_exponent = scan.tangent_exponent;
      state.anchor_exponent = scan.tangent_exponent;
      state.anchor_height = store.heights[static_cast<std::size_t>(scan.tangent_exponent)];
      witness = Witness{i, scan.tangent_exponent};
      sink(TraceEvent{i, '-', state.sigma, state.t_exponent, TraceAction::adopt_tangent});
    } else {
      // The scanned tangent cannot beat the running maximum; state carries
      // unchanged, including t, which still lies on the current hull.
      sink(TraceEvent{i, '-', state.sigma, state.t_exponent, TraceAction::reject_tangent});
    }
  }

  report.bound = detail::bound_from_sigma(state.sigma);
  report.sigma = state.sigma;
  report.witness = witness;
  report.comparisons += state.comparisons;
  return report;
}

}  // namespace detail

/// Hong's bound by the two-pass algorithm: build all suffix hulls, then
/// sweep. Combined comparison count is at most 4n + 8.
inline BoundReport hong_linear(const Polynomial& p) {
  const HullStore store = build_hulls(p);
  return detail::sweep_hulls(store, detail::NullTraceSink{});
}

/// Full sweep record of hong_linear: per-index events plus the hull array
/// and the final report.
struct TraceResult {
  std::vector<TraceEvent> events;
  std::vector<int> v;
  BoundReport report;
};

inline TraceResult trace_linear(const Polynomial& p) {
  TraceResult trace;
  const HullStore store = build_hulls(p);
  trace.v = store.v;
  trace.report = detail::sweep_hulls(
      store, [&trace](const TraceEvent& event) { trace.events.push_back(event); });
  return trace;
}

}  // namespace hongbound
