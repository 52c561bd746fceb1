#include <iostream>

#include "hongbound/algorithms.hpp"
#include "hongbound/text.hpp"

// Walks the polynomial that separates the four implementations:
//
//   A(x) = -1 + 4x^3 - 2x^4 + 4x^5 + 8x^8
//
// The correct bound is 2^(1/3). The flawed single sweep strands its
// tangency at the right-most point and reports 2^(5/8) instead: once the
// hull grows leftward past the tangency, the rightward-only search can
// never reach the true tangent again. The trace shows the corrected sweep
// resetting the tangency (reset-t) as the hull in front of it shrinks.

int main() {
  const hongbound::Polynomial a({-1.0, 0.0, 0.0, 4.0, -2.0, 4.0, 0.0, 0.0, 8.0});

  std::cout << "A(x) = -1 + 4x^3 - 2x^4 + 4x^5 + 8x^8\n\n";
  for (const hongbound::Algorithm alg :
       {hongbound::Algorithm::naive, hongbound::Algorithm::buggy,
        hongbound::Algorithm::quadratic, hongbound::Algorithm::linear}) {
    std::cout << hongbound::to_string(alg) << ": "
              << hongbound::format_report(hongbound::run_algorithm(alg, a)) << '\n';
  }

  std::cout << "\ntwo-pass sweep:\n";
  const hongbound::TraceResult trace = hongbound::trace_linear(a);
  std::cout << hongbound::format_v(trace.v) << '\n';
  for (const hongbound::TraceEvent& event : trace.events) {
    std::cout << hongbound::format_trace_event(event) << '\n';
  }
  return 0;
}
