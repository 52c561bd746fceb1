#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <string>
#include <vector>

#include "hongbound/polynomial.hpp"

// Shared test utilities: an independent lower-hull construction to check the
// persistent chains against, polynomial expansion from chosen roots, and a
// subprocess runner for CLI-level tests.

namespace testsupport {

struct PlanePoint {
  int x = 0;
  double y = 0.0;
};

/// Monotone-chain lower hull over points already sorted by x. Keeps
/// exactly-collinear interior points: a point is popped only when it lies
/// strictly above the chord of its neighbors.
inline std::vector<PlanePoint> lower_hull(const std::vector<PlanePoint>& points) {
  std::vector<PlanePoint> hull;
  for (const PlanePoint& c : points) {
    while (hull.size() >= 2) {
      const PlanePoint& a = hull[hull.size() - 2];
      const PlanePoint& b = hull[hull.size() - 1];
      const double cross = static_cast<double>(c.x - a.x) * (b.y - a.y) -
                           (c.y - a.y) * static_cast<double>(b.x - a.x);
      if (cross > 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(c);
  }
  return hull;
}

/// The lower hull of the positive points with exponent >= from (inclusive)
/// or > from (exclusive), as a sequence of exponents.
inline std::vector<int> suffix_hull_exponents(const hongbound::Polynomial& p, int from,
                                              bool inclusive) {
  std::vector<PlanePoint> points;
  for (const hongbound::TermPoint& pt : hongbound::to_points(p)) {
    if (pt.sign != hongbound::Sign::positive) continue;
    if (pt.exponent > from || (inclusive && pt.exponent == from)) {
      points.push_back(PlanePoint{pt.exponent, pt.height});
    }
  }
  std::vector<int> exponents;
  for (const PlanePoint& pt : lower_hull(points)) exponents.push_back(pt.x);
  return exponents;
}

/// Monic polynomial with exactly the given real roots.
inline hongbound::Polynomial from_roots(const std::vector<double>& roots) {
  std::vector<double> coeffs{1.0};
  for (double r : roots) {
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return hongbound::Polynomial(std::move(coeffs));
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs a shell command, capturing stdout and stderr separately.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  const std::string err_path = "/tmp/hongbound_test_err_" + std::to_string(getpid());
  FILE* pipe = popen((command + " 2>" + err_path).c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  if (FILE* err = std::fopen(err_path.c_str(), "r")) {
    while ((got = fread(buffer, 1, sizeof(buffer), err)) > 0) {
      result.err.append(buffer, got);
    }
    std::fclose(err);
    std::remove(err_path.c_str());
  }
  return result;
}

}  // namespace testsupport
