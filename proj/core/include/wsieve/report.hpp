#pragma once

#include <string>

namespace wsieve {

// Constants feeding the conditional bound checks. delta constrains m
// (m < p^(1-delta)), epsilon is the exponent-loss constant, c the
// solvability-window constant. Logs are natural throughout.
struct BoundParams {
  double delta = 0.5;
  double epsilon = 0.25;  // must satisfy 0 < epsilon < delta < 1
  double c = 0.5;         // must lie in (0, 1)
};

// One inequality (or identity) instance. The verdict is computed from exact
// or enclosure arithmetic before anything is rounded for display, and obeys
//   holds  <=>  lhs <= rhs + numeric_error.
struct BoundReport {
  std::string name;      // bound identifier, e.g. "zhuwan"
  std::string instance;  // readable parameter tuple, e.g. "p=7 m=2 k=3 b=5"
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
  double slack = 0;          // rhs - lhs
  double numeric_error = 0;  // evaluation error absorbed by the verdict
  std::string regime;        // exponential-sum regime tag; empty elsewhere
};

}  // namespace wsieve
