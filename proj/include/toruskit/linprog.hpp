#pragma once

#include <vector>

#include "toruskit/numbers.hpp"

namespace toruskit {

// Exact rational linear programming, dense two-phase simplex with Bland's
// rule. Sized for desk-scale systems (tens of variables and constraints).
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rat value;
  QVec x;
};

// minimize c . x  subject to  a[i] . x <= b[i], x free.
LpResult lp_minimize(const std::vector<QVec>& a, const QVec& b, const QVec& c);

}  // namespace toruskit
