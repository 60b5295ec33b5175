#pragma once

#include <vector>

#include "toruskit/caps.hpp"
#include "toruskit/fan.hpp"

namespace toruskit {

// Refinement record: replaying the inserted rays through stellar_subdivision
// on the source reproduces the target.
struct Subdivision {
  Fan source;
  Fan target;
  std::vector<IVec> inserted;
};

// Keep the cones not containing the ray; replace each cone containing it by
// the joins of the ray with the cone's faces that miss it.
// RayOutsideSupport when no cone contains the ray.
Fan stellar_subdivision(const Fan& fan, const IVec& ray);

// Iterate stellar subdivisions until every maximal cone is unimodular.
// Deterministic: always splits the lexicographically least non-unimodular
// maximal cone, at the smallest parallelepiped point (non-simplicial cones
// are first split along their own rays). CapExceeded past cap_insertions.
Subdivision resolve_to_smooth(const Fan& fan, const Caps& caps = Caps{});

// Transport a divisor to the refined fan: coefficient at each target ray is
// the negated source support-function value there. NotCartier when the
// source support function is not integrally linear on some maximal cone.
TorusInvariantDivisor pullback_divisor(const TorusInvariantDivisor& d,
                                       const Subdivision& s);

// Canonical class (all rays -1), boundary (all rays +1), and their sum,
// which cancels coefficient-wise. NotSmooth / IncompleteFan guards.
struct LogCanonicalData {
  TorusInvariantDivisor canonical;
  TorusInvariantDivisor boundary;
  TorusInvariantDivisor sum;
  bool sum_is_zero;
};

LogCanonicalData log_canonical_boundary(const Fan& fan);

}  // namespace toruskit
