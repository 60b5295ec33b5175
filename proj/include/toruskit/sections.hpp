#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toruskit/caps.hpp"
#include "toruskit/fan.hpp"
#include "toruskit/laurent.hpp"
#include "toruskit/numbers.hpp"

namespace toruskit {

// Rational polytope of sections of m*D: all x with <x, r> >= -m*a_r per fan
// ray r. Bounded whenever the fan is complete; scales linearly in m.
struct SectionPolytope {
  std::vector<std::pair<IVec, Rat>> bounds;  // ray -> lower bound of <x, ray>
  std::vector<QVec> vertices;                // lex sorted; empty iff infeasible

  bool empty() const { return vertices.empty(); }
  size_t dim() const;  // affine dimension over Q; polytope must be nonempty
};

SectionPolytope section_polytope(const TorusInvariantDivisor& d, const Int& m);

// Number of lattice points in the section polytope of m*D.
Int h0(const TorusInvariantDivisor& d, const Int& m);

// Growth summary of m -> h0(d, m). kappa is the exact dimension of the
// section polytope at the stabilization multiple m0 * m_max; samples keep the
// raw counts so growth-based estimates can be checked against it.
struct KodairaReport {
  bool finite = false;  // false encodes kappa = -infinity up to the cap
  int kappa = 0;
  Int m0 = 0;  // gcd of the multiples with sections; 0 when none appear
  bool big = false;
  int m_max = 8;
  std::vector<std::pair<Int, Int>> samples;  // (m, h0(d, m))
  std::vector<std::string> methods;
};

KodairaReport d_dimension(const TorusInvariantDivisor& d,
                          const Caps& caps = Caps{});

TorusInvariantDivisor scale_divisor(const TorusInvariantDivisor& d,
                                    const Int& k);

// True when twice the closure class already has maximal section growth.
// StabilizerNotTrivial when the class is degenerate (the underlying
// polynomial has a positive-rank stabilizer, so no multiple can be big).
bool is_big_double(const TorusInvariantDivisor& dbar, const Caps& caps = Caps{});

// Rewrites the exponents of f in unimodular coordinates on the affine span
// of its Newton polytope: the induced polynomial on the quotient torus by
// the stabilizer. The rank drops to dim of the polytope.
LaurentPolynomial quotient_by_stabilizer(const LaurentPolynomial& f);

// Dimension of the open part Gm^rank minus the vanishing locus of f:
// the Newton polytope's dimension, with the quotient section count as the
// redundant route (exercised by the test suite).
KodairaReport log_kodaira_dimension(const LaurentPolynomial& f);

}  // namespace toruskit
