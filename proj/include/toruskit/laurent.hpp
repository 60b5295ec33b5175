#pragma once

#include <vector>

#include "toruskit/numbers.hpp"
#include "toruskit/polytope.hpp"

namespace toruskit {

struct Term {
  IVec exp;
  Rat coeff;
};

// Laurent polynomial over Q in rank many torus variables. Terms are kept
// lexicographically sorted by exponent with nonzero merged coefficients; the
// zero polynomial is rejected.
class LaurentPolynomial {
 public:
  LaurentPolynomial(size_t rank, std::vector<Term> terms);

  size_t rank() const { return rank_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_monomial() const { return terms_.size() == 1; }
  std::vector<IVec> support() const;

  Rat evaluate(const QVec& point) const;
  LaurentPolynomial monomial_multiple(const IVec& shift, const Rat& scale) const;

 private:
  size_t rank_;
  std::vector<Term> terms_;
};

// q^e for a nonzero rational q and integer e.
Rat rat_pow(const Rat& q, const Int& e);

// Value of the character x^e at a torus point.
Rat eval_monomial(const QVec& point, const IVec& e);

LatticePolytope newton_polytope(const LaurentPolynomial& f);

// Hermite basis of the saturated sublattice of Z^rank orthogonal to the
// affine span of the Newton polytope's support differences. Its rank plus
// the polytope dimension equals the torus rank.
std::vector<IVec> ueno_stabilizer(const LaurentPolynomial& f);

}  // namespace toruskit
