#pragma once

#include <vector>

#include "toruskit/cone.hpp"
#include "toruskit/lattice.hpp"
#include "toruskit/laurent.hpp"
#include "toruskit/numbers.hpp"
#include "toruskit/polytope.hpp"

namespace toruskit {

// Fan in the cocharacter lattice: maximal cones (pointed, canonical order)
// plus the deduplicated primitive ray list. Lower-dimensional faces are
// implied by closure.
struct Fan {
  size_t rank = 0;
  std::vector<RationalCone> maximal;
  std::vector<IVec> rays;

  bool operator==(const Fan& o) const;
};

// Canonicalize: sort maximal cones by generator list, dedup, collect rays.
Fan make_fan(size_t rank, std::vector<RationalCone> maximal);

// All maximal cones full-dimensional and every codimension-one face shared
// by exactly two of them.
bool is_complete(const Fan& fan);

// Every maximal cone unimodular.
bool is_smooth(const Fan& fan);

// Index of the first maximal cone containing x, if any.
std::optional<size_t> cone_containing(const Fan& fan, const IVec& x);

// Complete fan whose maximal cones are the duals of the vertex cones,
// one per vertex. NotFullDimensional when dim p < rank.
Fan completion_fan(const LatticePolytope& p);

// One orbit per face of the polytope: orbit dimension equals face dimension,
// characters of the orbit's torus spanned by the face cone's lineality.
struct OrbitDescriptor {
  size_t face_index;
  size_t orbit_dim;
  std::vector<IVec> character_basis;
};

std::vector<OrbitDescriptor> orbit_table(const LatticePolytope& p);

// Invariant divisor: one integer coefficient per fan ray, keyed by ray,
// sorted lexicographically; keys are exactly the fan's rays.
struct TorusInvariantDivisor {
  Fan fan;
  std::vector<std::pair<IVec, Int>> coeffs;
};

const Int& divisor_coefficient(const TorusInvariantDivisor& d, const IVec& ray);

// Closure data of the divisor of f on the given fan: ray coefficients of
// the class, plus one lattice point per maximal cone where the support
// function is attained (the local Cartier datum).
struct DivisorClosure {
  TorusInvariantDivisor divisor;
  std::vector<IVec> cartier_points;  // aligned with divisor.fan.maximal
};

// Coefficient at ray r is -min over the translated Newton polytope of
// <r, m>; the polytope is anchored at its lexicographically least vertex so
// monomial multiples of f give the same class. FanMismatch when some
// maximal cone has no common minimizing vertex (fan does not refine the
// normal fan).
DivisorClosure divisor_closure(const LaurentPolynomial& f, const Fan& fan);

// Strict convexity of the support function across every wall. IncompleteFan
// when the fan is not complete; false when the support function is not
// linear on some maximal cone.
bool is_ample(const TorusInvariantDivisor& d);

// True iff every face of the polytope carries a support point. The Newton
// polytope of f always passes; the pair overload serves independent
// support sets.
bool orbit_avoidance(const LaurentPolynomial& f);
bool orbit_avoidance(const LatticePolytope& p, const std::vector<IVec>& support);

// Characters pulled back along a torus homomorphism theta: Gm^cols ->
// Gm^rows; row j is the exponent vector of the j-th coordinate character.
struct MonomialMap {
  IMat matrix;

  size_t domain_rank() const { return matrix.cols; }
  size_t codomain_rank() const { return matrix.rows; }
};

// Coordinate-wise character evaluation; coordinates must be nonzero.
QVec apply_monomial_map(const MonomialMap& theta, const QVec& point);

// Pullback f o theta by exponent substitution; f lives on the codomain.
LaurentPolynomial apply_monomial_map(const MonomialMap& theta,
                                     const LaurentPolynomial& f);

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner);

// Projection onto the orbit torus of a face: basis of the face cone's
// lineality subgroup and the monomial map t -> (t^b) it induces.
struct ProjectionData {
  std::vector<IVec> basis;
  MonomialMap map;
};

ProjectionData equivariant_projection(const LatticePolytope& p, const Face& d);

}  // namespace toruskit
