#pragma once

#include <map>
#include <vector>

#include "toruskit/caps.hpp"
#include "toruskit/fan.hpp"
#include "toruskit/laurent.hpp"
#include "toruskit/numbers.hpp"
#include "toruskit/polytope.hpp"

namespace toruskit {

// Point of the split torus over Q; every coordinate nonzero.
struct RationalTorusPoint {
  QVec coords;

  size_t rank() const { return coords.size(); }
  bool operator==(const RationalTorusPoint& o) const { return coords == o.coords; }
};

RationalTorusPoint make_point(QVec coords);

// A place of Q: the archimedean one (prime == 0) or a finite prime.
struct Place {
  Int prime;

  bool archimedean() const { return prime == 0; }
  static Place infinite_place() { return Place{Int(0)}; }
  static Place at(Int p) { return Place{std::move(p)}; }

  bool operator==(const Place& o) const { return prime == o.prime; }
  bool operator<(const Place& o) const { return prime < o.prime; }
};

// Finite set of places; the archimedean place is always included implicitly.
struct PlaceSet {
  std::vector<Int> primes;  // ascending, distinct
};

// Validates primality (trial division), sorts, dedups.
PlaceSet make_place_set(std::vector<Int> primes);

// Prime -> exponent in the factorization of a nonzero rational.
std::map<Int, Int> factor_rational(const Rat& q);

// p-adic valuation of a nonzero rational.
Int valuation(const Rat& q, const Int& p);

// Exact real number of the form sum of rational multiples of logs of primes.
// Closed under the arithmetic needed for heights of rational points; sign
// queries compare the exponentiated integers, so no floating point enters.
class LogReal {
 public:
  LogReal() = default;

  static LogReal log_of(const Rat& positive);
  static LogReal multiple_of_log(const Int& prime, const Rat& coeff);

  LogReal& operator+=(const LogReal& o);
  LogReal& operator-=(const LogReal& o);
  LogReal operator-() const;
  friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }
  friend LogReal operator-(LogReal a, const LogReal& b) { return a -= b; }
  LogReal scaled(const Rat& k) const;
  LogReal abs() const;

  bool is_zero() const { return terms_.empty(); }
  int sign() const;
  double to_double() const;
  const std::map<Int, Rat>& terms() const { return terms_; }

  bool operator==(const LogReal& o) const { return terms_ == o.terms_; }

 private:
  std::map<Int, Rat> terms_;  // prime -> coefficient; zeros dropped
};

struct LocalValue {
  Place place;
  LogReal value;
};

// Global height through the monomial embedding by the lattice points of p:
// sum over places of log max_i |P^{m_i}|_v. Nonnegative; unchanged under
// translating p.
LogReal height(const RationalTorusPoint& P, const LatticePolytope& p);

// Local proximity to the divisor of f: log max_i |P^{m_i}|_v - log |f(P)|_v
// with m_i the lattice points of the Newton polytope. OnDivisor when
// f(P) = 0.
LocalValue weil_function(const LaurentPolynomial& f, const RationalTorusPoint& P,
                         const Place& v);

// Exact product-formula ledger: the local values above, over every place
// with a nonzero contribution, must sum to the height.
struct DecompositionReport {
  LogReal height_value;
  std::vector<LocalValue> locals;  // archimedean first, then primes ascending
  LogReal local_sum;
  bool exact_equal = false;
};

DecompositionReport height_decomposition_check(const LaurentPolynomial& f,
                                               const RationalTorusPoint& P);

// Log distance to the coordinate axes: sum_m |log |x_m(P)|_v|. Zero exactly
// when every coordinate is a v-adic unit.
LocalValue boundary_distance(const RationalTorusPoint& P, const Place& v);

// Constants (C, c) with height(theta(P), p_dst) <= C*height(P, p_src) + c
// for every rational torus point. C is the least rational scale with
// theta-transpose(p_dst) inside C*p_src + translate; c is exactly zero.
// Unbounded when the transported characters leave the span of p_src.
struct FunctorialityBound {
  Rat scale;
  LogReal offset;
};

FunctorialityBound functoriality_bound(const MonomialMap& theta,
                                       const LatticePolytope& p_src,
                                       const LatticePolytope& p_dst);

// True when every coordinate of P and the value f(P) are S-units.
bool is_s_integral(const LaurentPolynomial& f, const RationalTorusPoint& P,
                   const PlaceSet& S);

// All points with S-unit coordinates, multiplicative height product at most
// `bound`, and f-value an S-unit; lexicographic coordinate order. The
// per-prime exponent range is capped by caps.cap_exponent (BoundTooLarge).
std::vector<RationalTorusPoint> enumerate_integral_points(
    const LaurentPolynomial& f, const PlaceSet& S, const Rat& bound,
    const Caps& caps = Caps{});

// Coset of a one-dimensional subtorus: points with point^character == value.
struct CosetFamily {
  IVec character;  // primitive, first nonzero entry positive
  Rat value;
  std::vector<size_t> members;  // indices into the input, ascending
};

// Minimal list of coset families covering all the points (rank two only);
// members partition the input by first covering family.
std::vector<CosetFamily> detect_coset_families(
    const std::vector<RationalTorusPoint>& points);

}  // namespace toruskit
